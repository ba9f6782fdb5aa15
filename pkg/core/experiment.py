"""
Experiment harness: instrumented solver runs over a dataset, aggregated
into one plot-ready row per (n, algorithm).

Every pair is measured independently, so pairs can be spread over worker
processes. Aggregation sums the counters and divides by the pair count per
group; the resulting table does not depend on the worker count.
"""

import logging
from dataclasses import asdict
from multiprocessing import Pool
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from core.algorithms import ALGORITHM_CHOICES, get_solver, is_applicable, run_solver
from core.datasets import (
    BINARY, ConfigurationError, DatasetError, enumerate_binary_pairs, fasta_pairs,
    iid_pairs, load_fasta_sequence, sample_binary_pairs
)
from core.file_validator import FileValidator
from core.parikh import AlphabetMap
from core.solvers import lcaf_skip, witness_is_valid
from models.experiment import (
    CSV_COLUMNS, AggregateRow, ConjectureReport, DatasetSource, DatasetSpec, OracleDiffReport, OracleMismatch
)
from models.results import SystemMessage


logger = logging.getLogger(__name__)

NAIVE = 'naive'
RECORD_COLUMNS = ['n', 'algorithm', 'rows', 'first_vectors', 'total', 'lcaf']
# pairs handed to a worker at a time
CHUNK_SIZE = 256


class ExperimentError(Exception):
    """Exception raised when experiment results cannot be produced or written."""
    pass


def dataset_pairs(spec: DatasetSpec,
                  messages: Optional[List[SystemMessage]] = None) -> Iterator[Tuple[str, str, int]]:
    """
    Stream the (a, b, n) pairs described by a dataset spec.

    Caps, file readability and FASTA length are checked before the first
    pair is produced. Symbols dropped from a FASTA file are reported as a
    warning in `messages`.

    Raises:
        ConfigurationError: If a length exceeds the binary caps
        FastaError: If the FASTA file is unusable
    """
    fasta = None
    if spec.source == DatasetSource.FASTA:
        fasta = load_fasta_sequence(spec.fasta_path)
        if fasta.dropped and messages is not None:
            messages.append(SystemMessage(
                level="warning",
                message=f"Dropped {fasta.dropped} non-ACGT symbols from {spec.fasta_path}"
            ))

    streams = []
    for n in spec.lengths:
        if fasta is not None:
            pairs = fasta_pairs(fasta, n, spec.trials, spec.seed)
        elif spec.source == DatasetSource.EXHAUSTIVE_BINARY:
            if spec.is_enumerated(n):
                pairs = enumerate_binary_pairs(n, spec.exhaustive_cap)
            else:
                pairs = sample_binary_pairs(n, spec.trials, spec.seed, spec.sampled_binary_cap)
        else:
            pairs = iid_pairs(n, spec.alphabet_map, spec.trials, spec.seed)
        streams.append((n, pairs))

    def generate():
        for n, pairs in streams:
            for a, b in pairs:
                yield a, b, n

    return generate()


def _measure_pair(task: Tuple[str, str, int, Tuple[str, ...]]) -> List[tuple]:
    a, b, n, algorithms = task
    records = []
    for name in algorithms:
        result = run_solver(name, a, b)
        stats = result.stats
        records.append((n, name, stats.rows_computed, stats.first_vectors_computed, stats.total, result.length))
    return records


def _measure_all(tasks: Iterable[tuple], workers: int) -> Iterator[List[tuple]]:
    if workers <= 1:
        for task in tasks:
            yield _measure_pair(task)
        return
    with Pool(processes=workers) as pool:
        for records in pool.imap(_measure_pair, tasks, chunksize=CHUNK_SIZE):
            yield records


def selected_algorithms(spec: DatasetSpec, algorithms: Sequence[str]) -> Tuple[str, ...]:
    """
    Resolve the algorithms to run on a dataset; the naive counter is always included.

    Raises:
        UnknownAlgorithmError: If a name is not registered
        ConfigurationError: If the binary algorithm is asked for on a non-binary dataset
    """
    names = list(dict.fromkeys(list(algorithms) + [NAIVE]))
    for name in names:
        get_solver(name)
    if 'binary' in names and spec.alphabet_map.size > 2:
        raise ConfigurationError(
            f"The binary algorithm needs an alphabet of at most 2 symbols, got '{spec.alphabet}'"
        )
    return tuple(names)


def aggregate_records(records: List[tuple], seed: int) -> List[AggregateRow]:
    """Average per-pair records into one row per (n, algorithm), sorted by n then algorithm."""
    if not records:
        return []
    frame = pd.DataFrame.from_records(records, columns=RECORD_COLUMNS)
    grouped = frame.groupby(['n', 'algorithm'], sort=True)
    sums = grouped[['rows', 'first_vectors', 'total', 'lcaf']].sum()
    counts = grouped.size()
    means = sums.div(counts, axis=0)

    rows = []
    for (n, algorithm), mean in means.iterrows():
        rows.append(AggregateRow(
            n=int(n),
            algorithm=str(algorithm),
            mean_rows=float(mean['rows']),
            mean_first_vectors=float(mean['first_vectors']),
            mean_total=float(mean['total']),
            mean_lcaf=float(mean['lcaf']),
            log2_n=float(np.log2(n)),
            trials=int(counts[(n, algorithm)]),
            seed=seed
        ))
    return rows


def run_experiment(spec: DatasetSpec, algorithms: Sequence[str], workers: int = 1,
                   messages: Optional[List[SystemMessage]] = None) -> List[AggregateRow]:
    """
    Run the selected algorithms on every pair of a dataset and aggregate.

    Args:
        spec: Validated dataset description
        algorithms: Algorithm names; 'naive' is added when absent
        workers: Worker processes; 1 runs everything in this process
        messages: Optional list collecting diagnostics

    Returns:
        Aggregated rows sorted by n, then algorithm name

    Raises:
        DatasetError: On dataset problems (caps, FASTA)
        UnknownAlgorithmError: On unregistered algorithm names
    """
    names = selected_algorithms(spec, algorithms)
    pairs = dataset_pairs(spec, messages)
    tasks = ((a, b, n, names) for a, b, n in pairs)

    logger.debug("Running %s on %s lengths %s with %d worker(s)",
                 ', '.join(names), spec.source.value, spec.lengths, workers)

    records: List[tuple] = []
    for pair_records in _measure_all(tasks, workers):
        records.extend(pair_records)

    rows = aggregate_records(records, spec.seed)
    logger.debug("Aggregated %d records into %d rows", len(records), len(rows))
    return rows


def rows_to_dataframe(rows: Sequence[AggregateRow]) -> pd.DataFrame:
    """Aggregate rows as a DataFrame with the CSV column order."""
    return pd.DataFrame([asdict(row) for row in rows], columns=CSV_COLUMNS)


def format_csv(rows: Sequence[AggregateRow]) -> str:
    """Render aggregate rows as CSV text with a header and 6 significant digits."""
    return rows_to_dataframe(rows).to_csv(index=False, float_format='%.6g', lineterminator='\n')


def write_csv(rows: Sequence[AggregateRow], output_path: str) -> None:
    """
    Write aggregate rows to a CSV file.

    Raises:
        ExperimentError: If the file cannot be written
    """
    errors = FileValidator.safe_file_write(output_path, format_csv(rows))
    if errors:
        raise ExperimentError(errors[0].message)


def conjecture_check(n: int, trials: int, seed: int,
                     pairs: Optional[Iterable[Tuple[str, str]]] = None) -> ConjectureReport:
    """
    Mean LCAF of binary pairs of length n next to log2(n).

    By default `trials` i.i.d. uniform binary pairs are drawn from `seed`;
    explicit `pairs` replace the random ones. The report makes no pass/fail
    claim.

    Raises:
        DatasetError: If n or trials is not positive
    """
    if n < 1:
        raise DatasetError(f"Length must be positive, got {n}")
    if trials < 1:
        raise DatasetError(f"Trials must be positive, got {trials}")
    if pairs is None:
        pairs = iid_pairs(n, BINARY, trials, seed)

    lengths = []
    rows = []
    for a, b in pairs:
        result = lcaf_skip(a, b)
        lengths.append(result.length)
        rows.append(result.stats.rows_computed)
    if not lengths:
        raise DatasetError("No pairs to check")

    mean_lcaf = float(np.mean(lengths))
    return ConjectureReport(
        n=n,
        trials=len(lengths),
        seed=seed,
        mean_lcaf=mean_lcaf,
        gap=n - mean_lcaf,
        log2_n=float(np.log2(n)),
        mean_rows=float(np.mean(rows))
    )


def oracle_diff(lengths: Sequence[int], trials: int, alphabet: AlphabetMap, seed: int,
                algorithms: Optional[Sequence[str]] = None) -> OracleDiffReport:
    """
    Cross-check algorithms against the brute-force oracle on i.i.d. pairs.

    For every length, `trials` pairs are drawn. Each applicable algorithm
    must report the oracle's length and a witness that validates. Checking
    stops at the first disagreement.

    Raises:
        DatasetError: If trials is not positive or the alphabet is empty
    """
    if trials < 1:
        raise DatasetError(f"Trials must be positive, got {trials}")
    if alphabet.size == 0:
        raise DatasetError("Alphabet must contain at least one symbol")

    names = [name for name in (algorithms or ALGORITHM_CHOICES) if name != 'oracle']
    for name in names:
        get_solver(name)

    checked = 0
    for n in lengths:
        for a, b in iid_pairs(n, alphabet, trials, seed):
            expected = run_solver('oracle', a, b)
            for name in names:
                if not is_applicable(name, a, b):
                    continue
                result = run_solver(name, a, b)
                if result.length != expected.length or not witness_is_valid(result, a, b):
                    logger.debug("Mismatch of %s after %d pairs", name, checked)
                    return OracleDiffReport(
                        pairs_checked=checked + 1,
                        algorithms=names,
                        mismatch=OracleMismatch(
                            algorithm=name, n=n, a=a, b=b,
                            expected_length=expected.length, actual_length=result.length,
                            p=result.p, q=result.q
                        )
                    )
            checked += 1

    return OracleDiffReport(pairs_checked=checked, algorithms=names)
