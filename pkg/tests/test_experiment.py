"""
Tests for the experiment harness: dataset specs, aggregation, CSV output,
the oracle cross-check and the LCAF gap desk check.
"""

import os
import shutil
import tempfile
from pathlib import Path

import pytest
from pydantic import ValidationError

# Add parent directory to path for imports
import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

import core.algorithms as algorithms
from core.algorithms import UnknownAlgorithmError
from core.datasets import BINARY, ConfigurationError, DatasetError, FastaError
from core.experiment import (
    ExperimentError, aggregate_records, conjecture_check, dataset_pairs, format_csv, oracle_diff,
    run_experiment, selected_algorithms, write_csv
)
from core.file_validator import FileValidator
from core.parikh import AlphabetMap
from core.solvers import lcaf_quadratic
from models.experiment import CSV_COLUMNS, DatasetSource, DatasetSpec
from models.results import LcafResult, RowStats


FIXTURE = str(Path(__file__).parent / "fixtures" / "sample_genome.fa")

EXHAUSTIVE_N2_CSV = (
    "n,algorithm,mean_rows,mean_first_vectors,mean_total,mean_lcaf,log2_n,trials,seed\n"
    "2,first-vector,1.5,0.5,2,1.25,1,16,7\n"
    "2,naive,1.625,0,1.625,1.25,1,16,7\n"
    "2,skip,1.5,0,1.5,1.25,1,16,7\n"
)


def exhaustive(lengths, seed=7, **kwargs):
    return DatasetSpec(source=DatasetSource.EXHAUSTIVE_BINARY, lengths=lengths, seed=seed, **kwargs)


def off_by_one(a: str, b: str) -> LcafResult:
    """Solver that reports one symbol less than the true answer."""
    result = lcaf_quadratic(a, b)
    if result.length <= 1:
        return LcafResult(length=0, p=None, q=None, witness=None, stats=result.stats)
    return LcafResult(length=result.length - 1, p=result.p, q=result.q, witness=result.witness,
                      stats=result.stats)


class TestDatasetSpec:
    """Validation of experiment dataset descriptions."""

    def test_defaults(self):
        spec = exhaustive([3, 2, 3])
        assert spec.lengths == [2, 3]
        assert spec.alphabet == '01'
        assert spec.is_enumerated(3)

    def test_iid_default_alphabet(self):
        spec = DatasetSpec(source=DatasetSource.IID_RANDOM, lengths=[5], seed=1)
        assert spec.alphabet_map.symbols == ('a', 'c', 'g', 't')
        assert not spec.is_enumerated(5)

    def test_binary_lengths_above_sampling_cap(self):
        with pytest.raises(ValidationError):
            exhaustive([20])

    def test_exhaustive_needs_binary_alphabet(self):
        with pytest.raises(ValidationError):
            exhaustive([2], alphabet='acgt')

    def test_fasta_needs_path(self):
        with pytest.raises(ValidationError):
            DatasetSpec(source=DatasetSource.FASTA, lengths=[5], seed=1)

    @pytest.mark.parametrize("field, value", [
        ('lengths', []), ('lengths', [0]), ('trials', 0), ('seed', -1), ('alphabet', 'aa'), ('alphabet', '')
    ])
    def test_invalid_fields(self, field, value):
        params = {'source': DatasetSource.IID_RANDOM, 'lengths': [4], 'seed': 1, field: value}
        with pytest.raises(ValidationError):
            DatasetSpec(**params)

    def test_caps_order(self):
        with pytest.raises(ValidationError):
            exhaustive([2], exhaustive_cap=12, sampled_binary_cap=11)


class TestDatasetPairs:
    """Pair streams described by a spec."""

    def test_enumerated_then_sampled(self):
        spec = exhaustive([2, 11], trials=5)
        pairs = list(dataset_pairs(spec))
        assert [n for _, _, n in pairs] == [2] * 16 + [11] * 5

    def test_fasta_dropped_symbols_warning(self):
        spec = DatasetSpec(source=DatasetSource.FASTA, lengths=[8], trials=3, seed=1, fasta_path=FIXTURE)
        messages = []
        pairs = list(dataset_pairs(spec, messages))
        assert len(pairs) == 3
        assert len(messages) == 1
        assert messages[0].level == 'warning'
        assert "Dropped 8 non-ACGT symbols" in messages[0].message

    def test_fasta_read_once_for_all_lengths(self, monkeypatch):
        reads = []
        original = FileValidator.safe_file_read

        def counting_read(*args, **kwargs):
            reads.append(args[0])
            return original(*args, **kwargs)

        monkeypatch.setattr(FileValidator, 'safe_file_read', staticmethod(counting_read))
        spec = DatasetSpec(source=DatasetSource.FASTA, lengths=[8, 16, 32], trials=4, seed=1,
                           fasta_path=FIXTURE)
        pairs = list(dataset_pairs(spec))
        assert reads == [FIXTURE]
        assert [n for _, _, n in pairs] == [8] * 4 + [16] * 4 + [32] * 4
        assert all(len(a) == len(b) == n for a, b, n in pairs)

    def test_fasta_too_short(self):
        spec = DatasetSpec(source=DatasetSource.FASTA, lengths=[400], trials=3, seed=1, fasta_path=FIXTURE)
        with pytest.raises(FastaError):
            dataset_pairs(spec)


class TestSelectedAlgorithms:
    """Resolution of the measured algorithms."""

    def test_naive_always_added(self):
        assert selected_algorithms(exhaustive([2]), ['skip']) == ('skip', 'naive')

    def test_no_repeats(self):
        assert selected_algorithms(exhaustive([2]), ['naive', 'skip', 'skip']) == ('naive', 'skip')

    def test_unknown_name(self):
        with pytest.raises(UnknownAlgorithmError):
            selected_algorithms(exhaustive([2]), ['fastest'])

    def test_binary_on_dna(self):
        spec = DatasetSpec(source=DatasetSource.IID_RANDOM, lengths=[4], seed=1)
        with pytest.raises(ConfigurationError):
            selected_algorithms(spec, ['binary'])


class TestRunExperiment:
    """End-to-end harness runs."""

    def setup_method(self):
        """Set up test environment."""
        self.temp_dir = tempfile.mkdtemp()

    def teardown_method(self):
        """Clean up test environment."""
        if os.path.exists(self.temp_dir):
            shutil.rmtree(self.temp_dir)

    def test_exhaustive_length_two_table(self):
        rows = run_experiment(exhaustive([2]), ['skip', 'first-vector'])
        assert format_csv(rows) == EXHAUSTIVE_N2_CSV

    def test_rows_sorted_by_length_then_name(self):
        rows = run_experiment(exhaustive([3, 1, 2]), ['skip', 'first-vector', 'quadratic'])
        keys = [(row.n, row.algorithm) for row in rows]
        assert keys == sorted(keys)
        assert {row.algorithm for row in rows} == {'first-vector', 'naive', 'quadratic', 'skip'}

    def test_enumerated_trials_are_all_pairs(self):
        rows = run_experiment(exhaustive([1, 2, 3, 4]), ['skip'])
        for row in rows:
            assert row.trials == 4 ** row.n

    def test_sampled_length_uses_trials(self):
        rows = run_experiment(exhaustive([11], trials=50), ['skip'])
        assert [row.trials for row in rows] == [50, 50]

    def test_reproducible(self):
        spec = DatasetSpec(source=DatasetSource.IID_RANDOM, lengths=[8, 16], trials=40, seed=5)
        assert format_csv(run_experiment(spec, ['skip'])) == format_csv(run_experiment(spec, ['skip']))

    def test_worker_count_does_not_change_results(self):
        spec = DatasetSpec(source=DatasetSource.IID_RANDOM, lengths=[6, 12], trials=30, seed=3)
        single = run_experiment(spec, ['skip', 'first-vector'], workers=1)
        assert run_experiment(spec, ['skip', 'first-vector'], workers=2) == single

    def test_naive_counts_dominate(self):
        rows = run_experiment(exhaustive([2, 3, 4, 5]), ['skip', 'first-vector'])
        by_key = {(row.n, row.algorithm): row for row in rows}
        for n in (2, 3, 4, 5):
            naive = by_key[(n, 'naive')]
            assert naive.mean_first_vectors == 0
            assert naive.mean_rows >= by_key[(n, 'skip')].mean_rows
            assert by_key[(n, 'skip')].mean_rows == by_key[(n, 'first-vector')].mean_rows
            assert by_key[(n, 'first-vector')].mean_first_vectors <= n

    def test_binary_algorithm_on_binary_data(self):
        rows = run_experiment(exhaustive([3]), ['binary', 'skip'])
        by_name = {row.algorithm: row for row in rows}
        assert by_name['binary'].mean_lcaf == by_name['skip'].mean_lcaf
        assert by_name['binary'].mean_rows == 0

    def test_fasta_source(self):
        spec = DatasetSpec(source=DatasetSource.FASTA, lengths=[10, 20], trials=25, seed=9, fasta_path=FIXTURE)
        messages = []
        rows = run_experiment(spec, ['skip'], messages=messages)
        assert [(row.n, row.algorithm) for row in rows] == [(10, 'naive'), (10, 'skip'), (20, 'naive'), (20, 'skip')]
        assert all(row.trials == 25 for row in rows)
        assert messages

    def test_write_csv(self):
        path = os.path.join(self.temp_dir, "rows.csv")
        write_csv(run_experiment(exhaustive([2]), ['skip', 'first-vector']), path)
        with open(path) as f:
            assert f.read() == EXHAUSTIVE_N2_CSV

    def test_write_csv_missing_directory(self):
        with pytest.raises(ExperimentError):
            write_csv([], os.path.join(self.temp_dir, "missing", "rows.csv"))

    def test_empty_records(self):
        assert aggregate_records([], 1) == []
        assert format_csv([]) == ','.join(CSV_COLUMNS) + '\n'


class TestOracleDiff:
    """Cross-checking against the brute-force oracle."""

    def test_all_agree(self):
        report = oracle_diff([1, 2, 3, 4, 5, 6], 30, BINARY, 2014)
        assert report.passed
        assert report.pairs_checked == 180
        assert 'oracle' not in report.algorithms
        assert 'binary' in report.algorithms

    def test_binary_skipped_on_larger_alphabets(self):
        report = oracle_diff([4, 8], 20, AlphabetMap(('a', 'c', 'g', 't')), 1)
        assert report.passed
        assert report.pairs_checked == 40

    def test_broken_solver_reported(self, monkeypatch):
        monkeypatch.setitem(algorithms.SOLVERS, 'skip', off_by_one)
        report = oracle_diff([1, 2, 3], 10, BINARY, 2014)
        assert not report.passed
        mismatch = report.mismatch
        assert mismatch.algorithm == 'skip'
        assert mismatch.actual_length == mismatch.expected_length - 1
        assert len(mismatch.a) == mismatch.n

    def test_invalid_witness_reported(self, monkeypatch):
        def shifted(a, b):
            result = lcaf_quadratic(a, b)
            if result.length == 0:
                return result
            # right length, witness position past the end of A
            return LcafResult(length=result.length, p=result.p + len(a), q=result.q,
                              witness=result.witness, stats=RowStats())

        monkeypatch.setitem(algorithms.SOLVERS, 'first-vector', shifted)
        report = oracle_diff([3], 10, BINARY, 2014)
        assert report.mismatch.algorithm == 'first-vector'
        assert report.mismatch.expected_length == report.mismatch.actual_length

    def test_zero_trials(self):
        with pytest.raises(DatasetError):
            oracle_diff([3], 0, BINARY, 1)

    def test_empty_alphabet(self):
        with pytest.raises(DatasetError):
            oracle_diff([3], 5, AlphabetMap(()), 1)


class TestConjectureCheck:
    """Mean LCAF gap of binary pairs."""

    def test_identical_pairs(self):
        report = conjecture_check(16, 3, 1, pairs=[("0110" * 4, "0110" * 4)] * 3)
        assert report.gap == 0
        assert report.mean_rows == 1
        assert report.log2_n == 4

    def test_constant_pairs(self):
        report = conjecture_check(8, 2, 1, pairs=[("0" * 8, "1" * 8), ("1" * 8, "0" * 8)])
        assert report.mean_lcaf == 0
        assert report.gap == 8
        assert report.trials == 2

    def test_random_pairs(self):
        report = conjecture_check(64, 50, 2014)
        assert report.trials == 50
        assert 0 <= report.gap <= 64
        assert report == conjecture_check(64, 50, 2014)

    @pytest.mark.parametrize("n, trials", [(0, 5), (8, 0)])
    def test_invalid(self, n, trials):
        with pytest.raises(DatasetError):
            conjecture_check(n, trials, 1)


@pytest.mark.slow
def test_gap_at_length_256():
    report = conjecture_check(256, 1000, 2014)
    assert report.gap <= 4 * report.log2_n


@pytest.mark.slow
def test_exhaustive_binary_sweep():
    """Lengths 2..10 fully enumerated; every mean follows from the per-pair counters."""
    spec = exhaustive(list(range(2, 11)), seed=2014)
    rows = run_experiment(spec, ['skip', 'first-vector'])
    by_key = {(row.n, row.algorithm): row for row in rows}
    for n in range(2, 11):
        skip, first, naive = by_key[(n, 'skip')], by_key[(n, 'first-vector')], by_key[(n, 'naive')]
        assert skip.trials == first.trials == naive.trials == 4 ** n
        assert skip.mean_rows <= skip.log2_n + 1
        if n >= 3:
            assert naive.mean_rows > skip.mean_rows
        assert first.mean_first_vectors <= n
        assert first.mean_rows == skip.mean_rows
        assert first.mean_total == pytest.approx(first.mean_rows + first.mean_first_vectors)
        assert skip.mean_lcaf == first.mean_lcaf == naive.mean_lcaf
