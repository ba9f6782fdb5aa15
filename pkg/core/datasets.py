"""
String pair sources for the experiment harness.

Pairs come from a seeded i.i.d. generator, from the full enumeration of
binary strings (uniform sampling above the enumeration cap) or from
substrings of a FASTA sequence. All randomness goes through
numpy.random.default_rng so a seed fully determines every pair.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from core.file_validator import FileValidator
from core.parikh import AlphabetMap
from models.config import EXHAUSTIVE_CAP, SAMPLED_BINARY_CAP


logger = logging.getLogger(__name__)

BINARY = AlphabetMap(('0', '1'))
DNA_SYMBOLS = frozenset('acgt')


class DatasetError(Exception):
    """Exception raised when a dataset cannot be produced."""
    pass


class ConfigurationError(DatasetError):
    """Exception raised when dataset parameters are outside supported limits."""
    pass


class FastaError(DatasetError):
    """Exception raised when a FASTA file cannot be used."""
    pass


@dataclass(frozen=True)
class FastaSequence:
    """Concatenated, case-folded ACGT sequence of a FASTA file."""
    path: str
    sequence: str
    records: int
    dropped: int


def length_rng(seed: int, n: int) -> np.random.Generator:
    """Independent generator for one length of one experiment."""
    return np.random.default_rng([seed, n])


def _random_string(rng: np.random.Generator, n: int, alpha: AlphabetMap) -> str:
    return ''.join(alpha.symbols[i] for i in rng.integers(0, alpha.size, size=n))


def gen_iid_pair(n: int, alpha: AlphabetMap, seed: int) -> Tuple[str, str]:
    """
    Two independent uniform i.i.d. strings of length n.

    Raises:
        DatasetError: If n is negative, or the alphabet is empty and n > 0
    """
    if n < 0:
        raise DatasetError(f"Length must be non-negative, got {n}")
    if n == 0:
        return "", ""
    if alpha.size == 0:
        raise DatasetError("Cannot draw symbols from an empty alphabet")

    rng = np.random.default_rng(seed)
    return _random_string(rng, n, alpha), _random_string(rng, n, alpha)


def iid_pairs(n: int, alpha: AlphabetMap, trials: int, seed: int) -> Iterator[Tuple[str, str]]:
    """Stream `trials` i.i.d. pairs of length n."""
    if alpha.size == 0 and n > 0:
        raise DatasetError("Cannot draw symbols from an empty alphabet")
    rng = length_rng(seed, n)
    for _ in range(trials):
        yield _random_string(rng, n, alpha), _random_string(rng, n, alpha)


def enumerate_pairs(n: int, alpha: AlphabetMap, cap: int = EXHAUSTIVE_CAP) -> Iterator[Tuple[str, str]]:
    """
    Every ordered pair of strings of length n over an alphabet, each exactly once.

    Order: first string in lexicographic order of the alphabet, then second string.

    Raises:
        ConfigurationError: If n exceeds the enumeration cap
    """
    if n > cap:
        raise ConfigurationError(f"Exhaustive enumeration is limited to n <= {cap}, got {n}")
    if n < 0:
        raise ConfigurationError(f"Length must be non-negative, got {n}")
    strings = [''.join(symbols) for symbols in itertools.product(alpha.symbols, repeat=n)]
    return ((a, b) for a in strings for b in strings)


def enumerate_binary_pairs(n: int, cap: int = EXHAUSTIVE_CAP) -> Iterator[Tuple[str, str]]:
    """All 4^n ordered pairs of binary strings of length n."""
    return enumerate_pairs(n, BINARY, cap)


def sample_binary_pairs(n: int, trials: int, seed: int,
                        cap: int = SAMPLED_BINARY_CAP) -> Iterator[Tuple[str, str]]:
    """
    Uniformly sampled ordered binary pairs, for lengths too large to enumerate.

    Raises:
        ConfigurationError: If n exceeds the sampling cap
    """
    if n > cap:
        raise ConfigurationError(f"Binary pair sampling is limited to n <= {cap}, got {n}")
    return iid_pairs(n, BINARY, trials, seed)


def load_fasta_sequence(path: str) -> FastaSequence:
    """
    Read a FASTA file into one sequence.

    Header lines ('>') are ignored, sequence lines of all records are
    concatenated, symbols are case-folded and anything outside {a,c,g,t}
    is dropped and counted.

    Raises:
        FastaError: If the file is unreadable or holds no ACGT symbol
    """
    content, errors = FileValidator.safe_file_read(path, purpose="FASTA", min_size=1)
    if errors:
        raise FastaError(errors[0].message)

    records = 0
    dropped = 0
    chunks: List[str] = []
    for line in content.splitlines():
        if line.startswith('>'):
            records += 1
            continue
        line = line.strip().lower()
        kept = ''.join(c for c in line if c in DNA_SYMBOLS)
        dropped += len(line) - len(kept)
        chunks.append(kept)

    sequence = ''.join(chunks)
    if not sequence:
        raise FastaError(f"FASTA file contains no a/c/g/t symbols: {path}")

    logger.debug("Loaded %d symbols from %d records of %s (%d dropped)", len(sequence), records, path, dropped)
    return FastaSequence(path=path, sequence=sequence, records=records, dropped=dropped)


def fasta_pairs(fasta: FastaSequence, n: int, trials: int, seed: int) -> Iterator[Tuple[str, str]]:
    """
    Pairs of length-n substrings at independent uniform offsets.

    Raises:
        FastaError: If the sequence is shorter than n
    """
    if n > len(fasta.sequence):
        raise FastaError(f"FASTA sequence of length {len(fasta.sequence)} is shorter than n = {n}")

    def generate():
        rng = length_rng(seed, n)
        sequence = fasta.sequence
        for _ in range(trials):
            i, j = (int(x) for x in rng.integers(0, len(sequence) - n + 1, size=2))
            yield sequence[i:i + n], sequence[j:j + n]

    return generate()


def extract_fasta_pairs(path: str, lengths: Sequence[int], trials: int,
                        seed: int) -> Iterator[Tuple[str, str, int]]:
    """
    Stream (a, b, n) substring pairs of a FASTA file for every requested length.

    The file is read and the lengths are checked before the first pair is
    produced.

    Raises:
        FastaError: If the file is unusable or shorter than max(lengths)
    """
    fasta = load_fasta_sequence(path)
    if lengths and max(lengths) > len(fasta.sequence):
        raise FastaError(
            f"FASTA sequence of length {len(fasta.sequence)} is shorter than n = {max(lengths)}"
        )

    def generate():
        for n in lengths:
            for a, b in fasta_pairs(fasta, n, trials, seed):
                yield a, b, n

    return generate()
