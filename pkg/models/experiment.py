"""
Experiment data models.

This module defines the dataset specification driving the experiment
harness, the aggregated output rows and the conjecture desk-check report.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional
from pydantic import BaseModel, Field, field_validator, model_validator

from core.parikh import AlphabetMap
from models.config import DEFAULT_TRIALS, EXHAUSTIVE_CAP, SAMPLED_BINARY_CAP


CSV_COLUMNS = [
    'n', 'algorithm', 'mean_rows', 'mean_first_vectors', 'mean_total',
    'mean_lcaf', 'log2_n', 'trials', 'seed'
]


class DatasetSource(str, Enum):
    """Where experiment string pairs come from."""
    EXHAUSTIVE_BINARY = "exhaustive-binary"
    IID_RANDOM = "iid-random"
    FASTA = "fasta"


DEFAULT_ALPHABETS = {
    DatasetSource.EXHAUSTIVE_BINARY: '01',
    DatasetSource.IID_RANDOM: 'acgt',
    DatasetSource.FASTA: 'acgt',
}


class DatasetSpec(BaseModel):
    """Validated description of the string pairs of one experiment."""
    source: DatasetSource = Field(..., description="Pair source")
    lengths: List[int] = Field(..., min_length=1, description="String lengths n")
    trials: int = Field(DEFAULT_TRIALS, ge=1, description="Pairs per length (sampled sources)")
    alphabet: Optional[str] = Field(None, description="Symbols of the alphabet, e.g. 'acgt'")
    seed: int = Field(..., ge=0, le=2**64 - 1, description="64-bit seed")
    fasta_path: Optional[str] = Field(None, description="FASTA file for the fasta source")
    exhaustive_cap: int = Field(EXHAUSTIVE_CAP, ge=1, description="Largest fully enumerated binary length")
    sampled_binary_cap: int = Field(SAMPLED_BINARY_CAP, ge=1, description="Largest sampled binary length")

    @field_validator('lengths')
    @classmethod
    def validate_lengths(cls, v):
        """Lengths must be positive; stored sorted without repeats."""
        if any(n < 1 for n in v):
            raise ValueError('lengths must be positive')
        return sorted(set(v))

    @field_validator('alphabet')
    @classmethod
    def validate_alphabet(cls, v):
        """Alphabet symbols must be distinct."""
        if v is not None:
            if not v:
                raise ValueError('alphabet must contain at least one symbol')
            if len(set(v)) != len(v):
                raise ValueError('alphabet symbols must be distinct')
        return v

    @model_validator(mode='after')
    def validate_source(self):
        """Source-specific requirements."""
        if self.alphabet is None:
            self.alphabet = DEFAULT_ALPHABETS[self.source]

        if self.source == DatasetSource.EXHAUSTIVE_BINARY:
            if set(self.alphabet) != {'0', '1'}:
                raise ValueError("exhaustive-binary source requires the alphabet '01'")
            if max(self.lengths) > self.sampled_binary_cap:
                raise ValueError(
                    f"exhaustive-binary lengths are limited to {self.sampled_binary_cap}, got {max(self.lengths)}"
                )
        if self.source == DatasetSource.FASTA and not self.fasta_path:
            raise ValueError('fasta source requires fasta_path')
        if self.exhaustive_cap > self.sampled_binary_cap:
            raise ValueError('exhaustive_cap cannot exceed sampled_binary_cap')
        return self

    @property
    def alphabet_map(self) -> AlphabetMap:
        return AlphabetMap(tuple(sorted(self.alphabet)))

    def is_enumerated(self, n: int) -> bool:
        """Whether all 4^n binary pairs are used for length n."""
        return self.source == DatasetSource.EXHAUSTIVE_BINARY and n <= self.exhaustive_cap


@dataclass(frozen=True)
class AggregateRow:
    """Averaged counters of one algorithm at one length."""
    n: int
    algorithm: str
    mean_rows: float
    mean_first_vectors: float
    mean_total: float
    mean_lcaf: float
    log2_n: float
    trials: int
    seed: int


@dataclass(frozen=True)
class ConjectureReport:
    """Empirical LCAF gap of i.i.d. pairs next to log2(n)."""
    n: int
    trials: int
    seed: int
    mean_lcaf: float
    gap: float
    log2_n: float
    mean_rows: float


@dataclass(frozen=True)
class OracleMismatch:
    """First pair on which an algorithm disagrees with the brute-force oracle."""
    algorithm: str
    n: int
    a: str
    b: str
    expected_length: int
    actual_length: int
    p: Optional[int] = None
    q: Optional[int] = None


@dataclass(frozen=True)
class OracleDiffReport:
    """Outcome of cross-checking every algorithm against the oracle."""
    pairs_checked: int
    algorithms: List[str]
    mismatch: Optional[OracleMismatch] = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None
