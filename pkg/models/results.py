"""
Result data models for the LCAF solvers.

This module defines the core result structures returned by every solver,
plus the pydantic models used to serialise them for JSON output.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple
from pydantic import BaseModel, Field, model_validator

from core.parikh import ParikhVector


@dataclass(frozen=True)
class RowStats:
    """Instrumentation counters of one solver run."""
    rows_computed: int = 0
    first_vectors_computed: int = 0
    rows_skipped: int = 0

    @property
    def total(self) -> int:
        """Rows plus first vectors, the work measure reported by the harness."""
        return self.rows_computed + self.first_vectors_computed


@dataclass(frozen=True)
class OverSkip:
    """A visited length where the literal skip formula exceeds the provable gap."""
    ell: int
    sound_skip: int
    literal_skip: int
    jumps_past_answer: bool = False


@dataclass(frozen=True)
class LcafResult:
    """
    Outcome of an LCAF computation.

    When length > 0, A[p..p+length-1] and B[q..q+length-1] both have
    Parikh vector `witness`. When length == 0 there is no witness.
    """
    length: int
    p: Optional[int]
    q: Optional[int]
    witness: Optional[ParikhVector]
    stats: RowStats
    algorithm: str = ""
    trace: Tuple[int, ...] = ()  # visited lengths, in visiting order
    over_skips: Tuple[OverSkip, ...] = field(default=())

    def __post_init__(self):
        present = [self.p is not None, self.q is not None, self.witness is not None]
        if self.length > 0 and not all(present):
            raise ValueError(f"LCAF length {self.length} requires p, q and witness")
        if self.length == 0 and any(present):
            raise ValueError("LCAF length 0 must not carry a witness")
        if self.length < 0:
            raise ValueError(f"LCAF length must be non-negative, got {self.length}")


# Pydantic models for JSON serialization
class RowStatsAPI(BaseModel):
    """API model for solver instrumentation counters."""
    rows_computed: int = Field(..., ge=0, description="Number of full rows computed")
    first_vectors_computed: int = Field(..., ge=0, description="Number of constant-time first vector updates")
    rows_skipped: int = Field(..., ge=0, description="Number of lengths bypassed by the skip trick")


class LcafResultAPI(BaseModel):
    """API model for an LCAF result."""
    length: int = Field(..., ge=0, description="LCAF length")
    p: Optional[int] = Field(None, ge=1, description="1-based witness position in A")
    q: Optional[int] = Field(None, ge=1, description="1-based witness position in B")
    witness: Optional[List[int]] = Field(None, description="Witness Parikh vector in alphabet order")
    stats: RowStatsAPI = Field(..., description="Instrumentation counters")

    @model_validator(mode='after')
    def check_witness_presence(self):
        """Witness fields are present exactly when length > 0."""
        present = [self.p is not None, self.q is not None, self.witness is not None]
        if self.length > 0 and not all(present):
            raise ValueError('p, q and witness are required when length > 0')
        if self.length == 0 and any(present):
            raise ValueError('p, q and witness must be null when length is 0')
        if self.witness is not None and sum(self.witness) != self.length:
            raise ValueError('witness must sum to length')
        return self

    @classmethod
    def from_result(cls, result: LcafResult) -> 'LcafResultAPI':
        """Build the API model from a solver result."""
        return cls(
            length=result.length,
            p=result.p,
            q=result.q,
            witness=list(result.witness.counts) if result.witness is not None else None,
            stats=RowStatsAPI(
                rows_computed=result.stats.rows_computed,
                first_vectors_computed=result.stats.first_vectors_computed,
                rows_skipped=result.stats.rows_skipped
            )
        )


class SystemMessage(BaseModel):
    """System message for warnings and errors."""
    level: str = Field(..., description="Message level: info, warning, error")
    message: str = Field(..., description="Human-readable message")
