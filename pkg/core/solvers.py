"""
LCAF solvers over general alphabets.

This module implements the four interchangeable algorithms computing the
Longest Common Abelian Factor of two strings:

- lcaf_bruteforce: exhaustive direct counting, used as the test oracle
- lcaf_quadratic: descending rows with sorted intersection, no skipping
- lcaf_skip: descending rows, skipping lengths that provably cannot match
- lcaf_first_vector: as lcaf_skip, but each visited row is seeded from the
  first window vector carried down across skipped lengths

Every solver returns an LcafResult with instrumentation counters.
"""

from dataclasses import replace
from typing import Dict, List, Optional, Tuple

from core.parikh import (
    AlphabetMap, ComponentExtrema, ParikhVector, build_alphabet, compute_row,
    intersect_rows, parikh, row_extrema, shrink_first_vector
)
from models.results import LcafResult, OverSkip, RowStats


def _found(ell: int, p: int, q: int, witness: ParikhVector, stats: RowStats,
           algorithm: str, trace: List[int],
           over_skips: Tuple[OverSkip, ...] = ()) -> LcafResult:
    return LcafResult(
        length=ell, p=p, q=q, witness=witness, stats=stats,
        algorithm=algorithm, trace=tuple(trace), over_skips=over_skips
    )


def _not_found(stats: RowStats, algorithm: str, trace: List[int],
               over_skips: Tuple[OverSkip, ...] = ()) -> LcafResult:
    return LcafResult(
        length=0, p=None, q=None, witness=None, stats=stats,
        algorithm=algorithm, trace=tuple(trace), over_skips=over_skips
    )


def lcaf_bruteforce(a: str, b: str) -> LcafResult:
    """
    Compute the LCAF by counting every window of both strings directly.

    No sliding window and no sorting is involved, which keeps this solver
    independent of the row machinery it is used to check. Lengths are tried
    from min(|a|, |b|) downwards; at the first length with a match, the
    smallest p and, for it, the smallest q are reported.

    Args:
        a: First string
        b: Second string

    Returns:
        LcafResult; rows_computed counts the lengths examined
    """
    alpha = build_alphabet(a, b)
    examined = 0
    trace = []

    for ell in range(min(len(a), len(b)), 0, -1):
        examined += 1
        trace.append(ell)

        first_q: Dict[ParikhVector, int] = {}
        for q in range(1, len(b) - ell + 2):
            first_q.setdefault(parikh(b, q, ell, alpha), q)

        for p in range(1, len(a) - ell + 2):
            vector = parikh(a, p, ell, alpha)
            if vector in first_q:
                return _found(ell, p, first_q[vector], vector,
                              RowStats(rows_computed=examined), "oracle", trace)

    return _not_found(RowStats(rows_computed=examined), "oracle", trace)


def lcaf_quadratic(a: str, b: str) -> LcafResult:
    """
    Compute the LCAF with one row pair per length, longest length first.

    Stops at the first length whose rows intersect; by the row/factor
    equivalence that length is the LCAF length. Worst case O(sigma n^2).
    """
    alpha = build_alphabet(a, b)
    rows_computed = 0
    trace = []

    for ell in range(min(len(a), len(b)), 0, -1):
        row_a = compute_row(a, ell, alpha)
        row_b = compute_row(b, ell, alpha)
        rows_computed += 1
        trace.append(ell)

        hit = intersect_rows(row_a, row_b)
        if hit is not None:
            p, q, witness = hit
            return _found(ell, p, q, witness, RowStats(rows_computed=rows_computed),
                          "quadratic", trace)

    return _not_found(RowStats(rows_computed=rows_computed), "quadratic", trace)


def skip_amount(ea: ComponentExtrema, eb: ComponentExtrema) -> int:
    """
    Number of lengths to move down after an empty row intersection.

    For every letter the per-string ranges [min, max] of its count are
    compared; the gap is how far apart the two ranges are (0 when they
    overlap). Going from length l to l-1 each range endpoint moves down by
    at most one and the maximum never grows, so a gap of g guarantees that
    the rows at l-1 .. l-g+1 cannot intersect either.

    Returns:
        max(1, largest per-letter gap)
    """
    gap = 0
    for min_a, max_a, min_b, max_b in zip(ea.min, ea.max, eb.min, eb.max):
        gap = max(gap, min_a - max_b, min_b - max_a)
    return max(1, gap)


def literal_skip_amount(ex: ComponentExtrema, ey: ComponentExtrema) -> int:
    """
    Skip value of the literal SKIP formula, kept for auditing only.

    Uses sigma-1 components and absolute differences even when the ranges
    overlap, so it can exceed the provable gap and jump past the answer.
    May return 0.
    """
    gaps = []
    for j in range(len(ex.min) - 1):
        if ex.max[j] >= ey.min[j]:
            gaps.append(abs(ex.min[j] - ey.max[j]))
        else:
            gaps.append(abs(ey.min[j] - ex.max[j]))
    return max(gaps, default=0)


def _descending_with_skips(a: str, b: str, algorithm: str, use_first_vector: bool,
                           audit: bool) -> LcafResult:
    alpha = build_alphabet(a, b)
    ell = min(len(a), len(b))

    rows_computed = 0
    rows_skipped = 0
    shrink_steps = 0
    trace: List[int] = []
    over_skips: List[OverSkip] = []

    first_a: Optional[ParikhVector] = None
    first_b: Optional[ParikhVector] = None
    if use_first_vector and ell > 0:
        first_a = parikh(a, 1, ell, alpha)
        first_b = parikh(b, 1, ell, alpha)

    while ell >= 1:
        row_a = compute_row(a, ell, alpha, first=first_a)
        row_b = compute_row(b, ell, alpha, first=first_b)
        rows_computed += 1
        trace.append(ell)

        hit = intersect_rows(row_a, row_b)
        if hit is not None:
            p, q, witness = hit
            stats = RowStats(rows_computed, shrink_steps, rows_skipped)
            return _found(ell, p, q, witness, stats, algorithm, trace,
                          _mark_past_answer(over_skips, ell))

        ea = row_extrema(row_a)
        eb = row_extrema(row_b)
        step = skip_amount(ea, eb)
        if audit:
            literal = literal_skip_amount(ea, eb)
            if literal > step:
                over_skips.append(OverSkip(ell=ell, sound_skip=step, literal_skip=literal))

        target = ell - step
        rows_skipped += min(step, ell) - 1

        if use_first_vector and target >= 1:
            for length in range(ell, target, -1):
                first_a = shrink_first_vector(first_a, a, length, alpha)
                first_b = shrink_first_vector(first_b, b, length, alpha)
                shrink_steps += 1

        ell = target

    stats = RowStats(rows_computed, shrink_steps, rows_skipped)
    return _not_found(stats, algorithm, trace, _mark_past_answer(over_skips, 0))


def _mark_past_answer(over_skips: List[OverSkip], answer: int) -> Tuple[OverSkip, ...]:
    """Flag the literal skips that would have landed below the answer."""
    return tuple(replace(o, jumps_past_answer=o.ell - o.literal_skip < answer) for o in over_skips)


def lcaf_skip(a: str, b: str, audit: bool = False) -> LcafResult:
    """
    Compute the LCAF using the skip trick.

    Args:
        a: First string
        b: Second string
        audit: Record visited lengths where the literal SKIP formula would
            have skipped further than the provable gap

    Returns:
        LcafResult with rows_computed and rows_skipped populated
    """
    return _descending_with_skips(a, b, "skip", use_first_vector=False, audit=audit)


def lcaf_first_vector(a: str, b: str, audit: bool = False) -> LcafResult:
    """
    Compute the LCAF using the skip trick and the first vector trick.

    Visits the same lengths as lcaf_skip. The Parikh vector of each
    string's prefix is shrunk one symbol at a time across skipped lengths,
    so every visited row starts from a ready first window instead of a
    recount. first_vectors_computed counts those shrink steps.
    """
    return _descending_with_skips(a, b, "first-vector", use_first_vector=True, audit=audit)


def witness_is_valid(result: LcafResult, a: str, b: str,
                     alpha: Optional[AlphabetMap] = None) -> bool:
    """
    Check that the reported occurrences really are abelian-equal.

    Witness vectors are expressed over build_alphabet(a, b).
    """
    if result.length == 0:
        return result.p is None and result.q is None and result.witness is None

    alpha = alpha or build_alphabet(a, b)
    ell = result.length
    if result.p < 1 or result.q < 1 or result.p + ell - 1 > len(a) or result.q + ell - 1 > len(b):
        return False
    return parikh(a, result.p, ell, alpha) == parikh(b, result.q, ell, alpha) == result.witness
