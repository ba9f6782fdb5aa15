"""
LCAF for binary strings through min/max-ones profiles.

In a binary string the one-counts of the l-length windows always form a
contiguous range [minOne(l) .. maxOne(l)]. Two binary strings therefore
share an l-length abelian factor exactly when their ranges at l overlap,
and an occurrence with a chosen one-count k is found with one window scan.

Two profile builders are provided: a numpy prefix-sum sweep (one vector
operation per length) and a bit-packed variant that keeps all window
counters as bit-sliced planes of arbitrary-width integers.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from core.parikh import AlphabetMap, WindowRangeError, build_alphabet, parikh
from models.results import LcafResult, RowStats


logger = logging.getLogger(__name__)

BINARY_SYMBOLS = ('0', '1')


class BinaryAlphabetError(Exception):
    """Exception raised when an input is not over a two-letter alphabet."""
    pass


class WindowNotFoundError(Exception):
    """Exception raised when no window with the requested one-count exists."""
    pass


@dataclass(frozen=True)
class MinMaxProfile:
    """
    Per-length extrema of the one-counts of a binary string's windows.

    min_one[l] and max_one[l] are stored for l = 0..n; index 0 is the
    empty window and always 0.
    """
    n: int
    min_one: Tuple[int, ...]
    max_one: Tuple[int, ...]

    def min_at(self, ell: int) -> int:
        self._check(ell)
        return self.min_one[ell]

    def max_at(self, ell: int) -> int:
        self._check(ell)
        return self.max_one[ell]

    def _check(self, ell: int) -> None:
        if ell < 1 or ell > self.n:
            raise WindowRangeError(f"Length {ell} out of range for profile of length {self.n}")


def binary_alphabet(a: str, b: str = "") -> AlphabetMap:
    """
    Alphabet used to read a and b as binary strings.

    Strings made of '0' and '1' always use ('0', '1') so that '1' is the
    counted letter even if '0' never occurs. Otherwise the smaller symbol
    plays the role of '0'.

    Raises:
        BinaryAlphabetError: If more than two symbols occur
    """
    symbols = set(a) | set(b)
    if symbols <= set(BINARY_SYMBOLS):
        return AlphabetMap(BINARY_SYMBOLS)
    if len(symbols) > 2:
        raise BinaryAlphabetError(
            f"Binary algorithm needs at most 2 symbols, found {len(symbols)}: {''.join(sorted(symbols))!r}"
        )
    return build_alphabet(a, b)


def _one_bits(s: str, alpha: AlphabetMap) -> List[int]:
    return [1 if code == 1 else 0 for code in alpha.encode(s)]


def min_max_profile(s: str, alpha: Optional[AlphabetMap] = None) -> MinMaxProfile:
    """
    Build the min/max-ones profile with a prefix-sum sweep.

    For each length l the one-counts of all windows are P[l:] - P[:-l]
    where P is the prefix-sum array; O(n) per length, O(n^2) in total,
    linear extra space.

    Args:
        s: Binary string
        alpha: Alphabet to read s with (default: binary_alphabet(s))

    Raises:
        BinaryAlphabetError: If s is not binary
    """
    alpha = alpha or binary_alphabet(s)
    if alpha.size > 2:
        raise BinaryAlphabetError(f"Alphabet {''.join(alpha.symbols)!r} is not binary")

    n = len(s)
    prefix = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.asarray(_one_bits(s, alpha), dtype=np.int64), out=prefix[1:])

    min_one = [0]
    max_one = [0]
    for ell in range(1, n + 1):
        windows = prefix[ell:] - prefix[:n - ell + 1]
        min_one.append(int(windows.min()))
        max_one.append(int(windows.max()))

    return MinMaxProfile(n=n, min_one=tuple(min_one), max_one=tuple(max_one))


def min_max_profile_packed(s: str, alpha: Optional[AlphabetMap] = None) -> MinMaxProfile:
    """
    Build the min/max-ones profile with bit-parallel window counters.

    Bit i of plane k holds bit k of the one-count of the window starting at
    position i. Growing every window by one symbol is a ripple-carry add of
    the shifted input bits into the planes, and the extrema over the valid
    positions are read off the planes from the most significant bit down.
    Every step handles all window positions with a handful of word
    operations on Python integers.

    Raises:
        BinaryAlphabetError: If s is not binary
    """
    alpha = alpha or binary_alphabet(s)
    if alpha.size > 2:
        raise BinaryAlphabetError(f"Alphabet {''.join(alpha.symbols)!r} is not binary")

    n = len(s)
    bits = 0
    for i, bit in enumerate(_one_bits(s, alpha)):
        if bit:
            bits |= 1 << i

    planes: List[int] = []
    min_one = [0]
    max_one = [0]
    for ell in range(1, n + 1):
        carry = bits >> (ell - 1)
        for k in range(len(planes)):
            if not carry:
                break
            planes[k], carry = planes[k] ^ carry, planes[k] & carry
        if carry:
            planes.append(carry)

        valid = (1 << (n - ell + 1)) - 1
        min_one.append(_plane_extreme(planes, valid, want_max=False))
        max_one.append(_plane_extreme(planes, valid, want_max=True))

    return MinMaxProfile(n=n, min_one=tuple(min_one), max_one=tuple(max_one))


def _plane_extreme(planes: List[int], candidates: int, want_max: bool) -> int:
    value = 0
    for k in reversed(range(len(planes))):
        chosen = candidates & (planes[k] if want_max else ~planes[k])
        if chosen:
            candidates = chosen
            if want_max:
                value |= 1 << k
        elif not want_max:
            value |= 1 << k
    return value


def overlap_at(pa: MinMaxProfile, pb: MinMaxProfile, ell: int) -> Optional[range]:
    """
    Common one-counts of the l-length windows of two binary strings.

    Returns:
        range(max(minA, minB), min(maxA, maxB) + 1) when non-empty, else None

    Raises:
        WindowRangeError: If ell is outside either profile
    """
    low = max(pa.min_at(ell), pb.min_at(ell))
    high = min(pa.max_at(ell), pb.max_at(ell))
    if low > high:
        return None
    return range(low, high + 1)


def find_window_with_ones(s: str, ell: int, k: int, alpha: Optional[AlphabetMap] = None) -> int:
    """
    Smallest 1-based position of an ell-window of s containing exactly k ones.

    Raises:
        WindowRangeError: If ell is out of range
        WindowNotFoundError: If no window has k ones, i.e. k lies outside
            [minOne(ell), maxOne(ell)]
    """
    n = len(s)
    if ell < 1 or ell > n:
        raise WindowRangeError(f"Window length {ell} out of range for string of length {n}")

    bits = _one_bits(s, alpha or binary_alphabet(s))
    count = sum(bits[:ell])
    if count == k:
        return 1
    for i in range(1, n - ell + 1):
        count += bits[i + ell - 1] - bits[i - 1]
        if count == k:
            return i + 1

    raise WindowNotFoundError(f"No window of length {ell} with {k} ones")


def lcaf_binary(a: str, b: str, packed: bool = False) -> LcafResult:
    """
    Compute the LCAF of two binary strings from their min/max-ones profiles.

    The largest length whose one-count ranges overlap is the LCAF length;
    the low end of the overlap is used as the target one-count and the
    first window with that count is reported in each string.

    Args:
        a: First binary string
        b: Second binary string
        packed: Build profiles with the bit-packed variant

    Returns:
        LcafResult whose witness is expressed over build_alphabet(a, b)

    Raises:
        BinaryAlphabetError: If a and b together use more than two symbols
    """
    alpha = binary_alphabet(a, b)
    build = min_max_profile_packed if packed else min_max_profile
    profile_a = build(a, alpha)
    profile_b = build(b, alpha)

    trace = []
    for ell in range(min(len(a), len(b)), 0, -1):
        trace.append(ell)
        common = overlap_at(profile_a, profile_b, ell)
        if common is None:
            continue

        k = common.start
        p = find_window_with_ones(a, ell, k, alpha)
        q = find_window_with_ones(b, ell, k, alpha)
        logger.debug("binary LCAF %d with %d ones at p=%d q=%d", ell, k, p, q)
        return LcafResult(
            length=ell, p=p, q=q, witness=parikh(a, p, ell, build_alphabet(a, b)),
            stats=RowStats(), algorithm="binary", trace=tuple(trace)
        )

    return LcafResult(length=0, p=None, q=None, witness=None, stats=RowStats(),
                      algorithm="binary", trace=tuple(trace))
