"""
Parikh vector substrate shared by every LCAF solver.

This module handles alphabets, Parikh vectors of factors, rows of the
window matrix M_S (all Parikh vectors of the l-length windows of S),
per-letter extrema over a row, counting-sort of rows and row intersection.

Positions are 1-based in every public function.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple


class ParikhError(Exception):
    """Base exception for Parikh vector operations."""
    pass


class WindowRangeError(ParikhError):
    """Exception raised when a (position, length) pair falls outside a string."""
    pass


class PreconditionError(ParikhError):
    """Exception raised when an operation is called on unsuitable input."""
    pass


class AlphabetError(ParikhError):
    """Exception raised when a symbol is not part of the alphabet."""
    pass


@dataclass(frozen=True)
class AlphabetMap:
    """
    Bijection between input symbols and dense indices 0..sigma-1.

    Symbols are kept in ascending code-point order so that the same set of
    symbols always yields the same indices.
    """
    symbols: Tuple[str, ...]
    index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError(f"Alphabet symbols must be distinct: {self.symbols!r}")
        if list(self.symbols) != sorted(self.symbols):
            raise AlphabetError(f"Alphabet symbols must be in ascending order: {self.symbols!r}")
        object.__setattr__(self, 'index', {symbol: i for i, symbol in enumerate(self.symbols)})

    @property
    def size(self) -> int:
        """Alphabet size sigma."""
        return len(self.symbols)

    def encode(self, s: str) -> List[int]:
        """Map every symbol of s to its index."""
        try:
            return [self.index[c] for c in s]
        except KeyError as e:
            raise AlphabetError(f"Symbol {e.args[0]!r} is not in alphabet {''.join(self.symbols)!r}")

    def zero(self) -> 'ParikhVector':
        """All-zero vector of this alphabet (Parikh vector of the empty string)."""
        return ParikhVector((0,) * self.size)

    def describe(self, v: 'ParikhVector') -> str:
        """Human readable form, e.g. (4a,4c,2g,2t)."""
        return "(" + ",".join(f"{count}{symbol}" for symbol, count in zip(self.symbols, v.counts)) + ")"


@dataclass(frozen=True, order=True)
class ParikhVector:
    """
    Per-letter occurrence counts of a factor.

    Ordering is lexicographic on the components (first component most
    significant), which is the vector order used to sort rows.
    """
    counts: Tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise PreconditionError(f"Parikh vector counts must be non-negative: {self.counts}")

    @property
    def length(self) -> int:
        """Length of the factor the vector describes."""
        return sum(self.counts)

    def __getitem__(self, j: int) -> int:
        return self.counts[j]

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class Row:
    """Parikh vectors of all ell-length windows of a string, window i at index i-1."""
    ell: int
    vectors: Tuple[ParikhVector, ...]

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class ComponentExtrema:
    """
    Componentwise minimum and maximum over the vectors of one row.

    The two arrays are not Parikh vectors themselves.
    """
    min: Tuple[int, ...]
    max: Tuple[int, ...]


def build_alphabet(a: str, b: str) -> AlphabetMap:
    """
    Build the alphabet of the symbols occurring in a or b.

    Args:
        a: First string
        b: Second string

    Returns:
        AlphabetMap over the union of symbols, ascending code-point order
    """
    return AlphabetMap(tuple(sorted(set(a) | set(b))))


def parikh(s: str, i: int, ell: int, alpha: AlphabetMap) -> ParikhVector:
    """
    Count every letter of the factor s[i..i+ell-1] directly.

    Args:
        s: Input string
        i: 1-based start position
        ell: Factor length (0 gives the zero vector)
        alpha: Alphabet of s

    Returns:
        ParikhVector of the factor

    Raises:
        WindowRangeError: If the factor does not lie inside s
    """
    if i < 1 or ell < 0 or i + ell - 1 > len(s):
        raise WindowRangeError(f"Factor ({i}, {ell}) out of range for string of length {len(s)}")

    counts = [0] * alpha.size
    for code in alpha.encode(s[i - 1:i - 1 + ell]):
        counts[code] += 1
    return ParikhVector(tuple(counts))


def compute_row(s: str, ell: int, alpha: AlphabetMap,
                first: Optional[ParikhVector] = None) -> Row:
    """
    Compute the row M_s[ell] in one left-to-right sliding pass.

    Moving the window one position to the right decrements the component of
    the symbol leaving on the left and increments the one entering on the
    right.

    Args:
        s: Input string
        ell: Window length, 1 <= ell <= len(s)
        alpha: Alphabet of s
        first: Optional precomputed Parikh vector of s[1..ell]; when given
            the first window is not recounted

    Returns:
        Row with len(s) - ell + 1 vectors

    Raises:
        WindowRangeError: If ell is out of range
    """
    n = len(s)
    if ell < 1 or ell > n:
        raise WindowRangeError(f"Row length {ell} out of range for string of length {n}")

    codes = alpha.encode(s)

    if first is None:
        counts = [0] * alpha.size
        for code in codes[:ell]:
            counts[code] += 1
    else:
        if first.length != ell or len(first) != alpha.size:
            raise PreconditionError(f"First vector {first.counts} does not describe a window of length {ell}")
        counts = list(first.counts)

    vectors = [ParikhVector(tuple(counts))]
    for i in range(1, n - ell + 1):
        counts[codes[i - 1]] -= 1
        counts[codes[i + ell - 1]] += 1
        vectors.append(ParikhVector(tuple(counts)))

    return Row(ell=ell, vectors=tuple(vectors))


def row_extrema(row: Row) -> ComponentExtrema:
    """
    Componentwise minimum and maximum over all windows of a row.

    Raises:
        PreconditionError: If the row has no windows
    """
    if not row.vectors:
        raise PreconditionError("Cannot take extrema of an empty row")

    columns = list(zip(*(v.counts for v in row.vectors)))
    return ComponentExtrema(
        min=tuple(min(column) for column in columns),
        max=tuple(max(column) for column in columns)
    )


def shrink_first_vector(v: ParikhVector, s: str, ell: int, alpha: AlphabetMap) -> ParikhVector:
    """
    Turn parikh(s, 1, ell) into parikh(s, 1, ell - 1) in constant time.

    The last symbol of the prefix, s[ell], is removed from the vector.

    Raises:
        PreconditionError: If ell is 0 or v cannot be the prefix vector
    """
    if ell < 1:
        raise PreconditionError("Cannot shrink the first vector of an empty factor")
    if ell > len(s):
        raise WindowRangeError(f"Prefix length {ell} out of range for string of length {len(s)}")

    code = alpha.encode(s[ell - 1])[0]
    counts = list(v.counts)
    if counts[code] == 0:
        raise PreconditionError(f"Vector {v.counts} is not the Parikh vector of the {ell}-prefix")
    counts[code] -= 1
    return ParikhVector(tuple(counts))


def _counting_sort_pass(items: List[Tuple[ParikhVector, int]], component: int,
                        key_range: int) -> List[Tuple[ParikhVector, int]]:
    """Stable counting sort of (vector, position) pairs on one component."""
    buckets = [0] * (key_range + 1)
    for vector, _ in items:
        buckets[vector.counts[component]] += 1

    total = 0
    for key in range(key_range + 1):
        buckets[key], total = total, total + buckets[key]

    output: List[Optional[Tuple[ParikhVector, int]]] = [None] * len(items)
    for item in items:
        key = item[0].counts[component]
        output[buckets[key]] = item
        buckets[key] += 1
    return output


def sort_row(row: Row) -> List[Tuple[ParikhVector, int]]:
    """
    Sort the vectors of a row together with their 1-based positions.

    LSD radix sort: one stable counting-sort pass per component, last
    component first, keys bounded by ell.

    Returns:
        List of (vector, position) in non-decreasing vector order; equal
        vectors keep ascending position order
    """
    items = [(vector, position) for position, vector in enumerate(row.vectors, start=1)]
    if not items:
        return items

    sigma = len(items[0][0])
    for component in reversed(range(sigma)):
        items = _counting_sort_pass(items, component, row.ell)
    return items


def intersect_rows(row_a: Row, row_b: Row) -> Optional[Tuple[int, int, ParikhVector]]:
    """
    Find a vector occurring in both rows.

    Both rows are sorted, then scanned in parallel, always advancing the
    list holding the smaller vector. Among all common vectors the one with
    the smallest position in A is returned, with the smallest position in B
    for that vector.

    Returns:
        (p, q, vector) or None when the rows share no vector

    Raises:
        PreconditionError: If the rows have different window lengths
    """
    if row_a.ell != row_b.ell:
        raise PreconditionError(f"Cannot intersect rows of lengths {row_a.ell} and {row_b.ell}")

    sorted_a = sort_row(row_a)
    sorted_b = sort_row(row_b)

    best: Optional[Tuple[int, int, ParikhVector]] = None
    i = j = 0
    while i < len(sorted_a) and j < len(sorted_b):
        vector_a, p = sorted_a[i]
        vector_b, q = sorted_b[j]
        if vector_a < vector_b:
            i += 1
        elif vector_b < vector_a:
            j += 1
        else:
            # First entry of each run of equal vectors holds the smallest position
            if best is None or p < best[0]:
                best = (p, q, vector_a)
            while i < len(sorted_a) and sorted_a[i][0] == vector_a:
                i += 1
            while j < len(sorted_b) and sorted_b[j][0] == vector_a:
                j += 1

    return best
