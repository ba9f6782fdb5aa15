"""
Registry of the LCAF algorithms by their command-line names.

Lookups go through SOLVERS at call time, so replacing an entry (for
example with a deliberately broken solver in a test) affects every caller.
"""

from typing import Callable, Dict, List

from core.binary_fast import BinaryAlphabetError, binary_alphabet, lcaf_binary
from core.solvers import lcaf_bruteforce, lcaf_first_vector, lcaf_quadratic, lcaf_skip
from models.results import LcafResult


Solver = Callable[[str, str], LcafResult]

SOLVERS: Dict[str, Solver] = {
    'oracle': lcaf_bruteforce,
    'quadratic': lcaf_quadratic,
    'binary': lcaf_binary,
    'skip': lcaf_skip,
    'first-vector': lcaf_first_vector,
    # descending one length at a time without skips
    'naive': lcaf_quadratic,
}

ALGORITHM_CHOICES = ['oracle', 'quadratic', 'binary', 'skip', 'first-vector']


class UnknownAlgorithmError(Exception):
    """Exception raised when an algorithm name is not registered."""
    pass


def get_solver(name: str) -> Solver:
    """Look up a solver by name."""
    if name not in SOLVERS:
        raise UnknownAlgorithmError(f"Unknown algorithm '{name}'. Choose from: {', '.join(sorted(SOLVERS))}")
    return SOLVERS[name]


def run_solver(name: str, a: str, b: str) -> LcafResult:
    """Run the named solver on (a, b)."""
    return get_solver(name)(a, b)


def is_applicable(name: str, a: str, b: str) -> bool:
    """Whether the named algorithm accepts this input pair."""
    if name != 'binary':
        return True
    try:
        binary_alphabet(a, b)
        return True
    except BinaryAlphabetError:
        return False


def expand_selection(selection: List[str]) -> List[str]:
    """Replace 'all' by every algorithm, keeping order and dropping repeats."""
    expanded: List[str] = []
    for name in selection:
        for item in (ALGORITHM_CHOICES if name == 'all' else [name]):
            if item not in expanded:
                expanded.append(item)
    return expanded
