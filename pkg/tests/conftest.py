import itertools
from functools import lru_cache

import pytest

from latinsym.latin import cayley_cyclic, cayley_from_elements, from_grid, jm_random
from latinsym.perm import Permutation, compose

L8_ROWS = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [2, 1, 4, 6, 8, 7, 5, 3],
    [3, 4, 1, 2, 6, 5, 8, 7],
    [4, 5, 8, 7, 3, 2, 1, 6],
    [5, 7, 6, 1, 4, 8, 3, 2],
    [6, 8, 5, 3, 7, 1, 2, 4],
    [7, 6, 2, 8, 1, 3, 4, 5],
    [8, 3, 7, 5, 2, 4, 6, 1],
]
# the one nontrivial autotopism of L8 is theta(L8, ALPHA_AUT, 2)
ALPHA_AUT = Permutation([2, 1, 8, 6, 7, 4, 5, 3])
# theta(L8, ALPHA_NON, 6) fixes rows 1 and 7 only
ALPHA_NON = Permutation([1, 8, 3, 4, 7, 6, 5, 2])


@pytest.fixture
def L8():
    return from_grid(L8_ROWS)


def klein():
    return cayley_from_elements(
        [(0, 0), (0, 1), (1, 0), (1, 1)], lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)
    )


def s3():
    # identity first so the table is reduced
    elems = [Permutation(p) for p in itertools.permutations([1, 2, 3])]
    return cayley_from_elements(elems, compose)


def small_group_tables():
    """Cayley tables used across the suite, keyed by name."""
    return {
        "C2": cayley_cyclic(2),
        "C3": cayley_cyclic(3),
        "C4": cayley_cyclic(4),
        "C2xC2": klein(),
        "C5": cayley_cyclic(5),
        "C6": cayley_cyclic(6),
        "S3": s3(),
        "C7": cayley_cyclic(7),
    }


@lru_cache(maxsize=None)
def reduced_corpus(n: int, count: int, seed: int = 0):
    return tuple(jm_random(n, seed * 100_000 + t, reduced=True) for t in range(count))


# -- acceptance summary --------------------------------------------------------

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
