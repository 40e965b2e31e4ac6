"""
Upper bounds on the size of an autotopy group, and derangement counts.

All values are Python integers, so nothing overflows.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from math import factorial, prod

from .invariants import _require_reduced, pivot_choice, tables
from .latin import LatinSquare, transpose


def bsw_bound(n: int) -> int:
    """``n^2 prod_{t=1}^{floor(log2 n)} (n - 2^(t-1))``, valid for any square of order n."""
    if n < 1:
        raise ValueError("n must be positive")
    return n * n * prod(n - 2 ** (t - 1) for t in range(1, n.bit_length()))


def parity_bound(L: LatinSquare) -> int:
    """``n (n-k)! k!`` with k the number of even rows.

    Not an upper bound in general: the cyclic group of order 4 exceeds it,
    so it is not used as a dominance check anywhere.
    """
    n = L.n
    k = sum(1 for r in L.rows if r.parity() == "even")
    return n * factorial(n - k) * factorial(k)


def cycle_partition_bound(L: LatinSquare) -> int:
    """``n^2 prod lambda_i!`` over the multiplicities of distinct row cycle structures."""
    _require_reduced(L)
    T = tables(L)
    counts: dict[int, int] = {}
    for s in T.row_ids.tolist():
        counts[s] = counts.get(s, 0) + 1
    return L.n ** 2 * prod(factorial(c) for c in counts.values())


def thm41_bound(L: LatinSquare) -> tuple[int, int]:
    """Cycle-structure bound ``n delta lambda(L,l) prod lambda(L,C)`` and its pivot row l."""
    return pivot_choice(L)


def _line_bound(L: LatinSquare) -> tuple[int, int]:
    T = tables(L)
    nu = int(T.row_nu.min())
    return L.n * len(T.delta_set) * int(T.lambdas.max()) ** nu, nu


def thm51_bound(L: LatinSquare) -> int:
    """``n delta lambda^k`` with k the fewest cycles in any line.

    When a column has fewer cycles than every row, delta and lambda are taken
    from the transposed square, whose autotopy group has the same order.
    """
    _require_reduced(L)
    row_val, row_nu = _line_bound(L)
    col_val, col_nu = _line_bound(transpose(L))
    return col_val if col_nu < row_nu else row_val


def single_cycle_bound(n: int) -> int:
    return n * n * (n - 1)


def thm52_bound(n: int, k: int) -> int:
    """Bound when two lines differ by a permutation with at most k cycles."""
    if k < 1:
        raise ValueError("k must be positive")
    return n * n * (n - 1) ** k


def cayley_order(n: int, aut_size: int) -> int:
    """Autotopy group order of the Cayley table of a group of order n with |Aut| = aut_size."""
    return n * n * aut_size


@lru_cache(maxsize=None)
def derangements_with_k_cycles(n: int, k: int) -> int:
    """Fixed-point-free permutations of n points with exactly k cycles.

    >>> [derangements_with_k_cycles(6, k) for k in range(1, 4)]
    [120, 130, 15]
    """
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if n == 1 or k == 0 or 2 * k > n:
        return 0
    return (n - 1) * (derangements_with_k_cycles(n - 1, k) + derangements_with_k_cycles(n - 2, k - 1))


def derangements(n: int) -> int:
    """Total derangement count, ``D(n) = (n-1)(D(n-1) + D(n-2))``."""
    a, b = 1, 0  # D(0), D(1)
    if n == 0:
        return a
    for m in range(2, n + 1):
        a, b = b, (m - 1) * (a + b)
    return b


@dataclass(frozen=True)
class BoundReport:
    n: int
    bsw: int
    parity: int
    partition: int
    thm41: int
    thm41_pivot: int
    thm51: int
    thm51_k: int

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(L: LatinSquare) -> BoundReport:
    _require_reduced(L)
    t41, pivot = thm41_bound(L)
    k = min(int(tables(L).row_nu.min()), int(tables(transpose(L)).row_nu.min()))
    return BoundReport(
        n=L.n,
        bsw=bsw_bound(L.n),
        parity=parity_bound(L),
        partition=cycle_partition_bound(L),
        thm41=t41,
        thm41_pivot=pivot,
        thm51=thm51_bound(L),
        thm51_k=k,
    )
