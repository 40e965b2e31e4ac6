"""
Cycle-structure invariants of a reduced Latin square.

Everything here is derived from the products ``sigma_i sigma_k^-1`` of row
permutations. Their cycle structures are computed for all (k, i) at once in
numpy and cached on the square, so repeated queries are cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .latin import LatinSquare, is_reduced
from .perm import Permutation, compose, inverse


class NotReducedError(ValueError):
    pass


def _require_reduced(L: LatinSquare):
    if not is_reduced(L):
        raise NotReducedError("square must be reduced (first row and column the identity)")


def cycle_partitions(perms: np.ndarray) -> np.ndarray:
    """Cycle structures of a stack of 0-based permutations, shape (m, n).

    Row r of the result is the cycle-length partition of ``perms[r]`` sorted
    ascending and left-padded with zeros. Orbit minima are found by pointer
    doubling, so the cost is O(m n log n).
    """
    m, n = perms.shape
    offs = (np.arange(m) * n)[:, None]
    label = np.tile(np.arange(n), (m, 1))
    jump = perms
    step = 1
    while step < n:
        label = np.minimum(label, label.ravel()[offs + jump])
        jump = jump.ravel()[offs + jump]
        step *= 2
    counts = np.bincount((offs + label).ravel(), minlength=m * n).reshape(m, n)
    counts.sort(axis=1)
    return counts


class StructureTables:
    """Cycle-structure ids of every ``sigma_{i,k}``, shared by the invariants and the search."""

    def __init__(self, L: LatinSquare):
        n = L.n
        self.n = n
        R = L.array
        Rinv = np.argsort(R, axis=1)
        self.rows = R
        self.rows_inv = Rinv
        self.cols = np.ascontiguousarray(R.T)
        self.cols_inv = np.argsort(self.cols, axis=1)
        # P[k, i, x] = sigma_i(sigma_k^-1(x)), 0-based
        P = R[:, Rinv].transpose(1, 0, 2)
        parts = cycle_partitions(P.reshape(n * n, n))
        index: dict[bytes, int] = {}
        self.structures = []
        ids = []
        for row in parts:
            key = row.tobytes()
            sid = index.get(key)
            if sid is None:
                sid = index[key] = len(index)
                self.structures.append(tuple(int(x) for x in row[::-1] if x))
            ids.append(sid)
        # ids[k, i] = structure id of sigma_i sigma_k^-1
        self.ids = np.array(ids, dtype=np.intp).reshape(n, n)
        # number of cycles of each structure id
        self.cycle_counts = np.array([len(s) for s in self.structures])

    @cached_property
    def row_ids(self) -> np.ndarray:
        # sigma_1 is the identity, so sigma_{i,1} = sigma_i
        return self.ids[0]

    @cached_property
    def delta_set(self) -> list[int]:
        """0-based k with the same multiset of structures as the rows."""
        base = np.sort(self.row_ids)
        srt = np.sort(self.ids, axis=1)
        return [int(k) for k in np.flatnonzero((srt == base).all(axis=1))]

    @cached_property
    def lambdas(self) -> np.ndarray:
        """lambdas[t] = number of rows sharing row t's structure (0-based t)."""
        counts = np.bincount(self.row_ids, minlength=len(self.structures))
        return counts[self.row_ids]

    @cached_property
    def row_nu(self) -> np.ndarray:
        return self.cycle_counts[self.row_ids]


def tables(L: LatinSquare) -> StructureTables:
    """Cached StructureTables for L."""
    t = L.__dict__.get("_structure_tables")
    if t is None:
        t = StructureTables(L)
        L.__dict__["_structure_tables"] = t
    return t


@dataclass(frozen=True)
class SquareInvariants:
    n: int
    nu: int
    nu_rows: tuple[int, ...]
    lambda_per_row: dict[int, int]
    lambda_max: int
    delta_set: tuple[int, ...]
    delta: int
    row_structures: dict[int, tuple[int, ...]]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "nu": self.nu,
            "nu_rows": list(self.nu_rows),
            "lambda_per_row": {str(k): v for k, v in self.lambda_per_row.items()},
            "lambda_max": self.lambda_max,
            "delta_set": list(self.delta_set),
            "delta": self.delta,
            "row_structures": {str(k): list(v) for k, v in self.row_structures.items()},
        }


def compute_invariants(L: LatinSquare) -> SquareInvariants:
    _require_reduced(L)
    T = tables(L)
    nu_vals = T.row_nu
    nu = int(nu_vals.min())
    lam = {t + 1: int(v) for t, v in enumerate(T.lambdas)}
    delta = tuple(k + 1 for k in T.delta_set)
    return SquareInvariants(
        n=L.n,
        nu=nu,
        nu_rows=tuple(int(i) + 1 for i in np.flatnonzero(nu_vals == nu)),
        lambda_per_row=lam,
        lambda_max=max(lam.values()),
        delta_set=delta,
        delta=len(delta),
        row_structures={t + 1: T.structures[s] for t, s in enumerate(T.row_ids)},
    )


def sigma_ik(L: LatinSquare, i: int, k: int) -> Permutation:
    """``sigma_i sigma_k^-1``: the map carrying row k onto row i."""
    return compose(L.row(i), inverse(L.row(k)))


def r_set(L: LatinSquare, k: int, t: int) -> tuple[int, ...]:
    """Rows i whose ``sigma_i sigma_k^-1`` has the structure of row t; k must lie in Delta(L)."""
    _require_reduced(L)
    T = tables(L)
    if not 1 <= t <= L.n:
        raise IndexError(f"row index {t} out of range 1..{L.n}")
    if not 1 <= k <= L.n or (k - 1) not in T.delta_set:
        raise ValueError(f"k={k} is not in Delta(L)")
    return tuple(int(i) + 1 for i in np.flatnonzero(T.ids[k - 1] == T.row_ids[t - 1]))


def lambda_cycle(L: LatinSquare, C: Sequence[int]) -> int:
    """Smallest lambda(L, s) over the points s of C."""
    if len(C) == 0:
        raise ValueError("empty cycle")
    _require_reduced(L)
    lam = tables(L).lambdas
    return int(min(lam[s - 1] for s in C))


def pivot_choice(L: LatinSquare) -> tuple[int, int]:
    """Pick the pivot row for the search and the matching size bound.

    Among rows with the fewest cycles, returns ``(bound, l)`` minimizing
    ``n * delta * lambda(L, l) * prod(lambda(L, C))`` over the cycles C of
    ``sigma_l`` that do not contain l. Ties go to the lowest index.
    """
    _require_reduced(L)
    T = tables(L)
    n = L.n
    delta = len(T.delta_set)
    lam = T.lambdas
    nu = int(T.row_nu.min())
    best = None
    for l0 in np.flatnonzero(T.row_nu == nu):
        l = int(l0) + 1
        value = n * delta * int(lam[l0])
        for cyc in L.rows[l0].cycles():
            if l not in cyc:
                value *= int(min(lam[s - 1] for s in cyc))
        if best is None or value < best[0]:
            best = (value, l)
    return best
