"""
Autotopy groups of Latin squares by row cycle structure.

For a reduced square every isotopism that keeps it reduced has the form
``theta(L, alpha, j) = (alpha, alpha pi_j^-1 sigma_k, alpha pi_j^-1)`` with
``k = alpha^-1(1)``. The search fixes a pivot row l with the fewest cycles
and, for each admissible ``k = alpha^-1(1)``, ``i = alpha^-1(l)`` and column
j, must have ``sigma_l = alpha sigma_{i,j,k} alpha^-1``. So alpha carries each
cycle of ``sigma_{i,j,k}`` onto an equal-length cycle of ``sigma_l`` with a
fixed rotation. The admissible (cycle, rotation) pairs are the all-ones
shifted diagonals of the square blocks of a 0/1 candidate matrix; combining
one per pivot cycle gives the candidate alphas, which are then verified.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .invariants import _require_reduced, pivot_choice, tables
from .latin import Isotopism, LatinSquare, apply_isotopism, reduce, transpose
from .perm import Permutation, compose, compose_all, identity, inverse, transposition


class OrderGuardError(ValueError):
    """Raised when the brute-force oracle is asked for too large an order."""


BRUTE_MAX_ORDER = 8


# -- isotopisms keeping a reduced square reduced ---------------------------


def theta(L: LatinSquare, alpha: Permutation, j: int) -> Isotopism:
    """The isotopism ``(alpha, alpha pi_j^-1 sigma_{alpha^-1(1)}, alpha pi_j^-1)``."""
    _require_reduced(L)
    if alpha.n != L.n:
        raise ValueError("alpha has the wrong order")
    pj_inv = inverse(L.col(j))
    gamma = compose(alpha, pj_inv)
    beta = compose(gamma, L.rows[inverse(alpha)(1) - 1])
    return Isotopism(alpha, beta, gamma)


def transformed_row(L: LatinSquare, alpha: Permutation, j: int, i: int) -> Permutation:
    """Row i of ``theta(L, alpha, j)(L)`` written as a product of rows and columns."""
    _require_reduced(L)
    a_inv = inverse(alpha)
    pj = L.col(j)
    return compose_all(
        alpha, inverse(pj), L.row(a_inv(i)), inverse(L.row(a_inv(1))), pj, a_inv
    )


def verify_autotopism(L: LatinSquare, iso: Isotopism) -> bool:
    """True iff iso fixes L; checks ``gamma sigma_r beta^-1 = sigma_alpha(r)`` row by row."""
    if iso.n != L.n:
        return False
    g = iso.gamma.images
    b_inv = inverse(iso.beta).images
    a = iso.alpha.images
    grid = L.grid
    for r, row in enumerate(grid):
        target = grid[a[r] - 1]
        for c in range(len(row)):
            if g[row[b_inv[c] - 1] - 1] != target[c]:
                return False
    return True


# -- candidate matrices ----------------------------------------------------


def _cycles0(p: Sequence[int]) -> list[list[int]]:
    """Canonical cycles of a 0-based permutation."""
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(cyc)
    return out


def build_T(L: LatinSquare, k: int) -> np.ndarray:
    """0/1 matrix (original indices, 0-based) with entry (i, t) set iff
    ``sigma_i sigma_k^-1`` and ``sigma_t`` share a cycle structure."""
    _require_reduced(L)
    T = tables(L)
    if (k - 1) not in T.delta_set:
        raise ValueError(f"k={k} is not in Delta(L)")
    return T.ids[k - 1][:, None] == T.row_ids[None, :]


@dataclass(frozen=True, eq=False)
class CandidateMatrix:
    """The matrix T^l(L, i, j, k) with rows and columns in cycle order.

    ``bits[p, q]`` refers to original row ``row_order[p]`` and original column
    ``col_order[q]``. Block a of the rows spans ``row_blocks[a]:row_blocks[a+1]``
    and lists one cycle of ``sigma_{i,j,k}`` in cycle order; columns likewise
    follow the cycles of ``sigma_l``. Orders are 1-based.
    """

    n: int
    bits: np.ndarray
    row_order: tuple[int, ...]
    col_order: tuple[int, ...]
    row_blocks: tuple[int, ...]
    col_blocks: tuple[int, ...]
    origin: tuple[int, int, int, int]  # (l, i, j, k)

    @property
    def row_cycles(self) -> list[tuple[int, ...]]:
        rb = self.row_blocks
        return [self.row_order[rb[a]:rb[a + 1]] for a in range(len(rb) - 1)]

    @property
    def col_cycles(self) -> list[tuple[int, ...]]:
        cb = self.col_blocks
        return [self.col_order[cb[b]:cb[b + 1]] for b in range(len(cb) - 1)]

    def entries(self) -> set[tuple[int, int]]:
        """Set bits as (original row, original column) pairs."""
        return {
            (self.row_order[p], self.col_order[q]) for p, q in zip(*np.nonzero(self.bits))
        }

    def block(self, a: int, b: int) -> np.ndarray:
        rb, cb = self.row_blocks, self.col_blocks
        return self.bits[rb[a]:rb[a + 1], cb[b]:cb[b + 1]]

    def __str__(self):
        head = "    " + " ".join(f"{c:>2}" for c in self.col_order)
        lines = [head]
        for p, r in enumerate(self.row_order):
            cells = " ".join(" 1" if v else " ." for v in self.bits[p])
            lines.append(f"{r:>3} {cells}")
        return "\n".join(lines)


def _candidate_matrix(T, l0: int, i0: int, j0: int, k0: int, col_cycles) -> CandidateMatrix:
    # 0-based core of build_Tl; col_cycles are the cycles of sigma_l
    n = T.n
    rows, rows_inv = T.rows, T.rows_inv
    col, col_inv = T.cols[j0], T.cols_inv[j0]
    # sigma_{i,k} = sigma_i sigma_k^-1 ; sigma_{i,j,k} = pi_j^-1 sigma_{i,k} pi_j
    s_ik = rows[i0][rows_inv[k0]]
    s_ijk = col_inv[s_ik[col]].tolist()
    row_cycles = _cycles0(s_ijk)

    row_order = [x for c in row_cycles for x in c]
    col_order = [x for c in col_cycles for x in c]
    row_len = np.array([len(c) for c in row_cycles for _ in c])
    col_len = np.array([len(c) for c in col_cycles for _ in c])
    rcls = T.ids[k0][row_order]
    ccls = T.row_ids[col_order]
    bits = (rcls[:, None] == ccls[None, :]) & (row_len[:, None] == col_len[None, :])

    rpos = [0] * n
    for p, x in enumerate(row_order):
        rpos[x] = p
    cpos = [0] * n
    for q, x in enumerate(col_order):
        cpos[x] = q

    # alpha(i) = l
    pi, ql = rpos[i0], cpos[l0]
    keep = bits[pi, ql]
    bits[pi, :] = False
    bits[:, ql] = False
    bits[pi, ql] = keep
    # alpha(1) must lie in Delta(L)
    p1 = rpos[0]
    mask = np.zeros(n, dtype=bool)
    mask[[cpos[d] for d in T.delta_set]] = True
    bits[p1, :] &= mask
    # alpha(k) = 1
    pk, q1 = rpos[k0], cpos[0]
    keep = bits[pk, q1]
    bits[pk, :] = False
    bits[:, q1] = False
    bits[pk, q1] = keep

    return CandidateMatrix(
        n=n,
        bits=bits,
        row_order=tuple(x + 1 for x in row_order),
        col_order=tuple(x + 1 for x in col_order),
        row_blocks=tuple(itertools.accumulate((len(c) for c in row_cycles), initial=0)),
        col_blocks=tuple(itertools.accumulate((len(c) for c in col_cycles), initial=0)),
        origin=(l0 + 1, i0 + 1, j0 + 1, k0 + 1),
    )


def build_Tl(L: LatinSquare, l: int, i: int, j: int, k: int) -> CandidateMatrix:
    """Candidate matrix for pivot row l, ``alpha(i) = l``, column j and ``alpha(k) = 1``."""
    _require_reduced(L)
    T = tables(L)
    n = L.n
    for name, v in (("l", l), ("i", i), ("j", j), ("k", k)):
        if not 1 <= v <= n:
            raise IndexError(f"{name}={v} out of range 1..{n}")
    if (k - 1) not in T.delta_set:
        raise ValueError(f"k={k} is not in Delta(L)")
    if T.ids[k - 1, i - 1] != T.row_ids[l - 1]:
        raise ValueError(f"i={i} is not in R_{k}(L,{l})")
    col_cycles = _cycles0(T.rows[l - 1].tolist())
    return _candidate_matrix(T, l - 1, i - 1, j - 1, k - 1, col_cycles)


def block_shifted_diagonals(M: CandidateMatrix, block: tuple[int, int]) -> list[int]:
    """Offsets t (0-based) with every cell ``(r, (r + t) mod m)`` of the block set."""
    B = M.block(*block)
    m, m2 = B.shape
    if m != m2:
        raise ValueError(f"block {block} is {m}x{m2}, not square")
    r = np.arange(m)
    diag = B[r[:, None], (r[:, None] + r[None, :]) % m]
    return [int(t) for t in np.flatnonzero(diag.all(axis=0))]


def _block_options(bits: list[list[bool]], rb, cb, b: int, col_count: list[int]) -> list[tuple[int, int]]:
    """All (row block, offset) pairs giving a full shifted diagonal in column block b."""
    c0, c1 = cb[b], cb[b + 1]
    m = c1 - c0
    # the column of the block with the fewest 1s bounds the number of diagonals
    qbest = min(range(c0, c1), key=col_count.__getitem__)
    u = qbest - c0
    opts = []
    a = 0
    for p in range(len(bits)):
        if not bits[p][qbest]:
            continue
        while rb[a + 1] <= p:
            a += 1
        r0 = rb[a]
        t = (u - (p - r0)) % m
        if all(bits[r0 + s][c0 + (s + t) % m] for s in range(m)):
            opts.append((a, t))
    return opts


def assemble_alphas(M: CandidateMatrix) -> list[Permutation]:
    """Every alpha whose graph is an all-ones diagonal of M meeting each
    square block in nothing or a full shifted diagonal."""
    bits_np = M.bits
    if not bits_np.any(axis=1).all() or not bits_np.any(axis=0).all():
        return []
    bits = bits_np.tolist()
    col_count = bits_np.sum(axis=0).tolist()
    rb, cb = M.row_blocks, M.col_blocks
    nb = len(cb) - 1
    if len(rb) - 1 != nb:
        return []
    options = []
    for b in range(nb):
        opts = _block_options(bits, rb, cb, b, col_count)
        if not opts:
            # some pivot cycle has no image; nothing to combine
            return []
        options.append((b, opts))
    options.sort(key=lambda bo: len(bo[1]))

    row_order = [x - 1 for x in M.row_order]
    col_order = [x - 1 for x in M.col_order]
    n = M.n
    out = []
    used = [False] * nb
    chosen: list[tuple[int, int, int]] = []

    def emit():
        img = [0] * n
        for b, a, t in chosen:
            r0, c0 = rb[a], cb[b]
            m = cb[b + 1] - c0
            for s in range(m):
                img[row_order[r0 + s]] = col_order[c0 + (s + t) % m] + 1
        out.append(Permutation._trusted(tuple(img)))

    def walk(depth: int):
        if depth == len(options):
            emit()
            return
        b, opts = options[depth]
        for a, t in opts:
            if used[a]:
                continue
            used[a] = True
            chosen.append((b, a, t))
            walk(depth + 1)
            chosen.pop()
            used[a] = False

    walk(0)
    out.sort()
    return out


# -- groups ------------------------------------------------------------------


@dataclass(frozen=True)
class AutotopyGroup:
    n: int
    elements: tuple[Isotopism, ...]

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[Isotopism]) -> "AutotopyGroup":
        uniq = {e.key(): e for e in elements}
        return cls(n, tuple(uniq[k] for k in sorted(uniq)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, iso):
        return iso.key() in self.keys()

    def keys(self) -> frozenset:
        return frozenset(e.key() for e in self.elements)

    def has_identity(self) -> bool:
        return Isotopism.identity(self.n).key() in self.keys()

    def is_closed(self) -> bool:
        keys = self.keys()
        return all((g * h).key() in keys for g in self.elements for h in self.elements)

    def has_inverses(self) -> bool:
        keys = self.keys()
        return all(g.inverse().key() in keys for g in self.elements)

    def is_group(self) -> bool:
        return self.has_identity() and self.has_inverses() and self.is_closed()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "group_order": self.order,
            "elements": [e.to_dict() for e in self.elements],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AutotopyGroup":
        return cls.from_elements(d["n"], (Isotopism.from_dict(e) for e in d["elements"]))


def _forced_cycle_ok(s0, c0, s_ik, p_j, p_j_inv, s_l, rcls, ccls, i0, l0, k0, delta) -> bool:
    """Walk the block forced by ``alpha(s0) = c0`` and test every cell on it.

    Row s follows ``sigma_{i,j,k}``, column c follows ``sigma_l``; the walk is
    the unique shifted diagonal through (s0, c0), so a failed cell or unequal
    cycle lengths rule out the whole matrix.
    """
    s, c = s0, c0
    while True:
        if (
            rcls[s] != ccls[c]
            or (s == i0) != (c == l0)
            or (s == k0) != (c == 0)
            or (s == 0 and c not in delta)
        ):
            return False
        s = p_j_inv[s_ik[p_j[s]]]
        c = s_l[c]
        if s == s0 or c == c0:
            return s == s0 and c == c0


def _search_chunk(L: LatinSquare, l0: int, pairs: list[tuple[int, int]]) -> list[Isotopism]:
    T = tables(L)
    n = L.n
    s_l = T.rows[l0].tolist()
    col_cycles = _cycles0(s_l)
    cols = T.cols.tolist()
    cols_inv = T.cols_inv.tolist()
    ccls = T.row_ids.tolist()
    delta = set(T.delta_set)
    found = []
    for k0, i0 in pairs:
        rcls = T.ids[k0].tolist()
        s_ik = T.rows[i0][T.rows_inv[k0]].tolist()
        for j0 in range(n):
            # alpha(k) = 1 and alpha(i) = l each pin down one whole block
            args = (s_ik, cols[j0], cols_inv[j0], s_l, rcls, ccls, i0, l0, k0, delta)
            if not (_forced_cycle_ok(k0, 0, *args) and _forced_cycle_ok(i0, l0, *args)):
                continue
            M = _candidate_matrix(T, l0, i0, j0, k0, col_cycles)
            for alpha in assemble_alphas(M):
                iso = theta(L, alpha, j0 + 1)
                if verify_autotopism(L, iso):
                    found.append(iso)
    return found


def search_plan(L: LatinSquare) -> tuple[int, list[tuple[int, int]]]:
    """Pivot row l (1-based) and the (k, i) pairs the search visits (1-based)."""
    T = tables(L)
    _, l = pivot_choice(L)
    target = T.row_ids[l - 1]
    pairs = [
        (k0 + 1, int(i0) + 1)
        for k0 in T.delta_set
        for i0 in np.flatnonzero(T.ids[k0] == target)
    ]
    return l, pairs


def autotopy_group(L: LatinSquare, parallel: bool = False, workers: int | None = None) -> AutotopyGroup:
    """All autotopisms of a reduced Latin square."""
    _require_reduced(L)
    n = L.n
    if n == 1:
        return AutotopyGroup.from_elements(1, [Isotopism.identity(1)])
    l, pairs = search_plan(L)
    pairs0 = [(k - 1, i - 1) for k, i in pairs]
    if parallel and len(pairs0) > 1:
        chunks = [[p] for p in pairs0]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_search_chunk, itertools.repeat(L), itertools.repeat(l - 1), chunks))
        found = [iso for part in parts for iso in part]
    else:
        found = _search_chunk(L, l - 1, pairs0)
    return AutotopyGroup.from_elements(n, found)


def autotopy_group_brute(L: LatinSquare, override: bool = False) -> AutotopyGroup:
    """Exhaustive check of ``theta(L, alpha, j)`` over all alpha in S_n and all j."""
    _require_reduced(L)
    n = L.n
    if n > BRUTE_MAX_ORDER and not override:
        raise OrderGuardError(f"order {n} exceeds the brute-force limit {BRUTE_MAX_ORDER}; pass override=True to force")
    R = L.array
    cols_inv = np.argsort(R.T, axis=1)
    A = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    N = len(A)
    A_inv = np.argsort(A, axis=1)
    S = R[A_inv[:, 0]]  # sigma_{alpha^-1(1)}
    lin = np.arange(N)[:, None]
    found = []
    for j0 in range(n):
        pj_inv = cols_inv[j0]
        G = A[:, pj_inv]  # alpha pi_j^-1
        B = G[lin, S]  # alpha pi_j^-1 sigma_k
        # theta fixes L iff L[alpha(r), beta(c)] == gamma(L[r, c]) everywhere
        lhs = R[A[:, :, None], B[:, None, :]]
        rhs = G[lin, R.reshape(1, -1)].reshape(N, n, n)
        ok = np.flatnonzero((lhs == rhs).all(axis=(1, 2)))
        for t in ok:
            found.append(
                Isotopism(
                    Permutation._trusted(tuple(A[t] + 1)),
                    Permutation._trusted(tuple(B[t] + 1)),
                    Permutation._trusted(tuple(G[t] + 1)),
                )
            )
    return AutotopyGroup.from_elements(n, found)


def conjugate_group(G: AutotopyGroup, iso: Isotopism) -> AutotopyGroup:
    """``{iso g iso^-1 : g in G}``."""
    if iso.n != G.n:
        raise ValueError("order mismatch")
    inv = iso.inverse()
    return AutotopyGroup.from_elements(G.n, (iso * g * inv for g in G.elements))


def transpose_group(G: AutotopyGroup) -> AutotopyGroup:
    """Autotopisms of the transposed square: swap the row and column maps."""
    return AutotopyGroup.from_elements(G.n, (Isotopism(g.beta, g.alpha, g.gamma) for g in G.elements))


def autotopy_group_any(L: LatinSquare, parallel: bool = False) -> AutotopyGroup:
    """Autotopy group of an arbitrary Latin square, via its reduced form."""
    Lr, red = reduce(L)
    G = autotopy_group(Lr, parallel=parallel)
    if red.is_identity():
        return G
    return conjugate_group(G, red.inverse())


class PivotResult(NamedTuple):
    square: LatinSquare
    theta: Isotopism
    pivot_nu: int
    # when set, square = theta(transpose(L)) rather than theta(L)
    transposed: bool = False


def _min_relative_nu(L: LatinSquare) -> tuple[int, int]:
    """Fewest cycles of ``sigma_s sigma_r^-1`` over r != s, and a row r attaining it."""
    T = tables(L)
    nu = T.cycle_counts[T.ids].copy()
    np.fill_diagonal(nu, L.n + 1)
    r, _ = np.unravel_index(np.argmin(nu), nu.shape)
    return int(nu.min()), int(r) + 1


def pivot_optimize(L: LatinSquare) -> PivotResult:
    """Move a pair of lines with the fewest relative cycles into a row.

    If rows r, s of L (or columns, via the transpose) have ``sigma_s sigma_r^-1``
    with fewer cycles than any single line, ``theta(L, (1 r), 1)`` produces a
    reduced square with a row conjugate to that product.
    """
    _require_reduced(L)
    n = L.n
    Lt = transpose(L)
    base_nu = min(int(tables(L).row_nu.min()), int(tables(Lt).row_nu.min()))
    if n <= 2:
        return PivotResult(L, Isotopism.identity(n), base_nu)
    row_nu, r = _min_relative_nu(L)
    col_nu, rc = _min_relative_nu(Lt)
    if min(row_nu, col_nu) >= base_nu:
        return PivotResult(L, Isotopism.identity(n), base_nu)
    src, r, transposed = (L, r, False) if row_nu <= col_nu else (Lt, rc, True)
    alpha = transposition(n, 1, r)
    th = theta(src, alpha, 1)
    return PivotResult(apply_isotopism(src, th), th, min(row_nu, col_nu), transposed)


def autotopy_group_pivoted(L: LatinSquare, parallel: bool = False) -> AutotopyGroup:
    """Same group as autotopy_group, computed on the pivot-optimized square."""
    res = pivot_optimize(L)
    G = autotopy_group(res.square, parallel=parallel)
    G = conjugate_group(G, res.theta.inverse())
    return transpose_group(G) if res.transposed else G
