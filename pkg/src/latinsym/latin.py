"""
Latin squares, isotopisms and random sampling.

Rows and columns are read as permutations in the usual way: the symbol in
cell (i, j) is ``sigma_i(j)`` for row i and ``pi_j(i)`` for column j. All
indices and symbols are 1-based.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

from .perm import Permutation, compose, identity, inverse, parse_permutation


class LatinSquareError(ValueError):
    pass


class LatinSquare:
    """Validated n x n Latin square over the symbols 1..n."""

    __slots__ = ("grid", "__dict__")

    def __init__(self, rows: Iterable[Iterable[int]], *, _validated: bool = False):
        grid = tuple(tuple(int(x) for x in row) for row in rows)
        if not _validated:
            _validate(grid)
        self.grid = grid

    @property
    def n(self) -> int:
        return len(self.grid)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.grid[i - 1][j - 1]

    def __eq__(self, other):
        if isinstance(other, LatinSquare):
            return self.grid == other.grid
        return NotImplemented

    def __hash__(self):
        return hash(self.grid)

    def __repr__(self):
        return f"LatinSquare(n={self.n})"

    def __str__(self):
        return to_text(self)

    @cached_property
    def array(self) -> np.ndarray:
        """0-based symbol array; ``array[i, j] == grid[i][j] - 1``."""
        a = np.array(self.grid, dtype=np.intp) - 1
        a.setflags(write=False)
        return a

    @cached_property
    def rows(self) -> tuple[Permutation, ...]:
        return tuple(Permutation._trusted(r) for r in self.grid)

    @cached_property
    def cols(self) -> tuple[Permutation, ...]:
        return tuple(Permutation._trusted(c) for c in zip(*self.grid))

    def row(self, i: int) -> Permutation:
        return row_perm(self, i)

    def col(self, j: int) -> Permutation:
        return col_perm(self, j)


def _validate(grid: tuple[tuple[int, ...], ...]):
    n = len(grid)
    if n == 0:
        raise LatinSquareError("empty square")
    full = set(range(1, n + 1))
    for i, row in enumerate(grid, 1):
        if len(row) != n:
            raise LatinSquareError(f"row {i} has {len(row)} entries, expected {n}")
        for x in row:
            if not 1 <= x <= n:
                raise LatinSquareError(f"row {i}: symbol {x} out of range 1..{n}")
        if set(row) != full:
            raise LatinSquareError(f"row {i} repeats a symbol")
    for j in range(n):
        col = [grid[i][j] for i in range(n)]
        if set(col) != full:
            dup = next(x for x in col if col.count(x) > 1)
            raise LatinSquareError(f"column {j + 1} repeats symbol {dup}")


def from_grid(rows: Sequence[Sequence[int]]) -> LatinSquare:
    return LatinSquare(rows)


def _from_array(a: np.ndarray) -> LatinSquare:
    # a is 0-based and known to be Latin
    return LatinSquare((a + 1).tolist(), _validated=True)


def _check_index(L: LatinSquare, i: int, what: str):
    if not 1 <= i <= L.n:
        raise IndexError(f"{what} index {i} out of range 1..{L.n}")


def row_perm(L: LatinSquare, i: int) -> Permutation:
    _check_index(L, i, "row")
    return L.rows[i - 1]


def col_perm(L: LatinSquare, j: int) -> Permutation:
    _check_index(L, j, "column")
    return L.cols[j - 1]


def is_reduced(L: LatinSquare) -> bool:
    return L.rows[0].is_identity() and L.cols[0].is_identity()


@dataclass(frozen=True)
class Isotopism:
    """(alpha, beta, gamma) permuting rows, columns and symbols."""

    alpha: Permutation
    beta: Permutation
    gamma: Permutation

    def __post_init__(self):
        if not self.alpha.n == self.beta.n == self.gamma.n:
            raise ValueError("isotopism components have different orders")

    @property
    def n(self) -> int:
        return self.alpha.n

    @classmethod
    def identity(cls, n: int) -> "Isotopism":
        e = identity(n)
        return cls(e, e, e)

    def __mul__(self, other: "Isotopism") -> "Isotopism":
        return Isotopism(
            compose(self.alpha, other.alpha),
            compose(self.beta, other.beta),
            compose(self.gamma, other.gamma),
        )

    def inverse(self) -> "Isotopism":
        return Isotopism(inverse(self.alpha), inverse(self.beta), inverse(self.gamma))

    def is_identity(self) -> bool:
        return self.alpha.is_identity() and self.beta.is_identity() and self.gamma.is_identity()

    def key(self) -> tuple:
        return (self.alpha.images, self.beta.images, self.gamma.images)

    def __lt__(self, other: "Isotopism"):
        return self.key() < other.key()

    def to_text(self) -> str:
        return f"{self.alpha}\n{self.beta}\n{self.gamma}\n"

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha.images),
            "beta": list(self.beta.images),
            "gamma": list(self.gamma.images),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Isotopism":
        return cls(Permutation(d["alpha"]), Permutation(d["beta"]), Permutation(d["gamma"]))


def apply_isotopism(L: LatinSquare, theta: Isotopism) -> LatinSquare:
    """Image square with ``L'(alpha(i), beta(j)) = gamma(L(i, j))``."""
    if theta.n != L.n:
        raise ValueError(f"isotopism of order {theta.n} applied to square of order {L.n}")
    a = np.asarray(theta.alpha.images) - 1
    b = np.asarray(theta.beta.images) - 1
    g = np.asarray(theta.gamma.images) - 1
    out = np.empty_like(L.array)
    out[np.ix_(a, b)] = g[L.array]
    return _from_array(out)


def reduce(L: LatinSquare) -> tuple[LatinSquare, Isotopism]:
    """Return a reduced square isotopic to L and the isotopism reaching it.

    Columns are permuted by row 1 so that row 1 becomes the identity, then
    rows are permuted so column 1 becomes the identity; symbols are untouched.
    """
    n = L.n
    beta = L.rows[0]
    # column 1 after the column move holds the symbols L(i, beta^-1(1))
    c = inverse(beta)(1)
    alpha = Permutation._trusted(tuple(L.grid[i][c - 1] for i in range(n)))
    theta = Isotopism(alpha, beta, identity(n))
    return apply_isotopism(L, theta), theta


def transpose(L: LatinSquare) -> LatinSquare:
    return LatinSquare(zip(*L.grid), _validated=True)


def cayley_cyclic(n: int) -> LatinSquare:
    if n < 1:
        raise ValueError("order must be at least 1")
    return LatinSquare(
        (((i + j) % n) + 1 for j in range(n)) for i in range(n)
    )


def cayley_from_elements(elements: Sequence, op: Callable) -> LatinSquare:
    """Cayley table of a finite group given by its elements and product.

    Element ``elements[t]`` gets label t + 1; list the identity first to get
    a reduced table.
    """
    index = {e: t for t, e in enumerate(elements)}
    table = [[index[op(a, b)] + 1 for b in elements] for a in elements]
    return cayley_from_table(table)


def cayley_from_table(table: Sequence[Sequence[int]]) -> LatinSquare:
    L = LatinSquare(table)
    if not is_group_table(L):
        raise LatinSquareError("rows are not closed under composition; not a group table")
    return L


def is_group_table(L: LatinSquare) -> bool:
    """True iff the row permutations form a subgroup of S_n."""
    rows = set(L.rows)
    for p in L.rows:
        for q in L.rows:
            if compose(p, q) not in rows:
                return False
    return True


def relative_cycle_structure(L: LatinSquare, r: int, s: int) -> tuple[int, ...]:
    """Cycle structure of the permutation carrying row r onto row s."""
    return compose(row_perm(L, s), inverse(row_perm(L, r))).cycle_structure()


# -- Jacobson-Matthews sampler ---------------------------------------------


def jm_random(n: int, seed: int, reduced: bool = False) -> LatinSquare:
    """Random Latin square by a Jacobson-Matthews walk on the incidence cube.

    Deterministic for fixed ``(n, seed)``. The walk starts from the cyclic
    square, makes ``2 n^3`` moves and then continues until it sits on a
    proper square.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n == 1:
        return LatinSquare([[1]], _validated=True)
    rng = random.Random(seed)
    walk = _JMWalk(n, rng)
    walk.run(2 * n**3)
    L = _from_array(np.array(walk.grid(), dtype=np.intp))
    if reduced:
        L = reduce(L)[0]
    return L


class _JMWalk:
    """Incidence cube with entries in {-1, 0, 1}.

    Three flat copies of the cube are kept, one per axis ordering, so that
    every line is a contiguous slice and ``list.index`` finds its 1s.
    """

    def __init__(self, n: int, rng: random.Random):
        self.n = n
        self.rng = rng
        size = n**3
        self.xyz = [0] * size  # z-lines contiguous
        self.xzy = [0] * size  # y-lines contiguous
        self.yzx = [0] * size  # x-lines contiguous
        for x in range(n):
            for y in range(n):
                self._add(x, y, (x + y) % n, 1)
        self.bad = None  # the -1 cell when improper

    def _add(self, x, y, z, d):
        n = self.n
        self.xyz[(x * n + y) * n + z] += d
        self.xzy[(x * n + z) * n + y] += d
        self.yzx[(y * n + z) * n + x] += d

    @staticmethod
    def _ones(line, base, n):
        first = line.index(1, base, base + n)
        return first - base, line.index(1, first + 1, base + n) - base

    def step(self):
        n, rng = self.n, self.rng
        A, B, C = self.xyz, self.xzy, self.yzx
        if self.bad is None:
            x = rng.randrange(n)
            y = rng.randrange(n)
            base = (x * n + y) * n
            z1 = A.index(1, base, base + n) - base
            z = rng.randrange(n - 1)
            if z >= z1:
                z += 1
            b = (x * n + z) * n
            y1 = B.index(1, b, b + n) - b
            b = (y * n + z) * n
            x1 = C.index(1, b, b + n) - b
        else:
            x, y, z = self.bad
            x1 = rng.choice(self._ones(C, (y * n + z) * n, n))
            y1 = rng.choice(self._ones(B, (x * n + z) * n, n))
            z1 = rng.choice(self._ones(A, (x * n + y) * n, n))
        nn = n * n
        # +1 on (x,y,z), (x,y1,z1), (x1,y,z1), (x1,y1,z); -1 on the other four corners
        X, X1, Y, Y1, Z, Z1 = x * nn, x1 * nn, y * n, y1 * n, z, z1
        A[X + Y + Z] += 1; A[X + Y1 + Z1] += 1; A[X1 + Y + Z1] += 1; A[X1 + Y1 + Z] += 1
        A[X + Y + Z1] -= 1; A[X + Y1 + Z] -= 1; A[X1 + Y + Z] -= 1; A[X1 + Y1 + Z1] -= 1
        Y, Y1, Z, Z1 = y, y1, z * n, z1 * n
        B[X + Z + Y] += 1; B[X + Z1 + Y1] += 1; B[X1 + Z1 + Y] += 1; B[X1 + Z + Y1] += 1
        B[X + Z1 + Y] -= 1; B[X + Z + Y1] -= 1; B[X1 + Z + Y] -= 1; B[X1 + Z1 + Y1] -= 1
        X, X1, Y, Y1 = x, x1, y * nn, y1 * nn
        C[Y + Z + X] += 1; C[Y1 + Z1 + X] += 1; C[Y + Z1 + X1] += 1; C[Y1 + Z + X1] += 1
        C[Y + Z1 + X] -= 1; C[Y1 + Z + X] -= 1; C[Y + Z + X1] -= 1; C[Y1 + Z1 + X1] -= 1
        self.bad = (x1, y1, z1) if A[x1 * nn + y1 * n + z1] < 0 else None

    def run(self, moves: int):
        for _ in range(moves):
            self.step()
        while self.bad is not None:
            self.step()

    def grid(self) -> list[list[int]]:
        n = self.n
        return [
            [self.xyz.index(1, (x * n + y) * n, (x * n + y + 1) * n) - (x * n + y) * n for y in range(n)]
            for x in range(n)
        ]


# -- text formats ---------------------------------------------------------


def to_text(L: LatinSquare) -> str:
    lines = [str(L.n)] + [" ".join(map(str, row)) for row in L.grid]
    return "\n".join(lines) + "\n"


def parse_square(text: str) -> LatinSquare:
    """Parse the square file format: ``n`` on line 1, then n rows.

    Errors name the offending line (1-based, counting the header).
    """
    lines = [ln for ln in text.splitlines()]
    body = [(no, ln) for no, ln in enumerate(lines, 1) if ln.strip() and not ln.lstrip().startswith("#")]
    if not body:
        raise LatinSquareError("empty square file")
    no, head = body[0]
    try:
        n = int(head.strip())
    except ValueError:
        raise LatinSquareError(f"line {no}: expected the order n, got {head.strip()!r}") from None
    if n < 1:
        raise LatinSquareError(f"line {no}: order must be positive")
    rows = body[1:]
    if len(rows) != n:
        raise LatinSquareError(f"expected {n} rows after the header, found {len(rows)}")
    grid = []
    for no, ln in rows:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise LatinSquareError(f"line {no}: non-integer entry in {ln.strip()!r}") from None
        if len(row) != n:
            raise LatinSquareError(f"line {no}: expected {n} entries, found {len(row)}")
        bad = [x for x in row if not 1 <= x <= n]
        if bad:
            raise LatinSquareError(f"line {no}: symbol {bad[0]} out of range 1..{n}")
        if len(set(row)) != n:
            raise LatinSquareError(f"line {no}: row repeats a symbol")
        grid.append(row)
    return LatinSquare(grid)


def read_square(path) -> LatinSquare:
    with open(path) as fh:
        return parse_square(fh.read())


def parse_isotopism(text: str) -> Isotopism:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 3:
        raise ValueError(f"isotopism file needs 3 permutation lines, found {len(lines)}")
    a, b, g = (parse_permutation(ln) for ln in lines)
    return Isotopism(a, b, g)


def read_isotopism(path) -> Isotopism:
    with open(path) as fh:
        return parse_isotopism(fh.read())


def parse_squares(text: str) -> list[LatinSquare]:
    """Parse a stream of squares, each in the square file format."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    out = []
    pos = 0
    while pos < len(lines):
        try:
            n = int(lines[pos].strip())
        except ValueError:
            raise LatinSquareError(f"expected an order line, got {lines[pos].strip()!r}") from None
        out.append(parse_square("\n".join(lines[pos:pos + n + 1])))
        pos += n + 1
    return out
