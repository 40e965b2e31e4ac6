"""
Permutations of {1, ..., n} in image notation.

A permutation ``p`` is stored as the tuple ``(p(1), ..., p(n))``. Products are
read right to left, so ``compose(p, q)`` is the map ``x -> p(q(x))``.

>>> p = Permutation([2, 3, 1])
>>> compose(p, Permutation([2, 1, 3])).images
(3, 2, 1)
>>> p.cycles()
((1, 2, 3),)
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence


class Permutation:
    """Immutable bijection on {1..n}, stored as 1-based images."""

    __slots__ = ("images", "__dict__")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation order must be at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")
        self.images = images

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        # skips validation; callers guarantee a bijection
        p = cls.__new__(cls)
        p.images = images
        return p

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles; points not mentioned are fixed.

        >>> Permutation.from_cycles(4, [(1, 3)]).images
        (3, 2, 1, 4)
        """
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                if a in seen:
                    raise ValueError(f"point {a} appears in two cycles")
                seen.add(a)
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other: "Permutation"):
        return self.images < other.images

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return " ".join(map(str, self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    @cached_property
    def _cycles(self) -> tuple[tuple[int, ...], ...]:
        # scanning points in increasing order yields the canonical form directly:
        # each cycle starts at its minimum and cycles come out sorted by minimum
        imgs = self.images
        seen = [False] * (len(imgs) + 1)
        out = []
        for start in range(1, len(imgs) + 1):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = imgs[x - 1]
            out.append(tuple(cyc))
        return tuple(out)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Canonical disjoint cycle decomposition, fixed points included."""
        return self._cycles

    def cycle_structure(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self._cycles), reverse=True))

    def num_cycles(self) -> int:
        return len(self._cycles)

    def parity(self) -> str:
        return "even" if (self.n - self.num_cycles()) % 2 == 0 else "odd"

    def inverse(self) -> "Permutation":
        return inverse(self)

    def cycle_string(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self._cycles)


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("permutation order must be at least 1")
    return Permutation._trusted(tuple(range(1, n + 1)))


def _check_same_order(p: Permutation, q: Permutation):
    if p.n != q.n:
        raise ValueError(f"order mismatch: {p.n} vs {q.n}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product ``p q``: first apply q, then p."""
    _check_same_order(p, q)
    pi = p.images
    return Permutation._trusted(tuple(pi[x - 1] for x in q.images))


def compose_all(*perms: Permutation) -> Permutation:
    """Right-to-left product of several permutations."""
    out = perms[-1]
    for p in reversed(perms[:-1]):
        out = compose(p, out)
    return out


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for x, y in enumerate(p.images, 1):
        inv[y - 1] = x
    return Permutation._trusted(tuple(inv))


def conjugate(p: Permutation, a: Permutation) -> Permutation:
    """``a p a^-1``; maps each cycle (x1, ..., xt) of p to (a(x1), ..., a(xt))."""
    _check_same_order(p, a)
    return compose(a, compose(p, inverse(a)))


def cycles(p: Permutation) -> tuple[tuple[int, ...], ...]:
    return p.cycles()


def cycle_structure(p: Permutation) -> tuple[int, ...]:
    return p.cycle_structure()


def num_cycles(p: Permutation) -> int:
    return p.num_cycles()


def parity(p: Permutation) -> str:
    return p.parity()


def transposition(n: int, a: int, b: int) -> Permutation:
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
    return Permutation(images)


def apply_cycles(decomposition: Iterable[Sequence[int]], x: int) -> int:
    """Evaluate a cycle decomposition as a function at x."""
    for cyc in decomposition:
        if x in cyc:
            return cyc[(list(cyc).index(x) + 1) % len(cyc)]
    return x


def parse_permutation(text: str) -> Permutation:
    """Read image notation: whitespace-separated integers."""
    try:
        return Permutation(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ValueError(f"bad permutation line {text.strip()!r}: {exc}") from None
