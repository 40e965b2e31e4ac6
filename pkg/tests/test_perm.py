import itertools

import pytest
from hypothesis import given, strategies as st

from latinsym.perm import (
    Permutation,
    apply_cycles,
    compose,
    conjugate,
    cycle_structure,
    cycles,
    identity,
    inverse,
    num_cycles,
    parity,
    parse_permutation,
    transposition,
)


@st.composite
def perms(draw, n=None):
    if n is None:
        n = draw(st.integers(1, 10))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def perm_pairs(draw, k=2):
    n = draw(st.integers(1, 10))
    return tuple(draw(perms(n)) for _ in range(k))


def test_identity():
    assert identity(3).images == (1, 2, 3)
    assert identity(1).images == (1,)
    assert cycle_structure(identity(8)) == (1,) * 8
    with pytest.raises(ValueError):
        identity(0)


def test_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([])
    with pytest.raises(ValueError):
        Permutation([0, 1])


def test_compose_is_right_to_left():
    # x -> p(q(x)) evaluated by hand
    assert compose(Permutation([2, 3, 1]), Permutation([2, 1, 3])).images == (3, 2, 1)
    q = Permutation([3, 1, 5, 2, 4])
    assert compose(identity(5), q) == q
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_inverse():
    assert inverse(Permutation([2, 3, 1])).images == (3, 1, 2)
    assert inverse(identity(4)) == identity(4)


def test_cycles_canonical():
    assert cycles(identity(3)) == ((1,), (2,), (3,))
    assert cycles(Permutation([3, 4, 1, 5, 2])) == ((1, 3), (2, 4, 5))
    assert Permutation([3, 4, 1, 5, 2]).cycle_string() == "(1,3)(2,4,5)"


def test_num_cycles_and_parity():
    assert num_cycles(identity(8)) == 8
    assert num_cycles(Permutation([2, 3, 4, 5, 1])) == 1
    assert parity(identity(5)) == "even"
    assert parity(transposition(5, 2, 4)) == "odd"


def test_from_cycles_and_parse():
    p = Permutation.from_cycles(8, [(1, 7, 4, 8, 5), (2, 6, 3)])
    assert p.images == (7, 6, 2, 8, 1, 3, 4, 5)
    assert parse_permutation(" 7 6 2 8 1 3 4 5 \n") == p
    with pytest.raises(ValueError):
        parse_permutation("1 2 2")
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [(1, 2), (2, 3)])


@pytest.mark.parametrize("n", range(1, 6))
def test_cycles_round_trip_exhaustive(n):
    for img in itertools.permutations(range(1, n + 1)):
        p = Permutation(img)
        dec = cycles(p)
        assert sorted(x for c in dec for x in c) == list(range(1, n + 1))
        assert all(c[0] == min(c) for c in dec)
        assert [c[0] for c in dec] == sorted(c[0] for c in dec)
        assert all(apply_cycles(dec, x) == p(x) for x in range(1, n + 1))


@given(perms())
def test_cycles_round_trip_random(p):
    dec = cycles(p)
    assert tuple(apply_cycles(dec, x) for x in range(1, p.n + 1)) == p.images
    assert sum(cycle_structure(p)) == p.n


@given(perms())
def test_inverse_laws(p):
    e = identity(p.n)
    assert compose(p, inverse(p)) == e
    assert compose(inverse(p), p) == e
    assert cycle_structure(inverse(p)) == cycle_structure(p)


@given(perm_pairs(2))
def test_conjugation_preserves_structure(pa):
    p, a = pa
    c = conjugate(p, a)
    assert cycle_structure(c) == cycle_structure(p)
    # a (x1 ... xt) a^-1 = (a(x1) ... a(xt))
    for cyc in cycles(p):
        for s, t in zip(cyc, cyc[1:] + cyc[:1]):
            assert c(a(s)) == a(t)


@given(perm_pairs(3))
def test_group_laws(pqr):
    p, q, r = pqr
    e = identity(p.n)
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(e, p) == p == compose(p, e)
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


@given(perm_pairs(2))
def test_parity_is_homomorphism(pq):
    p, q = pq
    odd = lambda x: parity(x) == "odd"
    assert odd(compose(p, q)) == (odd(p) != odd(q))
    # parity agrees with the inversion count
    inv = sum(1 for i, j in itertools.combinations(p.images, 2) if i > j)
    assert odd(p) == (inv % 2 == 1)


def test_conjugate_identity(L8):
    p = L8.row(5)
    assert conjugate(p, identity(8)) == p
