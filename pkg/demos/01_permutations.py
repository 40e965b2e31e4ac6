"""
Permutations and cycle structure
================================

Rows and columns of a Latin square are permutations of {1..n}. Products
are read right to left: ``compose(p, q)`` applies q first.
"""
from latinsym import Permutation, compose, conjugate, inverse

p = Permutation([2, 3, 1, 5, 4])
q = Permutation.from_cycles(5, [(1, 4)])
print("p         =", p.cycle_string())
print("q         =", q.cycle_string())
print("p q       =", compose(p, q).cycle_string())
print("q p       =", compose(q, p).cycle_string())

# cycle structure is a descending partition of n
print("structure of p:", p.cycle_structure(), "parity:", p.parity())

# conjugation relabels the points of each cycle
a = Permutation([5, 4, 3, 2, 1])
print("a p a^-1  =", conjugate(p, a).cycle_string())
assert compose(p, inverse(p)).is_identity()
