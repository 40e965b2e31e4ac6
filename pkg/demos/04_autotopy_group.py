"""
Computing an autotopy group
===========================

``autotopy_group`` fixes a pivot row with few cycles, builds one candidate
matrix per (k, i, j) and reads off the row permutations alpha from its
block-shifted diagonals. Each candidate is verified before it is kept.
"""
from pathlib import Path

from latinsym import (
    assemble_alphas,
    autotopy_group,
    autotopy_group_brute,
    build_Tl,
    cayley_cyclic,
    read_square,
)

L = read_square(Path(__file__).with_name("data") / "l8.txt")

M = build_Tl(L, 7, 5, 2, 2)
print(M)
print("alphas from this matrix:", [a.cycle_string() for a in assemble_alphas(M)])

G = autotopy_group(L)
print(f"\n|A(L)| = {G.order}")
for g in G:
    print(" alpha", g.alpha.cycle_string(), " beta", g.beta.cycle_string(), " gamma", g.gamma.cycle_string())

# the exhaustive oracle agrees
assert G.keys() == autotopy_group_brute(L).keys()

# Cayley tables of cyclic groups have n^2 phi(n) autotopisms
for n in (5, 6, 7, 8):
    print(f"C{n}: {autotopy_group(cayley_cyclic(n)).order}")
