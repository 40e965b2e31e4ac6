"""
Squares that are not reduced
============================

For an arbitrary square the group is computed on a reduced isotope and
carried back by conjugation. Swapping in a better pivot works the same way.
"""
import numpy as np

from latinsym import (
    Isotopism,
    Permutation,
    apply_isotopism,
    autotopy_group,
    autotopy_group_any,
    conjugate_group,
    jm_random,
    pivot_optimize,
    verify_autotopism,
)

rng = np.random.default_rng(0)
L = jm_random(7, 11, reduced=True)
for seed in range(11, 200):
    L = jm_random(7, seed, reduced=True)
    if autotopy_group(L).order > 1:
        break
rand = lambda: Permutation(rng.permutation(7) + 1)
th = Isotopism(rand(), rand(), rand())
M = apply_isotopism(L, th)

G = autotopy_group_any(M)
print("order on the isotope:", G.order, "on the reduced square:", autotopy_group(L).order)
print("all verified:", all(verify_autotopism(M, g) for g in G))
print("equals the conjugated group:", G == conjugate_group(autotopy_group(L), th))

res = pivot_optimize(L)
print("best relative cycle count:", res.pivot_nu, "transposed:", res.transposed)
