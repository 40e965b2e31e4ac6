"""
Bounds on the group order
=========================

Several closed-form bounds, compared against the true order on random squares.
"""
from latinsym import autotopy_group, bound_report, cayley_cyclic, derangements_with_k_cycles, jm_random

print(f"{'square':>10} {'|A|':>6} {'bsw':>12} {'partition':>12} {'thm41':>8} {'thm51':>8}")
squares = [("C6", cayley_cyclic(6))] + [(f"JM n={n}", jm_random(n, 3, reduced=True)) for n in (6, 9, 12, 16)]
for name, L in squares:
    r = bound_report(L)
    order = autotopy_group(L).order
    print(f"{name:>10} {order:>6} {r.bsw:>12} {r.partition:>12} {r.thm41:>8} {r.thm51:>8}")

# derangements by number of cycles
for n in range(2, 9):
    print(n, [derangements_with_k_cycles(n, k) for k in range(1, n // 2 + 1)])
