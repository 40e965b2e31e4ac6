"""
Cycle-structure invariants
==========================

The search is driven by how rows map onto one another: the cycle structure
of ``sigma_i sigma_k^-1`` for every pair of rows.
"""
from pathlib import Path

from latinsym import compute_invariants, r_set, read_square, sigma_ik

L = read_square(Path(__file__).with_name("data") / "l8.txt")
inv = compute_invariants(L)
print("nu (fewest cycles in a row):", inv.nu, "attained by rows", inv.nu_rows)
print("lambda per row:", inv.lambda_per_row)
print("Delta:", inv.delta_set)

for i in range(1, 9):
    print(f"sigma_{i} sigma_2^-1 = {sigma_ik(L, i, 2).cycle_string()}")

# rows that can be carried onto row t once row 2 is sent to row 1
for t in (2, 3, 7):
    print(f"R_2(L, {t}) =", r_set(L, 2, t))
