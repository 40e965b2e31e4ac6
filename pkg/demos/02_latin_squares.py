"""
Latin squares, isotopisms and reduction
=======================================

A square is stored as a grid of symbols 1..n. An isotopism (alpha, beta, gamma)
permutes rows, columns and symbols.
"""
from pathlib import Path

import numpy as np

from latinsym import Isotopism, Permutation, apply_isotopism, is_reduced, read_square, reduce, to_text

L = read_square(Path(__file__).with_name("data") / "l8.txt")
print(L)
print("row 5 as a permutation:", L.row(5).cycle_string())

rng = np.random.default_rng(1)
rand = lambda: Permutation(rng.permutation(8) + 1)
M = apply_isotopism(L, Isotopism(rand(), rand(), rand()))
print("\na random isotope:\n" + to_text(M))

# every square has a reduced isotope; reduce returns it with the isotopism used
R, iso = reduce(M)
print("reduced:", is_reduced(R))
print("via alpha", iso.alpha.cycle_string(), "beta", iso.beta.cycle_string())
