"""
Random squares and timing
=========================

Jacobson-Matthews random squares almost always have a trivial autotopy
group, and for them the search is fast.
"""
import statistics
import time
from collections import Counter

from latinsym import autotopy_group, jm_random

for n in (10, 20, 30):
    times, orders = [], Counter()
    for seed in range(50):
        L = jm_random(n, seed, reduced=True)
        start = time.perf_counter()
        orders[autotopy_group(L).order] += 1
        times.append(time.perf_counter() - start)
    print(f"n={n}: median {1000 * statistics.median(times):.2f} ms, group orders {dict(orders)}")
