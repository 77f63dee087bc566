#!/usr/bin/env python3
"""Derive a priority ranking and measure how trustworthy the input was.

The ranking is the principal eigenvector of the matrix, rescaled to sum 1.
Two numbers qualify the input: Saaty's index S = (lambda_max - n)/(n - 1)
and Koczkodaj's index K, the worst triad's relative break of transitivity.
"""

import numpy as np

from pcrank import (
    PCMatrix,
    koczkodaj_index,
    principal_eigenpair,
    rank_ev,
    saaty_index,
)

m = PCMatrix([[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]])
print("matrix:")
print(m.entries)

print("\n=== Principal eigenpair (power iteration) ===")
pair = principal_eigenpair(m)
print(f"lambda_max = {pair.lambda_max:.9f}  "
      f"({pair.iterations} iterations, residual {pair.residual:.1e})")

# For n = 3 there is a closed form to compare against:
# lambda = 1 + t + 1/t with t the cube root of the triad cycle product.
t = (m.entries[0, 1] * m.entries[1, 2] * m.entries[2, 0]) ** (1 / 3)
print(f"closed form       = {1 + t + 1/t:.9f}")

print("\n=== Ranking ===")
ranking = rank_ev(m)
for label, value in zip(ranking.labels, ranking.values):
    print(f"  {label}: {value:.5f}")
print("sums to", float(ranking.values.sum()))

print("\n=== Inconsistency ===")
s = saaty_index(pair.lambda_max, m.n)
k, worst = koczkodaj_index(m)
print(f"Saaty     S = {s:.6f}   (0 iff consistent)")
print(f"Koczkodaj K = {k:.6f}   worst triad ({worst.i},{worst.j},{worst.k})")

# A consistent matrix scores zero on both indices and reproduces its
# generating weights exactly.
w = np.array([4.0, 2.0, 1.0])
mc = PCMatrix(np.outer(w, 1.0 / w))
pair_c = principal_eigenpair(mc)
print("\nconsistent control:")
print(f"  lambda_max = {pair_c.lambda_max:.12f} (= n)")
print(f"  S = {saaty_index(pair_c.lambda_max, 3):.1e}, "
      f"K = {koczkodaj_index(mc)[0]:.1e}")
print("  ranking =", np.round(rank_ev(mc).values, 6), "(= w / sum(w))")
