#!/usr/bin/env python3
"""Build, parse and sanity-check pairwise-comparison matrices.

A PC matrix records how many times concept i outweighs concept j.  Valid
matrices are reciprocal (m_ij * m_ji = 1) with a unit diagonal; everything
else in the workbench builds on that contract.
"""

import numpy as np

from pcrank import (
    FULOP_CONSTANT,
    MatrixValidationError,
    PCMatrix,
    complete_reciprocal,
    is_consistent,
    parse_matrix,
    scale_check,
    triads,
)

print("=== Constructing matrices ===")

# Full grid, validated and canonicalized on construction.
m_consistent = PCMatrix(
    [[1, 2, 4], [0.5, 1, 2], [0.25, 0.5, 1]],
    labels=("price", "quality", "service"),
)
print("from a grid:")
print(m_consistent.entries)

# Only the upper triangle is ever needed; reciprocity fills in the rest.
m_inconsistent = complete_reciprocal({(0, 1): 2, (0, 2): 2, (1, 2): 2}, n=3)
print("\nfrom upper-triangle judgments {01: 2, 02: 2, 12: 2}:")
print(m_inconsistent.entries)

print("\n=== Parsing ===")
m_csv = parse_matrix("1,2,4\n0.5,1,2\n0.25,0.5,1\n", "csv")
print("CSV parsed, entry (0,2) =", m_csv.entries[0, 2])

m_json = parse_matrix('{"matrix": [[1, "5/2"], ["2/5", 1]]}', "json")
print('fractions like "5/2" are accepted:', m_json.entries[0, 1])

try:
    parse_matrix("1,2\n0.4,1\n", "csv")
except MatrixValidationError as exc:
    print("reciprocity violations are rejected:", exc)

print("\n=== Consistency and triads ===")
print("consistent grid:  ", is_consistent(m_consistent, 1e-9))
print("inconsistent grid:", is_consistent(m_inconsistent, 1e-9))

# Each triad compares the direct judgment with the transitive route.
for t in triads(m_inconsistent):
    print(f"triad ({t.i},{t.j},{t.k}): local inconsistency {t.local_inconsistency}")

print("\n=== Judgment scale ===")
# Entries above ~3.33 are theoretically prone to inconsistency; the check is
# informational and never blocks an analysis.
for m, name in [(m_inconsistent, "max entry 2"), (m_consistent, "max entry 4")]:
    report = scale_check(m)
    print(f"{name}: within scale bound {FULOP_CONSTANT:.6f}? {report.within_scale}")
