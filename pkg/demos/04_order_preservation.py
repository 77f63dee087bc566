#!/usr/bin/env python3
"""Check that the ranking never contradicts sufficiently dominant judgments.

POP: if the expert said i beats j strongly enough (m_ij above 1/alpha), the
ranking must put i above j.  POIP: if one dominance is strong enough
relative to another (ratio above 1/alpha^2), the ranking intensities must
preserve that order.  Below the thresholds, breaks are possible -- those
are reported as "raw" violations.
"""

import numpy as np

from pcrank import PCMatrix, cop_report, koczkodaj_index, rank_ev

print("=== Consistent matrix: every premise row holds ===")
w = np.array([8.0, 4.0, 2.0, 1.0])
mc = PCMatrix(np.outer(w, 1.0 / w))
ranking = rank_ev(mc)
report = cop_report(mc, ranking, koczkodaj_index(mc)[0])
counts = report.counts()
print(f"POP : {counts.pop_premises_met}/{counts.pop_pairs} premises met, "
      f"{counts.pop_premise_failures} failures")
print(f"POIP: {counts.poip_premises_met}/{counts.poip_quadruples} premises met, "
      f"{counts.poip_premise_failures} failures")
print(f"raw violations: {counts.raw_pop_violations} POP, "
      f"{counts.raw_poip_violations} POIP")

print("\n=== Inconsistent matrix: premises go vacuous, theorem still safe ===")
mx = PCMatrix([[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]])
k, _ = koczkodaj_index(mx)
report = cop_report(mx, rank_ev(mx), k)
threshold = 1.0 / (1.0 - k)
print(f"K = {k} puts the POP threshold at {threshold} and POIP at {threshold**2};")
print(f"the largest entry is 2 and the largest ratio 4, so nothing clears them:")
counts = report.counts()
print(f"POP premises met: {counts.pop_premises_met}, "
      f"POIP premises met: {counts.poip_premises_met}")

print("\n=== Premise rows on a mildly inconsistent 4x4 ===")
a = np.outer(w, 1.0 / w)
a[0, 3] *= 1.3  # nudge one judgment
a[3, 0] = 1.0 / a[0, 3]
m = PCMatrix(a)
k, _ = koczkodaj_index(m)
ranking = rank_ev(m)
report = cop_report(m, ranking, k)
threshold = 1.0 / (1.0 - k)
print(f"K = {k:.4f}, POP threshold {threshold:.4f}")
for row in report.pop_results:
    value = m.entries[row.i, row.j]
    if value <= 1.0:
        continue
    status = ("premise met -> conclusion holds" if row.premise_met and row.conclusion_holds
              else "premise met -> CONCLUSION FAILS" if row.premise_met
              else "below threshold")
    print(f"  m[{row.i}][{row.j}] = {value:7.4f}  {status}")
