#!/usr/bin/env python3
"""Switching and the switching deficiency range.

Switching a vertex set negates every edge with exactly one endpoint in it;
colors on the set negate in tandem, so properness is preserved.  Across a
whole switching class the achievable deficiencies always fill the interval
[0, floor(chi/2)] -- this script verifies that by enumeration on a random
graph and then hits each target deficiency constructively.
"""

from sigdef import (
    achieve_switching_deficiency,
    deficiency,
    deficiency_report,
    generate_general,
    is_proper,
    switch,
    switching_report,
)

g = generate_general(6, edge_prob=0.6, neg_prob=0.5, seed=20260808)
print("random signed graph on 6 vertices, seed 20260808")

report = switching_report(g)
print(f"chromatic number {report.chi}; deficiencies achievable by "
      f"switching: {sorted(report.range)} "
      f"(= all of 0..{report.chi // 2})")
print()

kappa = deficiency_report(g).witness_min
print(f"starting from a minimal coloration with deficiency "
      f"{deficiency(kappa)[0]}:")
for r in range(report.chi // 2 + 1):
    A, out = achieve_switching_deficiency(g, kappa, r)
    switched = switch(g, A)
    assert is_proper(switched, out)
    assert deficiency(out)[0] == r
    names = ", ".join(g.labels_of(A)) or "nothing"
    print(f"  target {r}: switch {{{names}}}  ->  deficiency "
          f"{deficiency(out)[0]}, unused {sorted(deficiency(out)[1]) or '{}'}")
