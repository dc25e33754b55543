#!/usr/bin/env python3
"""Colorations and deficiency on a small signed graph.

A proper coloration gives the endpoints of a positive edge different colors
and never gives the endpoints of a negative edge opposite colors.  The
deficiency counts colors of the declared set that no vertex uses.  This
walks the 3-chromatic triangle whose two colorations show deficiencies 0
and 1.
"""

from sigdef import (
    Coloration,
    build_graph,
    chromatic_number,
    deficiency,
    deficiency_report,
    is_proper,
)

triangle = build_graph([("u", "v", "+"), ("u", "w", "-"), ("v", "w", "-")])
print("triangle:", "positive uv, negative uw, negative vw")
print("chromatic number:", chromatic_number(triangle))
print()

for mapping in ({"u": 1, "v": -1, "w": 0}, {"u": 1, "v": 0, "w": 1}):
    kappa = Coloration.from_labels(triangle, mapping, k=1, uses_zero=True)
    count, unused = deficiency(kappa)
    print(f"coloration {mapping}")
    print(f"  proper: {is_proper(triangle, kappa)}")
    print(f"  deficiency: {count}, unused colors: {sorted(unused) or '{}'}")
print()

report = deficiency_report(triangle)
print("full enumeration over the minimal color set {0, +1, -1}:")
print("  achievable deficiencies:", sorted(report.range))
print("  maximum:", report.max_deficiency, " minimum:", report.min_deficiency)
print("  witness for the maximum:",
      {triangle.labels[v]: c for v, c in enumerate(report.witness_max.colors)})
