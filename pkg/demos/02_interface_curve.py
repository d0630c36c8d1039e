"""
Interface curves and epistemologies
===================================

Any point on the admissible curve explains the table equally well. An
epistemology is a rule that picks one point. We compare the five named rules
on three tables with different curve shapes.
"""

from causal_interfaces import compare_all, geometry, row_normalize, sample_curve

tables = {
    "symmetric arc": [[0.40, 0.10], [0.10, 0.40]],
    "L-shape": [[0.40, 0.00], [0.20, 0.40]],
    "skewed arc": [[0.40, 0.10], [0.25, 0.25]],
}

for name, p in tables.items():
    r = row_normalize(p)
    g = geometry(r)
    print(f"\n{name}: {g.kind.value}, intercepts ({g.x_intercept:.4g}, {g.y_intercept:.4g})")

    # A coarse sample of the curve, enough to see its shape in a terminal.
    pts = sample_curve(r, 6)
    print("  curve:", ", ".join(f"({q.eps0:.3f}, {q.eps1:.3f})" for q in pts))

    for sol in compare_all(p):
        if sol.feasible:
            e0, e1 = sol.point.as_tuple()
            print(f"  {sol.kind.label} {sol.kind.value:<15} ({e0:.6f}, {e1:.6f})  sum {sol.explanatory_sum:.6f}  {sol.status.value}")
        else:
            print(f"  {sol.kind.label} {sol.kind.value:<15} infeasible, raw {tuple(round(v, 6) for v in sol.raw_point)}")

###############################################################################
# MaximumCause always has the largest explanatory sum among feasible rules.
# Untreated always sits on the eps1 axis at the y-intercept.
