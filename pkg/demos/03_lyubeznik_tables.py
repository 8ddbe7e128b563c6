"""Lyubeznik numbers from closed formulas, cross-checked by composing local cohomology.

Run with ``python3 demos/03_lyubeznik_tables.py``.
"""

from __future__ import annotations

from detloccoh.lyubeznik import lyub_gf, lyub_gf_nonsquare_formula, lyub_gf_via_iteration, lyub_table

for m, n, p in [(3, 2, 1), (2, 2, 1), (4, 4, 2)]:
    f = lyub_gf(m, n, p)
    assert f == lyub_gf_via_iteration(m, n, p)
    print(f"{m}x{n} matrices of rank <= {p}:  L = {f}")
    print(lyub_table(f, m, n, p).render_text())
    print()

print("The formula for m > n cannot simply be evaluated at m = n:")
print("  naive  :", lyub_gf_nonsquare_formula(2, 2, 1))
print("  correct:", lyub_gf(2, 2, 1))

print("\nLaTeX for the 3x2 table:")
print(lyub_table(lyub_gf(3, 2, 1), 3, 2, 1).render_latex())
