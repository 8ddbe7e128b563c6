"""Walk through local cohomology on 3x2 matrices, where every module is semisimple.

Run with ``python3 demos/01_three_by_two.py``.
"""

from __future__ import annotations

from detloccoh.loccoh import h_class_D, h_class_S, iterate_loccoh, start_expr

m, n = 3, 2

print("Local cohomology of S with support in the rank <= 1 matrices:")
print("  class:", h_class_S(m, n, 1))
for j, module in start_expr("S", n, m, n, 1).items():
    print(f"  H^{j} = {module}")

print("\nH^2 is the simple D_1. Its cohomology with support at the origin:")
print("  class:", h_class_D(m, n, 0, 1))

print("\nComposing both functors gives three nonzero groups:")
print(iterate_loccoh("S", n, m, n, [0, 1]))
