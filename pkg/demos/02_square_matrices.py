"""Square matrices: local cohomology lands in direct sums of the indecomposables Q_0, ..., Q_n.

Run with ``python3 demos/02_square_matrices.py``.
"""

from __future__ import annotations

from detloccoh.grothendieck import change_basis
from detloccoh.loccoh import addq_multiplicities_D, h_class_Q, h_class_S, start_expr

n = 4
cls = h_class_S(n, n, 2)
print("Class of H_{O_2}(S) for 4x4 matrices")
print("  in simples:       ", cls)
print("  in Q-basis:       ", change_basis(cls, "Q"))
print("  as actual modules:", start_expr("S", n, n, n, 2))

print("\nThe multiplicity polynomials m_s(q) for D_4 along O_2:")
for s, poly in enumerate(addq_multiplicities_D(n, 2, 4)):
    print(f"  m_{s}(q) = {poly}")

print("\nSupport at the origin applied to Q_1 and Q_2:")
for p in (1, 2):
    print(f"  H_O0(Q_{p}) class:", h_class_Q(n, 0, p))
