"""The quiver model for square matrices: Q_p as a chain of identity maps.

Run with ``python3 demos/05_quiver_model.py``.
"""

from __future__ import annotations

from detloccoh import quiver as qv

n = 3
q2 = qv.build_rep("Q", 2, n)
print("Q^(2):")
print(q2.dump())
print("socle:", qv.simple_socle(q2))

print("\nQ^(2) / D^(2):")
print(qv.quotient(q2, qv.vertex_sub(q2, [2])).dump())

print("\nExt^1 between the simples D^(0), D^(1) and between Q's:")
print("  Ext^1(D^(0), D^(1)) =", qv.ext1_dim(qv.build_rep("D", 0, n), qv.build_rep("D", 1, n)))
print("  Ext^1(Q^(1), Q^(2)) =", qv.ext1_dim(qv.build_rep("Q", 1, n), q2))

mixed = qv.addq_rep(n, [2, 0, 1, 1])
print("\nPeeling 2*Q^(0) + Q^(2) + Q^(3):", qv.decompose_addQ(mixed))
print("Peeling D^(1):", qv.decompose_addQ(qv.build_rep("D", 1, n)))
