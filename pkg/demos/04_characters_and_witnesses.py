"""GL characters: the syzygies of I_{a x d} detect D_p through one witness weight.

Run with ``python3 demos/04_characters_and_witnesses.py``.
"""

from __future__ import annotations

from detloccoh import characters as ch

m, n = 3, 2
print("A few terms of the character of D_1 (entries bounded by 2):")
print(ch.char_of("D", m, n, 1, bound=2).render())

print("\nh_{1 x 2}(q) for 2x2 matrices:")
print(ch.h_axd(2, 2, 1, 2).render())

print("\nPairing the determinant twist of D_p against h_{a x d} for 3x2, d = 6 (rows p, columns a):")
for p in range(n + 1):
    row = [str(ch.witness_pairing(m, n, p, a, 6)) for a in range(1, n + 1)]
    print(f"  p={p}: " + " | ".join(row))

print("\nH^1 at the origin of J_{nu,l}, for nu = (2,1,0):")
for l in range(4):
    v = ch.j_h1m_vanishes(3, (2, 1, 0), l)
    print(f"  l={l}: {'vanishes' if v.vanishes else f'nonzero, witness alpha = {v.witness}'}")
