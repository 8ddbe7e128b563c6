"""The Grothendieck group of equivariant D-modules on ``m x n`` matrices, tensored with Z[q].

Elements are vectors of ``n + 1`` Laurent polynomials over the basis of simple
classes ``[D_0], ..., [D_n]`` or, for square matrices, over ``[Q_0], ..., [Q_n]``
with ``[Q_p] = [D_0] + ... + [D_p]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactpoly import ONE, ZERO, LaurentPoly

BASES = ("D", "Q")


class NotEffective(ValueError):
    """A class that is not the class of an actual module in the requested family."""


@dataclass(frozen=True)
class GammaElem:
    n: int
    basis: str
    coeffs: tuple[LaurentPoly, ...]
    m: int | None = None

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}, got {self.basis!r}")
        coeffs = tuple(c if isinstance(c, LaurentPoly) else LaurentPoly.const(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(coeffs)}")
        if self.m is not None and self.m < self.n:
            raise ValueError(f"need m >= n, got m={self.m}, n={self.n}")
        if self.basis == "Q" and self.m is not None and self.m != self.n:
            raise ValueError("the Q-basis only exists for square matrices")

    @classmethod
    def zero(cls, n: int, basis: str = "D", m: int | None = None) -> GammaElem:
        return cls(n, basis, (ZERO,) * (n + 1), m)

    @classmethod
    def basis_elem(cls, n: int, s: int, basis: str = "D", coeff: LaurentPoly = ONE,
                   m: int | None = None) -> GammaElem:
        if not 0 <= s <= n:
            raise ValueError(f"index {s} out of range 0..{n}")
        coeffs = [ZERO] * (n + 1)
        coeffs[s] = coeff
        return cls(n, basis, tuple(coeffs), m)

    def __getitem__(self, s: int) -> LaurentPoly:
        return self.coeffs[s]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _context(self, other: GammaElem) -> int | None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: n={self.n} vs n={other.n}")
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.m is not None and other.m is not None and self.m != other.m:
            raise ValueError(f"matrix shape mismatch: m={self.m} vs m={other.m}")
        return self.m if self.m is not None else other.m

    def __add__(self, other: GammaElem) -> GammaElem:
        m = self._context(other)
        return GammaElem(self.n, self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), m)

    def __sub__(self, other: GammaElem) -> GammaElem:
        m = self._context(other)
        return GammaElem(self.n, self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), m)

    def __neg__(self) -> GammaElem:
        return GammaElem(self.n, self.basis, tuple(-c for c in self.coeffs), self.m)

    def scale(self, p: LaurentPoly | int) -> GammaElem:
        return GammaElem(self.n, self.basis, tuple(c * p for c in self.coeffs), self.m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GammaElem):
            return NotImplemented
        return (self.n, self.basis, self.coeffs) == (other.n, other.basis, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.n, self.basis, self.coeffs))

    def degree_part(self, j: int) -> GammaElem:
        """The coefficient of ``q^j``, as a class constant in ``q``."""
        return GammaElem(self.n, self.basis, tuple(LaurentPoly.const(c.coeff(j)) for c in self.coeffs), self.m)

    def degrees(self) -> list[int]:
        return sorted({e for c in self.coeffs for e in c.exponents()})

    def __str__(self) -> str:
        pieces = []
        for s, c in enumerate(self.coeffs):
            for e, k in c.items():
                pieces.append((e, s, k))
        if not pieces:
            return "0"
        pieces.sort()
        out = []
        for idx, (e, s, k) in enumerate(pieces):
            label = f"[{self.basis}{s}]"
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            mag = abs(k)
            head = mono if mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            body = f"{head}*{label}" if head else label
            if idx == 0:
                out.append(body if k > 0 else f"-{body}")
            else:
                out.append((" + " if k > 0 else " - ") + body)
        return "".join(out)

    def to_json(self) -> dict:
        return {"n": self.n, "basis": self.basis, "coeffs": [c.to_json() for c in self.coeffs]}


def gamma_arith(a: GammaElem, b: GammaElem, op: str) -> GammaElem:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown operation {op!r}")


def change_basis(g: GammaElem, to: str) -> GammaElem:
    if to not in BASES:
        raise ValueError(f"unknown basis {to!r}")
    if g.basis == to:
        return g
    if g.m is not None and g.m != g.n:
        raise ValueError("the Q-basis only exists for square matrices")
    c = g.coeffs
    if to == "D":
        # [Q_p] = sum_{s<=p} [D_s]: the coefficient of [D_s] collects Q_p for p >= s
        out, acc = [], ZERO
        for p in range(g.n, -1, -1):
            acc = acc + c[p]
            out.append(acc)
        return GammaElem(g.n, "D", tuple(reversed(out)), g.m)
    # [D_0] = [Q_0], [D_s] = [Q_s] - [Q_{s-1}]
    out = [c[s] - (c[s + 1] if s < g.n else ZERO) for s in range(g.n + 1)]
    return GammaElem(g.n, "Q", tuple(out), g.m)


def pairing_d(a: GammaElem, b: GammaElem) -> LaurentPoly:
    """``<a, b>_D = sum_s a_s(q) b_s(q)`` computed in the D-basis."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: n={a.n} vs n={b.n}")
    a, b = change_basis(a, "D"), change_basis(b, "D")
    total = ZERO
    for x, y in zip(a.coeffs, b.coeffs):
        total = total + x * y
    return total


def euler_chi(g: GammaElem, s: int | None = None) -> int | list[int]:
    """Evaluate coefficients at ``q = -1``: one index ``s``, or the whole vector when ``s`` is None."""
    g = change_basis(g, "D")
    if s is None:
        return [c.evaluate(-1) for c in g.coeffs]
    if not 0 <= s <= g.n:
        raise ValueError(f"index {s} out of range 0..{g.n}")
    return g.coeffs[s].evaluate(-1)


@dataclass(frozen=True)
class ModuleExpr:
    """A direct sum ``sum_s mult[s] * X_s`` where ``X`` is ``D`` (simples) or ``Q``."""

    n: int
    family: str
    mult: tuple[int, ...]

    def __post_init__(self):
        if self.family not in BASES:
            raise ValueError(f"family must be one of {BASES}, got {self.family!r}")
        mult = tuple(int(x) for x in self.mult)
        object.__setattr__(self, "mult", mult)
        if len(mult) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} multiplicities, got {len(mult)}")
        if any(x < 0 for x in mult):
            raise NotEffective(f"negative multiplicity in {mult}")

    @classmethod
    def single(cls, n: int, family: str, s: int, count: int = 1) -> ModuleExpr:
        mult = [0] * (n + 1)
        mult[s] = count
        return cls(n, family, tuple(mult))

    @classmethod
    def from_dict(cls, n: int, family: str, counts: dict[int, int]) -> ModuleExpr:
        mult = [0] * (n + 1)
        for s, c in counts.items():
            mult[s] += c
        return cls(n, family, tuple(mult))

    def is_zero(self) -> bool:
        return not any(self.mult)

    def as_dict(self) -> dict[int, int]:
        return {s: c for s, c in enumerate(self.mult) if c}

    def support(self) -> int:
        """Largest index with a nonzero summand (-1 for the zero module)."""
        nz = [s for s, c in enumerate(self.mult) if c]
        return max(nz) if nz else -1

    def __add__(self, other: ModuleExpr) -> ModuleExpr:
        if (self.n, self.family) != (other.n, other.family):
            raise ValueError("cannot add module expressions of different families or sizes")
        return ModuleExpr(self.n, self.family, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def times(self, k: int) -> ModuleExpr:
        return ModuleExpr(self.n, self.family, tuple(k * x for x in self.mult))

    def __str__(self) -> str:
        terms = [(f"{self.family}{s}" if c == 1 else f"{c}*{self.family}{s}")
                 for s, c in enumerate(self.mult) if c]
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"family": self.family, "mult": list(self.mult)}


def expr_to_class(e: ModuleExpr, m: int | None = None) -> GammaElem:
    return GammaElem(e.n, e.family, tuple(LaurentPoly.const(x) for x in e.mult), m)


def class_to_expr(g: GammaElem) -> ModuleExpr:
    """Read a constant, nonnegative class back as a module; raises NotEffective otherwise."""
    mult = []
    for s, c in enumerate(g.coeffs):
        if not c.is_constant():
            raise NotEffective(f"coefficient of [{g.basis}{s}] is not constant: {c}")
        k = c.coeff(0)
        if k < 0:
            raise NotEffective(f"coefficient of [{g.basis}{s}] is negative: {k}")
        mult.append(k)
    return ModuleExpr(g.n, g.basis, tuple(mult))
