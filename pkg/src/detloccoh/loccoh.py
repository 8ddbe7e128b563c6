"""Local cohomology with support in orbit closures of ``m x n`` matrices.

Orbits are indexed by rank ``t = 0..n``.  For ``m > n`` every equivariant
D-module is a sum of simples ``D_s`` and a class determines the module.  For
``m = n`` the local cohomology of ``S``, ``D_p`` and ``Q_p`` lies in add(Q), the
sums of the indecomposables ``Q_0..Q_n``, and again the class in the Q-basis
determines the module.  Either way the engine works with genuine module
expressions degree by degree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .exactpoly import ONE, ZERO, LaurentPoly
from .grothendieck import (
    GammaElem,
    ModuleExpr,
    NotEffective,
    change_basis,
    class_to_expr,
    euler_chi,
)
from .shapes import binom, qbinom

log = logging.getLogger(__name__)


def _check_shape(m: int, n: int) -> None:
    if not m >= n >= 1:
        raise ValueError(f"need m >= n >= 1, got m={m}, n={n}")


def _check_index(name: str, v: int, n: int) -> None:
    if not 0 <= v <= n:
        raise ValueError(f"{name}={v} out of range 0..{n}")


def _qb2(a: int, b: int) -> LaurentPoly:
    return qbinom(a, b).subs_power(2)


# closed-form classes

def h_class_S(m: int, n: int, t: int) -> GammaElem:
    """``sum_j [H^j_{O_t}(S)] q^j`` in the D-basis."""
    _check_shape(m, n)
    _check_index("t", t, n)
    if t == n:
        return GammaElem.basis_elem(n, n, "D", ONE, m)
    coeffs = [ZERO] * (n + 1)
    for s in range(t + 1):
        coeffs[s] = _qb2(n - 1 - s, t - s).shift((n - t) ** 2 + (n - s) * (m - n))
    return GammaElem(n, "D", tuple(coeffs), m)


def h_class_D(m: int, n: int, t: int, p: int) -> GammaElem:
    """``sum_j [H^j_{O_t}(D_p)] q^j`` in the D-basis."""
    _check_shape(m, n)
    _check_index("t", t, n)
    _check_index("p", p, n)
    if t >= p:
        return GammaElem.basis_elem(n, p, "D", ONE, m)
    coeffs = [ZERO] * (n + 1)
    for s in range(t + 1):
        coeffs[s] = (_qb2(n - s, p - s) * _qb2(p - 1 - s, t - s)).shift((p - t) ** 2 + (p - s) * (m - n))
    return GammaElem(n, "D", tuple(coeffs), m)


def h_class_Q(n: int, t: int, p: int) -> GammaElem:
    """``sum_j [H^j_{O_t}(Q_p)] q^j`` for square matrices, in the Q-basis."""
    _check_shape(n, n)
    _check_index("t", t, n)
    _check_index("p", p, n)
    if t >= p:
        return GammaElem.basis_elem(n, p, "Q", ONE, n)
    coeffs = [ZERO] * (n + 1)
    for s in range(t + 1):
        coeffs[s] = (_qb2(n - s - 1, p - s) * _qb2(p - s - 1, p - t - 1)).shift((p - t) ** 2 + 2 * (p - s))
    return GammaElem(n, "Q", tuple(coeffs), n)


def addq_multiplicities_D(n: int, t: int, p: int) -> list[LaurentPoly]:
    """The polynomials ``m_s(q)``, ``s = 0..t``, giving add(Q) multiplicities of ``H_{O_t}(D_p)``.

    The decomposition itself is ``sum_s [Q_s] q^{(p-t)^2} m_s(q^2)``.
    """
    _check_shape(n, n)
    if not 0 <= t < p <= n:
        raise ValueError(f"need 0 <= t < p <= n, got t={t}, p={p}, n={n}")
    ms = []
    for s in range(t):
        ms.append(qbinom(n - s, p - s) * qbinom(p - 1 - s, t - s)
                  - qbinom(n - s - 1, p - s - 1) * qbinom(p - 2 - s, t - 1 - s))
    ms.append(qbinom(n - t, p - t))
    for s, poly in enumerate(ms):
        if not all(c > 0 for _, c in poly.items()):
            raise NotEffective(f"m_{s}(q) = {poly} has a negative coefficient")
    return ms


def addq_class_D(n: int, t: int, p: int) -> GammaElem:
    """Q-basis class ``sum_s [Q_s] q^{(p-t)^2} m_s(q^2)`` of the local cohomology of ``D_p``."""
    if t >= p:
        return change_basis(GammaElem.basis_elem(n, p, "D", ONE, n), "Q")
    ms = addq_multiplicities_D(n, t, p)
    coeffs = [ZERO] * (n + 1)
    for s, poly in enumerate(ms):
        coeffs[s] = poly.subs_power(2).shift((p - t) ** 2)
    return GammaElem(n, "Q", tuple(coeffs), n)


# graded module expressions

@dataclass(frozen=True)
class GradedExpr:
    """Cohomological degree -> module, zero modules omitted."""

    n: int
    parts: dict[int, ModuleExpr] = field(default_factory=dict)

    def __post_init__(self):
        clean = {j: e for j, e in sorted(self.parts.items()) if not e.is_zero()}
        for j, e in clean.items():
            if j < 0:
                raise ValueError(f"negative cohomological degree {j}")
            if e.n != self.n:
                raise ValueError("module size mismatch")
        object.__setattr__(self, "parts", clean)

    def __getitem__(self, j: int) -> ModuleExpr | None:
        return self.parts.get(j)

    def items(self):
        return self.parts.items()

    def as_dict(self) -> dict[int, dict[int, int]]:
        return {j: e.as_dict() for j, e in self.parts.items()}

    def families(self) -> set[str]:
        return {e.family for e in self.parts.values()}

    def __str__(self) -> str:
        if not self.parts:
            return "0"
        return ", ".join(f"H^{j} = {e}" for j, e in self.parts.items())


def _from_class(g: GammaElem) -> GradedExpr:
    parts = {}
    for j in g.degrees():
        try:
            parts[j] = class_to_expr(g.degree_part(j))
        except NotEffective as exc:
            raise NotEffective(f"degree {j} of {g} is not effective: {exc}") from exc
    return GradedExpr(g.n, parts)


def _accumulate(acc: dict[int, ModuleExpr], j: int, e: ModuleExpr) -> None:
    acc[j] = acc[j] + e if j in acc else e


def _square_as_q(e: ModuleExpr) -> ModuleExpr:
    # D_0 = Q_0; any other simple is not in add(Q)
    if e.family == "Q":
        return e
    if any(e.mult[1:]):
        raise ValueError(f"{e} has simple summands other than D_0, which are not in add(Q)")
    return ModuleExpr(e.n, "Q", e.mult)


def apply_loccoh(e: ModuleExpr, t: int, m: int, n: int) -> GradedExpr:
    """``H^*_{O_t}`` of a direct sum, summand by summand.

    For ``m > n`` the input must be a sum of simples ``D_s``.  For ``m = n`` it
    must be in add(Q); a pure multiple of a single ``D_p`` is also accepted,
    using the add(Q) decomposition of its local cohomology.
    """
    _check_shape(m, n)
    _check_index("t", t, n)
    if e.n != n:
        raise ValueError(f"expression has n={e.n}, expected {n}")
    acc: dict[int, ModuleExpr] = {}
    if m > n:
        if e.family != "D":
            raise ValueError("Q-modules only exist for square matrices")
        for s, k in enumerate(e.mult):
            if not k:
                continue
            if s <= t:
                _accumulate(acc, 0, ModuleExpr.single(n, "D", s, k))
                continue
            for j, part in _from_class(h_class_D(m, n, t, s)).items():
                _accumulate(acc, j, part.times(k))
        return GradedExpr(n, acc)

    if e.family == "D" and sum(1 for x in e.mult if x) == 1 and e.support() > 0:
        p = e.support()
        k = e.mult[p]
        if p <= t:
            return GradedExpr(n, {0: e})
        return GradedExpr(n, {j: part.times(k) for j, part in _from_class(addq_class_D(n, t, p)).items()})

    e = _square_as_q(e)
    for s, k in enumerate(e.mult):
        if not k:
            continue
        if s <= t:
            _accumulate(acc, 0, ModuleExpr.single(n, "Q", s, k))
            continue
        for j, part in _from_class(h_class_Q(n, t, s)).items():
            _accumulate(acc, j, part.times(k))
    return GradedExpr(n, acc)


def start_expr(kind: str, p: int, m: int, n: int, t_first: int) -> GradedExpr:
    """First local cohomology ``H^*_{O_t}(M)`` for ``M`` one of ``S``, ``D_p``, ``Q_p``, as modules.

    ``kind="S"`` ignores ``p`` (``S = D_n``).
    """
    _check_shape(m, n)
    _check_index("t", t_first, n)
    if kind == "S":
        p = n
    elif kind not in ("D", "Q"):
        raise ValueError(f"kind must be S, D or Q, got {kind!r}")
    _check_index("p", p, n)
    if kind == "Q":
        if m != n:
            raise ValueError("Q_p only exists for square matrices")
        return _from_class(h_class_Q(n, t_first, p))
    if t_first >= p:
        return GradedExpr(n, {0: ModuleExpr.single(n, "D", p)})
    if m > n:
        return _from_class(h_class_D(m, n, t_first, p))
    return _from_class(addq_class_D(n, t_first, p))


@dataclass(frozen=True)
class MultiGradedTable:
    """Iterated local cohomology: degree tuple ``(j_1, ..., j_r)`` -> module.

    ``chain[k]`` is the orbit index of the ``k``-th functor in
    ``H^{j_1}_{O_{i_1}}(H^{j_2}_{O_{i_2}}(... M))``; the last entry is applied first.
    """

    chain: tuple[int, ...]
    entries: dict[tuple[int, ...], ModuleExpr]

    def nonzero(self) -> dict[tuple[int, ...], ModuleExpr]:
        return {k: v for k, v in self.entries.items() if not v.is_zero()}

    def to_json(self) -> dict:
        return {
            "chain": list(self.chain),
            "entries": [{"degrees": list(k), "module": v.to_json()} for k, v in sorted(self.entries.items())],
        }

    def __str__(self) -> str:
        lines = []
        for degs, mod in sorted(self.entries.items()):
            label = "".join(f"H^{j}_O{i}(" for j, i in zip(degs, self.chain))
            lines.append(f"{label}M{')' * len(degs)} = {mod}")
        return "\n".join(lines) if lines else "0"


def normalize_chain(chain: Sequence[int], support: int) -> list[int]:
    """Mark functors that act as the identity; returns the indices that do real work.

    Functors are listed outermost first.  Walking from the innermost, a functor
    ``H_{O_t}`` is the identity (``H^0 = M``) once ``t`` reaches the current
    support, so only a strictly increasing tail matters.
    """
    active = []
    current = support
    for k in range(len(chain) - 1, -1, -1):
        t = chain[k]
        if t >= current:
            continue
        active.append(k)
        current = t
    return sorted(active)


def iterate_loccoh(kind: str, p: int, m: int, n: int, chain: Sequence[int]) -> MultiGradedTable:
    """Iterated local cohomology ``H_{O_{i_1}}(... H_{O_{i_r}}(M))`` of ``M = S, D_p`` or ``Q_p``."""
    _check_shape(m, n)
    chain = tuple(int(t) for t in chain)
    if not chain:
        raise ValueError("chain must be nonempty")
    for t in chain:
        _check_index("chain entry", t, n)
    if any(chain[k] >= chain[k + 1] for k in range(len(chain) - 1)):
        support = n if kind == "S" else p
        active = normalize_chain(chain, support)
        dropped = [chain[k] for k in range(len(chain)) if k not in active]
        log.info("chain %s is not strictly increasing; functors %s act as the identity", chain, dropped)

    # innermost first
    current: dict[tuple[int, ...], ModuleExpr] = {
        (j,): e for j, e in start_expr(kind, p, m, n, chain[-1]).items()
    }
    for t in reversed(chain[:-1]):
        nxt: dict[tuple[int, ...], ModuleExpr] = {}
        for degs, mod in current.items():
            for j, part in apply_loccoh(mod, t, m, n).items():
                key = (j,) + degs
                if key in nxt:
                    nxt[key] = nxt[key] + part
                else:
                    nxt[key] = part
        current = nxt
    return MultiGradedTable(chain, dict(sorted(current.items())))


# Euler characteristic checks

def chi0_closed_form(m: int, n: int, t: int, p: int) -> int:
    """``chi_0`` of the local cohomology of ``D_p`` along ``O_t`` in closed form (``t < p``)."""
    return (-1) ** ((p - t) + p * (m - n)) * binom(n, p) * binom(p - 1, t)


def chi_recurrence_check(m: int, n: int, t: int, p: int) -> bool:
    """Check the Euler characteristic recurrence relating ``D_{t+1}, ..., D_p``."""
    if not 0 <= t < p <= n <= m:
        raise ValueError(f"need 0 <= t < p <= n <= m, got m={m}, n={n}, t={t}, p={p}")
    lhs = 0
    for s in range(t + 1, p + 1):
        lhs += euler_chi(h_class_D(m, n, t, s), 0) * (-1) ** (s * (m - n)) * binom(n - 1 - s, p - s)
    rhs = (-1) ** (p - t) * binom(n - 1, t) - binom(n - 1, p)
    return lhs == rhs
