"""Lyubeznik numbers of generic determinantal rings.

``L_p(q, w) = sum lambda_{i,j} q^i w^j`` where ``lambda_{i,j}`` is the number of
copies of ``D_0`` in ``H^i_{O_0}(H^{mn-j}_{O_p}(S))``.  :func:`lyub_gf` uses the
closed formulas; :func:`lyub_gf_via_iteration` composes the two local
cohomology functors instead, and the two must agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exactpoly import BiPoly, LaurentPoly, embed
from .loccoh import apply_loccoh, start_expr
from .shapes import qbinom


def _check(m: int, n: int, p: int) -> None:
    if not m >= n >= 1:
        raise ValueError(f"need m >= n >= 1, got m={m}, n={n}")
    if not 0 <= p < n:
        raise ValueError(f"need 0 <= p < n, got p={p}, n={n} (the smooth case p = n has no Lyubeznik table here)")


def ring_dim(m: int, n: int, p: int) -> int:
    """Dimension of the variety of ``m x n`` matrices of rank at most ``p``."""
    return p * (m + n - p)


def lyub_gf_terms(m: int, n: int, p: int) -> list[tuple[LaurentPoly, LaurentPoly]]:
    """The ``(q-part, w-part)`` factor pairs whose products sum to ``L_p``."""
    _check(m, n, p)
    out = []
    if m > n:
        for s in range(p + 1):
            qpart = qbinom(n, s).subs_power(2).shift(s * s + s * (m - n))
            wpart = qbinom(n - 1 - s, p - s).subs_power(2).shift(p * p + 2 * p + s * (m + n - 2 * p - 2))
            out.append((qpart, wpart))
        return out
    if p == n - 1:
        mono = LaurentPoly.monomial(n * n - 1)
        return [(mono, mono)]
    for s in range(p + 1):
        qpart = qbinom(n - 1, s).subs_power(2).shift(s * s + 2 * s)
        wpart = qbinom(n - 2 - s, p - s).subs_power(2).shift(p * p + 2 * p + s * (2 * n - 2 * p - 2))
        out.append((qpart, wpart))
    return out


def lyub_gf(m: int, n: int, p: int) -> BiPoly:
    total = BiPoly()
    for qpart, wpart in lyub_gf_terms(m, n, p):
        total = total + embed(qpart, "q") * embed(wpart, "w")
    return total


def lyub_gf_nonsquare_formula(m: int, n: int, p: int) -> BiPoly:
    """The ``m > n`` closed formula evaluated with no shape check (also at ``m = n``)."""
    total = BiPoly()
    for s in range(p + 1):
        qpart = qbinom(n, s).subs_power(2).shift(s * s + s * (m - n))
        wpart = qbinom(n - 1 - s, p - s).subs_power(2).shift(p * p + 2 * p + s * (m + n - 2 * p - 2))
        total = total + embed(qpart, "q") * embed(wpart, "w")
    return total


def lyub_gf_via_iteration(m: int, n: int, p: int) -> BiPoly:
    _check(m, n, p)
    terms: dict[tuple[int, int], int] = {}
    inner = start_expr("S", n, m, n, p)
    for j_inner, mod in inner.items():
        for i, outer in apply_loccoh(mod, 0, m, n).items():
            # support O_0 forces every summand to be D_0 = Q_0
            if any(outer.mult[1:]):
                raise AssertionError(f"H^{i}_O0 has summands beyond D_0: {outer}")
            key = (i, m * n - j_inner)
            terms[key] = terms.get(key, 0) + outer.mult[0]
    return BiPoly(terms)


@dataclass(frozen=True)
class LyubeznikTable:
    dim: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def render_text(self) -> str:
        width = max((len(str(x)) for row in self.entries for x in row), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.entries)

    def render_latex(self) -> str:
        rows = [" & ".join(str(x) for x in row) for row in self.entries]
        return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}"

    def render_json(self) -> str:
        return json.dumps({"dim": self.dim, "entries": self.as_lists()})


def lyub_table(f: BiPoly, m: int, n: int, p: int) -> LyubeznikTable:
    _check(m, n, p)
    d = ring_dim(m, n, p)
    grid = [[0] * (d + 1) for _ in range(d + 1)]
    for (i, j), c in f.items():
        if not 0 <= i <= j <= d:
            raise ValueError(f"term q^{i}*w^{j} lies outside the triangle 0 <= i <= j <= {d}")
        if c < 0:
            raise ValueError(f"negative Lyubeznik number {c} at ({i},{j})")
        grid[i][j] = c
    return LyubeznikTable(d, tuple(tuple(r) for r in grid))
