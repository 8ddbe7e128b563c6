"""Representations of the doubled type-A quiver with vertices ``0..n``.

Arrows ``alpha_i: V_{i-1} -> V_i`` and ``beta_i: V_i -> V_{i-1}`` for ``i = 1..n``,
subject to ``alpha_i beta_i = 0`` and ``beta_i alpha_i = 0``.  All linear algebra
is over the rationals via sympy, so ranks are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy

Mat = sympy.ImmutableMatrix


def _zeros(rows: int, cols: int) -> Mat:
    return Mat(sympy.zeros(rows, cols))


def _mat(data, rows: int, cols: int) -> Mat:
    if isinstance(data, sympy.MatrixBase):
        m = Mat(data)
    elif rows == 0 or cols == 0:
        m = _zeros(rows, cols)
    else:
        m = Mat([[sympy.Rational(x) for x in row] for row in data])
    if m.shape != (rows, cols):
        raise ValueError(f"expected a {rows}x{cols} matrix, got {m.shape[0]}x{m.shape[1]}")
    return m


@dataclass(frozen=True)
class AddQFailure:
    """The representation is not a direct sum of ``Q^(s)``; peeling stalled at ``vertex``."""

    vertex: int
    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class QuiverRep:
    n: int
    dims: tuple[int, ...]
    alpha: tuple[Mat, ...]
    beta: tuple[Mat, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if self.n < 0 or len(dims) != self.n + 1 or any(d < 0 for d in dims):
            raise ValueError(f"dims must be {self.n + 1} nonnegative integers, got {dims}")
        if len(self.alpha) != self.n or len(self.beta) != self.n:
            raise ValueError(f"need {self.n} alpha and {self.n} beta maps")
        alpha = tuple(_mat(a, dims[i + 1], dims[i]) for i, a in enumerate(self.alpha))
        beta = tuple(_mat(b, dims[i], dims[i + 1]) for i, b in enumerate(self.beta))
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @classmethod
    def zero(cls, n: int) -> QuiverRep:
        return cls(n, (0,) * (n + 1), (_zeros(0, 0),) * n, (_zeros(0, 0),) * n)

    def a(self, i: int) -> Mat:
        """``alpha_i`` with the 1-based arrow index."""
        return self.alpha[i - 1]

    def b(self, i: int) -> Mat:
        return self.beta[i - 1]

    def arrows(self) -> list[tuple[str, int, int, Mat]]:
        """``(name, source, target, matrix)`` for every arrow."""
        out = []
        for i in range(1, self.n + 1):
            out.append((f"alpha{i}", i - 1, i, self.a(i)))
            out.append((f"beta{i}", i, i - 1, self.b(i)))
        return out

    def total_dim(self) -> int:
        return sum(self.dims)

    def dump(self) -> str:
        lines = ["dims: " + " ".join(str(d) for d in self.dims)]
        for name, s, t, m in self.arrows():
            if m.shape[0] and m.shape[1] and not m.is_zero_matrix:
                rows = "; ".join(" ".join(str(x) for x in m.row(r)) for r in range(m.rows))
                lines.append(f"{name} ({s}->{t}): [{rows}]")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.dump()


def build_rep(kind: str, p: int, n: int) -> QuiverRep:
    """``D^(p)`` (a line at vertex ``p``) or ``Q^(p)`` (lines at ``0..p`` joined by identity alphas)."""
    if not 0 <= p <= n:
        raise ValueError(f"need 0 <= p <= n, got p={p}, n={n}")
    if kind == "D":
        dims = tuple(1 if i == p else 0 for i in range(n + 1))
        alpha = [None] * n
    elif kind == "Q":
        dims = tuple(1 if i <= p else 0 for i in range(n + 1))
        alpha = [None] * n
        for i in range(1, p + 1):
            alpha[i - 1] = Mat([[1]])
    else:
        raise ValueError(f"kind must be D or Q, got {kind!r}")
    alpha = [a if a is not None else _zeros(dims[i + 1], dims[i]) for i, a in enumerate(alpha)]
    beta = [_zeros(dims[i], dims[i + 1]) for i in range(n)]
    return QuiverRep(n, dims, tuple(alpha), tuple(beta))


def check_relations(r: QuiverRep) -> bool:
    for i in range(1, r.n + 1):
        if not (r.a(i) * r.b(i)).is_zero_matrix or not (r.b(i) * r.a(i)).is_zero_matrix:
            return False
    return True


def _block_diag(x: Mat, y: Mat) -> Mat:
    out = sympy.zeros(x.rows + y.rows, x.cols + y.cols)
    out[: x.rows, : x.cols] = x
    out[x.rows:, x.cols:] = y
    return Mat(out)


def direct_sum(*reps: QuiverRep) -> QuiverRep:
    if not reps:
        raise ValueError("direct_sum needs at least one representation")
    out = reps[0]
    for r in reps[1:]:
        if r.n != out.n:
            raise ValueError("quiver sizes differ")
        out = QuiverRep(
            out.n,
            tuple(a + b for a, b in zip(out.dims, r.dims)),
            tuple(_block_diag(x, y) for x, y in zip(out.alpha, r.alpha)),
            tuple(_block_diag(x, y) for x, y in zip(out.beta, r.beta)),
        )
    return out


def addq_rep(n: int, mult: Sequence[int]) -> QuiverRep:
    """``sum_s mult[s] * Q^(s)``."""
    if len(mult) != n + 1 or any(k < 0 for k in mult):
        raise ValueError(f"need {n + 1} nonnegative multiplicities")
    pieces = [build_rep("Q", s, n) for s, k in enumerate(mult) for _ in range(k)]
    return direct_sum(*pieces) if pieces else QuiverRep.zero(n)


def _kernel_dim(blocks: list[Mat], cols: int) -> int:
    if cols == 0:
        return 0
    rows = [b for b in blocks if b.rows]
    if not rows:
        return cols
    stacked = sympy.Matrix.vstack(*rows)
    return cols - stacked.rank()


def simple_socle(r: QuiverRep) -> list[tuple[int, int]]:
    """Multiplicity of each simple in the socle: the joint kernel of the arrows leaving a vertex."""
    out = []
    for v in range(r.n + 1):
        leaving = []
        if v < r.n:
            leaving.append(r.a(v + 1))
        if v > 0:
            leaving.append(r.b(v))
        k = _kernel_dim(leaving, r.dims[v])
        if k:
            out.append((v, k))
    return out


def _column_basis(m: Mat) -> Mat:
    cols = m.columnspace() if m.cols and m.rows else []
    if not cols:
        return _zeros(m.rows, 0)
    return Mat(sympy.Matrix.hstack(*cols))


def _complete_basis(sub: Mat, dim: int) -> tuple[Mat, Mat]:
    """Return ``(S, C)`` with ``[S | C]`` invertible and ``S`` a basis of the column span of ``sub``."""
    s = _column_basis(sub)
    full = sympy.Matrix.hstack(s, sympy.eye(dim)) if dim else sympy.zeros(0, 0)
    _, pivots = full.rref() if dim else (None, ())
    extra = [full.col(j) for j in pivots if j >= s.cols]
    c = Mat(sympy.Matrix.hstack(*extra)) if extra else _zeros(dim, 0)
    return s, c


def quotient(r: QuiverRep, sub: Sequence) -> QuiverRep:
    """Quotient by the subrepresentation spanned per vertex by the columns of ``sub[v]``."""
    if len(sub) != r.n + 1:
        raise ValueError(f"need subspace data for {r.n + 1} vertices")
    bases = []
    for v, data in enumerate(sub):
        m = _zeros(r.dims[v], 0) if data is None else Mat(data)
        if m.rows != r.dims[v]:
            raise ValueError(f"subspace at vertex {v} lives in dimension {m.rows}, expected {r.dims[v]}")
        s, c = _complete_basis(m, r.dims[v])
        inv = Mat(sympy.Matrix.hstack(s, c).inv()) if r.dims[v] else _zeros(0, 0)
        bases.append((s, c, inv))
    new_dims = tuple(c.cols for _, c, _ in bases)
    induced = {}
    for name, src, tgt, m in r.arrows():
        s_src, c_src, _ = bases[src]
        s_tgt, _, inv_tgt = bases[tgt]
        k = s_tgt.cols
        if s_src.cols and m.rows:
            leak = (inv_tgt * m * s_src)[k:, :]
            if not leak.is_zero_matrix:
                raise ValueError(f"subspace is not stable under {name}")
        if new_dims[tgt] and new_dims[src]:
            induced[name] = Mat((inv_tgt * m * c_src)[k:, :])
        else:
            induced[name] = _zeros(new_dims[tgt], new_dims[src])
    alpha = tuple(induced[f"alpha{i}"] for i in range(1, r.n + 1))
    beta = tuple(induced[f"beta{i}"] for i in range(1, r.n + 1))
    return QuiverRep(r.n, new_dims, alpha, beta)


def _alpha_chain(r: QuiverRep, lo: int, hi: int) -> Mat:
    """``alpha_hi ... alpha_{lo+1}: V_lo -> V_hi``."""
    m = Mat(sympy.eye(r.dims[lo])) if r.dims[lo] else _zeros(0, 0)
    for i in range(lo + 1, hi + 1):
        m = Mat(r.a(i) * m) if r.dims[i] and m.cols else _zeros(r.dims[i], r.dims[lo])
    return m


def decompose_addQ(r: QuiverRep) -> tuple[int, ...] | AddQFailure:
    """Multiplicities of ``Q^(0), ..., Q^(n)`` in ``r``, or the vertex where peeling fails.

    Each round takes the top nonzero vertex ``p`` and asks that the alpha chain
    from vertex 0 maps onto ``V_p``.  Preimages of a basis then generate a copy of
    ``Q^(p)`` to that power, which splits off since ``Q^(p)`` is injective among
    representations supported on ``0..p``.
    """
    if not check_relations(r):
        raise ValueError("relations do not hold")
    counts = [0] * (r.n + 1)
    while r.total_dim():
        p = max(v for v in range(r.n + 1) if r.dims[v])
        chain = _alpha_chain(r, 0, p)
        if chain.cols == 0 or chain.rank() < r.dims[p]:
            return AddQFailure(p, f"alpha chain from vertex 0 does not map onto vertex {p}")
        _, pivots = Mat(chain).rref()
        gens = Mat(sympy.Matrix.hstack(*[sympy.eye(r.dims[0]).col(j) for j in pivots]))
        sub = [Mat(_alpha_chain(r, 0, v) * gens) if v <= p else None for v in range(r.n + 1)]
        counts[p] += len(pivots)
        r = quotient(r, sub)
    return tuple(counts)


def is_isomorphic_addq(x: QuiverRep, y: QuiverRep) -> bool:
    """Isomorphism for representations in add(Q): compare peeled multiplicities."""
    dx, dy = decompose_addQ(x), decompose_addQ(y)
    if isinstance(dx, AddQFailure) or isinstance(dy, AddQFailure):
        raise ValueError("isomorphism test only covers direct sums of the Q^(s)")
    return x.n == y.n and dx == dy


def subreps_of_Q(p: int, n: int) -> list[tuple[int, ...]]:
    """Vertex sets spanning a subrepresentation of ``Q^(p)``, found by testing every subset."""
    q = build_rep("Q", p, n)
    out = []
    for mask in range(1 << (p + 1)):
        verts = tuple(v for v in range(p + 1) if mask >> v & 1)
        if all(v + 1 in verts or v + 1 > p for v in verts if v < n and not q.a(v + 1).is_zero_matrix):
            out.append(verts)
    return out


def vertex_sub(r: QuiverRep, verts: Sequence[int]) -> list:
    return [Mat(sympy.eye(r.dims[v])) if v in verts else None for v in range(r.n + 1)]


def _vec_blocks(shapes: list[tuple[int, int]]) -> list[int]:
    offs, acc = [], 0
    for rr, cc in shapes:
        offs.append(acc)
        acc += rr * cc
    offs.append(acc)
    return offs


def ext1_dim(V: QuiverRep, W: QuiverRep) -> int:
    """``dim Ext^1(V, W)``: extension cocycles modulo coboundaries.

    An extension ``0 -> W -> E -> V -> 0`` is fixed by blocks ``Z_a: V_s -> W_t`` for
    each arrow ``a: s -> t``.  For a relation ``x y`` (``y`` first) the cocycle
    condition is ``W_x Z_y + Z_x V_y = 0``; coboundaries are ``W_a h_s - h_t V_a``.
    """
    if V.n != W.n:
        raise ValueError("quiver sizes differ")
    if not (check_relations(V) and check_relations(W)):
        raise ValueError("relations do not hold")
    arrows_v = V.arrows()
    arrows_w = {name: m for name, _, _, m in W.arrows()}
    z_shapes = [(W.dims[t], V.dims[s]) for _, s, t, _ in arrows_v]
    z_off = _vec_blocks(z_shapes)
    n_z = z_off[-1]
    index = {name: k for k, (name, _, _, _) in enumerate(arrows_v)}
    vmat = {name: m for name, _, _, m in arrows_v}
    src = {name: s for name, s, _, _ in arrows_v}
    tgt = {name: t for name, _, t, _ in arrows_v}

    def unpack(vec, k):
        rr, cc = z_shapes[k]
        return sympy.Matrix(rr, cc, list(vec[z_off[k]: z_off[k + 1]]))

    relations = []
    for i in range(1, V.n + 1):
        relations.append((f"alpha{i}", f"beta{i}"))
        relations.append((f"beta{i}", f"alpha{i}"))

    def cocycle(vec):
        out = []
        for x, y in relations:
            zx, zy = unpack(vec, index[x]), unpack(vec, index[y])
            term = arrows_w[x] * zy + zx * vmat[y]
            out.extend(term)
        return out

    if n_z == 0:
        return 0
    columns = []
    for k in range(n_z):
        e = [0] * n_z
        e[k] = 1
        columns.append(cocycle(e))
    n_rel = len(columns[0])
    cocycle_rank = sympy.Matrix(n_rel, n_z, lambda r_, c_: columns[c_][r_]).rank() if n_rel else 0
    dim_cocycles = n_z - cocycle_rank

    h_shapes = [(W.dims[v], V.dims[v]) for v in range(V.n + 1)]
    h_off = _vec_blocks(h_shapes)
    n_h = h_off[-1]
    if n_h == 0:
        return dim_cocycles
    images = []
    for k in range(n_h):
        e = [0] * n_h
        e[k] = 1
        hs = [sympy.Matrix(rr, cc, e[h_off[v]: h_off[v + 1]]) for v, (rr, cc) in enumerate(h_shapes)]
        vec = []
        for name, _, _, _ in arrows_v:
            z = arrows_w[name] * hs[src[name]] - hs[tgt[name]] * vmat[name]
            vec.extend(z)
        images.append(vec)
    delta_rank = sympy.Matrix(n_z, n_h, lambda r_, c_: images[c_][r_]).rank()
    return dim_cocycles - delta_rank


def conjugate_rep(r: QuiverRep, g: Sequence) -> QuiverRep:
    """Transport ``r`` along invertible vertex maps ``g[v]``; the result is isomorphic to ``r``."""
    gs = [Mat(x) for x in g]
    inv = [Mat(x.inv()) if x.rows else x for x in gs]
    alpha = tuple(gs[i] * r.a(i) * inv[i - 1] for i in range(1, r.n + 1))
    beta = tuple(gs[i - 1] * r.b(i) * inv[i] for i in range(1, r.n + 1))
    return QuiverRep(r.n, r.dims, alpha, beta)
