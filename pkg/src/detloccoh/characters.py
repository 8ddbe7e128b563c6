"""GL_m x GL_n character bookkeeping.

A character is a finite map from weight pairs ``(lam, mu)`` (``lam`` of length
``m``, ``mu`` of length ``n``, both dominant) to polynomials in ``q``.  Infinite
characters such as those of ``S`` or ``D_p`` are truncated to a window
``|entry - offset| <= bound`` so that window membership is decidable per term.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .exactpoly import ONE, ZERO, LaurentPoly
from .shapes import Partition, conjugate, dominant_weights, is_dominant, partitions_in_rectangle, qbinom

WeightPair = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class CharacterSeries:
    m: int
    n: int
    terms: dict[WeightPair, LaurentPoly] = field(default_factory=dict)
    bound: int | None = None
    offset: WeightPair | None = None

    def __post_init__(self):
        clean = {}
        for (lam, mu), c in self.terms.items():
            lam, mu = tuple(lam), tuple(mu)
            if len(lam) != self.m or len(mu) != self.n:
                raise ValueError(f"weight pair {(lam, mu)} has the wrong lengths for m={self.m}, n={self.n}")
            if not (is_dominant(lam) and is_dominant(mu)):
                raise ValueError(f"weight pair {(lam, mu)} is not dominant")
            if not c.is_zero():
                if not c.has_nonneg_coeffs():
                    raise ValueError(f"character multiplicity {c} has a negative coefficient")
                clean[(lam, mu)] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))
        if self.bound is not None and self.offset is None:
            object.__setattr__(self, "offset", ((0,) * self.m, (0,) * self.n))

    @property
    def exact(self) -> bool:
        return self.bound is None

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, pair: WeightPair) -> bool:
        return (tuple(pair[0]), tuple(pair[1])) in self.terms

    def coeff(self, lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
        return self.terms.get((tuple(lam), tuple(mu)), ZERO)

    def in_window(self, pair: WeightPair) -> bool:
        if self.bound is None:
            return True
        (lam, mu), (olam, omu) = pair, self.offset
        return all(abs(a - b) <= self.bound for a, b in zip(lam + mu, olam + omu))

    def __add__(self, other: CharacterSeries) -> CharacterSeries:
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch")
        if (self.bound, self.offset) != (other.bound, other.offset):
            raise ValueError("cannot add characters truncated to different windows")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return CharacterSeries(self.m, self.n, out, self.bound, self.offset)

    def scale(self, p: LaurentPoly) -> CharacterSeries:
        return CharacterSeries(self.m, self.n, {k: c * p for k, c in self.terms.items()}, self.bound, self.offset)

    def twist(self, lam_shift: int, mu_shift: int) -> CharacterSeries:
        """Tensor with the one-dimensional ``S_{(lam_shift^m)} (x) S_{(mu_shift^n)}``."""
        def sh(v, k):
            return tuple(x + k for x in v)
        terms = {(sh(l, lam_shift), sh(u, mu_shift)): c for (l, u), c in self.terms.items()}
        offset = None
        if self.bound is not None:
            offset = (sh(self.offset[0], lam_shift), sh(self.offset[1], mu_shift))
        return CharacterSeries(self.m, self.n, terms, self.bound, offset)

    def by_degree(self) -> list[tuple[int, WeightPair, int]]:
        rows = [(e, pair, c) for pair, poly in self.terms.items() for e, c in poly.items()]
        rows.sort()
        return rows

    def render(self) -> str:
        lines = []
        for e, (lam, mu), c in self.by_degree():
            lines.append(f"q^{e} * S[{_w(lam)}]⊗S[{_w(mu)}] (mult {c})")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "bound": self.bound,
            "terms": [{"lambda": list(l), "mu": list(u), "poly": c.to_json()} for (l, u), c in self.terms.items()],
        }


def _w(v: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _pad(x: Partition | Sequence[int], length: int) -> tuple[int, ...]:
    parts = x.parts if isinstance(x, Partition) else tuple(v for v in x if v)
    if len(parts) > length:
        raise ValueError(f"{parts} has more than {length} parts")
    return tuple(parts) + (0,) * (length - len(parts))


def lambda_p(mu: Sequence[int], m: int, n: int, p: int) -> tuple[int, ...]:
    """The GL_m weight paired with ``mu`` inside the character of ``D_p``."""
    mu = tuple(mu)
    return mu[:p] + (p - n,) * (m - n) + tuple(x + (m - n) for x in mu[p:])


def in_dp_support(lam: Sequence[int], mu: Sequence[int], m: int, n: int, p: int) -> bool:
    """Whether ``S_lam C^m (x) S_mu C^n`` occurs in ``D_p``."""
    mu = tuple(mu)
    if len(mu) != n or not is_dominant(mu):
        return False
    if p >= 1 and mu[p - 1] < p - n:
        return False
    if p < n and mu[p] > p - m:
        return False
    return tuple(lam) == lambda_p(mu, m, n, p)


def char_of(kind: str, m: int, n: int, p: int | None = None, x: Sequence[int] | None = None,
            bound: int = 6, a: int | None = None, d: int | None = None) -> CharacterSeries:
    """Character of ``S``, ``D_p``, ``Q_p``, ``I_x`` or ``I_{a x d}`` cut to ``|entries| <= bound``."""
    if not m >= n >= 1:
        raise ValueError(f"need m >= n >= 1, got m={m}, n={n}")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    terms: dict[WeightPair, LaurentPoly] = {}

    if kind in ("S", "Ix", "Irect"):
        if kind == "S":
            lower = (0,) * n
        elif kind == "Ix":
            if x is None:
                raise ValueError("kind Ix needs a partition x")
            lower = _pad(x, n)
        else:
            if a is None or d is None or not 1 <= a <= n or d < 1:
                raise ValueError("kind Irect needs 1 <= a <= n and d >= 1")
            lower = (d,) * a + (0,) * (n - a)
        for y in dominant_weights(n, 0, bound):
            if all(yi >= xi for yi, xi in zip(y, lower)):
                terms[(y + (0,) * (m - n), y)] = ONE
        return CharacterSeries(m, n, terms, bound)

    if p is None or not 0 <= p <= n:
        raise ValueError(f"kind {kind} needs 0 <= p <= n")
    if kind == "D":
        for mu in dominant_weights(n, -bound, bound):
            lam = lambda_p(mu, m, n, p)
            if all(abs(v) <= bound for v in lam) and in_dp_support(lam, mu, m, n, p):
                terms[(lam, mu)] = ONE
        return CharacterSeries(m, n, terms, bound)
    if kind == "Q":
        if m != n:
            raise ValueError("Q_p only exists for square matrices")
        for lam in dominant_weights(n, -bound, bound):
            if p == n or lam[p] <= p - n:
                terms[(lam, lam)] = ONE
        return CharacterSeries(m, n, terms, bound)
    raise ValueError(f"unknown kind {kind!r}")


def h_axd_pairs(m: int, n: int, a: int, d: int):
    """Yield ``(alpha, beta)`` over the constraint box defining ``h_{a x d}``."""
    k = min(a, d)
    for alpha in partitions_in_rectangle(k, n - a):
        for beta in partitions_in_rectangle(m - a, k):
            yield alpha, beta


def lambda_axd(a: int, d: int, first: Partition, second: Partition, length: int) -> tuple[int, ...]:
    """``(d + first_1, ..., d + first_a, second_1, ..., second_{length-a})``."""
    return tuple(d + v for v in _pad(first, a)) + _pad(second, length - a)


def h_axd(m: int, n: int, a: int, d: int) -> CharacterSeries:
    if not 1 <= a <= n <= m or d < 1:
        raise ValueError(f"need 1 <= a <= n <= m and d >= 1, got m={m}, n={n}, a={a}, d={d}")
    terms: dict[WeightPair, LaurentPoly] = {}
    for alpha, beta in h_axd_pairs(m, n, a, d):
        lam = lambda_axd(a, d, alpha, beta, m)
        mu = lambda_axd(a, d, conjugate(beta), conjugate(alpha), n)
        key = (lam, mu)
        terms[key] = terms.get(key, ZERO) + LaurentPoly.monomial(alpha.size + beta.size)
    return CharacterSeries(m, n, terms)


def syzygy_gf(m: int, n: int, a: int, d: int) -> CharacterSeries:
    """Equivariant graded Betti numbers of the ideal ``I_{a x d}``."""
    if not 1 <= a <= n <= m or d < 1:
        raise ValueError(f"need 1 <= a <= n <= m and d >= 1, got m={m}, n={n}, a={a}, d={d}")
    total = CharacterSeries(m, n)
    k = min(a, d)
    for r in range(n - a + 1):
        weight = qbinom(r + k - 1, r).subs_power(2).shift(r * r + 2 * r)
        total = total + h_axd(m, n, a + r, d + r).scale(weight)
    return total


def pairing_gl(A: CharacterSeries, B: CharacterSeries) -> LaurentPoly:
    """``sum a_{lam,mu}(q) b_{lam,mu}(q)``, refused when finiteness cannot be certified."""
    if (A.m, A.n) != (B.m, B.n):
        raise ValueError("shape mismatch")
    if not A.exact and not B.exact:
        raise ValueError("pairing of two truncated characters is not determined")
    finite, other = (A, B) if A.exact else (B, A)
    total = ZERO
    for pair, c in finite.terms.items():
        if not other.in_window(pair):
            raise ValueError(f"weight pair {pair} lies outside the truncation window of the other operand")
        total = total + c * other.coeff(*pair)
    return total


def witness_pairing(m: int, n: int, p: int, a: int, d: int) -> LaurentPoly:
    """``<det (x) D_p, h_{a x d}>`` by direct enumeration of ``h_{a x d}``."""
    if not 1 <= a <= n <= m or not 0 <= p <= n:
        raise ValueError(f"need 1 <= a <= n <= m and 0 <= p <= n, got m={m}, n={n}, p={p}, a={a}")
    if d < m + n:
        raise ValueError(f"d must be at least m + n = {m + n}, got {d}")
    total = ZERO
    for (lam, mu), c in h_axd(m, n, a, d).terms.items():
        if in_dp_support(tuple(v - n for v in lam), tuple(v - m for v in mu), m, n, p):
            total = total + c
    return total


def witness_pairing_closed(m: int, n: int, p: int, a: int) -> LaurentPoly:
    if a != p:
        return ZERO
    return qbinom(n, p).subs_power(2).shift(p * (m - n))


# The H^1_m vanishing criterion for the modules J_{nu,l}

@dataclass(frozen=True)
class H1mVerdict:
    vanishes: bool
    witness: tuple[int, ...] | None = None
    solution: tuple[int, tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.vanishes


def _normalize_nu(nu: Sequence[int]) -> tuple[int, ...]:
    # twisting by a power of det does not change the answer; shift to a partition
    nu = tuple(nu)
    return tuple(v - nu[-1] for v in nu)


def h1m_system_holds(n: int, nu: Sequence[int], l: int, s: int, ts: Sequence[int],
                     alpha: Sequence[int]) -> bool:
    """Check one candidate ``(s, t_1..t_{n-l}, alpha)`` against the condition system."""
    ts, alpha = tuple(ts), tuple(alpha)
    if len(ts) != n - l or len(alpha) != n or not is_dominant(alpha):
        return False
    chain = (0, s) + ts + (l,)
    if any(chain[i] > chain[i + 1] for i in range(len(chain) - 1)):
        return False
    if l * l + 2 * sum(ts) != 1:
        return False
    A = lambda i: alpha[i - 1]  # noqa: E731
    N = lambda i: nu[i - 1]  # noqa: E731
    if l >= 1 and A(n) < l - N(l) - n:
        return False
    for j, t in enumerate(ts, start=1):
        if A(t + j) != t - N(n + 1 - j) - n:
            return False
    if s >= 1 and A(s) < s - n:
        return False
    if s + 1 <= n and A(s + 1) > s - n:
        return False
    return True


def _solve_alpha(n: int, lo: list, hi: list) -> tuple[int, ...] | None:
    inf = float("inf")
    lo, hi = lo[:], hi[:]
    for i in range(1, n):
        hi[i] = min(hi[i], hi[i - 1])
    for i in range(n - 2, -1, -1):
        lo[i] = max(lo[i], lo[i + 1])
    if any(lo[i] > hi[i] for i in range(n)):
        return None
    finite = [abs(v) for v in lo + hi if v not in (inf, -inf)]
    big = 1 + max(finite, default=0)
    alpha, prev = [], inf
    for i in range(n):
        v = min(hi[i], prev)
        if v == inf:
            v = big
        alpha.append(int(v))
        prev = v
    return tuple(alpha)


def j_h1m_vanishes(n: int, nu: Sequence[int], l: int) -> H1mVerdict:
    """Decide ``H^1_m(J_{nu,l}) = 0`` by searching the condition system exhaustively.

    The integers ``s, t_j`` range over a finite set; for each choice the
    constraints on ``alpha`` are interval bounds and equalities on a weakly
    decreasing sequence, which are solved exactly by bound propagation.
    """
    nu = tuple(nu)
    if len(nu) != n or not is_dominant(nu):
        raise ValueError(f"nu must be a dominant weight of length {n}")
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= n, got l={l}")
    nu = _normalize_nu(nu)
    inf = float("inf")
    for ts in itertools.combinations_with_replacement(range(l + 1), n - l):
        if l * l + 2 * sum(ts) != 1:
            continue
        top = ts[0] if ts else l
        for s in range(top + 1):
            lo, hi = [-inf] * n, [inf] * n
            if l >= 1:
                lo[n - 1] = max(lo[n - 1], l - nu[l - 1] - n)
            for j, t in enumerate(ts, start=1):
                val = t - nu[n - j] - n
                lo[t + j - 1] = max(lo[t + j - 1], val)
                hi[t + j - 1] = min(hi[t + j - 1], val)
            if s >= 1:
                lo[s - 1] = max(lo[s - 1], s - n)
            if s + 1 <= n:
                hi[s] = min(hi[s], s - n)
            alpha = _solve_alpha(n, lo, hi)
            if alpha is not None:
                return H1mVerdict(False, remark_witness(nu) if l == 1 and n >= 2 else alpha, (s, ts, alpha))
    return H1mVerdict(True)


def remark_witness(nu: Sequence[int]) -> tuple[int, ...]:
    """The explicit ``alpha`` exhibiting non-vanishing when ``l = 1`` and ``nu_1 > nu_2``."""
    nu = _normalize_nu(nu)
    n = len(nu)
    return tuple(-nu[n - j] - n for j in range(1, n)) + (1 - nu[0] - n,)


def h1m_closed_criterion(nu: Sequence[int], l: int) -> bool:
    """Vanishes unless ``l = 1`` and ``nu_1 > nu_2`` (``nu_2 = -inf`` when ``n = 1``)."""
    nu = tuple(nu)
    return not (l == 1 and (len(nu) == 1 or nu[0] > nu[1]))
