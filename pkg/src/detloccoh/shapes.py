"""Partitions, dominant weights, Gaussian binomials and Bott's algorithm in type A."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exactpoly import ONE, ZERO, LaurentPoly


def _fmt(entries: Sequence[int]) -> str:
    return "(" + ",".join(str(e) for e in entries) + ")"


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x < 0 for x in parts):
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access with zero padding, i.e. ``x[i] = x_i``."""
        if i < 1:
            raise IndexError("partition parts are 1-indexed")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self.parts) > length:
            raise ValueError(f"partition {self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __str__(self) -> str:
        return _fmt(self.parts)


@dataclass(frozen=True)
class Weight:
    entries: tuple[int, ...]
    dominant: bool = False

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.dominant and not is_dominant(entries):
            raise ValueError(f"weight {entries} is flagged dominant but is not weakly decreasing")

    @classmethod
    def of(cls, entries: Sequence[int]) -> Weight:
        """Build a weight, setting the dominant flag when the entries allow it."""
        entries = tuple(entries)
        return cls(entries, is_dominant(entries))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def size(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return _fmt(self.entries)


def is_dominant(entries: Sequence[int]) -> bool:
    return all(entries[i] >= entries[i + 1] for i in range(len(entries) - 1))


@dataclass(frozen=True)
class BottResult:
    """Either ``vanishes`` or a single nonzero cohomology in ``degree`` with highest weight ``weight``."""

    vanishes: bool
    degree: int | None = None
    weight: Weight | None = None

    def __post_init__(self):
        if not self.vanishes and (self.weight is None or not self.weight.dominant):
            raise ValueError("non-vanishing Bott result needs a dominant weight")

    def __str__(self) -> str:
        if self.vanishes:
            return "vanishes"
        return f"H^{self.degree} = S{self.weight}"


VANISHES = BottResult(True)


# q-binomials

@lru_cache(maxsize=None)
def qbinom(a: int, b: int) -> LaurentPoly:
    """Gaussian binomial by the Pascal recurrence; zero outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return ZERO
    if b == 0 or b == a:
        return ONE
    return qbinom(a - 1, b).shift(b) + qbinom(a - 1, b - 1)


def partitions_in_rectangle(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``, ascending lexicographically."""
    if rows < 0 or cols < 0:
        return []
    out = []
    # weakly decreasing tuples of length `rows` in [0, cols]
    for combo in itertools.combinations_with_replacement(range(cols, -1, -1), rows):
        out.append(Partition(combo))
    out.sort(key=lambda x: x.parts)
    return out


def qbinom_oracle(a: int, b: int) -> LaurentPoly:
    """Gaussian binomial as the size generating function of partitions in a ``(a-b) x b`` box."""
    if a < 0 or b < 0 or b > a:
        return ZERO
    counts: dict[int, int] = {}
    for x in partitions_in_rectangle(a - b, b):
        counts[x.size] = counts.get(x.size, 0) + 1
    return LaurentPoly(counts)


def binom(a: int, b: int) -> int:
    """Integer binomial coefficient, with the generalized value for a negative top.

    ``binom(a, b) = 0`` for ``b < 0``; for ``a < 0`` it is ``(-1)^b binom(b-a-1, b)``,
    so in particular ``binom(-1, 0) = 1``.
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b)
    return (-1) ** b * math.comb(b - a - 1, b)


def conjugate(x: Partition | Sequence[int]) -> Partition:
    parts = x.parts if isinstance(x, Partition) else tuple(x)
    if not parts:
        return Partition()
    return Partition(tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1)))


def dominant_weights(length: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """Weakly decreasing integer tuples with entries in ``[lo, hi]``."""
    if length == 0:
        return [()]
    return [tuple(c) for c in itertools.combinations_with_replacement(range(hi, lo - 1, -1), length)]


# Bott's theorem

def rho(m: int) -> tuple[int, ...]:
    return tuple(range(m - 1, -1, -1))


def count_inversions(v: Sequence[int]) -> int:
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] < v[j])


def bott_tilde(gamma: Weight | Sequence[int]) -> BottResult:
    """Shift by rho, sort, and shift back; vanishes when the shifted weight has a repeat."""
    entries = tuple(gamma.entries if isinstance(gamma, Weight) else gamma)
    m = len(entries)
    if m < 1:
        raise ValueError("bott_tilde needs a weight of length at least 1")
    delta = rho(m)
    shifted = [g + d for g, d in zip(entries, delta)]
    if len(set(shifted)) < m:
        return VANISHES
    ordered = sorted(shifted, reverse=True)
    tilde = tuple(s - d for s, d in zip(ordered, delta))
    return BottResult(False, count_inversions(shifted), Weight(tilde, True))


def _split_input(lam, mu, n: int | None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lam_e = tuple(lam.entries if isinstance(lam, Weight) else lam)
    mu_e = tuple(mu.entries if isinstance(mu, Weight) else mu)
    if n is not None and len(lam_e) + len(mu_e) != n:
        raise ValueError(f"lengths {len(lam_e)} + {len(mu_e)} do not add up to n = {n}")
    if not is_dominant(lam_e):
        raise ValueError(f"lambda = {lam_e} must be dominant")
    return lam_e, mu_e


def bott_flag_cohomology(lam, mu, n: int, part: str = "global") -> BottResult:
    """Cohomology of ``S_lam Q_p (x) L^mu`` on ``Flag([p, n])``.

    ``part="fiberwise"`` gives the higher direct images along the map to the
    Grassmannian (the weight returned is ``mu~``); ``part="global"`` gives
    global cohomology (the weight returned is ``(lam|mu)~``).
    """
    lam_e, mu_e = _split_input(lam, mu, n)
    if part == "fiberwise":
        if not mu_e:
            return BottResult(False, 0, Weight((), True))
        return bott_tilde(mu_e)
    if part == "global":
        return bott_tilde(lam_e + mu_e)
    raise ValueError(f"part must be 'fiberwise' or 'global', got {part!r}")


def bott_pushforward_c(lam, mu) -> tuple[Weight, Weight]:
    """Direct image along ``Flag([p,n]) -> Flag([p+1,n])`` when ``lam_p >= mu_1``."""
    lam_e, mu_e = _split_input(lam, mu, None)
    if not mu_e:
        raise ValueError("mu must be nonempty")
    if lam_e and lam_e[-1] < mu_e[0]:
        raise ValueError(f"need lam_p >= mu_1, got {lam_e[-1]} < {mu_e[0]}")
    return Weight(lam_e + (mu_e[0],), True), Weight.of(mu_e[1:])


def product_space_cohomology(nu, mu, n: int) -> BottResult:
    """Cohomology of the same bundle pulled back to a product of two flag varieties.

    Kunneth doubles the Bott degree, so the answer always sits in even degree.
    """
    nu_e, mu_e = _split_input(nu, mu, n)
    res = bott_tilde(nu_e + mu_e)
    if res.vanishes:
        return res
    return BottResult(False, 2 * res.degree, res.weight)
