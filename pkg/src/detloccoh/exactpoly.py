"""Exact integer Laurent polynomials in ``q`` and bivariate polynomials in ``(q, w)``.

Both types are immutable, sparse, and kept in canonical form (no stored zero
coefficients), so ``==`` is mathematical equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from typing import Union

_EXP_LIMIT = 2**63


def _check_exp(e: int) -> int:
    if not isinstance(e, int):
        raise TypeError(f"exponent must be an int, got {type(e).__name__}")
    if not -_EXP_LIMIT <= e < _EXP_LIMIT:
        raise OverflowError(f"exponent {e} out of range")
    return e


def _clean(terms: Mapping) -> dict:
    return {k: int(c) for k, c in terms.items() if c}


class LaurentPoly:
    """A Laurent polynomial ``sum c_e q^e`` with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        cleaned = _clean(terms or {})
        for e in cleaned:
            _check_exp(e)
        self._terms: dict[int, int] = dict(sorted(cleaned.items()))
        self._hash: int | None = None

    # constructors
    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], start: int = 0) -> LaurentPoly:
        """Build from a dense coefficient list, lowest exponent ``start`` first."""
        return cls({start + i: c for i, c in enumerate(coeffs)})

    # read access
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def valuation(self) -> int | None:
        return min(self._terms) if self._terms else None

    def exponents(self) -> list[int]:
        return list(self._terms)

    def has_nonneg_coeffs(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # arithmetic
    def __add__(self, other) -> LaurentPoly:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LaurentPoly:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({e * k: c**k})
            raise ValueError("negative powers are only defined for unit monomials")
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def subs_power(self, k: int) -> LaurentPoly:
        """Substitute ``q -> q**k``; ``k = 2`` gives the ``q^2`` versions used everywhere."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def invert_var(self) -> LaurentPoly:
        return self.subs_power(-1)

    def __call__(self, x: int) -> int:
        return self.evaluate(x)

    def evaluate(self, x: int) -> int:
        if x == 0:
            if any(e < 0 for e in self._terms):
                raise ZeroDivisionError("cannot evaluate a negative power of q at 0")
            return self._terms.get(0, 0)
        total = 0
        for e, c in self._terms.items():
            if e >= 0:
                total += c * x**e
            else:
                # exact only when x is a unit; otherwise refuse rather than round
                if x not in (1, -1):
                    raise ValueError("evaluation of negative powers at a non-unit is not integral")
                total += c * x ** (-e)
        return total

    # comparison / hashing
    def __eq__(self, other) -> bool:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # rendering
    def __str__(self) -> str:
        return _render_terms([((e,), c) for e, c in self._terms.items()], ("q",))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json(self) -> list[dict]:
        return [{"exp": e, "coeff": str(c)} for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> LaurentPoly:
        return cls({int(t["exp"]): int(t["coeff"]) for t in data})


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


class BiPoly:
    """A polynomial ``sum c_{ij} q^i w^j`` with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        cleaned = _clean(terms or {})
        for i, j in cleaned:
            _check_exp(i)
            _check_exp(j)
        # sort by w-degree, then q-degree: matches how L_p(q,w) is usually written
        self._terms: dict[tuple[int, int], int] = dict(
            sorted(cleaned.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        )
        self._hash: int | None = None

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> BiPoly:
        return cls({(i, j): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self._terms.items())

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other) -> BiPoly:
        other = _as_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        other = _as_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> BiPoly:
        other = _as_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a, b), c1 in self._terms.items():
            for (x, y), c2 in other._terms.items():
                k = (a + x, b + y)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _as_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return _render_terms(list(self._terms.items()), ("q", "w"))

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def to_json(self) -> list[dict]:
        return [{"exp": [i, j], "coeff": str(c)} for (i, j), c in self._terms.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> BiPoly:
        return cls({(int(t["exp"][0]), int(t["exp"][1])): int(t["coeff"]) for t in data})


def _as_bipoly(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, int):
        return BiPoly({(0, 0): x})
    return NotImplemented


def _render_terms(items: list[tuple[tuple[int, ...], int]], names: tuple[str, ...]) -> str:
    if not items:
        return "0"
    out = []
    for n, (exps, c) in enumerate(items):
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if n == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


Poly = Union[LaurentPoly, BiPoly]

q = LaurentPoly.monomial(1)
ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_eval(p: LaurentPoly, x: int) -> int:
    return p.evaluate(x)


def poly_invert_var(p: LaurentPoly) -> LaurentPoly:
    return p.invert_var()


def bipoly_arith(a: BiPoly, b: BiPoly, op: str) -> BiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def embed(p: LaurentPoly, var: str) -> BiPoly:
    """Place a univariate polynomial on the ``q`` or ``w`` axis of a BiPoly."""
    if var == "q":
        return BiPoly({(e, 0): c for e, c in p.items()})
    if var == "w":
        return BiPoly({(0, e): c for e, c in p.items()})
    raise ValueError(f"var must be 'q' or 'w', got {var!r}")
