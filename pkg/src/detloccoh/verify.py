"""Named property checks, one per invariant, runnable individually or as suites.

Each check takes a size cap ``k`` and returns ``(passed, detail)``.  Checks are
deterministic: random inputs come from a fixed seed.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import characters as ch
from . import quiver as qv
from .exactpoly import LaurentPoly, poly_arith, poly_eval, poly_invert_var
from .grothendieck import (
    GammaElem,
    ModuleExpr,
    change_basis,
    class_to_expr,
    euler_chi,
    expr_to_class,
    pairing_d,
)
from .loccoh import (
    GradedExpr,
    addq_class_D,
    addq_multiplicities_D,
    chi0_closed_form,
    chi_recurrence_check,
    h_class_D,
    h_class_Q,
    h_class_S,
    start_expr,
)
from .lyubeznik import lyub_gf, lyub_gf_nonsquare_formula, lyub_gf_terms, lyub_gf_via_iteration, ring_dim
from .shapes import (
    binom,
    bott_tilde,
    count_inversions,
    dominant_weights,
    is_dominant,
    partitions_in_rectangle,
    product_space_cohomology,
    qbinom,
    qbinom_oracle,
    rho,
)

SEED = 20240917

Outcome = tuple[bool, str]


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    default_max: int
    fn: Callable[[int], Outcome]
    description: str


REGISTRY: dict[str, Check] = {}


def check(suite: str, default_max: int, description: str):
    def deco(fn):
        name = fn.__name__
        REGISTRY[name] = Check(name, suite, default_max, fn, description)
        return fn
    return deco


def _fail(what) -> Outcome:
    return False, f"counterexample: {what}"


def _ok(count: int) -> Outcome:
    return True, f"{count} cases"


def _rand_poly(rng: random.Random, lo: int = -4, hi: int = 6) -> LaurentPoly:
    return LaurentPoly({rng.randint(lo, hi): rng.randint(-5, 5) for _ in range(rng.randint(0, 4))})


def _graded_class(g: GradedExpr, n: int, m: int) -> GammaElem:
    family = next(iter(g.families()), "D")
    total = GammaElem.zero(n, family, m)
    for j, e in g.items():
        total = total + expr_to_class(e, m).scale(LaurentPoly.monomial(j))
    return change_basis(total, "D")


def _square_pairs(k: int):
    for m in range(1, k + 1):
        for n in range(1, m + 1):
            yield m, n


# exactpoly

@check("exactpoly", 200, "ring axioms for + and * on random Laurent polynomials")
def poly_ring_axioms(k: int) -> Outcome:
    rng = random.Random(SEED)
    for _ in range(k):
        a, b, c = _rand_poly(rng), _rand_poly(rng), _rand_poly(rng)
        for op in ("add", "mul"):
            if poly_arith(a, b, op) != poly_arith(b, a, op):
                return _fail((op, a, b))
            if poly_arith(poly_arith(a, b, op), c, op) != poly_arith(a, poly_arith(b, c, op), op):
                return _fail((op, a, b, c))
        if a * (b + c) != a * b + a * c:
            return _fail(("distributivity", a, b, c))
    return _ok(k)


@check("exactpoly", 200, "inverting the variable twice is the identity")
def invert_involution(k: int) -> Outcome:
    rng = random.Random(SEED + 1)
    for _ in range(k):
        a = _rand_poly(rng)
        if poly_invert_var(poly_invert_var(a)) != a:
            return _fail(a)
    return _ok(k)


@check("exactpoly", 200, "evaluation is multiplicative")
def eval_multiplicative(k: int) -> Outcome:
    rng = random.Random(SEED + 2)
    for _ in range(k):
        a, b = _rand_poly(rng), _rand_poly(rng)
        x = rng.choice([-3, -2, -1, 1, 2, 3])
        try:
            lhs, rhs = poly_eval(a * b, x), poly_eval(a, x) * poly_eval(b, x)
        except ValueError:
            # negative powers at a non-unit: not defined over the integers
            continue
        if lhs != rhs:
            return _fail((a, b, x))
    return _ok(k)


# shapes

@check("shapes", 12, "Pascal recurrence agrees with the partition-in-box oracle")
def qbinom_oracle_match(k: int) -> Outcome:
    cases = 0
    for a in range(k + 1):
        for b in range(a + 1):
            cases += 1
            if qbinom(a, b) != qbinom_oracle(a, b):
                return _fail((a, b))
    return _ok(cases)


@check("shapes", 12, "q-Pascal identity")
def qbinom_pascal(k: int) -> Outcome:
    cases = 0
    for a in range(1, k + 1):
        for b in range(a + 1):
            cases += 1
            if qbinom(a, b) != qbinom(a - 1, b).shift(b) + qbinom(a - 1, b - 1):
                return _fail((a, b))
    return _ok(cases)


@check("shapes", 12, "symmetry and specialization q = 1")
def qbinom_symmetry(k: int) -> Outcome:
    cases = 0
    for a in range(k + 1):
        for b in range(a + 1):
            cases += 1
            if qbinom(a, b) != qbinom(a, a - b) or qbinom(a, b).evaluate(1) != binom(a, b):
                return _fail((a, b))
    return _ok(cases)


@check("shapes", 10, "q-binomial at 1/q equals q^{-b(a-b)} times the q-binomial")
def qbinom_inversion(k: int) -> Outcome:
    cases = 0
    for a in range(k + 1):
        for b in range(a + 1):
            cases += 1
            if poly_invert_var(qbinom(a, b)) != qbinom(a, b).shift(-b * (a - b)):
                return _fail((a, b))
    return _ok(cases)


@check("shapes", 5, "Bott: dominant output, degree 0 iff dominant input, vanishing iff a repeat")
def bott_tilde_props(k: int) -> Outcome:
    cases = 0
    for m in range(1, k + 1):
        delta = rho(m)
        for gamma in _all_weights(m, -2, 2):
            cases += 1
            shifted = [g + d for g, d in zip(gamma, delta)]
            res = bott_tilde(gamma)
            if res.vanishes != (len(set(shifted)) < m):
                return _fail(gamma)
            if res.vanishes:
                continue
            if not is_dominant(res.weight.entries):
                return _fail(gamma)
            if (res.degree == 0) != is_dominant(gamma) or res.degree != count_inversions(shifted):
                return _fail(gamma)
    return _ok(cases)


def _all_weights(m: int, lo: int, hi: int):
    return itertools.product(range(lo, hi + 1), repeat=m)


@check("shapes", 4, "Bott degree on a product of flag varieties is even")
def product_space_even(k: int) -> Outcome:
    cases = 0
    for n in range(2, k + 2):
        for split in range(1, n):
            for nu in dominant_weights(split, -2, 2):
                for mu in _all_weights(n - split, -2, 2):
                    cases += 1
                    res = product_space_cohomology(nu, mu, n)
                    if not res.vanishes and res.degree % 2:
                        return _fail((nu, mu))
    return _ok(cases)


# grothendieck

def _rand_gamma(rng: random.Random, n: int, basis: str = "D") -> GammaElem:
    return GammaElem(n, basis, tuple(_rand_poly(rng) for _ in range(n + 1)))


@check("grothendieck", 8, "D -> Q -> D change of basis round-trips")
def change_basis_roundtrip(k: int) -> Outcome:
    rng = random.Random(SEED + 3)
    cases = 0
    for n in range(k + 1):
        for _ in range(20):
            cases += 1
            g = _rand_gamma(rng, n)
            if change_basis(change_basis(g, "Q"), "D") != g:
                return _fail(g)
            h = _rand_gamma(rng, n, "Q")
            if change_basis(change_basis(h, "D"), "Q") != h:
                return _fail(h)
    return _ok(cases)


@check("grothendieck", 8, "the D-pairing is bilinear and symmetric")
def pairing_bilinear_symmetric(k: int) -> Outcome:
    rng = random.Random(SEED + 4)
    cases = 0
    for n in range(k + 1):
        for _ in range(10):
            cases += 1
            a, b, c = (_rand_gamma(rng, n) for _ in range(3))
            s = _rand_poly(rng)
            if pairing_d(a, b) != pairing_d(b, a):
                return _fail((a, b))
            if pairing_d(a.scale(s) + b, c) != s * pairing_d(a, c) + pairing_d(b, c):
                return _fail((a, b, c, s))
    return _ok(cases)


@check("grothendieck", 4, "module expression -> class -> module expression is the identity")
def expr_class_roundtrip(k: int) -> Outcome:
    cases = 0
    for n in range(k + 1):
        for family in ("D", "Q"):
            for mult in itertools.product(range(3), repeat=n + 1):
                cases += 1
                e = ModuleExpr(n, family, mult)
                if class_to_expr(expr_to_class(e)) != e:
                    return _fail(e)
    return _ok(cases)


# loccoh

def parity_violations(m: int, n: int, t: int, p: int, per_component: bool = True) -> list[tuple[int, int]]:
    """``(s, exponent)`` pairs in the class of ``H_{O_t}(D_p)`` breaking the parity rule.

    With ``per_component`` the rule for ``[D_s]`` is ``(p - t) + (p - s)(m - n)``;
    without it every exponent is held to ``(p - t) + p(m - n)``, which is only
    right for the ``[D_0]`` coefficient or for square matrices.
    """
    g = h_class_D(m, n, t, p)
    bad = []
    if t >= p:
        return bad
    for s in range(n + 1):
        want = ((p - t) + (p - s if per_component else p) * (m - n)) % 2
        bad.extend((s, e) for e in g[s].exponents() if e % 2 != want)
    return bad


@check("loccoh", 8, "exponents of [D_s] in the D_p classes have parity (p - t) + (p - s)(m - n)")
def parity_D(k: int) -> Outcome:
    cases = 0
    for m, n in _square_pairs(k):
        for p in range(n + 1):
            for t in range(n + 1):
                cases += 1
                if parity_violations(m, n, t, p):
                    return _fail((m, n, t, p))
    return _ok(cases)


@check("loccoh", 8, "exponents of the Q_p classes have parity p - t")
def parity_Q(k: int) -> Outcome:
    cases = 0
    for n in range(1, k + 1):
        for p in range(n + 1):
            for t in range(p):
                cases += 1
                if any(e % 2 != (p - t) % 2 for e in h_class_Q(n, t, p).degrees()):
                    return _fail((n, t, p))
    return _ok(cases)


@check("loccoh", 8, "the D_n classes coincide with those of S")
def specialization_S(k: int) -> Outcome:
    cases = 0
    for m, n in _square_pairs(k):
        for t in range(n + 1):
            cases += 1
            if h_class_D(m, n, t, n) != h_class_S(m, n, t):
                return _fail((m, n, t))
    return _ok(cases)


@check("loccoh", 8, "dropping one row and column shifts all indices down by one")
def shift_invariance(k: int) -> Outcome:
    cases = 0
    for m, n in _square_pairs(k):
        for p in range(2, n + 1):
            for t in range(1, p):
                big, small = h_class_D(m, n, t, p), h_class_D(m - 1, n - 1, t - 1, p - 1)
                for s in range(1, n + 1):
                    cases += 1
                    if big[s] != small[s - 1]:
                        return _fail((m, n, t, p, s))
    return _ok(cases)


@check("loccoh", 8, "square-matrix Q-basis results convert back to the D-basis classes")
def square_consistency(k: int) -> Outcome:
    cases = 0
    for n in range(1, k + 1):
        for t in range(n + 1):
            cases += 1
            if _graded_class(start_expr("S", n, n, n, t), n, n) != h_class_S(n, n, t):
                return _fail(("S", n, t))
            for p in range(n + 1):
                cases += 1
                if change_basis(addq_class_D(n, t, p), "D") != h_class_D(n, n, t, p):
                    return _fail(("D", n, t, p))
                if _graded_class(start_expr("D", p, n, n, t), n, n) != h_class_D(n, n, t, p):
                    return _fail(("start D", n, t, p))
                lhs = change_basis(h_class_Q(n, t, p), "D")
                rhs = h_class_D(n, n, t, p)
                if p >= 1:
                    rhs = rhs - change_basis(h_class_Q(n, t, p - 1), "D").scale(LaurentPoly.monomial(1))
                if t < p and lhs != rhs:
                    return _fail(("Q", n, t, p))
    return _ok(cases)


@check("loccoh", 8, "boundary identity for m_s(q) and the nonnegativity of its coefficients")
def id_msq_bins(k: int) -> Outcome:
    cases = 0
    for n in range(1, k + 1):
        for p in range(1, n + 1):
            for t in range(p):
                ms = addq_multiplicities_D(n, t, p)
                if any(not poly.has_nonneg_coeffs() for poly in ms):
                    return _fail(("negative", n, t, p))
                if t + 2 > p:
                    continue
                for s in range(t + 1):
                    cases += 1
                    lhs = ms[s] - (qbinom(n - s - 1, p - s - 1) * qbinom(p - s - 2, p - t - 2)).shift(t - s)
                    rhs = (qbinom(n - s - 1, p - s) * qbinom(p - s - 1, p - t - 1)).shift(p - s)
                    if lhs != rhs:
                        return _fail((n, s, t, p))
    return _ok(cases)


@check("loccoh", 8, "local cohomology of D_p along O_{p-1}: nothing in degree 0, one Q_{p-1} in degree 1")
def qpdp_consequence(k: int) -> Outcome:
    cases = 0
    for n in range(1, k + 1):
        for p in range(1, n + 1):
            cases += 1
            g = addq_class_D(n, p - 1, p)
            if not g.degree_part(0).is_zero():
                return _fail((n, p, "degree 0"))
            if g.degree_part(1) != GammaElem.basis_elem(n, p - 1, "Q", m=n):
                return _fail((n, p, "degree 1"))
    return _ok(cases)


@check("loccoh", 12, "alternating binomial identity behind the Euler characteristic recurrence")
def binomial_identity(k: int) -> Outcome:
    cases = 0
    for n in range(k + 1):
        for p in range(n + 1):
            for t in range(p):
                cases += 1
                lhs = sum((-1) ** (s - t) * binom(n, s) * binom(s - 1, t) * binom(n - 1 - s, p - s)
                          for s in range(t + 1, p + 1))
                if lhs != (-1) ** (p - t) * binom(n - 1, t) - binom(n - 1, p):
                    return _fail((n, t, p))
    return _ok(cases)


@check("loccoh", 8, "closed form of the Euler characteristic at q = -1")
def chi_closed_form(k: int) -> Outcome:
    cases = 0
    for m, n in _square_pairs(k):
        for p in range(1, n + 1):
            for t in range(p):
                cases += 1
                if euler_chi(h_class_D(m, n, t, p), 0) != chi0_closed_form(m, n, t, p):
                    return _fail((m, n, t, p))
    return _ok(cases)


@check("loccoh", 8, "Euler characteristic recurrence")
def chi_recurrence(k: int) -> Outcome:
    cases = 0
    for m, n in _square_pairs(k):
        for p in range(1, n + 1):
            for t in range(p):
                cases += 1
                if not chi_recurrence_check(m, n, t, p):
                    return _fail((m, n, t, p))
    return _ok(cases)


# lyubeznik

def _lyub_triples(k: int):
    for m, n in _square_pairs(k):
        for p in range(n):
            yield m, n, p


@check("lyubeznik", 6, "closed formulas agree with composing the two local cohomology functors")
def formula_vs_iteration(k: int) -> Outcome:
    cases = 0
    for m, n, p in _lyub_triples(k):
        cases += 1
        if lyub_gf(m, n, p) != lyub_gf_via_iteration(m, n, p):
            return _fail((m, n, p))
    return _ok(cases)


@check("lyubeznik", 6, "the top corner of every table is 1")
def highest_lyubeznik(k: int) -> Outcome:
    cases = 0
    for m, n, p in _lyub_triples(k):
        cases += 1
        d = ring_dim(m, n, p)
        if lyub_gf(m, n, p).coeff(d, d) != 1:
            return _fail((m, n, p))
    return _ok(cases)


@check("lyubeznik", 6, "each summand factors as a q-part times a w-part")
def nonsquare_factorization(k: int) -> Outcome:
    from .exactpoly import BiPoly, embed
    cases = 0
    for m, n, p in _lyub_triples(k):
        cases += 1
        total = BiPoly()
        for qpart, wpart in lyub_gf_terms(m, n, p):
            summand = embed(qpart, "q") * embed(wpart, "w")
            expect = {(i, j): a * b for i, a in qpart.items() for j, b in wpart.items()}
            if summand != BiPoly(expect):
                return _fail((m, n, p))
            total = total + summand
        if total != lyub_gf(m, n, p):
            return _fail((m, n, p))
    return _ok(cases)


@check("lyubeznik", 4, "the non-square formula gives the wrong answer for square matrices")
def naive_substitution_differs(k: int) -> Outcome:
    for n, p in ((2, 1), (4, 2)):
        if n <= k and lyub_gf(n, n, p) == lyub_gf_nonsquare_formula(n, n, p):
            return _fail((n, p))
    return _ok(2)


# characters

@check("characters", 4, "witness pairing is independent of d and matches its closed form")
def witness_pairing_values(k: int) -> Outcome:
    cases = 0
    for m, n in _square_pairs(k):
        for p in range(n + 1):
            for a in range(1, n + 1):
                expect = ch.witness_pairing_closed(m, n, p, a)
                for d in range(m + n, m + n + 4):
                    cases += 1
                    if ch.witness_pairing(m, n, p, a, d) != expect:
                        return _fail((m, n, p, a, d))
    return _ok(cases)


@check("characters", 6, "condition-system search agrees with the closed criterion for H^1_m")
def h1m_criterion(k: int) -> Outcome:
    cases = 0
    for n in range(1, k + 1):
        for nu in dominant_weights(n, -3, 3):
            for l in range(n + 1):
                cases += 1
                verdict = ch.j_h1m_vanishes(n, nu, l)
                if verdict.vanishes != ch.h1m_closed_criterion(nu, l):
                    return _fail((n, nu, l))
    return _ok(cases)


@check("characters", 5, "number of (alpha, beta) pairs equals the product of box counts")
def h_axd_count(k: int) -> Outcome:
    cases = 0
    for m, n in _square_pairs(k):
        for a in range(1, n + 1):
            for d in range(1, 5):
                cases += 1
                r = min(a, d)
                total = sum(c.evaluate(1) for c in ch.h_axd(m, n, a, d).terms.values())
                if total != binom(r + n - a, r) * binom(m - a + r, r):
                    return _fail((m, n, a, d))
                if len(partitions_in_rectangle(r, n - a)) != binom(r + n - a, r):
                    return _fail(("box", r, n - a))
    return _ok(cases)


@check("characters", 4, "D_p character terms pair each mu with lambda(p)")
def dp_self_consistency(k: int) -> Outcome:
    cases = 0
    for m, n in _square_pairs(k):
        for p in range(n + 1):
            series = ch.char_of("D", m, n, p, bound=k + 1)
            for lam, mu in series.terms:
                cases += 1
                if lam != ch.lambda_p(mu, m, n, p):
                    return _fail((m, n, p, lam, mu))
    return _ok(cases)


# quiver

@check("quiver", 5, "Ext^1 between any two Q^(i), Q^(j) vanishes")
def ext1_Q_vanish(k: int) -> Outcome:
    cases = 0
    for n in range(k + 1):
        for i in range(n + 1):
            for j in range(n + 1):
                cases += 1
                if qv.ext1_dim(qv.build_rep("Q", i, n), qv.build_rep("Q", j, n)):
                    return _fail((n, i, j))
    return _ok(cases)


@check("quiver", 6, "every quotient of Q^(p) is some Q^(r), and Q^(p)/D^(p) is Q^(p-1)")
def quotient_classification(k: int) -> Outcome:
    cases = 0
    for n in range(1, k + 1):
        for p in range(n + 1):
            q = qv.build_rep("Q", p, n)
            if p >= 1:
                cases += 1
                socle_quot = qv.quotient(q, qv.vertex_sub(q, [p]))
                if not qv.is_isomorphic_addq(socle_quot, qv.build_rep("Q", p - 1, n)):
                    return _fail(("socle quotient", n, p))
            for verts in qv.subreps_of_Q(p, n):
                cases += 1
                mult = qv.decompose_addQ(qv.quotient(q, qv.vertex_sub(q, verts)))
                if isinstance(mult, qv.AddQFailure) or sum(mult) > 1:
                    return _fail((n, p, verts))
                if verts and mult[min(verts) - 1 if min(verts) else 0] != (1 if min(verts) else 0):
                    return _fail((n, p, verts, mult))
    return _ok(cases)


@check("quiver", 8, "Q^(p) has simple socle D^(p)")
def q_socle(k: int) -> Outcome:
    cases = 0
    for n in range(k + 1):
        for p in range(n + 1):
            cases += 1
            if qv.simple_socle(qv.build_rep("Q", p, n)) != [(p, 1)]:
                return _fail((n, p))
    return _ok(cases)


@check("quiver", 6, "peeling recovers the multiplicities of a disguised direct sum of Q^(s)")
def addq_roundtrip(k: int) -> Outcome:
    import sympy
    rng = random.Random(SEED + 5)
    cases = 0
    for n in range(k + 1):
        for _ in range(3):
            cases += 1
            mult = [rng.randint(0, 2) for _ in range(n + 1)]
            r = qv.addq_rep(n, mult)
            g = []
            for d in r.dims:
                while True:
                    x = sympy.Matrix(d, d, lambda *_: rng.randint(-2, 2))
                    if d == 0 or x.det() != 0:
                        break
                g.append(x)
            disguised = qv.conjugate_rep(r, g)
            if qv.decompose_addQ(disguised) != tuple(mult):
                return _fail((n, mult))
    return _ok(cases)


SUITES = sorted({c.suite for c in REGISTRY.values()})


def select(name: str) -> list[Check]:
    """A suite name, a check name, or ``all``."""
    if name == "all":
        return list(REGISTRY.values())
    if name in REGISTRY:
        return [REGISTRY[name]]
    chosen = [c for c in REGISTRY.values() if c.suite == name]
    if not chosen:
        raise KeyError(f"unknown suite or check {name!r}; suites: {', '.join(SUITES)}")
    return chosen


@dataclass(frozen=True)
class CheckRun:
    name: str
    passed: bool
    detail: str
    seconds: float


def run_checks(name: str, cap: int | None = None) -> list[CheckRun]:
    """Run the selected checks with size ``min(default, cap)``."""
    out = []
    for c in select(name):
        k = c.default_max if cap is None else min(c.default_max, cap)
        start = time.perf_counter()
        try:
            passed, detail = c.fn(k)
        except Exception as exc:  # a crash is a failure, not a pass
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        out.append(CheckRun(c.name, passed, detail, time.perf_counter() - start))
    return out
