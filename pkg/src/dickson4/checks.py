"""Property suite behind ``dickson4 verify``.

Each check takes the field, an n bound and a seeded RNG, and raises
AssertionError with a short reproduction hint when it fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import polys
from .dickson import (
    classical_eval,
    closed_form,
    eval_int_poly,
    frobenius_power_identity,
    genfun_series,
    rdp4_eval_closed,
    rdp4_eval_recursive,
    rdp4_sequence,
    rdp_coeffs_exact,
    rdp_eval_param,
    special_value,
)
from .field import GF, build_V, parametrize_y, quadratic_extension
from .moments import (
    AS_PRINTED,
    CORRECTED,
    b_coefficients,
    b_coefficients_expanded,
    c_coefficients,
    oracle_lhs,
    verify_moments,
)
from .permutation import (
    aux_coefficient_rational,
    aux_identity_and_equiv,
    aux_poly,
    fixed_point_tables,
    pp_scan,
    two_to_one_fibers,
)

# Exhaustive checks over GF(q^2) or over all n <= q^2 - 1 are skipped above this q.
EXHAUSTIVE_Q = 50


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[GF, int, random.Random], None]
    description: str


def _field_axioms(F, n_max, rng):
    for _ in range(10_000):
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c)), ("add assoc", a, b, c)
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)), ("mul assoc", a, b, c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)), ("distrib", a, b, c)
        if a:
            assert F.mul(a, F.inv(a)) == 1, ("inverse", a)
        direct = polys.mulmod(F.coeffs(a), F.coeffs(b), F.modulus, F.p)
        assert F.mul(a, b) == F.from_coeffs(direct), ("table vs polynomial product", a, b)


def _fermat(F, n_max, rng):
    xs = F.elements() if F.q <= 1000 else [rng.randrange(F.q) for _ in range(1000)]
    for x in xs:
        assert F.pow(x, F.q) == x, ("x^q != x", x)


def _parametrization(F, n_max, rng):
    Q = quadratic_extension(F)
    V = set(build_V(F))
    assert len(V) == F.q, ("|V| != q", len(V))
    assert {z for z in V if Q.is_base(z)} == {Q.half}, "V meets GF(q) outside 1/2"
    for x in F.elements():
        y = parametrize_y(F, x)
        assert Q.mul(y, Q.sub(Q.one, y)) == Q.embed(x), ("y(1-y) != x", x, y)
        assert Q.is_base(y) or y in V, ("y outside GF(q) u V", x, y)


def _quadratic_preimages(F, n_max, rng):
    if F.q > EXHAUSTIVE_Q:
        return
    Q = quadratic_extension(F)
    for z in Q.elements():
        w = Q.frobenius(z)
        in_base = Q.is_base(Q.mul(z, Q.sub(Q.one, z)))
        assert in_base == (w == z or w == Q.sub(Q.one, z)), ("preimage criterion", z)
    if F.q <= 10:
        assert set(build_V(F, "filter")) == set(build_V(F)), "V: solve vs filter"


def _evaluator_agreement(F, n_max, rng):
    p = F.p
    top = min(n_max, 512)
    reduced = [[c % p for c in rdp_coeffs_exact(n, 3)] for n in range(top + 1)]
    for x in F.elements():
        seq = rdp4_sequence(F, x, top)
        assert genfun_series(F, x, top) == seq, ("series vs recursion", x)
        for n in range(top + 1):
            assert eval_int_poly(F, reduced[n], x) == seq[n], ("coefficients", n, x)
            assert rdp4_eval_closed(F, n, x) == seq[n], ("closed form", n, x)


def _kind_combination(F, n_max, rng):
    xs = list(F.elements())
    if len(xs) > 60:
        xs = rng.sample(xs, 60)
    for x in xs:
        seq = rdp4_sequence(F, x, n_max)
        for n in range(n_max + 1):
            e_n = classical_eval(F, n, 1, x)
            d_n = classical_eval(F, n, 0, x)
            assert seq[n] == F.sub(F.mul(3, e_n), F.mul(2, d_n)), ("3E-2D", n, x)
            if n >= 1:
                assert classical_eval(F, n, 2, x) == classical_eval(F, n - 1, 1, x), ("D_n,2", n, x)


def _special_values(F, n_max, rng):
    seq = rdp4_sequence(F, F.quarter, n_max)
    for n in range(n_max + 1):
        assert seq[n] == special_value(F, n), ("D(1/4)", n)
        if n >= 1:
            assert rdp4_eval_recursive(F, n, 0) == 1, ("D(0)", n)
        one, minus_two = fixed_point_tables(n)
        assert rdp4_eval_recursive(F, n, 1) == F.from_int(one), ("D(1)", n)
        assert rdp4_eval_recursive(F, n, F.neg(2)) == F.from_int(minus_two), ("D(-2)", n)


def _periodicity(F, n_max, rng):
    period = F.q**2 - 1
    others = [x for x in F.elements() if x != F.quarter]
    for _ in range(50):
        n = rng.randrange(1, 2 * period)
        x = rng.choice(others)
        a = rdp4_eval_recursive(F, n, x, reduce=False)
        b = rdp4_eval_recursive(F, n + period, x, reduce=False)
        assert a == b, ("period q^2-1", n, x)


def _branch_symmetry(F, n_max, rng):
    Q = quadratic_extension(F)
    for x in F.elements():
        if x == F.quarter:
            continue
        y = parametrize_y(F, x)
        other = Q.sub(Q.one, y)
        for n in range(0, min(n_max, 60) + 1):
            assert closed_form(Q, y, n) == closed_form(Q, other, n), ("y <-> 1-y", n, x)


def _parameter_scaling(F, n_max, rng):
    for n in range(0, min(n_max, 40) + 1):
        base = [rdp4_eval_recursive(F, n, x) for x in F.elements()]
        bij = len(set(base)) == F.q
        for _ in range(3):
            c, d = rng.randrange(1, F.q), rng.randrange(1, F.q)
            vals = [F.mul(c, rdp4_eval_recursive(F, n, F.mul(d, x))) for x in F.elements()]
            assert (len(set(vals)) == F.q) == bij, ("c D(dx) bijection", n, c, d)
        a = rng.randrange(1, F.q)
        vals = [rdp_eval_param(F, n, a, x) for x in F.elements()]
        assert (len(set(vals)) == F.q) == bij, ("D(a, x) bijection", n, a)


def _frobenius_power(F, n_max, rng):
    for k in range(1, F.e + 1):
        ident = frobenius_power_identity(F, k)
        assert ident.holds, ("2^n D_n + 1 = 3(1-4x)^((n-1)/2)", k)
        assert not ident.bijective, ("D_{p^k} is a PP", k)


def _pp_criteria(F, n_max, rng):
    top = F.q**2 - 1 if F.q <= EXHAUSTIVE_Q else min(n_max, F.q**2 - 1)
    for r in pp_scan(F, 0, top):
        if r.direct:
            assert r.n % 6 == 2, ("PP with n != 2 mod 6", r.n)
        if r.n >= 1 and r.n <= min(n_max, 60):
            fibers = two_to_one_fibers(F, r.n)
            if r.two_to_one:
                target = set(F.elements()) - {special_value(F, r.n)}
                assert set(fibers) == target, ("image of f", r.n)


def _aux_identity(F, n_max, rng):
    for n in range(2, min(n_max, 512) + 1, 2):
        identity, f_pp = aux_identity_and_equiv(F, n)
        assert identity, ("2^n D_n(x) = f_n(1-4x)", n)
        if F.q <= EXHAUSTIVE_Q:
            d_pp = len({rdp4_eval_recursive(F, n, x) for x in F.elements()}) == F.q
            assert f_pp == d_pp, ("f_n PP verdict", n)
        f = aux_poly(n)
        for j in range(n // 2):
            assert aux_coefficient_rational(n, j) == f.coeffs[j], ("f_n coefficient", n, j)


def _moments(F, n_max, rng):
    if F.q > EXHAUSTIVE_Q:
        return
    assert verify_moments(F, CORRECTED) == [], "corrected recurrence vs brute force"
    assert verify_moments(F, AS_PRINTED), "as-printed recurrence unexpectedly matches"
    assert b_coefficients(F) == b_coefficients_expanded(F), "b formula vs expansion"
    c = c_coefficients(F, CORRECTED)
    assert c[0] == 0, "corrected c_0 != 0"
    assert oracle_lhs(F) == c, "oracle polynomial identity"


CHECKS = (
    Check("field_axioms", _field_axioms, "field axioms and table arithmetic on 10^4 random triples"),
    Check("fermat", _fermat, "x^q = x"),
    Check("parametrization", _parametrization, "y(1-y) = x with y in GF(q) u V; |V| = q"),
    Check("quadratic_preimages", _quadratic_preimages, "z(1-z) in GF(q) iff z^q in {z, 1-z}"),
    Check("evaluator_agreement", _evaluator_agreement, "coefficients = recursion = closed form = series"),
    Check("kind_combination", _kind_combination, "D_{n,3} = 3E_n - 2D_n and D_{n,2} = E_{n-1}"),
    Check("special_values", _special_values, "values at x = 1/4, 0, 1, -2"),
    Check("periodicity", _periodicity, "period q^2 - 1 away from x = 1/4"),
    Check("branch_symmetry", _branch_symmetry, "closed form invariant under y <-> 1 - y"),
    Check("parameter_scaling", _parameter_scaling, "PP status invariant under scaling"),
    Check("frobenius_power", _frobenius_power, "identity at n = p^k and non-bijectivity"),
    Check("pp_criteria", _pp_criteria, "all permutation criteria agree"),
    Check("aux_identity", _aux_identity, "auxiliary polynomial identity and PP equivalence"),
    Check("moments", _moments, "first-moment recurrence vs brute force"),
)


def run_checks(F: GF, n_max: int = 300, seed: int = 0, only=None):
    """Yield (check, error) pairs in order; error is None on success.

    Stops after the first failure.
    """
    rng = random.Random(seed)
    for check in CHECKS:
        if only and check.name not in only:
            continue
        try:
            check.run(F, n_max, rng)
        except AssertionError as exc:
            yield check, exc
            return
        yield check, None
