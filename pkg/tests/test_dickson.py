import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dickson4.dickson import (
    N_MAX,
    classical_eval,
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
from dickson4.errors import DegreeTooLarge, KindOutOfRange
from dickson4.field import construct_field


def weight_coeffs(n, k):
    # the definition itself, in exact rationals
    if n == 0:
        return [2 - k]
    return [int(Fraction(n - k * i, n - i) * comb(n - i, i) * (-1) ** i) for i in range(n // 2 + 1)]


def test_coefficient_examples():
    assert rdp_coeffs_exact(4, 3) == [1, -1, -1]
    assert rdp_coeffs_exact(6, 3) == [1, -3, 0, 1]
    assert rdp_coeffs_exact(0, 3) == [-1]
    assert rdp_coeffs_exact(0, 0) == [2]
    assert rdp_coeffs_exact(1, 3) == [1]


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_coefficients_match_definition(k):
    for n in range(0, 120):
        assert rdp_coeffs_exact(n, k) == weight_coeffs(n, k), (n, k)


def test_coefficient_errors():
    with pytest.raises(KindOutOfRange):
        rdp_coeffs_exact(4, 4)
    with pytest.raises(DegreeTooLarge):
        rdp_coeffs_exact(N_MAX + 1, 3)
    assert len(rdp_coeffs_exact(N_MAX + 2, 3, n_max=None)) == N_MAX // 2 + 2
    with pytest.raises(ValueError):
        rdp_coeffs_exact(-1, 3)


def test_frozen_values():
    F5 = construct_field(5)
    assert [rdp4_eval_recursive(F5, 8, x) for x in range(5)] == [1, 2, 1, 4, 3]
    assert rdp4_eval_recursive(construct_field(7), 10, 2) == 4
    # D_4 = 1 - x - x^2 at x = 3 in F_5: 1 - 3 - 9 = -11 = 4
    assert eval_int_poly(F5, rdp_coeffs_exact(4, 3), 3) == 4


@pytest.mark.parametrize("pe", [(5, 1), (7, 1), (5, 2), (7, 2)])
def test_evaluators_agree(pe):
    F = construct_field(*pe)
    for x in F.elements():
        seq = rdp4_sequence(F, x, 80)
        assert genfun_series(F, x, 80) == seq
        for n in range(81):
            assert rdp4_eval_closed(F, n, x) == seq[n]
            assert rdp4_eval_recursive(F, n, x) == seq[n]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(5, 1), (7, 1), (11, 1), (5, 2)]), st.integers(1, 10**30), st.data())
def test_huge_n_reduction(pe, n, data):
    F = construct_field(*pe)
    x = data.draw(st.integers(0, F.q - 1))
    # closed form uses pow with the raw exponent; the recursion reduces n first
    assert rdp4_eval_recursive(F, n, x) == rdp4_eval_closed(F, n, x)
    assert rdp4_eval_recursive(F, str(n), x) == rdp4_eval_recursive(F, n, x)


def test_special_value_huge_n():
    F = construct_field(7)
    for n in (10**6 + 1, 10**6 + 123, 3 * 10**6 + 5):
        want = F.div(F.from_int(3 * n - 1), F.pow(2, n))
        assert special_value(F, n) == want
        assert rdp4_eval_recursive(F, n, F.quarter) == want
    n = 10**6 + 17
    assert rdp4_eval_recursive(F, n, F.quarter) == rdp4_eval_recursive(F, n, F.quarter, reduce=False)


def test_quarter_is_not_periodic():
    F = construct_field(5)
    period = 24
    assert rdp4_eval_recursive(F, 1, F.quarter) != rdp4_eval_recursive(F, 1 + period, F.quarter)


def test_kind_combination_and_kind_two():
    rng = random.Random(0)
    for pe in [(5, 1), (7, 1), (5, 2)]:
        F = construct_field(*pe)
        for _ in range(200):
            n, x = rng.randrange(0, 100), rng.randrange(F.q)
            want = F.sub(F.mul(3, classical_eval(F, n, 1, x)), F.mul(2, classical_eval(F, n, 0, x)))
            assert rdp4_eval_recursive(F, n, x) == want
            for k in (0, 1, 2):
                coeffs = [c % F.p for c in weight_coeffs(n, k)]
                assert classical_eval(F, n, k, x) == eval_int_poly(F, coeffs, x), (n, k, x)
    with pytest.raises(KindOutOfRange):
        classical_eval(construct_field(5), 3, 3, 1)


def test_parameter_a():
    F = construct_field(7)
    for n in range(0, 20):
        for x in F.elements():
            assert rdp_eval_param(F, n, 1, x) == rdp4_eval_recursive(F, n, x)
            for a in range(1, 7):
                # direct recursion in the two-parameter form: D_n = a D_{n-1} - x D_{n-2}
                prev, cur = F.neg(1), a
                for _ in range(n - 1):
                    prev, cur = cur, F.sub(F.mul(a, cur), F.mul(x, prev))
                want = F.neg(1) if n == 0 else cur
                assert rdp_eval_param(F, n, a, x) == want, (n, a, x)
    # a = 0: odd n vanish, even n give (-1)^(n/2 + 1) x^(n/2)
    assert rdp_eval_param(F, 5, 0, 3) == 0
    assert rdp_eval_param(F, 4, 0, 3) == F.neg(F.pow(3, 2))
    assert rdp_eval_param(F, 2, 0, 3) == 3


@pytest.mark.parametrize("pe", [(5, 1), (5, 2), (7, 1), (11, 1)])
def test_frobenius_power_identity(pe):
    F = construct_field(*pe)
    for k in range(1, F.e + 1):
        ident = frobenius_power_identity(F, k)
        assert ident.n == F.p**k
        assert ident.holds
        assert not ident.bijective
    with pytest.raises(ValueError):
        frobenius_power_identity(F, F.e + 1)
