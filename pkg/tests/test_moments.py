import pytest

from dickson4.dickson import rdp4_eval_closed
from dickson4.field import construct_field
from dickson4.moments import (
    AS_PRINTED,
    CORRECTED,
    b_coefficients,
    b_coefficients_expanded,
    c_coefficients,
    first_moment_bruteforce,
    first_moments_bruteforce,
    moment_table,
    oracle_d,
    power_sums,
    verify_moments,
)

QS = [(5, 1), (7, 1), (11, 1), (5, 2)]


def test_power_sums():
    for pe in [(5, 1), (7, 1), (5, 2)]:
        F = construct_field(*pe)
        sums = power_sums(F)
        # vanishes for 0 <= k < q - 1 (k = 0 counts q ones), -1 at k = q - 1
        assert sums[: F.q - 1] == [0] * (F.q - 1)
        assert sums[F.q - 1] == F.neg(1)


def test_b_coefficients_q5():
    F = construct_field(5)
    b = b_coefficients(F)
    assert len(b) == 21
    assert {i for i, v in enumerate(b) if v} == {0, 4, 8, 12, 16, 20}
    assert b == b_coefficients_expanded(F)


def test_c_coefficients_q5_frozen():
    F = construct_field(5)
    assert c_coefficients(F, CORRECTED)[:6] == [0, 1, 0, 1, 1, 3]
    assert c_coefficients(F, AS_PRINTED)[:6] == [3, 1, 0, 1, 4, 0]
    assert len(c_coefficients(F)) == 30
    assert c_coefficients(F, "as-printed") == c_coefficients(F, AS_PRINTED)


def test_unknown_convention():
    with pytest.raises(ValueError):
        c_coefficients(construct_field(5), "printed")


def test_as_printed_divergences_q5():
    F = construct_field(5)
    div = verify_moments(F, AS_PRINTED)
    assert [(d.n, d.recurrence, d.oracle) for d in div[:3]] == [(4, 2, 0), (5, 3, 0), (8, 4, 1)]
    assert div[0].difference == 2


@pytest.mark.parametrize("pe", QS)
def test_corrected_matches_closed_form_sums(pe):
    # oracle independent of the recursion: sum the closed form over the field
    F = construct_field(*pe)
    table = moment_table(F, CORRECTED)
    for n in range(1, F.q**2):
        total = F.sum(rdp4_eval_closed(F, n, x) for x in F.elements())
        assert table.a[n] == total, n


@pytest.mark.parametrize("pe", QS)
def test_collapsed_first_moment_formulas(pe):
    # the per-family formulas with (3n-1)/2^n already folded in
    F = construct_field(*pe)
    q, p = F.q, F.p
    c = c_coefficients(F, CORRECTED)
    a = first_moments_bruteforce(F, q * q - 1)
    inv2 = pow(2, -1, p)

    def over_2(num, k):
        return num * pow(inv2, k, p) % p

    for j in range(1, q):
        assert a[j] == (-c[j] + over_2(3 * j - 1, j)) % p
    assert a[q] == (c[1] - c[q] - inv2) % p
    for ell in range(1, q - 1):
        for j in range(1, q):
            n0 = (ell - 1) * q + j
            want = a[n0] - a[n0 + 1] - c[ell * q + j] + over_2(3, ell + j)
            assert a[ell * q + j] == want % p, (ell, j)
        if ell >= 2:
            n0 = (ell - 1) * q
            assert a[ell * q] == (a[n0] - a[n0 + 1] - c[ell * q] + over_2(3, ell)) % p, ell
    for j in range(q):
        want = sum(c[q * q + i] for i in range(j, q)) + over_2(3 * j - 1, j)
        assert a[q * q - q + j] == want % p, j


def test_table_shape():
    F = construct_field(7)
    t = moment_table(F)
    assert t.convention == CORRECTED
    assert t.a[0] is None and t.d[0] is None
    assert len(t.a) == len(t.d) == 49
    assert list(t.d[1:]) == oracle_d(F)[1:]


def test_bruteforce_single_and_batch_agree():
    F = construct_field(7)
    batch = first_moments_bruteforce(F, 48)
    for n in (1, 2, 6, 7, 30, 48):
        assert first_moment_bruteforce(F, n) == batch[n]
    # n beyond q^2 - 1 folds back by periodicity away from 1/4 only
    assert first_moment_bruteforce(F, "1000") == F.sum(
        rdp4_eval_closed(F, 1000, x) for x in F.elements()
    )
    with pytest.raises(ValueError):
        first_moment_bruteforce(F, 0)
