import pytest

from dickson4.dickson import rdp4_eval_recursive
from dickson4.errors import CriterionDisagreement, DegreeTooLarge, LengthMismatch, OddDegree
from dickson4.field import construct_field, quadratic_extension
from dickson4.permutation import (
    aux_coefficient_rational,
    aux_identity_and_equiv,
    aux_poly,
    fixed_point_tables,
    hermite_check,
    is_pp_direct,
    necessary_mod6,
    pp_report,
    pp_scan,
    two_to_one_characterization,
    two_to_one_domain,
    two_to_one_fibers,
)


def test_direct_and_hermite_on_known_maps():
    F = construct_field(7)
    identity = list(F.elements())
    square = [F.mul(x, x) for x in F.elements()]
    cube_of_5 = [F.pow(x, 5) for x in F.elements()]  # gcd(5, 6) = 1
    assert is_pp_direct(F, identity) and hermite_check(F, identity)
    assert not is_pp_direct(F, square) and not hermite_check(F, square)
    assert is_pp_direct(F, cube_of_5) and hermite_check(F, cube_of_5)
    with pytest.raises(LengthMismatch):
        is_pp_direct(F, [0, 1])
    with pytest.raises(LengthMismatch):
        hermite_check(F, [0, 1])


def test_fixed_point_tables():
    assert [fixed_point_tables(n)[0] for n in range(12)] == [-1, 1, 2, 1, -1, -2] * 2
    assert [fixed_point_tables(n)[1] for n in range(4)] == [-1, 1, -1, 1]
    F = construct_field(11)
    for n in range(60):
        fixed_point_tables(n, F)  # raises on disagreement


def test_necessary_mod6():
    assert [n for n in range(20) if necessary_mod6(n)] == [2, 8, 14]
    assert necessary_mod6("6000000000000000000002")


def test_two_to_one_domain_size():
    for pe in [(5, 1), (7, 1), (5, 2)]:
        F = construct_field(*pe)
        dom = two_to_one_domain(F)
        assert len(dom) == len(set(dom)) == 2 * F.q - 2
        assert quadratic_extension(F).half not in dom


def test_two_to_one_on_linear_case():
    # D_2 = 1 + x is a PP; f is 2-to-1 onto GF(q) minus (3*2 - 1)/4
    F = construct_field(7)
    assert two_to_one_characterization(F, 2)
    fibers = two_to_one_fibers(F, 2)
    assert len(fibers) == F.q - 1
    assert all(len(v) == 2 for v in fibers.values())
    assert not two_to_one_characterization(F, 3)
    with pytest.raises(ValueError):
        two_to_one_characterization(F, 0)


def test_aux_poly():
    assert aux_poly(2).coeffs == (5, -1)  # 3*C(2,1) - C(2,0) = 5
    assert aux_poly(4).coeffs == (11, 6, -1)
    for n in range(2, 60, 2):
        f = aux_poly(n)
        for j in range(n // 2):
            assert aux_coefficient_rational(n, j) == f.coeffs[j]
    with pytest.raises(OddDegree):
        aux_poly(5)
    with pytest.raises(DegreeTooLarge):
        aux_poly(514)
    assert aux_poly(514, n_max=None).n == 514
    with pytest.raises(ValueError):
        aux_poly(0)


@pytest.mark.parametrize("pe", [(5, 1), (7, 1), (11, 1), (5, 2)])
def test_aux_identity_and_equivalence(pe):
    F = construct_field(*pe)
    for n in range(2, 80, 2):
        identity, f_pp = aux_identity_and_equiv(F, n)
        assert identity, n
        d_pp = len({rdp4_eval_recursive(F, n, x) for x in F.elements()}) == F.q
        assert f_pp == d_pp, n


def test_pp_report_fields():
    F = construct_field(5)
    r0 = pp_report(F, 0)
    assert r0.two_to_one is None and r0.aux_equiv is None
    r3 = pp_report(F, 3)
    assert r3.two_to_one is False and r3.aux_equiv is None
    r2 = pp_report(F, 2)
    assert r2.as_record() == {
        "q": 5, "n": 2, "direct": True, "hermite": True, "mod6": True,
        "two_to_one": True, "aux_equiv": True,
    }


def test_pp_report_flags_inconsistent_values():
    # feed a bijective table for n = 4, where the other criteria say "not a PP"
    F = construct_field(5)
    with pytest.raises(CriterionDisagreement) as info:
        pp_report(F, 4, values=list(F.elements()))
    assert info.value.q == 5 and info.value.n == 4
    assert info.value.verdicts["direct"] is True


@pytest.mark.parametrize("pe", [(5, 1), (7, 1), (11, 1)])
def test_scan_matches_single_reports(pe):
    F = construct_field(*pe)
    scan = pp_scan(F, 10, 40)
    assert [r.n for r in scan] == list(range(10, 41))
    for r in scan[::7]:
        assert r == pp_report(F, r.n)


def test_scan_bounds():
    F = construct_field(5)
    with pytest.raises(ValueError):
        pp_scan(F, 5, 4)
    assert [r.n for r in pp_scan(F, 0, 0)] == [0]


def test_only_linear_degree_permutes_small_fields():
    for pe in [(5, 1), (7, 1)]:
        F = construct_field(*pe)
        assert [r.n for r in pp_scan(F, 0, F.q**2 - 1) if r.direct] == [2]
