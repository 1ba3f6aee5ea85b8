"""Permutation criteria for x -> D_{n,3}(1, x) over GF(q).

Each criterion is exact and computed independently:

* direct bijection check on the value table,
* Hermite's moment criterion,
* the necessary condition n = 2 (mod 6),
* the 2-to-1 characterization of y -> f(y) on (GF(q) u V) minus {1/2},
* the auxiliary polynomial f_n with 2^n D_{n,3}(1, x) = f_n(1 - 4x) (even n).

``pp_scan`` runs all of them for a range of n and raises on any disagreement.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .dickson import closed_form, eval_int_poly, rdp4_eval_recursive, special_value
from .errors import (
    CriterionDisagreement,
    DegreeTooLarge,
    InternalInconsistency,
    LengthMismatch,
    OddDegree,
)
from .field import GF, _as_int, build_V, quadratic_extension

AUX_N_MAX = 512


@dataclass(frozen=True)
class PPReport:
    q: int
    n: int
    direct: bool
    hermite: bool
    mod6_necessary: bool
    two_to_one: Optional[bool]
    aux_equiv: Optional[bool]
    value_table: tuple

    FIELDS = ("q", "n", "direct", "hermite", "mod6", "two_to_one", "aux_equiv")

    def as_record(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "direct": self.direct,
            "hermite": self.hermite,
            "mod6": self.mod6_necessary,
            "two_to_one": self.two_to_one,
            "aux_equiv": self.aux_equiv,
        }


def _check_length(F: GF, values: Sequence[int]) -> None:
    if len(values) != F.q:
        raise LengthMismatch(f"expected {F.q} values, got {len(values)}")


def is_pp_direct(F: GF, values: Sequence[int]) -> bool:
    """True iff the q values are pairwise distinct."""
    _check_length(F, values)
    ordered = sorted(values)
    return all(a != b for a, b in zip(ordered, ordered[1:]))


def hermite_check(F: GF, values: Sequence[int]) -> bool:
    """Hermite's criterion: sum f(a)^i = 0 for 0 <= i <= q-2 and = -1 for i = q-1."""
    _check_length(F, values)
    powers = [1] * F.q
    minus_one = F.neg(1)
    for i in range(F.q):
        target = minus_one if i == F.q - 1 else 0
        if F.sum(powers) != target:
            return False
        if i < F.q - 1:
            powers = [F.mul(a, v) for a, v in zip(powers, values)]
    return True


def necessary_mod6(n) -> bool:
    return _as_int(n) % 6 == 2


_AT_ONE = {0: -1, 1: 1, 2: 2, 3: 1, 4: -1, 5: -2}


def fixed_point_tables(n, F: Optional[GF] = None) -> tuple[int, int]:
    """(D_{n,3}(1, 1), D_{n,3}(1, -2)) as small integers, periods 6 and 2.

    With a field given, both entries are checked against the recursion.
    """
    n = _as_int(n)
    pair = (_AT_ONE[n % 6], 1 if n % 2 else -1)
    if F is not None:
        got = (
            rdp4_eval_recursive(F, n, 1),
            rdp4_eval_recursive(F, n, F.neg(2)),
        )
        want = (F.from_int(pair[0]), F.from_int(pair[1]))
        if got != want:
            raise InternalInconsistency(f"periodic tables disagree at n={n}: {got} vs {want}")
    return pair


def two_to_one_domain(F: GF) -> list:
    """(GF(q) u V) minus {1/2} as elements of GF(q^2), size 2q - 2."""
    Q = quadratic_extension(F)
    half = Q.half
    dom = [Q.embed(x) for x in F.elements() if Q.embed(x) != half]
    dom += [z for z in build_V(F) if z != half]
    return dom


def two_to_one_fibers(F: GF, n) -> dict:
    """Fibers of f(y) = ((2-y)y^n - (y+1)(1-y)^n)/(2y-1) on the 2-to-1 domain."""
    n = _as_int(n)
    Q = quadratic_extension(F)
    fibers = defaultdict(list)
    for y in two_to_one_domain(F):
        z = closed_form(Q, y, n)
        if not Q.is_base(z):
            raise InternalInconsistency(f"f(y) left GF(q): n={n}, y={y}, f={z}")
        fibers[z[0]].append(y)
    return dict(fibers)


def two_to_one_characterization(F: GF, n) -> bool:
    """True iff f is exactly 2-to-1 on its domain and never hits (3n-1)/2^n."""
    n = _as_int(n)
    if n < 1:
        raise ValueError("the 2-to-1 characterization needs n >= 1")
    fibers = two_to_one_fibers(F, n)
    if special_value(F, n) in fibers:
        return False
    return all(len(ys) == 2 for ys in fibers.values())


@dataclass(frozen=True)
class AuxPoly:
    """f_n(x) = -x^(n/2) + sum_j (3C(n,2j+1) - C(n,2j)) x^j, integer coefficients."""

    n: int
    coeffs: tuple

    def __call__(self, F: GF, x: int) -> int:
        return eval_int_poly(F, self.coeffs, x)


def aux_coefficient_rational(n: int, j: int) -> Fraction:
    """(3n - 8j - 1)/(n + 1) * C(n+1, 2j+1), the defining form of the j-th coefficient."""
    return Fraction(3 * n - 8 * j - 1, n + 1) * comb(n + 1, 2 * j + 1)


def aux_poly(n, n_max: Optional[int] = AUX_N_MAX) -> AuxPoly:
    n = _as_int(n)
    if n % 2:
        raise OddDegree(f"f_n needs even n, got {n}")
    if n < 2:
        raise ValueError(f"f_n needs n >= 2, got {n}")
    if n_max is not None and n > n_max:
        raise DegreeTooLarge(f"n = {n} exceeds the cap {n_max}")
    half = n // 2
    coeffs = [3 * comb(n, 2 * j + 1) - comb(n, 2 * j) for j in range(half)]
    coeffs.append(-1)
    return AuxPoly(n, tuple(coeffs))


def aux_identity_and_equiv(F: GF, n, n_max: Optional[int] = AUX_N_MAX) -> tuple[bool, bool]:
    """(2^n D_{n,3}(1,x) == f_n(1-4x) for all x, f_n is a PP of GF(q))."""
    f = aux_poly(n, n_max)
    n = f.n
    two_n = F.pow(2, n)
    identity = all(
        F.mul(two_n, rdp4_eval_recursive(F, n, x)) == f(F, F.sub(1, F.mul(4, x)))
        for x in F.elements()
    )
    return identity, aux_is_pp(F, f)


def aux_is_pp(F: GF, f: AuxPoly) -> bool:
    return is_pp_direct(F, [f(F, z) for z in F.elements()])


def pp_report(F: GF, n, values: Optional[Sequence[int]] = None) -> PPReport:
    """All criteria for one n. Raises CriterionDisagreement on any mismatch."""
    n = _as_int(n)
    if values is None:
        values = [rdp4_eval_recursive(F, n, x) for x in F.elements()]
    values = tuple(values)
    direct = is_pp_direct(F, values)
    hermite = hermite_check(F, values)
    mod6 = necessary_mod6(n)
    two = two_to_one_characterization(F, n) if n >= 1 else None
    aux = None
    if n >= 2 and n % 2 == 0:
        aux = aux_is_pp(F, aux_poly(n, n_max=None))
    verdicts = {"direct": direct, "hermite": hermite, "two_to_one": two, "aux_equiv": aux}
    if any(v is not None and v != direct for v in verdicts.values()) or (direct and not mod6):
        verdicts["mod6"] = mod6
        raise CriterionDisagreement(F.q, n, verdicts)
    return PPReport(F.q, n, direct, hermite, mod6, two, aux, values)


def pp_scan(F: GF, n_lo, n_hi) -> list[PPReport]:
    """One PPReport per n in [n_lo, n_hi], in order of n."""
    n_lo, n_hi = _as_int(n_lo), _as_int(n_hi)
    if not 0 <= n_lo <= n_hi:
        raise ValueError(f"need 0 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")
    xs = list(F.elements())
    prev = [F.neg(1)] * len(xs)
    cur = [1] * len(xs)
    reports = []
    for n in range(0, n_hi + 1):
        if n == 0:
            values = prev
        elif n > 1:
            prev, cur = cur, [F.sub(c, F.mul(x, d)) for x, c, d in zip(xs, cur, prev)]
            values = cur
        else:
            values = cur
        if n >= n_lo:
            reports.append(pp_report(F, n, values))
    return reports
