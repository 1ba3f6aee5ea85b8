"""Reversed Dickson polynomials D_{n,k}(a, x), with the fourth kind (k = 3) in focus.

Several independent evaluation routes are provided so they can be checked
against each other:

* exact integer coefficients from the defining sum (``rdp_coeffs_exact``),
* the two-term recursion D_n = D_{n-1} - x D_{n-2} (``rdp4_eval_recursive``),
* the closed form through x = y(1 - y) in GF(q^2) (``rdp4_eval_closed``),
* the generating function (2t - 1)/(1 - t + x t^2) (``genfun_series``).

Field elements are the ints of :mod:`dickson4.field`; ``n`` may be an int or
a decimal string everywhere.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb

from .errors import DegreeTooLarge, InternalInconsistency, KindOutOfRange
from .field import GF, _as_int, parametrize_y, quadratic_extension

N_MAX = 512

# Above this many steps the recursion at x = 1/4 is shortened by a multiple
# of the period p*(p-1) of (3n-1)/2^n; below it the recursion runs in full.
RECURSION_LIMIT = 10**6


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def rdp_coeffs_exact(n, kind: int, n_max: int | None = N_MAX) -> list[int]:
    """Integer coefficients of D_{n,kind}(1, x), constant term first.

    The coefficient of x^i is (-1)^i (n - k i)/(n - i) C(n-i, i), computed as
    (-1)^i [C(n-i, i) - (k-1) C(n-1-i, i-1)], which is visibly integral.
    D_{0,k} = 2 - k.
    """
    n = _as_int(n)
    if kind not in (0, 1, 2, 3):
        raise KindOutOfRange(f"kind must be in 0..3, got {kind}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n_max is not None and n > n_max:
        raise DegreeTooLarge(f"n = {n} exceeds the exact-coefficient cap {n_max}")
    return list(_coeffs(n, kind))


@functools.lru_cache(maxsize=4096)
def _coeffs(n: int, kind: int) -> tuple[int, ...]:
    if n == 0:
        return (2 - kind,)
    out = []
    for i in range(n // 2 + 1):
        c = _binom(n - i, i) - (kind - 1) * _binom(n - 1 - i, i - 1)
        out.append(-c if i % 2 else c)
    return tuple(out)


def eval_int_poly(F: GF, coeffs, x: int) -> int:
    """Evaluate an integer-coefficient polynomial at x in GF(q) (Horner)."""
    p = F.p
    y = 0
    for c in reversed(coeffs):
        y = F.add(F.mul(y, x), c % p)
    return y


def special_value(F: GF, n) -> int:
    """(3n - 1)/2^n in GF(p), the value of D_{n,3}(1, 1/4)."""
    n = _as_int(n)
    p = F.p
    return (3 * n - 1) * pow(pow(2, n % (p - 1), p), -1, p) % p


def rdp4_sequence(F: GF, x: int, n_max: int) -> list[int]:
    """[D_{0,3}(1,x), ..., D_{n_max,3}(1,x)] from the recursion."""
    seq = [F.neg(1), 1]
    for _ in range(2, n_max + 1):
        seq.append(F.sub(seq[-1], F.mul(x, seq[-2])))
    return seq[: n_max + 1]


def rdp4_eval_recursive(F: GF, n, x: int, reduce: bool = True) -> int:
    """D_{n,3}(1, x) by the recursion seeded D_0 = -1, D_1 = 1.

    With ``reduce``, n >= q^2 - 1 is first brought into [1, q^2 - 1] when
    x != 1/4 (the sequence is periodic there). At x = 1/4 only n beyond
    RECURSION_LIMIT is shortened.
    """
    n = _as_int(n)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if reduce:
        if x != F.quarter:
            period = F.q**2 - 1
            if n >= period:
                n = (n - 1) % period + 1
        elif n > RECURSION_LIMIT:
            period = F.p * (F.p - 1)
            n = RECURSION_LIMIT - RECURSION_LIMIT % period + n % period
    if n == 0:
        return F.neg(1)
    prev, cur = F.neg(1), 1
    for _ in range(n - 1):
        prev, cur = cur, F.sub(cur, F.mul(x, prev))
    return cur


def closed_form(Q, y, n):
    """((2 - y) y^n - (y + 1)(1 - y)^n) / (2y - 1) in GF(q^2); y != 1/2.

    ``Q`` is any field object with add/sub/mul/div/pow/from_int, so the
    same routine serves alternative models of GF(q^2).
    """
    one, two = Q.from_int(1), Q.from_int(2)
    one_minus_y = Q.sub(one, y)
    left = Q.mul(Q.sub(two, y), Q.pow(y, n))
    right = Q.mul(Q.add(y, one), Q.pow(one_minus_y, n))
    return Q.div(Q.sub(left, right), Q.sub(Q.mul(two, y), one))


def rdp4_eval_closed(F: GF, n, x: int) -> int:
    """D_{n,3}(1, x) via the closed form in y, or (3n - 1)/2^n at x = 1/4."""
    n = _as_int(n)
    if x == F.quarter:
        return special_value(F, n)
    Q = quadratic_extension(F)
    z = closed_form(Q, parametrize_y(F, x), n)
    if not Q.is_base(z):
        raise InternalInconsistency(
            f"closed form left GF(q): n={n}, x={F.fmt(x)}, value={z}"
        )
    return z[0]


def rdp_eval_param(F: GF, n, a: int, x: int) -> int:
    """D_{n,3}(a, x) = a^n D_{n,3}(1, x/a^2); the a = 0 case is explicit."""
    n = _as_int(n)
    if a == 0:
        if n % 2:
            return 0
        m = n // 2
        v = F.pow(x, m)
        return v if (m + 1) % 2 == 0 else F.neg(v)
    return F.mul(F.pow(a, n), rdp4_eval_recursive(F, n, F.div(x, F.mul(a, a))))


def series_divide(F: GF, num, den, n_max: int) -> list[int]:
    """First n_max + 1 coefficients of num/den as a power series (den[0] != 0)."""
    inv0 = F.inv(den[0])
    out = []
    for k in range(n_max + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = F.sub(acc, F.mul(den[j], out[k - j]))
        out.append(F.mul(acc, inv0))
    return out


def genfun_series(F: GF, x: int, n_max: int) -> list[int]:
    """Coefficients of (2t - 1)/(1 - t + x t^2) through t^n_max."""
    return series_divide(F, [F.neg(1), 2], [1, F.neg(1), x], n_max)


@dataclass(frozen=True)
class FrobeniusIdentity:
    """Both sides of 2^(p^k) D_{p^k,3}(1,x) + 1 = 3(1 - 4x)^((p^k - 1)/2) on GF(q)."""

    k: int
    n: int
    lhs: tuple
    rhs: tuple
    values: tuple
    bijective: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def frobenius_power_identity(F: GF, k: int) -> FrobeniusIdentity:
    if not 1 <= k <= F.e:
        raise ValueError(f"k must satisfy 1 <= k <= e = {F.e}, got {k}")
    n = F.p**k
    two_n = F.pow(2, n)
    values, lhs, rhs = [], [], []
    for x in F.elements():
        d = rdp4_eval_recursive(F, n, x, reduce=False)
        values.append(d)
        lhs.append(F.add(F.mul(two_n, d), 1))
        rhs.append(F.mul(3, F.pow(F.sub(1, F.mul(4, x)), (n - 1) // 2)))
    bijective = len(set(values)) == F.q
    return FrobeniusIdentity(k, n, tuple(lhs), tuple(rhs), tuple(values), bijective)


def classical_eval(F: GF, n, kind: int, x: int) -> int:
    """D_n(1,x) (kind 0), E_n(1,x) (kind 1) or D_{n,2}(1,x) (kind 2) via y.

    With x = y(1 - y): D_n = y^n + (1-y)^n and
    E_n = (y^(n+1) - (1-y)^(n+1))/(2y - 1), with E_n(1, 1/4) = (n+1)/2^n.
    D_{n,2} = E_{n-1} for n >= 1 and D_{0,2} = 0.
    """
    n = _as_int(n)
    if kind not in (0, 1, 2):
        raise KindOutOfRange(f"classical kinds are 0..2, got {kind}")
    if kind == 2:
        return 0 if n == 0 else classical_eval(F, n - 1, 1, x)
    if x == F.quarter:
        num = 2 if kind == 0 else n + 1
        return F.div(F.from_int(num), F.pow(2, n))
    Q = quadratic_extension(F)
    y = parametrize_y(F, x)
    ybar = Q.sub(Q.one, y)
    if kind == 0:
        z = Q.add(Q.pow(y, n), Q.pow(ybar, n))
    else:
        z = Q.div(
            Q.sub(Q.pow(y, n + 1), Q.pow(ybar, n + 1)),
            Q.sub(Q.mul(Q.from_int(2), y), Q.one),
        )
    if not Q.is_base(z):
        raise InternalInconsistency(f"classical value left GF(q): {z}")
    return z[0]
