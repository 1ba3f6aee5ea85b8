"""First moments a_n = sum_{x in GF(q)} D_{n,3}(1, x) for 1 <= n <= q^2 - 1.

The recurrence route works with prime-field polynomials in a formal
variable t:

    (t^q - t^(q-1) - 1) * sum_n d_n t^n = sum_i c_i t^i,    d_n = a_n - (3n-1)/2^n,

where the right-hand side is built from the b-coefficients of
-1 - (t - t^q)^(q-1). Comparing coefficients gives d_n family by family.

Two constant conventions exist for that right-hand side. ``as_printed``
uses the factor (3t - 2) in its first summand, which counts the n = 0 term
of the generating function as +1. ``corrected`` uses t there, matching
D_{0,3}(1, x) = -1; only the corrected one reproduces the brute-force sums.
The two differ by 2 (t^q - t^(q-1) - 1)(t^(q^2-1) - 1).

All arithmetic here is over GF(p) with residues as plain ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import polys
from .dickson import rdp4_eval_recursive, rdp4_sequence, special_value
from .errors import IndexCoverageError
from .field import GF, _as_int

AS_PRINTED = "as_printed"
CORRECTED = "corrected"
CONVENTIONS = (CORRECTED, AS_PRINTED)


def _convention(name: str) -> str:
    name = name.replace("-", "_")
    if name not in CONVENTIONS:
        raise ValueError(f"unknown convention {name!r}; expected one of {CONVENTIONS}")
    return name


def power_sums(F: GF) -> list[int]:
    """[sum_u u^k for k in 0..q-1], by brute force over GF(q)."""
    return [F.sum(F.pow(u, k) for u in F.elements()) for k in range(F.q)]


def b_coefficients(F: GF) -> list[int]:
    """b_0..b_{q^2-q} from the closed formula, as residues mod p.

    With i = alpha + beta*q: (-1)^(beta+1) C(q-1, beta) when alpha + beta = q-1,
    -1 when alpha = beta = 0, and 0 otherwise.
    """
    q, p = F.q, F.p
    out = []
    for i in range(q * q - q + 1):
        beta, alpha = divmod(i, q)
        if alpha + beta == q - 1:
            v = (-1) ** (beta + 1) * comb(q - 1, beta)
        elif alpha == 0 and beta == 0:
            v = -1
        else:
            v = 0
        out.append(v % p)
    return out


def b_coefficients_expanded(F: GF) -> list[int]:
    """-1 - (t - t^q)^(q-1) by repeated polynomial multiplication, padded to q^2-q+1."""
    q, p = F.q, F.p
    base = [0] * (q + 1)
    base[1] = 1
    base[q] = p - 1
    poly = polys.power(base, q - 1, p)
    poly = polys.sub([p - 1], poly, p)
    return poly + [0] * (q * q - q + 1 - len(poly))


def _pad(a: list[int], length: int) -> list[int]:
    return a + [0] * (length - len(a))


def rhs_factors(F: GF) -> dict:
    """The ingredient polynomials of the c-coefficient expression, over GF(p)."""
    q, p = F.q, F.p
    inv4 = pow(4, -1, p)
    P = _pad([p - 1], q + 1)
    P[q - 1] = p - 1
    P[q] = 1
    ones = [1] * (q * q - 1)
    tail = [0] * (2 * (q - 1)) + [1]
    t_minus_1 = [p - 1, 1]
    for k in range(1, q):
        term = polys.shift(polys.power(t_minus_1, q - 1 - k, p), 2 * k)
        tail = polys.add(tail, polys.scale(term, pow(inv4, k, p), p), p)
    return {"P": polys.trim(P), "ones": ones, "tail": tail, "b": b_coefficients(F)}


def c_coefficients(F: GF, convention: str = CORRECTED) -> list[int]:
    """c_0..c_{q^2+q-1} of

        -(t^q - t^(q-1) - 1) * L(t) * sum_{i=0}^{q^2-2} t^i
        - (2t - 1)(t^(2(q-1)) + sum_{k=1}^{q-1} (t-1)^(q-1-k) t^(2k) 4^(-k)) * sum_i b_i t^i

    with L(t) = 3t - 2 (as_printed) or L(t) = t (corrected).
    """
    convention = _convention(convention)
    q, p = F.q, F.p
    f = rhs_factors(F)
    lead = [p - 2, 3] if convention == AS_PRINTED else [0, 1]
    first = polys.mul(polys.mul(f["P"], lead, p), f["ones"], p)
    second = polys.mul(polys.mul([p - 1, 2], f["tail"], p), f["b"], p)
    c = polys.neg(polys.add(first, second, p), p)
    size = q * q + q
    if len(c) > size:
        raise AssertionError(f"right-hand side degree {len(c) - 1} exceeds {size - 1}")
    return _pad(c, size)


@dataclass(frozen=True)
class MomentTable:
    """Recurrence output for one field and convention.

    ``d`` and ``a`` are indexed by n with entry 0 unused (None); ``c`` is
    indexed 0..q^2+q-1. Every value is a residue mod p.
    """

    q: int
    p: int
    convention: str
    b: tuple
    c: tuple
    d: tuple
    a: tuple


def moment_table(F: GF, convention: str = CORRECTED) -> MomentTable:
    convention = _convention(convention)
    q, p = F.q, F.p
    b = b_coefficients(F)
    c = c_coefficients(F, convention)
    top = q * q - 1
    d = [None] * (top + 1)
    hits = [0] * (top + 1)

    def put(n, value):
        d[n] = value % p
        hits[n] += 1

    for j in range(1, q):
        put(j, -c[j])
    put(q, c[1] - c[q])
    for ell in range(1, q - 1):
        if ell >= 2:
            n0 = (ell - 1) * q
            put(ell * q, d[n0] - d[n0 + 1] - c[ell * q])
        for j in range(1, q):
            n0 = (ell - 1) * q + j
            put(ell * q + j, d[n0] - d[n0 + 1] - c[ell * q + j])
    for j in range(q):
        put(q * q - q + j, sum(c[q * q + i] for i in range(j, q)))

    bad = [n for n in range(1, top + 1) if hits[n] != 1]
    if bad:
        raise IndexCoverageError(f"indices not assigned exactly once: {bad[:10]}")
    a = [None] + [(d[n] + special_value(F, n)) % p for n in range(1, top + 1)]
    return MomentTable(q, p, convention, tuple(b), tuple(c), tuple(d), tuple(a))


def first_moment_bruteforce(F: GF, n) -> int:
    """sum over x in GF(q) of D_{n,3}(1, x), by direct evaluation."""
    n = _as_int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return F.sum(rdp4_eval_recursive(F, n, x) for x in F.elements())


def first_moments_bruteforce(F: GF, n_max: int) -> list:
    """[None, a_1, ..., a_{n_max}] by direct evaluation, one recursion per x."""
    totals = [0] * (n_max + 1)
    for x in F.elements():
        for n, v in enumerate(rdp4_sequence(F, x, n_max)):
            totals[n] = F.add(totals[n], v)
    return [None] + totals[1:]


@dataclass(frozen=True)
class Divergence:
    n: int
    recurrence: int
    oracle: int

    @property
    def difference(self) -> int:
        return self.recurrence - self.oracle


def _as_residue(F: GF, v: int) -> int:
    if not F.in_prime_field(v):
        raise AssertionError(f"first moment {F.fmt(v)} is not in the prime field")
    return v


def verify_moments(F: GF, convention: str = CORRECTED) -> list[Divergence]:
    """Every n in [1, q^2-1] where the recurrence disagrees with brute force."""
    table = moment_table(F, convention)
    top = F.q**2 - 1
    oracle = first_moments_bruteforce(F, top)
    out = []
    for n in range(1, top + 1):
        o = _as_residue(F, oracle[n])
        if table.a[n] != o:
            out.append(Divergence(n, table.a[n], o))
    return out


def oracle_d(F: GF) -> list:
    """[None, d_1, ..., d_{q^2-1}] with d_n = a_n - (3n-1)/2^n from brute force."""
    p = F.p
    top = F.q**2 - 1
    oracle = first_moments_bruteforce(F, top)
    return [None] + [(_as_residue(F, oracle[n]) - special_value(F, n)) % p for n in range(1, top + 1)]


def oracle_lhs(F: GF) -> list[int]:
    """(t^q - t^(q-1) - 1) * sum_n d_n t^n with d from brute force, padded like c."""
    q, p = F.q, F.p
    d = oracle_d(F)
    series = [0] + d[1:]
    P = [p - 1] + [0] * (q - 2) + [p - 1, 1]
    return _pad(polys.mul(P, series, p), q * q + q)
