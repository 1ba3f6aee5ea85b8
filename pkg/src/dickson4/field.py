"""Finite fields GF(p^e) and the quadratic extension GF(q^2) = GF(q)[u]/(u^2 - nu).

An element of GF(q), q = p^e, is a plain int in [0, q). It encodes the
coefficient vector (c_0, ..., c_{e-1}) over GF(p) as
c_0 + c_1 p + ... + c_{e-1} p^(e-1), so the enumeration order
(constant coefficient fastest) is integer order, equality is componentwise,
and the prime subfield is {0, ..., p-1}.

Multiplication, inversion, powers and square roots go through discrete-log
tables built once per field; addition in a proper extension uses Zech
logarithms. Elements of GF(q^2) are pairs (a, b) meaning a + b*u.
"""

from __future__ import annotations

import functools
import re
from typing import Iterator, Optional, Sequence

from . import polys
from .errors import ReducibleModulus, UnsupportedCharacteristic

# Table-backed fields are built eagerly; keep to desk scale.
MAX_ORDER = 1 << 20


def _as_int(n) -> int:
    """Accept ints and decimal strings of any length."""
    if isinstance(n, bool):
        raise TypeError("expected an integer, got bool")
    if isinstance(n, int):
        return n
    if isinstance(n, str):
        s = n.strip()
        if not re.fullmatch(r"[+-]?\d+", s):
            raise ValueError(f"not a decimal integer: {n!r}")
        return int(s)
    raise TypeError(f"expected an integer, got {type(n).__name__}")


class GF:
    """The field GF(p^e) = GF(p)[X]/(modulus).

    Build instances with :func:`construct_field`, which validates the
    parameters and caches one context per (p, e, modulus).
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(modulus)
        self._order = self.q - 1
        self._build_tables()
        self.zero = 0
        self.one = 1
        self.two = 2
        self.half = self.inv(2)
        self.quarter = self.inv(4)

    def __repr__(self):
        return f"GF({self.describe()})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.e, self.modulus) == (
            other.p,
            other.e,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    # -- coefficient vectors ------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, vec: Sequence[int]) -> int:
        vec = list(vec)
        if len(vec) > self.e:
            raise ValueError(f"coefficient vector longer than e={self.e}")
        x = 0
        for c in reversed(vec):
            x = x * self.p + (c % self.p)
        return x

    def from_int(self, k) -> int:
        """Image of an integer under Z -> GF(p) -> GF(q)."""
        return _as_int(k) % self.p

    def elements(self) -> range:
        return range(self.q)

    def in_prime_field(self, x: int) -> bool:
        return 0 <= x < self.p

    def fmt(self, x: int) -> str:
        """Bare residue for e = 1, "[c0,...,c_{e-1}]" otherwise."""
        if self.e == 1:
            return str(x)
        return "[" + ",".join(str(c) for c in self.coeffs(x)) + "]"

    def describe(self) -> str:
        return f"p={self.p},e={self.e},mod=[{','.join(map(str, self.modulus))}]"

    # -- tables -----------------------------------------------------------

    def _poly_mulmod(self, a: int, b: int) -> int:
        prod = polys.mulmod(self.coeffs(a), self.coeffs(b), self.modulus, self.p)
        return self.from_coeffs(prod)

    def _find_generator(self) -> int:
        factors = polys.prime_factors(self._order)
        for g in range(2, self.q):
            gv = self.coeffs(g)
            if all(
                polys.powmod(gv, self._order // r, self.modulus, self.p) != [1]
                for r in factors
            ):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _build_tables(self) -> None:
        q, order = self.q, self._order
        self.generator = g = self._find_generator()
        exp = [0] * order
        log = [-1] * q
        x = 1
        for k in range(order):
            exp[k] = x
            log[x] = k
            x = x * g % self.p if self.e == 1 else self._poly_mulmod(x, g)
        self._exp = exp
        self._log = log
        if self.e > 1:
            p = self.p
            # zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0
            zech = [-1] * order
            for k in range(order):
                v = exp[k]
                c0 = v % p
                w = v - c0 + (c0 + 1) % p
                zech[k] = log[w] if w else -1
            self._zech = zech
            half_order = order // 2
            self._neg = [0] + [exp[(log[a] + half_order) % order] for a in range(1, q)]

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self._order]
        if z < 0:
            return 0
        return self._exp[(la + z) % self._order]

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self._order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[-self._log[a] % self._order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, m) -> int:
        """a^m for any nonnegative integer m; 0^0 = 1."""
        m = _as_int(m)
        if m < 0:
            return self.pow(self.inv(a), -m)
        if m == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[self._log[a] * (m % self._order) % self._order]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def sum(self, values) -> int:
        if self.e == 1:
            return sum(values) % self.p
        s = 0
        for v in values:
            s = self.add(s, v)
        return s

    def is_square(self, a: int) -> bool:
        return a == 0 or self._log[a] % 2 == 0

    def sqrt(self, a: int) -> Optional[int]:
        """A square root of a, or None. Of the two roots the one that comes
        first in enumeration order is returned."""
        if a == 0:
            return 0
        k = self._log[a]
        if k % 2:
            return None
        r = self._exp[k // 2]
        return min(r, self.neg(r))

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        k = self._log[a]
        from math import gcd

        return self._order // gcd(k, self._order)


def least_irreducible(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible of degree e in enumeration order.

    Candidates X^e + c_{e-1} X^(e-1) + ... + c_0 are ordered by the integer
    c_0 + c_1 p + ... (constant coefficient varies fastest).
    """
    if e == 1:
        return (0, 1)
    for k in range(p**e):
        low = []
        for _ in range(e):
            k, r = divmod(k, p)
            low.append(r)
        f = low + [1]
        if polys.is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {e} over GF({p})")


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, e: int, modulus: tuple[int, ...]) -> GF:
    return GF(p, e, modulus)


def construct_field(p, e=1, modulus: Optional[Sequence[int]] = None) -> GF:
    """Build (or fetch from cache) the context for GF(p^e).

    ``modulus`` is a monic degree-e coefficient list, constant term first.
    When omitted, :func:`least_irreducible` picks one.
    """
    p, e = _as_int(p), _as_int(e)
    if not polys.is_prime(p) or p <= 3:
        raise UnsupportedCharacteristic(f"p must be a prime > 3, got {p}")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    if p**e > MAX_ORDER:
        raise ValueError(f"q = {p}^{e} exceeds the supported size {MAX_ORDER}")
    if modulus is None:
        mod = least_irreducible(p, e)
    else:
        mod = tuple(_as_int(c) % p for c in modulus)
        if len(mod) != e + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {e}: {list(modulus)}")
        if not polys.is_irreducible(list(mod), p):
            raise ReducibleModulus(f"{list(mod)} is reducible over GF({p})")
    return _cached_field(p, e, mod)


_DESCRIPTOR = re.compile(r"\s*p=(\d+),e=(\d+)(?:,mod=\[([\d,\s]*)\])?\s*")


def parse_field(descriptor: str) -> GF:
    """Inverse of ``GF.describe``: "p=5,e=2,mod=[2,0,1]"."""
    m = _DESCRIPTOR.fullmatch(descriptor)
    if not m:
        raise ValueError(f"bad field descriptor: {descriptor!r}")
    p, e, mod = m.groups()
    modulus = [int(c) for c in mod.split(",") if c.strip()] if mod is not None else None
    return construct_field(int(p), int(e), modulus)


class QuadExt:
    """GF(q^2) modelled as GF(q)[u]/(u^2 - nu), nu the first non-square of GF(q).

    Elements are pairs (a, b) = a + b*u with a, b elements of ``base``.
    Enumeration order is by a + b*q.
    """

    def __init__(self, base: GF):
        self.base = base
        self.q = base.q**2
        self.nu = next(x for x in base.elements() if not base.is_square(x))
        self.zero = (0, 0)
        self.one = (1, 0)
        self.half = (base.half, 0)
        self.u = (0, 1)

    def __repr__(self):
        return f"QuadExt({self.base.describe()}, nu={self.base.fmt(self.nu)})"

    def embed(self, x: int) -> tuple[int, int]:
        return (x, 0)

    def from_int(self, k) -> tuple[int, int]:
        return (self.base.from_int(k), 0)

    def is_base(self, z) -> bool:
        return z[1] == 0

    def to_base(self, z) -> int:
        if z[1] != 0:
            raise ValueError(f"{z} is not in the base field")
        return z[0]

    def index(self, z) -> int:
        return z[0] + z[1] * self.base.q

    def elements(self) -> Iterator[tuple[int, int]]:
        for b in self.base.elements():
            for a in self.base.elements():
                yield (a, b)

    def add(self, z, w):
        F = self.base
        return (F.add(z[0], w[0]), F.add(z[1], w[1]))

    def sub(self, z, w):
        F = self.base
        return (F.sub(z[0], w[0]), F.sub(z[1], w[1]))

    def neg(self, z):
        F = self.base
        return (F.neg(z[0]), F.neg(z[1]))

    def mul(self, z, w):
        F = self.base
        a, b = z
        c, d = w
        if b == 0 and d == 0:
            return (F.mul(a, c), 0)
        re_ = F.add(F.mul(a, c), F.mul(self.nu, F.mul(b, d)))
        im = F.add(F.mul(a, d), F.mul(b, c))
        return (re_, im)

    def inv(self, z):
        F = self.base
        a, b = z
        if b == 0:
            return (F.inv(a), 0)
        norm = F.sub(F.mul(a, a), F.mul(self.nu, F.mul(b, b)))
        ninv = F.inv(norm)
        return (F.mul(a, ninv), F.neg(F.mul(b, ninv)))

    def div(self, z, w):
        return self.mul(z, self.inv(w))

    def pow(self, z, m):
        """z^m by square-and-multiply; exponents reduce mod q^2 - 1 for z != 0."""
        m = _as_int(m)
        if m < 0:
            return self.pow(self.inv(z), -m)
        if m == 0:
            return self.one
        if z == self.zero:
            return self.zero
        if z[1] == 0:
            return (self.base.pow(z[0], m), 0)
        m %= self.q - 1
        result = self.one
        base = z
        while m:
            if m & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            m >>= 1
        return result

    def frobenius(self, z):
        """z^q."""
        return self.pow(z, self.base.q)

    def sqrt_base(self, x: int) -> tuple[int, int]:
        """A square root in GF(q^2) of the base element x (one always exists).

        Uses the base-field root when there is one; otherwise x/nu is a square
        s^2 in GF(q) and (s*u)^2 = x. The root earlier in enumeration order
        is returned.
        """
        F = self.base
        r = F.sqrt(x)
        if r is not None:
            return (r, 0)
        s = F.sqrt(F.div(x, self.nu))
        if s is None:
            raise AssertionError("x/nu must be a square when x is not")
        return (0, min(s, F.neg(s)))


@functools.lru_cache(maxsize=None)
def quadratic_extension(base: GF) -> QuadExt:
    return QuadExt(base)


def parametrize_y(base: GF, x: int) -> tuple[int, int]:
    """y in GF(q^2) with y(1 - y) = x, as y = (1 + u)/2 where u^2 = 1 - 4x.

    u is the canonical square root (base field when possible), so the result
    is deterministic; the other solution is 1 - y.
    """
    Q = quadratic_extension(base)
    F = base
    disc = F.sub(1, F.mul(4, x))
    u = Q.sqrt_base(disc)
    return Q.mul(Q.add(Q.one, u), Q.half)


def build_V(base: GF, method: str = "solve") -> tuple[tuple[int, int], ...]:
    """The set {z in GF(q^2) : z^q = 1 - z}, in enumeration order.

    ``solve`` computes w = u^q once and solves the GF(q)-linear condition
    on (a, b): frob(a + b u) = a + b w. ``filter`` tests all q^2 elements.
    """
    Q = quadratic_extension(base)
    F = base
    if method == "filter":
        return tuple(z for z in Q.elements() if Q.frobenius(z) == Q.sub(Q.one, z))
    if method != "solve":
        raise ValueError(f"unknown method {method!r}")
    w0, w1 = Q.frobenius(Q.u)
    out = []
    for b in F.elements():
        # a + b*w0 = 1 - a  and  b*w1 = -b
        if F.mul(b, F.add(w1, 1)) != 0:
            continue
        a = F.mul(F.sub(1, F.mul(b, w0)), F.half)
        out.append((a, b))
    return tuple(sorted(out, key=Q.index))


def direct_square_model(base: GF):
    """GF(q^2) built directly as GF(p)[X]/(g), deg g = 2e, plus an embedding of ``base``.

    The embedding sends X (mod the base modulus) to a root of that modulus in
    the big field, found by search. Used to check that results do not depend
    on the u^2 - nu model.
    """
    big = construct_field(base.p, 2 * base.e)
    mod = list(base.modulus)
    theta = next(z for z in big.elements() if _eval_over(big, mod, z) == 0)
    images = [1]
    for _ in range(1, base.e):
        images.append(big.mul(images[-1], theta))

    def embed(x: int) -> int:
        out = 0
        for c, t in zip(base.coeffs(x), images):
            out = big.add(out, big.mul(c, t))
        return out

    return big, embed


def _eval_over(F: GF, coeffs, z: int) -> int:
    y = 0
    for c in reversed(coeffs):
        y = F.add(F.mul(y, z), c % F.p)
    return y
