"""Dense polynomials over GF(p) as plain coefficient lists.

The polynomial a_0 + a_1 X + ... + a_n X^n is the list [a_0, ..., a_n] of
residues in {0, ..., p-1}. Results are trimmed (no trailing zeros); the zero
polynomial is []. Inputs may carry trailing zeros or unreduced integers.
"""

from __future__ import annotations


def trim(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, p: int) -> list[int]:
    return trim([c % p for c in a])


def degree(a: list[int]) -> int:
    """Degree of a trimmed polynomial; -1 for the zero polynomial."""
    return len(a) - 1


def add(a, b, p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] = (r[i] + c) % p
    return reduce(r, p)


def neg(a, p: int) -> list[int]:
    return reduce([-c for c in a], p)


def sub(a, b, p: int) -> list[int]:
    return add(a, neg(b, p), p)


def scale(a, c: int, p: int) -> list[int]:
    return reduce([c * x for x in a], p)


def shift(a, k: int) -> list[int]:
    """Multiply by X^k."""
    a = trim(a)
    return [0] * k + a if a else []


def mul(a, b, p: int) -> list[int]:
    """Schoolbook product; zero coefficients of the sparser factor are skipped."""
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    if sum(1 for c in a if c) > sum(1 for c in b if c):
        a, b = b, a
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            r[i + j] += ai * bj
    return reduce(r, p)


def divmod_(a, b, p: int) -> tuple[list[int], list[int]]:
    a, b = reduce(a, p), reduce(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    quo = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv_lead % p
        if c == 0:
            continue
        quo[k - db] = c
        for j in range(db + 1):
            r[k - db + j] = (r[k - db + j] - c * b[j]) % p
    return trim(quo), trim(r[:db])


def mod(a, b, p: int) -> list[int]:
    return divmod_(a, b, p)[1]


def mulmod(a, b, m, p: int) -> list[int]:
    return mod(mul(a, b, p), m, p)


def powmod(a, k: int, m, p: int) -> list[int]:
    """a^k mod m by square-and-multiply; k is an arbitrary nonnegative int."""
    result = mod([1], m, p)
    base = mod(a, m, p)
    while k > 0:
        if k & 1:
            result = mulmod(result, base, m, p)
        base = mulmod(base, base, m, p)
        k >>= 1
    return result


def power(a, k: int, p: int) -> list[int]:
    """a^k by repeated multiplication (no modulus)."""
    result = [1]
    for _ in range(k):
        result = mul(result, a, p)
    return result


def gcd(a, b, p: int) -> list[int]:
    """Monic gcd."""
    a, b = reduce(a, p), reduce(b, p)
    while b:
        a, b = b, mod(a, b, p)
    if not a:
        return []
    inv_lead = pow(a[-1], -1, p)
    return [c * inv_lead % p for c in a]


def evaluate(a, x: int, p: int) -> int:
    y = 0
    for c in reversed(a):
        y = (y * x + c) % p
    return y


def has_root(f, p: int) -> bool:
    return any(evaluate(f, x, p) == 0 for x in range(p))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (desk-scale inputs)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return prime_factors(n) == [n]


def is_irreducible(f, p: int) -> bool:
    """Irreducibility of f over GF(p).

    Degree <= 3: f is irreducible iff it has no root. In general (Rabin):
    X^(p^d) = X mod f, and gcd(X^(p^(d/r)) - X, f) = 1 for every prime r | d.
    """
    f = reduce(f, p)
    d = degree(f)
    if d < 1:
        return False
    if d == 1:
        return True
    if d <= 3:
        return not has_root(f, p)
    return is_irreducible_rabin(f, p)


def is_irreducible_rabin(f, p: int) -> bool:
    f = reduce(f, p)
    d = degree(f)
    if d < 1:
        return False
    x = [0, 1]
    if powmod(x, p**d, f, p) != mod(x, f, p):
        return False
    for r in prime_factors(d):
        h = sub(powmod(x, p ** (d // r), f, p), x, p)
        if degree(gcd(h, f, p)) != 0:
            return False
    return True
