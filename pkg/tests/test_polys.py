from hypothesis import given
from hypothesis import strategies as st

from dickson4 import polys

coeff_lists = st.lists(st.integers(0, 6), max_size=8)


@given(coeff_lists, coeff_lists.filter(lambda b: polys.trim(b)))
def test_divmod_roundtrip(a, b):
    p = 7
    qt, r = polys.divmod_(a, b, p)
    assert polys.add(polys.mul(qt, b, p), r, p) == polys.reduce(a, p)
    assert polys.degree(r) < polys.degree(polys.reduce(b, p))


def test_irreducibility_counts():
    # number of monic irreducibles of degree d over GF(p): (1/d) sum_{k|d} mu(k) p^(d/k)
    def monics(p, d):
        for idx in range(p**d):
            yield [(idx // p**i) % p for i in range(d)] + [1]

    assert sum(polys.is_irreducible(f, 5) for f in monics(5, 2)) == 10
    assert sum(polys.is_irreducible(f, 5) for f in monics(5, 3)) == 40
    assert sum(polys.is_irreducible(f, 5) for f in monics(5, 4)) == 150
    assert sum(polys.is_irreducible_rabin(f, 7) for f in monics(7, 2)) == 21


def test_number_theory():
    assert polys.prime_factors(360) == [2, 3, 5]
    assert [n for n in range(30) if polys.is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_gcd_and_roots():
    p = 5
    f = polys.mul([1, 1], [2, 1], p)  # (x + 1)(x + 2)
    g = polys.mul([1, 1], [0, 0, 1], p)
    assert polys.gcd(f, g, p) == [1, 1]
    assert polys.has_root(f, p) and not polys.has_root([2, 0, 1], p)
    assert polys.evaluate(f, 3, p) == (4 * 5) % p
