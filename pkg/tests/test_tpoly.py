import random
from fractions import Fraction

import pytest

from relmilnor.tpoly import TPoly, gcd, rational_roots, squarefree_part


def test_constructor_trims():
    assert TPoly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert TPoly([0]).is_zero
    assert TPoly([]).degree == -1


def test_arithmetic():
    p = TPoly([1, 1])  # 1 + t
    q = TPoly([-1, 1])  # -1 + t
    assert p * q == TPoly([-1, 0, 1])
    assert p + q == TPoly([0, 2])
    assert p - p == TPoly.zero()
    assert 2 * p == TPoly([2, 2])


def test_divmod_exact_and_remainder():
    p = TPoly([-1, 0, 1])  # t^2 - 1
    d = TPoly([1, 1])
    q, r = divmod(p, d)
    assert q == TPoly([-1, 1]) and r.is_zero
    q, r = divmod(TPoly([1, 0, 1]), d)
    assert d * q + r == TPoly([1, 0, 1])
    assert r.degree < d.degree


def test_exact_div_raises_on_remainder():
    with pytest.raises(ValueError):
        TPoly([1, 0, 1]).exact_div(TPoly([1, 1]))


def test_random_division_invariant():
    rng = random.Random(41)
    for _ in range(100):
        a = TPoly([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 6))])
        b = TPoly([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))])
        if b.is_zero:
            continue
        q, r = divmod(a, b)
        assert b * q + r == a
        assert r.is_zero or r.degree < b.degree


def test_gcd():
    p = TPoly([-1, 1]) * TPoly([2, 1])
    q = TPoly([-1, 1]) * TPoly([3, 1])
    assert gcd(p, q) == TPoly([-1, 1])
    assert gcd(p, TPoly.zero()) == p.monic()


def test_squarefree_part():
    p = TPoly([-1, 1]) ** 3 * TPoly([1, 1])
    sq = squarefree_part(p)
    assert sq == (TPoly([-1, 1]) * TPoly([1, 1])).monic()
    assert squarefree_part(TPoly([5])) == TPoly.one()


def test_pow_and_eval():
    p = TPoly([1, 2])
    assert p.eval(Fraction(1, 2)) == 2
    assert (p * p).eval(3) == 49


def test_rational_roots_simple():
    p = TPoly([Fraction(1, 4), Fraction(5, 4), 1])  # (t+1)(t+1/4)
    assert rational_roots(p) == [Fraction(-1), Fraction(-1, 4)]


def test_rational_roots_with_zero():
    p = TPoly([0, 0, -1, 1])  # t^2 (t - 1)
    assert rational_roots(p) == [Fraction(0), Fraction(1)]


def test_rational_roots_none():
    assert rational_roots(TPoly([1, 0, 1])) == []  # t^2 + 1
    assert rational_roots(TPoly([7])) == []


def test_rational_roots_random_products():
    rng = random.Random(43)
    for _ in range(60):
        roots = set()
        p = TPoly.one()
        for _ in range(rng.randint(1, 4)):
            r = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            roots.add(r)
            p = p * TPoly([-r, 1])
        # multiply in an irreducible factor
        p = p * TPoly([1, 0, 1])
        assert set(rational_roots(p)) == roots


def test_derivative():
    p = TPoly([5, 3, 0, 2])  # 5 + 3t + 2t^3
    assert p.derivative() == TPoly([3, 0, 6])
    assert TPoly([7]).derivative().is_zero
