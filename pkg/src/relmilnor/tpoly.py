"""Univariate polynomials in t over Q: the pencil-parameter arithmetic.

Coefficients are stored low degree first. Provides exact division, gcd,
squarefree part, and complete rational root extraction, which is everything
the exceptional-locus computation needs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

Rational = Union[int, Fraction]


class TPoly:
    """Immutable univariate polynomial over Q, coefficients low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Rational]):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    @classmethod
    def zero(cls) -> "TPoly":
        return cls([])

    @classmethod
    def one(cls) -> "TPoly":
        return cls([1])

    @classmethod
    def const(cls, c: Rational) -> "TPoly":
        return cls([c])

    @classmethod
    def linear(cls, c0: Rational, c1: Rational) -> "TPoly":
        """c0 + c1 * t"""
        return cls([c0, c1])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return TPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TPoly([c * Fraction(other) for c in self.coeffs])
        if not isinstance(other, TPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return TPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = TPoly.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "TPoly"):
        if not isinstance(other, TPoly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.leading
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            factor = rem[-1] / dlead
            shift = len(rem) - 1 - dd
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            while rem and not rem[-1]:
                rem.pop()
        return TPoly(q), TPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "TPoly") -> "TPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "TPoly":
        if self.is_zero:
            return self
        lead = self.leading
        return TPoly([c / lead for c in self.coeffs])

    def derivative(self) -> "TPoly":
        return TPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def eval(self, t: Rational) -> Fraction:
        tt = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * tt + c
        return acc

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if abs(c) != 1 else ("t" if c > 0 else "-t"))
            else:
                parts.append(f"{c}*t^{i}" if abs(c) != 1 else (f"t^{i}" if c > 0 else f"-t^{i}"))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"TPoly({list(self.coeffs)!r})"


def gcd(a: TPoly, b: TPoly) -> TPoly:
    """Monic gcd by the Euclidean algorithm."""
    x, y = a, b
    while not y.is_zero:
        x, y = y, x % y
    return x.monic() if not x.is_zero else x


def squarefree_part(p: TPoly) -> TPoly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return TPoly.one()
    g = gcd(p, p.derivative())
    return p.exact_div(g).monic()


def _factor_int(n: int) -> dict[int, int]:
    assert n >= 1
    factors: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def _divisors(n: int) -> list[int]:
    if n == 1:
        return [1]
    divs = [1]
    for p, k in _factor_int(n).items():
        divs = [d * p ** e for d in divs for e in range(k + 1)]
    return sorted(divs)


def rational_roots(p: TPoly) -> list[Fraction]:
    """All rational roots of p, ascending, without multiplicity."""
    if p.is_zero:
        raise ValueError("every rational is a root of the zero polynomial")
    if p.degree == 0:
        return []
    # clear denominators to a primitive integer polynomial
    denom_lcm = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * denom_lcm) for c in p.coeffs]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    roots = []
    shift = 0
    while ints[0] == 0:
        shift += 1
        ints = ints[1:]
    if shift:
        roots.append(Fraction(0))
    if len(ints) == 1:
        return sorted(roots)
    a0 = abs(ints[0])
    alead = abs(ints[-1])
    work = TPoly(ints)
    seen = set()
    for num in _divisors(a0):
        for den in _divisors(alead):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in seen:
                    continue
                seen.add(cand)
                if work.eval(cand) == 0:
                    roots.append(cand)
    return sorted(set(roots))
