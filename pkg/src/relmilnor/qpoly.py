"""Sparse multivariate polynomials over Q with weighted-degree tooling.

Everything downstream (tangent fields, Milnor fingerprints, pencils) runs on
the types in this module: an immutable sparse Polynomial keyed by exponent
tuples, a WeightSystem normalized to coprime positive integers, a parser and
printer for the plain-text polynomial grammar, and graded-slice enumeration.
All arithmetic is exact (fractions.Fraction); nothing here ever touches
floating point.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

Exponents = tuple[int, ...]
Rational = Union[int, Fraction]


class _Infinity:
    """Order of the zero polynomial. Compares above every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("relmilnor-infinity")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


INFINITY = _Infinity()


@dataclass(frozen=True)
class PolyRing:
    """Names and order of the variables; fixes exponent-tuple positions."""

    variables: tuple[str, ...]

    def __post_init__(self):
        if not self.variables:
            raise ValueError("ring needs at least one variable")
        seen = set()
        for name in self.variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"bad variable name: {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name: {name!r}")
            seen.add(name)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable: {name!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Rational) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(c)})

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff: Rational = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): Fraction(coeff)})


class Polynomial:
    """Immutable sparse polynomial: dict from exponent tuple to Fraction.

    Zero coefficients are dropped on construction, so equality of the term
    dicts is equality of polynomials.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponents, Rational]):
        clean: dict[Exponents, Fraction] = {}
        n = ring.nvars
        for exps, coeff in terms.items():
            if len(exps) != n:
                raise ValueError(f"exponent tuple {exps} has wrong arity for {ring.variables}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = Fraction(coeff)
            if c:
                clean[tuple(int(e) for e in exps)] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        """The term dict. Treat as read-only."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        merged = dict(self._terms)
        for exps, coeff in other._terms.items():
            merged[exps] = merged.get(exps, Fraction(0)) + coeff
        return Polynomial(self.ring, merged)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(self.ring, {e: k * c for e, k in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def diff(self, i: int) -> "Polynomial":
        """Partial derivative with respect to variable i."""
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            e = exps[i]
            if e:
                key = exps[:i] + (e - 1,) + exps[i + 1:]
                out[key] = out.get(key, Fraction(0)) + coeff * e
        return Polynomial(self.ring, out)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def total_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no total degree")
        return max(sum(e) for e in self._terms)

    def evaluate(self, point: Sequence[Rational]) -> Fraction:
        vals = [Fraction(v) for v in point]
        if len(vals) != self.ring.nvars:
            raise ValueError("point has wrong arity")
        acc = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                term *= v ** e
            acc += term
        return acc

    def sorted_terms(self, weights: "WeightSystem") -> list[tuple[Exponents, Fraction]]:
        """Terms in descending monomial order for the given weights."""
        return sorted(
            self._terms.items(),
            key=lambda item: term_key(item[0], weights),
            reverse=True,
        )

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _normalize_weights(raw: Sequence[Rational]) -> tuple[tuple[int, ...], Fraction]:
    fr = [Fraction(w) for w in raw]
    if not fr:
        raise ValueError("empty weight list")
    if any(w <= 0 for w in fr):
        raise ValueError(f"weights must be positive, got {raw}")
    denom_lcm = math.lcm(*(w.denominator for w in fr))
    ints = [int(w * denom_lcm) for w in fr]
    g = math.gcd(*ints)
    ints = [w // g for w in ints]
    # normalized = raw * scale
    scale = Fraction(denom_lcm, g)
    return tuple(ints), scale


@dataclass(frozen=True)
class WeightSystem:
    """Positive weights, normalized to coprime integers on construction.

    `scale` relates the normalized representative to the raw input:
    normalized_degree = raw_degree * scale. Public degree values stay in raw
    units (Fractions); the integer normalization is what the enumeration and
    ordering code runs on.
    """

    weights: tuple[int, ...]
    scale: Fraction
    normalized: bool

    def __init__(self, raw: Sequence[Rational]):
        ints, scale = _normalize_weights(raw)
        object.__setattr__(self, "weights", ints)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "normalized", True)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def wdeg(self, exps: Exponents) -> int:
        """Weighted degree of a monomial, in normalized units."""
        return sum(w * e for w, e in zip(self.weights, exps))

    def raw_degree(self, normalized_degree: Rational) -> Fraction:
        return Fraction(normalized_degree) / self.scale

    def normalized_degree(self, raw_degree: Rational) -> Fraction:
        return Fraction(raw_degree) * self.scale

    def __str__(self):
        return "(" + ", ".join(str(w) for w in self.weights) + ")"


def term_key(exps: Exponents, weights: WeightSystem) -> tuple:
    """Sort key for the weighted-degree / reverse-lex monomial order.

    Higher key = greater monomial. Ties in weighted degree go to reverse
    lexicographic: a > b when the last nonzero entry of a - b is negative.
    """
    return (weights.wdeg(exps), tuple(-e for e in reversed(exps)))


def leading_term(f: Polynomial, weights: WeightSystem) -> tuple[Exponents, Fraction]:
    if f.is_zero:
        raise ValueError("zero polynomial has no leading term")
    exps = max(f.terms, key=lambda m: term_key(m, weights))
    return exps, f.terms[exps]


def weighted_order(f: Polynomial, weights: WeightSystem):
    """Minimal weighted degree among the terms of f, in raw units.

    Returns INFINITY for the zero polynomial, never a number.
    """
    if weights.nvars != f.ring.nvars:
        raise ValueError("weight count does not match ring arity")
    if f.is_zero:
        return INFINITY
    return weights.raw_degree(min(weights.wdeg(e) for e in f.terms))


def quasi_degree(f: Polynomial, weights: WeightSystem) -> Optional[Fraction]:
    """Raw weighted degree if f is quasihomogeneous, else None.

    The zero polynomial is quasihomogeneous of every degree; by convention
    this returns None for it as well, so callers must treat zero specially.
    """
    if weights.nvars != f.ring.nvars:
        raise ValueError("weight count does not match ring arity")
    if f.is_zero:
        return None
    degrees = {weights.wdeg(e) for e in f.terms}
    if len(degrees) != 1:
        return None
    return weights.raw_degree(degrees.pop())


def is_quasihomogeneous(
    f: Polynomial, weights: WeightSystem, degree: Optional[Rational] = None
) -> bool:
    """Whether f is quasihomogeneous (of the given raw degree, if supplied).

    The zero polynomial is quasihomogeneous of every degree, but has no
    degree of its own, so it answers True with an explicit degree and False
    without one.
    """
    if degree is not None:
        if weights.nvars != f.ring.nvars:
            raise ValueError("weight count does not match ring arity")
        target = weights.normalized_degree(degree)
        return all(weights.wdeg(e) == target for e in f.terms)
    return not f.is_zero and quasi_degree(f, weights) is not None


def euler_apply(f: Polynomial, weights: WeightSystem) -> Polynomial:
    """Apply the Euler field sum_i w_i x_i d/dx_i (raw weights)."""
    ring = f.ring
    out: dict[Exponents, Fraction] = {}
    raw = [Fraction(w) / weights.scale for w in weights.weights]
    for exps, coeff in f.terms.items():
        c = coeff * sum(w * e for w, e in zip(raw, exps))
        if c:
            out[exps] = out.get(exps, Fraction(0)) + c
    return Polynomial(ring, out)


def monomials_of_wdeg(ring: PolyRing, weights: WeightSystem, degree: Rational) -> list[Exponents]:
    """All monomials of the given raw weighted degree, descending order."""
    if weights.nvars != ring.nvars:
        raise ValueError("weight count does not match ring arity")
    target = weights.normalized_degree(degree)
    if target < 0 or target.denominator != 1:
        return []
    found: list[Exponents] = []
    w = weights.weights
    n = len(w)

    def go(i: int, remaining: int, prefix: list[int]):
        if i == n - 1:
            if remaining % w[i] == 0:
                found.append(tuple(prefix + [remaining // w[i]]))
            return
        for e in range(remaining // w[i] + 1):
            go(i + 1, remaining - e * w[i], prefix + [e])

    go(0, int(target), [])
    found.sort(key=lambda m: term_key(m, weights), reverse=True)
    return found


@dataclass(frozen=True)
class GradedSlice:
    """Monomial basis of one weighted-degree slice, in canonical order."""

    ring: PolyRing
    weights: WeightSystem
    degree: Fraction
    basis: tuple[Exponents, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, exps: Exponents) -> int:
        try:
            return self.basis.index(exps)
        except ValueError:
            raise KeyError(f"monomial {exps} not in slice of degree {self.degree}") from None

    def coefficient_vector(self, f: Polynomial) -> list[Fraction]:
        """Coordinates of f in this slice; f must be supported inside it."""
        vec = [Fraction(0)] * len(self.basis)
        for exps, coeff in f.terms.items():
            vec[self.index(exps)] = coeff
        return vec

    def from_vector(self, vec: Sequence[Rational]) -> Polynomial:
        return Polynomial(self.ring, {m: Fraction(c) for m, c in zip(self.basis, vec) if c})


def graded_slice(ring: PolyRing, weights: WeightSystem, degree: Rational) -> GradedSlice:
    return GradedSlice(
        ring=ring,
        weights=weights,
        degree=Fraction(degree),
        basis=tuple(monomials_of_wdeg(ring, weights, degree)),
    )


# --- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


class PolyParseError(ValueError):
    """Syntax or semantic error in polynomial text, with position info."""

    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise PolyParseError(f"unexpected character {stripped[0]!r}", text, pos)
        if m.lastgroup == "int":
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser for the term grammar.

    expr   := term (('+'|'-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ('^' uint)?
    coeff  := int ('/' uint)?

    A leading sign on the first term is part of its coefficient literal.
    """

    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str):
        raise PolyParseError(message, self.text, self.peek()[2])

    def parse(self) -> Polynomial:
        acc = self._term(allow_sign=True)
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                piece = self._term(allow_sign=False)
                acc = acc + piece if value == "+" else acc - piece
            elif kind == "end":
                return acc
            else:
                self.fail(f"expected '+' or '-', got {value!r}")

    def _term(self, allow_sign: bool) -> Polynomial:
        sign = Fraction(1)
        kind, value, _ = self.peek()
        if allow_sign and kind == "op" and value == "-":
            self.next()
            sign = Fraction(-1)
            kind, value, _ = self.peek()
        if kind == "int":
            coeff = sign * self._coeff()
            poly = self.ring.constant(coeff)
            while self.peek()[0] == "op" and self.peek()[1] == "*":
                self.next()
                poly = poly * self._factor()
            return poly
        if kind == "name":
            poly = self._factor()
            while self.peek()[0] == "op" and self.peek()[1] == "*":
                self.next()
                poly = poly * self._factor()
            return poly * sign
        self.fail(f"expected a coefficient or variable, got {value!r}")

    def _coeff(self) -> Fraction:
        kind, value, _ = self.next()
        assert kind == "int"
        num = int(value)
        if self.peek()[0] == "op" and self.peek()[1] == "/":
            self.next()
            dkind, dvalue, dpos = self.next()
            if dkind != "int":
                raise PolyParseError("expected denominator after '/'", self.text, dpos)
            den = int(dvalue)
            if den == 0:
                raise PolyParseError("zero denominator", self.text, dpos)
            return Fraction(num, den)
        return Fraction(num)

    def _factor(self) -> Polynomial:
        kind, value, pos = self.next()
        if kind != "name":
            raise PolyParseError(f"expected a variable, got {value!r}", self.text, pos)
        try:
            idx = self.ring.index(value)
        except KeyError:
            raise PolyParseError(f"unknown variable {value!r}", self.text, pos) from None
        exponent = 1
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.next()
            ekind, evalue, epos = self.next()
            if ekind != "int":
                raise PolyParseError("expected an integer exponent after '^'", self.text, epos)
            exponent = int(evalue)
        e = [0] * self.ring.nvars
        e[idx] = exponent
        return self.ring.monomial(e)


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse polynomial text in the term grammar over the given ring."""
    if not text.strip():
        raise PolyParseError("empty polynomial text", text, 0)
    return _Parser(text, ring).parse()


# --- printing --------------------------------------------------------------

def _monomial_text(ring: PolyRing, exps: Exponents) -> str:
    parts = []
    for name, e in zip(ring.variables, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, weights: Optional[WeightSystem] = None) -> str:
    """Render f in the term grammar; parse(format(f)) == f.

    Terms come out in descending monomial order (unit weights unless a
    weight system is supplied).
    """
    if f.is_zero:
        return "0"
    w = weights if weights is not None else WeightSystem([1] * f.ring.nvars)
    pieces = []
    for idx, (exps, coeff) in enumerate(f.sorted_terms(w)):
        mono = _monomial_text(f.ring, exps)
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            if coeff < 0:
                # a bare leading '-' on a variable is not in the grammar,
                # so fold the sign into an explicit coefficient
                body = f"-{mag}*{mono}" if mono and mag == 1 else f"-{body}"
            pieces.append(body)
        else:
            pieces.append(f"{' + ' if coeff > 0 else ' - '}{body}")
    return "".join(pieces)


# --- weight inference -------------------------------------------------------

@dataclass(frozen=True)
class InferredWeights:
    """Solution set of the weight equations <k, w> = d over the support of f.

    `dimension` and `basis` describe the full rational solution space in the
    unknowns (w_1..w_n, d); `canonical` is the lexicographically smallest
    strictly positive integer solution with gcd(w) = 1, or None if the space
    meets the positive cone in no rational point we can certify.
    """

    dimension: int
    basis: tuple[tuple[Fraction, ...], ...]
    canonical: Optional[tuple[WeightSystem, Fraction]]


def _primitive_integer(vec: Sequence[Fraction]) -> list[int]:
    denom_lcm = math.lcm(*(c.denominator for c in vec))
    ints = [int(c * denom_lcm) for c in vec]
    g = math.gcd(*ints)
    return [v // g for v in ints] if g else ints


def infer_weights(f: Polynomial, bound: int = 24) -> InferredWeights:
    """Find weight systems making f quasihomogeneous.

    Solves the linear system <k, w> - d = 0 over the exponent vectors k of f,
    reports the solution space, and searches it for the lex-least strictly
    positive integer representative (weights first, then degree). `bound`
    caps each weight coordinate in the multi-dimensional search.
    """
    from . import linalg

    if f.is_zero:
        raise ValueError("cannot infer weights for the zero polynomial")
    n = f.ring.nvars
    rows = [[Fraction(e) for e in exps] + [Fraction(-1)] for exps in sorted(f.terms)]
    basis = linalg.nullspace(rows, n + 1)
    dim = len(basis)
    basis_t = tuple(tuple(v) for v in basis)
    if dim == 0:
        return InferredWeights(0, basis_t, None)

    if dim == 1:
        ints = _primitive_integer(basis[0])
        if all(v < 0 for v in ints[:n]):
            ints = [-v for v in ints]
        if all(v > 0 for v in ints[:n]) and ints[n] >= 0:
            return InferredWeights(1, basis_t, (WeightSystem(ints[:n]), Fraction(ints[n])))
        return InferredWeights(1, basis_t, None)

    # dim >= 2: fix weights one by one in lex order and solve what remains.
    def search(fixed: list[int]) -> Optional[list[Fraction]]:
        k = len(fixed)
        eqs = [list(r) for r in rows]
        for j, val in enumerate(fixed):
            row = [Fraction(0)] * (n + 2)
            row[j] = Fraction(1)
            row[n + 1] = Fraction(val)
            eqs.append(row)
        # rows currently have n+1 columns (homogeneous); pad with rhs 0
        aug = [r + [Fraction(0)] if len(r) == n + 1 else r for r in eqs]
        sol = linalg.solve_affine(aug, n + 1)
        if sol == "inconsistent":
            return None
        if sol != "underdetermined":
            w = sol[:n]
            d = sol[n]
            if all(v > 0 and v.denominator == 1 for v in w) and d.denominator == 1 and d >= 0:
                return list(sol)
            return None
        if k == n:
            return None
        for val in range(1, bound + 1):
            hit = search(fixed + [val])
            if hit is not None:
                return hit
        return None

    hit = search([])
    if hit is None:
        return InferredWeights(dim, basis_t, None)
    w = [int(v) for v in hit[:n]]
    return InferredWeights(dim, basis_t, (WeightSystem(w), Fraction(int(hit[n]))))


def random_polynomial(
    ring: PolyRing,
    weights: WeightSystem,
    degree: Rational,
    rng,
    coeff_bound: int = 3,
    allow_zero: bool = False,
) -> Polynomial:
    """Random quasihomogeneous polynomial of the given raw degree.

    Coefficients are drawn with numerators in [-coeff_bound, coeff_bound] and
    denominators in [1, coeff_bound]; redrawn once if everything cancels.
    """
    basis = monomials_of_wdeg(ring, weights, degree)
    if not basis:
        raise ValueError(f"no monomials of weighted degree {degree}")
    for _ in range(64):
        terms = {}
        for m in basis:
            num = rng.randint(-coeff_bound, coeff_bound)
            den = rng.randint(1, coeff_bound)
            if num:
                terms[m] = Fraction(num, den)
        f = Polynomial(ring, terms)
        if allow_zero or not f.is_zero:
            return f
    return Polynomial(ring, {basis[0]: Fraction(1)})
