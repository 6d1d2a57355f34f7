"""Ideal membership over Q via multivariate division and Buchberger.

The monomial order is the package-wide one: weighted degree first, reverse
lexicographic tiebreak (qpoly.term_key). Reduced Groebner bases here are
canonical for a fixed generator ideal and weight system, which the tests
rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .qpoly import Exponents, Polynomial, WeightSystem, leading_term, term_key


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f: Polynomial, basis: Sequence[Polynomial], weights: WeightSystem) -> Polynomial:
    """Fully reduce f modulo the basis: no term of the result is divisible
    by any basis leading term. Canonical once the basis is a Groebner basis."""
    ring = f.ring
    divisors = [(g, leading_term(g, weights)) for g in basis if not g.is_zero]
    remainder: dict[Exponents, Fraction] = {}
    work = dict(f.terms)
    while work:
        exps = max(work, key=lambda m: term_key(m, weights))
        coeff = work.pop(exps)
        if not coeff:
            continue
        hit = None
        for g, (lt_exps, lt_coeff) in divisors:
            if monomial_divides(lt_exps, exps):
                hit = (g, lt_exps, lt_coeff)
                break
        if hit is None:
            remainder[exps] = remainder.get(exps, Fraction(0)) + coeff
            continue
        g, lt_exps, lt_coeff = hit
        shift = monomial_div(exps, lt_exps)
        factor = coeff / lt_coeff
        for ge, gc in g.terms.items():
            if ge == lt_exps:
                continue  # cancels the popped term exactly
            key = monomial_mul(ge, shift)
            cur = work.get(key, Fraction(0)) - factor * gc
            if cur:
                work[key] = cur
            else:
                work.pop(key, None)
    return Polynomial(ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, weights: WeightSystem) -> Polynomial:
    fe, fc = leading_term(f, weights)
    ge, gc = leading_term(g, weights)
    lcm = monomial_lcm(fe, ge)
    mf = f.ring.monomial(monomial_div(lcm, fe), Fraction(1) / fc)
    mg = g.ring.monomial(monomial_div(lcm, ge), Fraction(1) / gc)
    return mf * f - mg * g


def _monic(f: Polynomial, weights: WeightSystem) -> Polynomial:
    _, c = leading_term(f, weights)
    return f * (Fraction(1) / c)


def buchberger(generators: Sequence[Polynomial], weights: WeightSystem) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by `generators`.

    Standard Buchberger with the product criterion (coprime leading terms)
    and the chain criterion, then interreduction. Output is monic and sorted
    by descending leading term, so it is canonical.
    """
    basis = [_monic(g, weights) for g in generators if not g.is_zero]
    if not basis:
        return []
    lts = [leading_term(g, weights)[0] for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done: set[tuple[int, int]] = set()

    def lcm_key(pair):
        lcm = monomial_lcm(lts[pair[0]], lts[pair[1]])
        return term_key(lcm, weights)

    while pairs:
        i, j = min(pairs, key=lcm_key)
        pairs.discard((i, j))
        done.add((i, j))
        lcm = monomial_lcm(lts[i], lts[j])
        if lcm == monomial_mul(lts[i], lts[j]):
            continue  # product criterion: coprime leading terms
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if monomial_divides(lts[k], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue  # chain criterion
        s = s_polynomial(basis[i], basis[j], weights)
        r = normal_form(s, basis, weights)
        if r.is_zero:
            continue
        r = _monic(r, weights)
        new = len(basis)
        basis.append(r)
        lts.append(leading_term(r, weights)[0])
        for k in range(new):
            pairs.add((k, new))

    # interreduce to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            r = normal_form(basis[i], others, weights)
            if r != basis[i]:
                changed = True
                if r.is_zero:
                    basis.pop(i)
                else:
                    basis[i] = _monic(r, weights)
                break
    basis.sort(key=lambda g: term_key(leading_term(g, weights)[0], weights), reverse=True)
    return basis


@dataclass(frozen=True)
class ReductionResult:
    remainder: Polynomial
    is_member: bool
    basis: tuple[Polynomial, ...]


def reduce_mod_ideal(
    f: Polynomial,
    generators: Sequence[Polynomial],
    weights: Optional[WeightSystem] = None,
) -> ReductionResult:
    """Normal form of f modulo the ideal generated by `generators`.

    With a single generator this is plain multivariate division; otherwise a
    reduced Groebner basis is computed first so membership is decided, not
    just witnessed.
    """
    w = weights if weights is not None else WeightSystem([1] * f.ring.nvars)
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        return ReductionResult(f, f.is_zero, ())
    if len(gens) == 1:
        basis = [_monic(gens[0], w)]
    else:
        basis = buchberger(gens, w)
    r = normal_form(f, basis, w)
    return ReductionResult(r, r.is_zero, tuple(basis))
