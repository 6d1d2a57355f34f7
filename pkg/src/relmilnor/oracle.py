"""Brute-force cross-check path for every graded computation.

Everything in here is re-derived from scratch on dense data: monomial
enumeration is an itertools box search, tangency is full reduction by the
hypersurface polynomial (not a lambda-system solve), and ranks come from a
naive Gaussian elimination written independently of the linalg module. The
only things shared with the main path are fractions.Fraction and read-only
access to input term dicts. Slower by design; exists to catch bugs, not to
be fast.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

Rational = Union[int, Fraction]
Exps = tuple[int, ...]


# --- independent dense primitives -------------------------------------------

def _box_monomials(weights: Sequence[int], target: int) -> list[Exps]:
    """All exponent tuples with <weights, e> = target, by explicit box search."""
    if target < 0:
        return []
    ranges = [range(target // w + 1) for w in weights]
    hits = [e for e in itertools.product(*ranges) if sum(w * x for w, x in zip(weights, e)) == target]
    hits.sort()
    return hits


def _own_rank(rows: list[list[Fraction]]) -> int:
    """Row echelon rank by plain forward elimination."""
    m = [row[:] for row in rows]
    rank = 0
    col = 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col] != 0:
                ratio = m[i][col] / m[rank][col]
                m[i] = [a - ratio * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def _own_nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Kernel basis via echelon form and back substitution."""
    m = [row[:] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                ratio = m[i][col] / m[r][col]
                m[i] = [a - ratio * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i in range(len(pivot_cols) - 1, -1, -1):
            pc = pivot_cols[i]
            acc = Fraction(0)
            for c in range(pc + 1, ncols):
                if m[i][c] != 0 and v[c] != 0:
                    acc += m[i][c] * v[c]
            v[pc] = -acc / m[i][pc]
        basis.append(v)
    return basis


def _term_mul(a: dict[Exps, Fraction], b: dict[Exps, Fraction]) -> dict[Exps, Fraction]:
    out: dict[Exps, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            val = out.get(key, Fraction(0)) + c1 * c2
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def _term_diff(terms: dict[Exps, Fraction], i: int) -> dict[Exps, Fraction]:
    out: dict[Exps, Fraction] = {}
    for e, c in terms.items():
        if e[i]:
            key = e[:i] + (e[i] - 1,) + e[i + 1:]
            val = out.get(key, Fraction(0)) + c * e[i]
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def _own_key(e: Exps) -> tuple:
    # total degree then plain lex: deliberately not the main path's order
    return (sum(e), e)


def _own_reduce(dividend: dict[Exps, Fraction], divisor: dict[Exps, Fraction]) -> dict[Exps, Fraction]:
    """Unique full remainder of division by a single polynomial.

    Every term divisible by the divisor's leading monomial gets rewritten;
    for a single divisor the result is the canonical normal form, and the
    map dividend -> remainder is linear.
    """
    lead = max(divisor, key=_own_key)
    lead_coeff = divisor[lead]
    work = dict(dividend)
    remainder: dict[Exps, Fraction] = {}
    while work:
        e = max(work, key=_own_key)
        c = work.pop(e)
        if all(x >= y for x, y in zip(e, lead)):
            shift = tuple(x - y for x, y in zip(e, lead))
            factor = c / lead_coeff
            for de, dc in divisor.items():
                key = tuple(x + y for x, y in zip(de, shift))
                val = work.get(key, Fraction(0)) - factor * dc
                if key == e:
                    val += c  # the term being cancelled was already popped
                if val:
                    work[key] = val
                else:
                    work.pop(key, None)
        else:
            remainder[e] = remainder.get(e, Fraction(0)) + c
    return remainder


def _own_degree(terms: dict[Exps, Fraction], weights: Sequence[int]) -> int:
    degrees = {sum(w * x for w, x in zip(weights, e)) for e in terms}
    if len(degrees) != 1:
        raise ValueError("oracle expects quasihomogeneous input")
    return degrees.pop()


def _norm_weights(weight_system) -> list[int]:
    return list(weight_system.weights)


def _norm_degree(weight_system, raw_degree: Rational) -> Optional[int]:
    d = Fraction(raw_degree) * weight_system.scale
    if d.denominator != 1:
        return None
    return int(d)


# --- oracle operations -------------------------------------------------------

def oracle_tangent_fields(
    phi, weight_system, degree: Rational, require_vanish: bool = True
) -> list[list[tuple[int, Exps, Fraction]]]:
    """Basis of the degree-`degree` tangent fields, as sparse triples.

    Candidates are all monomial fields x^m d/dx_i of the requested degree;
    tangency of a combination is vanishing of the remainder of its action
    on phi after division by phi, which is linear in the combination. Each
    returned field is a list of (variable index, exponents, coefficient).
    """
    w = _norm_weights(weight_system)
    n = len(w)
    phi_terms = dict(phi.terms)
    if not phi_terms:
        raise ValueError("oracle needs a nonzero hypersurface")
    e_norm = _norm_degree(weight_system, degree)
    if e_norm is None:
        return []
    candidates: list[tuple[int, Exps]] = []
    for i in range(n):
        for m in _box_monomials(w, e_norm + w[i]):
            if require_vanish and not any(m):
                continue
            candidates.append((i, m))
    if not candidates:
        return []
    partials = [_term_diff(phi_terms, i) for i in range(n)]
    remainders = []
    for i, m in candidates:
        p = _term_mul({m: Fraction(1)}, partials[i])
        remainders.append(_own_reduce(p, phi_terms) if p else {})
    support = sorted({e for r in remainders for e in r}, key=_own_key)
    row_of = {e: k for k, e in enumerate(support)}
    matrix = [[Fraction(0)] * len(candidates) for _ in support]
    for j, r in enumerate(remainders):
        for e, c in r.items():
            matrix[row_of[e]][j] = c
    kernel = _own_nullspace(matrix, len(candidates))
    fields = []
    for v in kernel:
        fields.append(
            [(i, m, c) for (i, m), c in zip(candidates, v) if c]
        )
    return fields


def oracle_tangent_dim(phi, weight_system, degree: Rational, require_vanish: bool = True) -> int:
    return len(oracle_tangent_fields(phi, weight_system, degree, require_vanish))


def oracle_ideal_dim(h, phi, weight_system, degree: Rational) -> int:
    """Dense rank of the degree-`degree` slice of the relative Jacobian of h."""
    w = _norm_weights(weight_system)
    h_terms = dict(h.terms)
    d = _own_degree(h_terms, w)
    e_norm = _norm_degree(weight_system, degree)
    if e_norm is None:
        return 0
    field_degree = Fraction(e_norm - d) / weight_system.scale
    fields = oracle_tangent_fields(phi, weight_system, field_degree, require_vanish=True)
    if not fields:
        return 0
    slice_monomials = _box_monomials(w, e_norm)
    col_of = {m: k for k, m in enumerate(slice_monomials)}
    partials = [_term_diff(h_terms, i) for i in range(len(w))]
    rows = []
    for field in fields:
        acc: dict[Exps, Fraction] = {}
        for i, m, c in field:
            contribution = _term_mul({m: c}, partials[i])
            for e, cc in contribution.items():
                val = acc.get(e, Fraction(0)) + cc
                if val:
                    acc[e] = val
                else:
                    acc.pop(e, None)
        row = [Fraction(0)] * len(slice_monomials)
        for e, c in acc.items():
            row[col_of[e]] = c
        rows.append(row)
    return _own_rank(rows)


def oracle_fingerprint(h, phi, weight_system, truncation: Rational) -> list[tuple[Fraction, int]]:
    """(degree, quotient dimension) pairs up to the truncation, densely."""
    w = _norm_weights(weight_system)
    top = _norm_degree(weight_system, truncation)
    if top is None:
        raise ValueError("truncation must land on the weight lattice")
    out = []
    for n in range(top + 1):
        slice_monomials = _box_monomials(w, n)
        if not slice_monomials:
            continue
        raw = Fraction(n) / weight_system.scale
        out.append((raw, len(slice_monomials) - oracle_ideal_dim(h, phi, weight_system, raw)))
    return out


def oracle_rank_at(matrix, t: Rational) -> int:
    """Rank of a pencil matrix at a specific parameter value, densely."""
    tt = Fraction(t)
    rows = []
    for row in matrix.entries:
        dense = []
        for entry in row:
            cs = entry.coeffs
            c0 = cs[0] if len(cs) > 0 else Fraction(0)
            c1 = cs[1] if len(cs) > 1 else Fraction(0)
            dense.append(c0 + c1 * tt)
        rows.append(dense)
    return _own_rank(rows)


def oracle_membership_qh(f, generators, weight_system) -> bool:
    """Graded-slice ideal membership for quasihomogeneous data.

    f lies in the ideal iff its coefficient vector is in the span of
    monomial multiples of the generators landing in f's degree slice.
    """
    w = _norm_weights(weight_system)
    f_terms = dict(f.terms)
    if not f_terms:
        return True
    df = _own_degree(f_terms, w)
    slice_monomials = _box_monomials(w, df)
    col_of = {m: k for k, m in enumerate(slice_monomials)}
    rows = []
    for g in generators:
        g_terms = dict(g.terms)
        if not g_terms:
            continue
        dg = _own_degree(g_terms, w)
        for m in _box_monomials(w, df - dg):
            prod = _term_mul({m: Fraction(1)}, g_terms)
            row = [Fraction(0)] * len(slice_monomials)
            for e, c in prod.items():
                row[col_of[e]] = c
            rows.append(row)
    f_row = [Fraction(0)] * len(slice_monomials)
    for e, c in f_terms.items():
        f_row[col_of[e]] = c
    base = _own_rank(rows) if rows else 0
    return _own_rank(rows + [f_row]) == base


# --- batch cross-checks -------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    variables: tuple[str, ...]
    weights: tuple[int, ...]
    phi_text: str
    degree_cap: int  # raw truncation this entry is checked to


CROSSCHECK_CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry(("x", "y"), (1, 1), "x*y", 10),
    CatalogEntry(("x", "y"), (1, 1), "x", 10),
    CatalogEntry(("x", "y"), (1, 2), "x^2 + y", 10),
    CatalogEntry(("x", "y"), (2, 3), "x^3 - y^2", 12),
    CatalogEntry(("x", "y", "z"), (2, 2, 3), "x^2*y + z^2", 10),
    CatalogEntry(("x", "y", "z"), (1, 1, 2), "x*y + z", 8),
)


@dataclass(frozen=True)
class CrosscheckInstance:
    index: int
    variables: tuple[str, ...]
    weights: tuple[int, ...]
    phi: str
    f: str
    max_degree: Fraction
    tangent_match: bool
    ideal_match: bool
    fingerprint_match: bool

    @property
    def ok(self) -> bool:
        return self.tangent_match and self.ideal_match and self.fingerprint_match


def run_crosscheck(
    instances: int = 50, seed: int = 0, max_degree: Optional[Rational] = None
) -> list[CrosscheckInstance]:
    """Random main-path-versus-oracle sweep over the hypersurface catalog.

    Each instance draws a catalog entry and a random quasihomogeneous f and
    compares tangent dimensions, ideal ranks, and fingerprints at every
    attainable degree up to the cap.
    """
    from .logder import theta_piece
    from .milnor import hilbert_fingerprint, jacobian_piece
    from .qpoly import (
        PolyRing,
        WeightSystem,
        format_poly,
        graded_slice,
        parse_poly,
        random_polynomial,
    )

    rng = random.Random(seed)
    results = []
    for idx in range(instances):
        entry = CROSSCHECK_CATALOG[rng.randrange(len(CROSSCHECK_CATALOG))]
        ring = PolyRing(entry.variables)
        ws = WeightSystem(entry.weights)
        phi = parse_poly(entry.phi_text, ring)
        cap = Fraction(entry.degree_cap if max_degree is None else max_degree)
        top = int(ws.normalized_degree(cap))
        # a random quasihomogeneous f of some attainable positive degree
        while True:
            n_deg = rng.randint(1, max(1, top))
            raw = ws.raw_degree(n_deg)
            if graded_slice(ring, ws, raw).dim:
                break
        f = random_polynomial(ring, ws, raw, rng)

        tangent_ok = True
        ideal_ok = True
        for n_deg in range(top + 1):
            e = ws.raw_degree(n_deg)
            if theta_piece(phi, ws, e).dim != oracle_tangent_dim(phi, ws, e):
                tangent_ok = False
            if jacobian_piece(f, phi, ws, e).rank != oracle_ideal_dim(f, phi, ws, e):
                ideal_ok = False
        main_fp = hilbert_fingerprint(f, phi, ws, cap)
        oracle_fp = oracle_fingerprint(f, phi, ws, cap)
        fp_ok = list(zip(main_fp.degrees, main_fp.dims)) == oracle_fp

        results.append(
            CrosscheckInstance(
                index=idx,
                variables=entry.variables,
                weights=entry.weights,
                phi=entry.phi_text,
                f=format_poly(f),
                max_degree=cap,
                tangent_match=tangent_ok,
                ideal_match=ideal_ok,
                fingerprint_match=fp_ok,
            )
        )
    return results
