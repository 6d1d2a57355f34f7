"""The pencil engine: join f and g by f_t = (1-t)f + t*g and decide whether
the whole segment stays in one orbit of the V-preserving right action.

The orbit tangent space at f_t is spanned by xi(f_t) over the degree-0
tangent fields xi of V, so its coefficient matrix has entries linear in t.
Generic rank, the exceptional parameter values where the rank drops, the
regularity of the endpoints t = 0, 1, and the tangent-inclusion condition
together make up the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import linalg
from .logder import VectorField, apply_field, theta_piece
from .milnor import IdealEquality, ideal_equal_up_to
from .qpoly import (
    GradedSlice,
    Polynomial,
    Rational,
    WeightSystem,
    graded_slice,
    quasi_degree,
)
from .tpoly import TPoly, rational_roots, squarefree_part

EQUIVALENT = "EQUIVALENT"
HYPOTHESIS_FAILED = "HYPOTHESIS_FAILED"
ENDPOINT_EXCEPTIONAL = "ENDPOINT_EXCEPTIONAL"
INCLUSION_FAILED = "INCLUSION_FAILED"


@dataclass(frozen=True)
class PencilMatrix:
    """Coefficient matrix of the pencil's orbit tangent spaces.

    Row i is apply_field(fields[i], f_t) expanded over the degree-d slice
    basis; every entry is a polynomial of degree <= 1 in t.
    """

    slice: GradedSlice
    fields: tuple[VectorField, ...]
    entries: tuple[tuple[TPoly, ...], ...]
    f: Polynomial
    g: Polynomial
    weights: WeightSystem

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return self.slice.dim

    def evaluate(self, t: Rational) -> list[list[Fraction]]:
        tt = Fraction(t)
        return [[e.eval(tt) for e in row] for row in self.entries]


def assemble_pencil(
    f: Polynomial, g: Polynomial, phi: Polynomial, weights: WeightSystem
) -> PencilMatrix:
    """Build the pencil matrix from the degree-0 tangent fields of V.

    f and g must be quasihomogeneous of the same degree; only degree-0
    fields can map the degree-d slice to itself, so they exhaust the
    relevant tangent directions.
    """
    df = quasi_degree(f, weights)
    dg = quasi_degree(g, weights)
    if df is None or dg is None:
        raise ValueError("pencil endpoints must be quasihomogeneous")
    if df != dg:
        raise ValueError(f"degree mismatch: f has degree {df}, g has degree {dg}")
    sl = graded_slice(f.ring, weights, df)
    if sl.dim == 0:
        raise ValueError(f"empty monomial slice at degree {df}")
    fields = theta_piece(phi, weights, 0, require_vanish=True).fields
    rows = []
    for xi in fields:
        vf = sl.coefficient_vector(apply_field(xi, f))
        vg = sl.coefficient_vector(apply_field(xi, g))
        rows.append(tuple(TPoly.linear(a, b - a) for a, b in zip(vf, vg)))
    return PencilMatrix(sl, fields, tuple(rows), f, g, weights)


def _bareiss(rows: Sequence[Sequence[TPoly]]) -> tuple[int, list[TPoly]]:
    """Fraction-free elimination over Q[t]: (generic rank, pivot polys).

    The k-th pivot equals (up to sign) the k x k minor of the selected rows
    and columns, so divisions by the previous pivot are exact.
    """
    m = [list(row) for row in rows]
    if not m or not m[0]:
        return 0, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[TPoly] = []
    prev = TPoly.one()
    r = 0
    for col in range(ncols):
        best = None
        for i in range(r, nrows):
            if not m[i][col].is_zero:
                if best is None or m[i][col].degree < m[best][col].degree:
                    best = i
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        pivot = m[r][col]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (pivot * m[i][j] - m[i][col] * m[r][j]).exact_div(prev)
            m[i][col] = TPoly.zero()
        pivots.append(pivot)
        prev = pivot
        r += 1
        if r == nrows:
            break
    return len(pivots), pivots


@dataclass(frozen=True)
class ExceptionalLocus:
    """Generic rank and the certified locus of rank drops."""

    s: int
    poly: TPoly
    rational_roots: tuple[Fraction, ...]


def exceptional_locus(matrix: PencilMatrix) -> ExceptionalLocus:
    """Generic rank s over Q(t) and the squarefree monic q(t) of rank drops.

    q starts as the squarefree part of the product of the Bareiss pivots;
    every rational root is then re-verified by evaluating the matrix and
    measuring the rank, and roots where the rank does not actually drop are
    divided out. Irrational factors are kept as-is (they are only ever used
    through evaluation at rational points, e.g. the endpoints).
    """
    s, pivots = _bareiss(matrix.entries)
    if s == 0:
        return ExceptionalLocus(0, TPoly.one(), ())
    product = TPoly.one()
    candidates: set[Fraction] = set()
    for p in pivots:
        product = product * p
        if p.degree >= 1:
            candidates.update(rational_roots(p))
    q = squarefree_part(product)
    roots = []
    for t0 in sorted(candidates):
        if q.eval(t0) != 0:
            continue
        if linalg.rank(matrix.evaluate(t0)) < s:
            roots.append(t0)
        else:
            q = q.exact_div(TPoly.linear(-t0, 1))
    return ExceptionalLocus(s, q.monic(), tuple(roots))


@dataclass(frozen=True)
class InclusionCheck:
    """Row-space membership over Q(t) of the pencil velocity, f, and g."""

    velocity: bool
    f_in: bool
    g_in: bool

    def __bool__(self):
        return self.velocity


def _generic_rank(rows: Sequence[Sequence[TPoly]]) -> int:
    return _bareiss(rows)[0]


def tangent_inclusion(matrix: PencilMatrix) -> InclusionCheck:
    """Mather condition (a): the path velocity g - f must lie in the orbit
    tangent row space over Q(t); f and g themselves are checked alongside."""
    s = _generic_rank(matrix.entries)
    base = [list(row) for row in matrix.entries]

    def includes(p: Polynomial) -> bool:
        vec = matrix.slice.coefficient_vector(p)
        extra = [TPoly.const(c) for c in vec]
        return _generic_rank(base + [extra]) == s

    velocity = matrix.g - matrix.f
    return InclusionCheck(
        velocity=velocity.is_zero or includes(velocity),
        f_in=includes(matrix.f),
        g_in=includes(matrix.g),
    )


@dataclass(frozen=True)
class PencilReport:
    """Full certificate of the pencil run."""

    s: int
    exceptional_poly: TPoly
    rational_roots: tuple[Fraction, ...]
    endpoints_ok: bool
    tangent_inclusion: bool
    hypothesis_ok: bool
    verdict: str
    truncation: Fraction
    hypothesis_witness: "Fraction | None" = None
    inclusion: "InclusionCheck | None" = None

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "exceptional_poly": [str(c) for c in self.exceptional_poly.coeffs],
            "rational_roots": [str(r) for r in self.rational_roots],
            "endpoints_ok": self.endpoints_ok,
            "tangent_inclusion": self.tangent_inclusion,
            "hypothesis_ok": self.hypothesis_ok,
            "verdict": self.verdict,
            "truncation": str(self.truncation),
        }


def mather_verdict(
    f: Polynomial,
    g: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    truncation: Union[int, Fraction],
) -> PencilReport:
    """Run the full pencil certificate chain for f ~ g.

    In order: graded ideal equality up to the truncation (the hypothesis),
    generic rank and exceptional locus, endpoint regularity at t = 0 and
    t = 1, tangent inclusion. EQUIVALENT means every check passed; otherwise
    the verdict names the first failure.
    """
    d_max = Fraction(truncation)
    hypothesis: IdealEquality = ideal_equal_up_to(f, g, phi, weights, d_max)
    matrix = assemble_pencil(f, g, phi, weights)
    locus = exceptional_locus(matrix)
    endpoints_ok = locus.poly.eval(0) != 0 and locus.poly.eval(1) != 0
    inclusion = tangent_inclusion(matrix)
    if not hypothesis.equal:
        verdict = HYPOTHESIS_FAILED
    elif not endpoints_ok:
        verdict = ENDPOINT_EXCEPTIONAL
    elif not inclusion:
        verdict = INCLUSION_FAILED
    else:
        verdict = EQUIVALENT
    return PencilReport(
        s=locus.s,
        exceptional_poly=locus.poly,
        rational_roots=locus.rational_roots,
        endpoints_ok=endpoints_ok,
        tangent_inclusion=bool(inclusion),
        hypothesis_ok=hypothesis.equal,
        verdict=verdict,
        truncation=d_max,
        hypothesis_witness=hypothesis.witness_degree,
        inclusion=inclusion,
    )
