"""Relative Milnor algebra of h with respect to V: graded pieces and
Hilbert fingerprints.

For quasihomogeneous h the relative Jacobian ideal J_h (the span of xi(h)
over origin-vanishing tangent fields xi of V) is graded, so it can be
compared and measured one weighted-degree slice at a time. The fingerprint
of the quotient algebra up to a truncation degree is the equivalence
invariant everything downstream leans on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import linalg
from .logder import apply_field, theta_piece
from .qpoly import (
    Exponents,
    GradedSlice,
    Polynomial,
    Rational,
    WeightSystem,
    graded_slice,
    quasi_degree,
)


def _require_qh(h: Polynomial, weights: WeightSystem, role: str) -> Fraction:
    if h.is_zero:
        raise ValueError(f"{role} must be nonzero")
    d = quasi_degree(h, weights)
    if d is None:
        raise ValueError(f"{role} must be quasihomogeneous for these weights")
    return d


@dataclass(frozen=True)
class IdealPiece:
    """One graded slice of the relative Jacobian ideal, row-reduced."""

    degree: Fraction
    slice: GradedSlice
    rows: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def quotient_dim(self) -> int:
        return self.slice.dim - self.rank

    def contains(self, f: Polynomial) -> bool:
        """Membership of a polynomial supported in this slice."""
        vec = self.slice.coefficient_vector(f)
        return linalg.in_row_space(vec, [list(r) for r in self.rows], list(self.pivots))


def jacobian_piece(
    h: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    degree: Union[int, Fraction],
) -> IdealPiece:
    """Degree-`degree` slice of J_h = {xi(h) : xi tangent to V, xi(0) = 0}.

    Since h is quasihomogeneous of degree d, only tangent fields of degree
    `degree - d` can land in this slice.
    """
    d = _require_qh(h, weights, "h")
    e = Fraction(degree)
    sl = graded_slice(h.ring, weights, e)
    tangent = theta_piece(phi, weights, e - d, require_vanish=True)
    vectors = []
    for xi in tangent.fields:
        g = apply_field(xi, h)
        if not g.is_zero:
            vectors.append(sl.coefficient_vector(g))
    reduced, pivots = linalg.rref(vectors)
    return IdealPiece(
        degree=e,
        slice=sl,
        rows=tuple(tuple(r) for r in reduced),
        pivots=tuple(pivots),
    )


@dataclass(frozen=True)
class HilbertFingerprint:
    """Graded quotient dimensions of the relative Milnor algebra up to a
    truncation degree (raw units, inclusive)."""

    degrees: tuple[Fraction, ...]
    dims: tuple[int, ...]
    truncation: Fraction

    def __post_init__(self):
        if len(self.degrees) != len(self.dims):
            raise ValueError("degrees and dims must align")

    def as_pairs(self) -> list[tuple[Fraction, int]]:
        return list(zip(self.degrees, self.dims))

    def __eq__(self, other):
        if not isinstance(other, HilbertFingerprint):
            return NotImplemented
        return (
            self.degrees == other.degrees
            and self.dims == other.dims
            and self.truncation == other.truncation
        )


def hilbert_fingerprint(
    h: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    truncation: Union[int, Fraction],
) -> HilbertFingerprint:
    """dim of each graded piece of O/J_h for degrees 0..truncation.

    Degrees with an empty monomial slice are skipped (their quotient is
    trivially zero); what remains is the Hilbert fingerprint.
    """
    _require_qh(h, weights, "h")
    d_max = Fraction(truncation)
    if d_max < 0:
        raise ValueError("truncation must be nonnegative")
    degrees = []
    dims = []
    n_max = int(weights.normalized_degree(d_max))
    for n in range(n_max + 1):
        e = weights.raw_degree(n)
        sl = graded_slice(h.ring, weights, e)
        if sl.dim == 0:
            continue
        piece = jacobian_piece(h, phi, weights, e)
        degrees.append(e)
        dims.append(piece.quotient_dim)
    return HilbertFingerprint(tuple(degrees), tuple(dims), d_max)


def pieces_equal(
    f: Polynomial,
    g: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    degree: Union[int, Fraction],
) -> bool:
    """Whether the degree-`degree` slices of J_f and J_g coincide.

    Both polynomials must be quasihomogeneous of the same degree; the slices
    are compared through their canonical row-reduced forms.
    """
    df = _require_qh(f, weights, "f")
    dg = _require_qh(g, weights, "g")
    if df != dg:
        raise ValueError(f"degree mismatch: f has degree {df}, g has degree {dg}")
    pf = jacobian_piece(f, phi, weights, degree)
    pg = jacobian_piece(g, phi, weights, degree)
    return pf.rows == pg.rows


@dataclass(frozen=True)
class IdealEquality:
    equal: bool
    witness_degree: Optional[Fraction]
    truncation: Fraction


def ideal_equal_up_to(
    f: Polynomial,
    g: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    truncation: Union[int, Fraction],
) -> IdealEquality:
    """Compare J_f and J_g slice by slice up to the truncation degree.

    Returns the first degree where they differ as a witness.
    """
    _require_qh(f, weights, "f")
    _require_qh(g, weights, "g")
    d_max = Fraction(truncation)
    n_max = int(weights.normalized_degree(d_max))
    for n in range(n_max + 1):
        e = weights.raw_degree(n)
        sl = graded_slice(f.ring, weights, e)
        if sl.dim == 0:
            continue
        if not pieces_equal(f, g, phi, weights, e):
            return IdealEquality(False, e, d_max)
    return IdealEquality(True, None, d_max)


def quotient_basis(
    h: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    degree: Union[int, Fraction],
) -> tuple[Exponents, ...]:
    """Monomials spanning the degree-`degree` slice of the quotient.

    The non-pivot monomials of the row-reduced ideal slice; canonical for
    the package monomial order.
    """
    piece = jacobian_piece(h, phi, weights, degree)
    pivot_set = set(piece.pivots)
    return tuple(m for k, m in enumerate(piece.slice.basis) if k not in pivot_set)
