"""Vector fields tangent to a hypersurface V = {phi = 0}, graded by weight.

A polynomial vector field xi = sum_i a_i d/dx_i is tangent to V when
xi(phi) lies in the principal ideal (phi); it is logarithmic and vanishing
at the origin when additionally every a_i has zero constant term. Graded
pieces of the tangent module are computed as nullspaces of exact linear
systems, one weighted degree at a time, and come back with canonical
(row-reduced) bases.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import linalg
from .qpoly import (
    INFINITY,
    GradedSlice,
    PolyRing,
    Polynomial,
    Rational,
    WeightSystem,
    format_poly,
    graded_slice,
    is_quasihomogeneous,
    quasi_degree,
    term_key,
    weighted_order,
)


@dataclass(frozen=True)
class VectorField:
    """Polynomial vector field, one component per ring variable."""

    components: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("vector field needs at least one component")
        ring = self.components[0].ring
        if any(c.ring != ring for c in self.components):
            raise ValueError("vector field components live in different rings")
        if len(self.components) != ring.nvars:
            raise ValueError("vector field needs one component per variable")

    @property
    def ring(self) -> PolyRing:
        return self.components[0].ring

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply_field(self, f)

    def __str__(self):
        parts = []
        for comp, name in zip(self.components, self.ring.variables):
            if comp.is_zero:
                continue
            text = format_poly(comp)
            if len(comp.terms) > 1 or text.startswith("-"):
                text = f"({text})"
            parts.append(f"{text}*d/d{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"VectorField({self})"


def apply_field(xi: VectorField, f: Polynomial) -> Polynomial:
    """xi(f) = sum_i a_i * df/dx_i."""
    if f.ring != xi.ring:
        raise ValueError("field and polynomial live in different rings")
    acc = f.ring.zero()
    for i, a in enumerate(xi.components):
        if not a.is_zero:
            acc = acc + a * f.diff(i)
    return acc


def vf_order(xi: VectorField, weights: WeightSystem):
    """Weighted order of a field: min_i (order(a_i) - w_i), raw units.

    INFINITY for the zero field.
    """
    raw = [Fraction(w) / weights.scale for w in weights.weights]
    best = None
    for a, w in zip(xi.components, raw):
        o = weighted_order(a, weights)
        if o is INFINITY:
            continue
        val = o - w
        if best is None or val < best:
            best = val
    return INFINITY if best is None else best


def field_degree(xi: VectorField, weights: WeightSystem) -> Optional[Fraction]:
    """Raw quasihomogeneous degree of xi, or None if it is not graded.

    xi has degree e when every nonzero component a_i is quasihomogeneous of
    degree e + w_i. None for the zero field too.
    """
    raw = [Fraction(w) / weights.scale for w in weights.weights]
    degrees = set()
    for a, w in zip(xi.components, raw):
        if a.is_zero:
            continue
        d = quasi_degree(a, weights)
        if d is None:
            return None
        degrees.add(d - w)
    if len(degrees) != 1:
        return None
    return degrees.pop()


def bracket(xi: VectorField, eta: VectorField) -> VectorField:
    """Lie bracket [xi, eta], components xi(eta_i) - eta(xi_i)."""
    if xi.ring != eta.ring:
        raise ValueError("fields live in different rings")
    comps = tuple(
        apply_field(xi, eta.components[i]) - apply_field(eta, xi.components[i])
        for i in range(xi.ring.nvars)
    )
    return VectorField(comps)


def euler_field(ring: PolyRing, weights: WeightSystem) -> VectorField:
    """sum_i w_i x_i d/dx_i with the raw weights."""
    if weights.nvars != ring.nvars:
        raise ValueError("weight count does not match ring arity")
    raw = [Fraction(w) / weights.scale for w in weights.weights]
    return VectorField(tuple(ring.gen(i) * raw[i] for i in range(ring.nvars)))


def monomial_field(ring: PolyRing, exps: Sequence[int], i: int) -> VectorField:
    """x^exps d/dx_i."""
    comps = [ring.zero()] * ring.nvars
    comps[i] = ring.monomial(exps)
    return VectorField(tuple(comps))


def lie0_ambient(ring: PolyRing, weights: WeightSystem) -> tuple[VectorField, ...]:
    """Monomial basis of the degree-0 ambient tangent fields.

    These are the x^P d/dx_i with wdeg(P) = w_i; they all vanish at the
    origin and they close under the Lie bracket. Listed with i ascending and
    monomials descending, which is the canonical order everywhere else.
    """
    from .qpoly import monomials_of_wdeg

    if weights.nvars != ring.nvars:
        raise ValueError("weight count does not match ring arity")
    fields = []
    for i in range(ring.nvars):
        degree = weights.raw_degree(weights.weights[i])
        for m in monomials_of_wdeg(ring, weights, degree):
            fields.append(monomial_field(ring, m, i))
    return tuple(fields)


@dataclass(frozen=True)
class TangentBasis:
    """Canonical basis of one graded piece of the tangent module of V."""

    hypersurface: Polynomial
    weights: WeightSystem
    degree: Fraction
    vanish_at_origin: bool
    component_slices: tuple[GradedSlice, ...]
    fields: tuple[VectorField, ...]

    @property
    def dim(self) -> int:
        return len(self.fields)

    def coordinates(self, xi: VectorField) -> list[Fraction]:
        """Concatenated slice coordinates of a field of this degree."""
        vec: list[Fraction] = []
        for comp, sl in zip(xi.components, self.component_slices):
            vec.extend(sl.coefficient_vector(comp))
        return vec


@functools.lru_cache(maxsize=None)
def theta_piece(
    phi: Polynomial,
    weights: WeightSystem,
    degree: Union[int, Fraction],
    require_vanish: bool = True,
) -> TangentBasis:
    """Graded piece of the fields tangent to V = {phi = 0}.

    Solves xi(phi) = lam * phi with xi of quasihomogeneous degree `degree`
    (raw units) and lam of matching degree, then row-reduces the xi part to
    a canonical basis. With require_vanish the components may not have
    constant terms, which restricts the degree -w_i pieces.
    """
    if phi.is_zero:
        raise ValueError("hypersurface polynomial must be nonzero")
    ring = phi.ring
    if weights.nvars != ring.nvars:
        raise ValueError("weight count does not match ring arity")
    r = quasi_degree(phi, weights)
    if r is None:
        raise ValueError("hypersurface polynomial must be quasihomogeneous")
    e = Fraction(degree)

    n = ring.nvars
    raw_w = [Fraction(w) / weights.scale for w in weights.weights]

    comp_slices = []
    comp_bases: list[list] = []
    for i in range(n):
        sl = graded_slice(ring, weights, e + raw_w[i])
        basis = list(sl.basis)
        if require_vanish:
            basis = [m for m in basis if any(m)]
            sl = GradedSlice(ring, weights, sl.degree, tuple(basis))
        comp_slices.append(sl)
        comp_bases.append(basis)

    lam_slice = graded_slice(ring, weights, e)
    target = graded_slice(ring, weights, e + r)

    ncols_fields = sum(len(b) for b in comp_bases)
    ncols = ncols_fields + lam_slice.dim
    if ncols == 0 or target.dim == 0:
        return TangentBasis(phi, weights, e, require_vanish, tuple(comp_slices), ())

    row_index = {m: k for k, m in enumerate(target.basis)}
    matrix = [[Fraction(0)] * ncols for _ in range(target.dim)]
    col = 0
    partials = [phi.diff(i) for i in range(n)]
    for i in range(n):
        for m in comp_bases[i]:
            prod = ring.monomial(m) * partials[i]
            for exps, coeff in prod.terms.items():
                matrix[row_index[exps]][col] += coeff
            col += 1
    for p in lam_slice.basis:
        prod = ring.monomial(p) * phi
        for exps, coeff in prod.terms.items():
            matrix[row_index[exps]][col] -= coeff
        col += 1

    kernel = linalg.nullspace(matrix, ncols)
    projected = [v[:ncols_fields] for v in kernel]
    reduced, _ = linalg.rref(projected)

    fields = []
    for rowvec in reduced:
        comps = []
        offset = 0
        for i in range(n):
            basis = comp_bases[i]
            comps.append(
                Polynomial(ring, {m: rowvec[offset + k] for k, m in enumerate(basis)})
            )
            offset += len(basis)
        fields.append(VectorField(tuple(comps)))
    return TangentBasis(phi, weights, e, require_vanish, tuple(comp_slices), tuple(fields))


def is_tangent(xi: VectorField, phi: Polynomial) -> bool:
    """Whether xi(phi) lies in the principal ideal (phi)."""
    from .groebner import reduce_mod_ideal

    return reduce_mod_ideal(apply_field(xi, phi), [phi]).is_member
