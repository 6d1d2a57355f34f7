"""Deciding V-preserving right equivalence and verifying coordinate changes.

The pipeline is deliberately asymmetric: a fingerprint mismatch refutes
equivalence (the fingerprint is an invariant), the pencil certificate
affirms it, and everything in between is an honest UNKNOWN. A failed
heuristic search never turns into a NOT_EQUIVALENT.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import linalg
from .groebner import reduce_mod_ideal
from .milnor import hilbert_fingerprint, ideal_equal_up_to
from .pencil import EQUIVALENT as PENCIL_EQUIVALENT
from .pencil import PencilReport, mather_verdict
from .qpoly import (
    INFINITY,
    PolyRing,
    Polynomial,
    Rational,
    WeightSystem,
    format_poly,
    is_quasihomogeneous,
    monomials_of_wdeg,
    parse_poly,
    quasi_degree,
    weighted_order,
)

EQUIVALENT = "EQUIVALENT"
NOT_EQUIVALENT = "NOT_EQUIVALENT"
UNKNOWN = "UNKNOWN"


class NotInvertibleError(ValueError):
    """The substitution's linear part is singular at the origin."""


@dataclass(frozen=True)
class Substitution:
    """Polynomial coordinate change fixing the origin: x_i -> images[i]."""

    images: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.images:
            raise ValueError("substitution needs at least one image")
        ring = self.images[0].ring
        if any(p.ring != ring for p in self.images):
            raise ValueError("substitution images live in different rings")
        if len(self.images) != ring.nvars:
            raise ValueError("substitution needs one image per variable")
        for name, p in zip(ring.variables, self.images):
            if p.constant_term():
                raise ValueError(f"image of {name} has a constant term; germs must fix the origin")

    @property
    def ring(self) -> PolyRing:
        return self.images[0].ring

    @classmethod
    def identity(cls, ring: PolyRing) -> "Substitution":
        return cls(ring.gens())

    @classmethod
    def from_texts(cls, texts: Sequence[str], ring: PolyRing) -> "Substitution":
        if len(texts) != ring.nvars:
            raise ValueError(
                f"expected {ring.nvars} substitution images, got {len(texts)}"
            )
        return cls(tuple(parse_poly(t, ring) for t in texts))

    def image_texts(self) -> list[str]:
        return [format_poly(p) for p in self.images]

    def __str__(self):
        pairs = ", ".join(
            f"{name} -> {format_poly(p)}" for name, p in zip(self.ring.variables, self.images)
        )
        return f"({pairs})"


def linear_part(u: Substitution) -> list[list[Fraction]]:
    """Jacobian of u at the origin: row i is the linear part of images[i]."""
    n = u.ring.nvars
    rows = []
    for p in u.images:
        row = [Fraction(0)] * n
        for exps, coeff in p.terms.items():
            if sum(exps) == 1:
                row[exps.index(1)] = coeff
        rows.append(row)
    return rows


def is_invertible(u: Substitution) -> bool:
    return linalg.det(linear_part(u)) != 0


def apply_subst(f: Polynomial, u: Substitution) -> Polynomial:
    """Exact composition f(u_1, ..., u_n)."""
    if f.ring != u.ring:
        raise ValueError("polynomial and substitution live in different rings")
    ring = f.ring
    powers: list[dict[int, Polynomial]] = [{0: ring.one()} for _ in range(ring.nvars)]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        if e not in cache:
            half = power(i, e // 2)
            cache[e] = half * half if e % 2 == 0 else half * half * u.images[i]
        return cache[e]

    acc = ring.zero()
    for exps, coeff in f.terms.items():
        term = ring.constant(coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        acc = acc + term
    return acc


def compose(u: Substitution, v: Substitution) -> Substitution:
    """(u o v)(x) = u(v(x)): images are u's images pushed through v."""
    return Substitution(tuple(apply_subst(p, v) for p in u.images))


def preserves_V(u: Substitution, phi: Polynomial) -> bool:
    """Whether the invertible germ u maps V = {phi = 0} onto itself.

    Checked as phi o u lying in the principal ideal (phi). Non-invertible u
    raises NotInvertibleError so callers can tell the two failure modes
    apart.
    """
    if phi.is_zero:
        raise ValueError("hypersurface polynomial must be nonzero")
    if not is_invertible(u):
        raise NotInvertibleError("substitution has singular linear part")
    return reduce_mod_ideal(apply_subst(phi, u), [phi]).is_member


def is_degree_preserving(u: Substitution, weights: WeightSystem) -> bool:
    """Every image quasihomogeneous of its variable's weight (zero images
    count as degenerate but weight-compatible)."""
    raw = [Fraction(w) / weights.scale for w in weights.weights]
    return all(
        is_quasihomogeneous(p, weights, w) for p, w in zip(u.images, raw)
    )


def subst_order(u: Substitution, weights: WeightSystem):
    """min_i (weighted_order(u_i - x_i) - w_i); INFINITY for the identity."""
    ring = u.ring
    raw = [Fraction(w) / weights.scale for w in weights.weights]
    best = None
    for i, (p, w) in enumerate(zip(u.images, raw)):
        delta = p - ring.gen(i)
        o = weighted_order(delta, weights)
        if o is INFINITY:
            continue
        val = o - w
        if best is None or val < best:
            best = val
    return INFINITY if best is None else best


def verify_transport(
    u: Substitution,
    f: Polynomial,
    g: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    truncation: Union[int, Fraction],
) -> bool:
    """Whether u transports g to f at the level of graded Jacobian ideals.

    Requires u invertible and g o u quasihomogeneous (a degree-preserving u
    applied to quasihomogeneous g is the main case, but a non-graded u that
    happens to make g o u quasihomogeneous is accepted too, since that is
    exactly what serving non-quasihomogeneous g needs). The verdict is
    ideal_equal_up_to(f, g o u) over degrees <= truncation.
    """
    if not is_invertible(u):
        raise NotInvertibleError("substitution has singular linear part")
    gu = apply_subst(g, u)
    if gu.is_zero or quasi_degree(gu, weights) is None:
        raise ValueError("g o u is not quasihomogeneous; transport cannot be verified")
    return ideal_equal_up_to(f, gu, phi, weights, truncation).equal


@dataclass(frozen=True)
class DecideOptions:
    substitution: Optional[Substitution] = None
    search: bool = False
    search_draws: int = 200
    coeff_bound: int = 3
    seed: int = 0


@dataclass(frozen=True)
class EquivVerdict:
    """Decision plus certificates; statuses EQUIVALENT / NOT_EQUIVALENT /
    UNKNOWN with an explanatory reason tag."""

    status: str
    reason: str
    truncation: Fraction
    witness_degree: Optional[Fraction] = None
    substitution: Optional[Substitution] = None
    pencil_report: Optional[PencilReport] = None

    def to_json_dict(self) -> dict:
        out = {
            "status": self.status,
            "reason": self.reason,
            "truncation": str(self.truncation),
        }
        if self.witness_degree is not None:
            out["witness_degree"] = str(self.witness_degree)
        if self.substitution is not None:
            out["substitution"] = self.substitution.image_texts()
        if self.pencil_report is not None:
            out["pencil"] = self.pencil_report.to_json_dict()
        return out


def random_degree_preserving(
    ring: PolyRing,
    weights: WeightSystem,
    rng: random.Random,
    coeff_bound: int = 3,
) -> Substitution:
    """Random substitution with images on the weight-w_i monomial slices."""
    images = []
    for i in range(ring.nvars):
        degree = weights.raw_degree(weights.weights[i])
        terms = {}
        for m in monomials_of_wdeg(ring, weights, degree):
            num = rng.randint(-coeff_bound, coeff_bound)
            if num:
                terms[m] = Fraction(num, rng.randint(1, coeff_bound))
        images.append(Polynomial(ring, terms))
    return Substitution(tuple(images))


def search_substitution(
    f: Polynomial,
    g: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    truncation: Union[int, Fraction],
    options: DecideOptions,
) -> Optional[Substitution]:
    """Seeded random search for u with u transporting g to f. Heuristic:
    returns None on failure, which proves nothing."""
    rng = random.Random(options.seed)
    for _ in range(options.search_draws):
        u = random_degree_preserving(f.ring, weights, rng, options.coeff_bound)
        if not is_invertible(u):
            continue
        gu = apply_subst(g, u)
        if gu.is_zero or quasi_degree(gu, weights) is None:
            continue
        if ideal_equal_up_to(f, gu, phi, weights, truncation).equal:
            return u
    return None


def decide_rv_equiv(
    f: Polynomial,
    g: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    truncation: Union[int, Fraction],
    options: Optional[DecideOptions] = None,
) -> EquivVerdict:
    """Decide V-preserving right equivalence of f and g up to a truncation.

    Pipeline: (1) fingerprint comparison, where a mismatch refutes; (2)
    direct graded ideal equality followed by the pencil certificate; (3) a
    supplied or searched substitution, verified and then certified through
    the pencil on (f, g o u); (4) UNKNOWN.
    """
    opts = options or DecideOptions()
    d_max = Fraction(truncation)
    df = quasi_degree(f, weights)
    if f.is_zero or df is None:
        raise ValueError("f must be quasihomogeneous")
    if g.is_zero:
        raise ValueError("g must be nonzero")
    dg = quasi_degree(g, weights)

    if dg is not None:
        fp_f = hilbert_fingerprint(f, phi, weights, d_max)
        fp_g = hilbert_fingerprint(g, phi, weights, d_max)
        if fp_f != fp_g:
            witness = next(
                (e for e, a, b in zip(fp_f.degrees, fp_f.dims, fp_g.dims) if a != b),
                None,
            )
            return EquivVerdict(
                status=NOT_EQUIVALENT,
                reason="fingerprint_mismatch",
                truncation=d_max,
                witness_degree=witness,
            )

    if dg == df and ideal_equal_up_to(f, g, phi, weights, d_max).equal:
        report = mather_verdict(f, g, phi, weights, d_max)
        if report.verdict == PENCIL_EQUIVALENT:
            # attach a supplied substitution when it independently verifies,
            # so the verdict carries every certificate the caller can get
            attached = None
            if opts.substitution is not None:
                try:
                    if verify_transport(opts.substitution, f, g, phi, weights, d_max):
                        attached = opts.substitution
                except (NotInvertibleError, ValueError):
                    attached = None
            return EquivVerdict(
                status=EQUIVALENT,
                reason="pencil_certificate",
                truncation=d_max,
                substitution=attached,
                pencil_report=report,
            )

    candidate = opts.substitution
    if candidate is None and opts.search:
        candidate = search_substitution(f, g, phi, weights, d_max, opts)
    if candidate is not None:
        try:
            transported = verify_transport(candidate, f, g, phi, weights, d_max)
        except (NotInvertibleError, ValueError):
            transported = False
        if transported:
            gu = apply_subst(g, candidate)
            if quasi_degree(gu, weights) == df:
                report = mather_verdict(f, gu, phi, weights, d_max)
                if report.verdict == PENCIL_EQUIVALENT:
                    return EquivVerdict(
                        status=EQUIVALENT,
                        reason="transport_certificate",
                        truncation=d_max,
                        substitution=candidate,
                        pencil_report=report,
                    )

    return EquivVerdict(status=UNKNOWN, reason="no_certificate_found", truncation=d_max)


def forward_invariance_check(
    psi: Substitution,
    f: Polynomial,
    phi: Polynomial,
    weights: WeightSystem,
    truncation: Union[int, Fraction],
) -> bool:
    """Fingerprints of f and f o psi must agree for V-preserving psi.

    psi must be invertible, V-preserving, and f o psi quasihomogeneous of
    f's degree (true for degree-preserving psi); returns the entry-wise
    fingerprint comparison up to the truncation.
    """
    if not preserves_V(psi, phi):
        raise ValueError("substitution does not preserve the hypersurface")
    g = apply_subst(f, psi)
    if g.is_zero or quasi_degree(g, weights) is None:
        raise ValueError("f o psi is not quasihomogeneous")
    return hilbert_fingerprint(f, phi, weights, truncation) == hilbert_fingerprint(
        g, phi, weights, truncation
    )
