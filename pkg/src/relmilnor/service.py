"""Command handlers and the FastAPI application.

Each handler is an ordinary function from a request model to a report
model; the HTTP layer and the CLI both call into the same functions, so
there is exactly one implementation of every command.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

from fastapi import FastAPI, HTTPException

from . import __version__, equiv, milnor, oracle, qpoly
from .groebner import reduce_mod_ideal
from .logder import lie0_ambient, theta_piece
from .pencil import mather_verdict
from .qpoly import PolyParseError, PolyRing, WeightSystem, format_poly, parse_poly
from .schemas import (
    CheckQhReport,
    CheckQhRequest,
    CrosscheckInstanceOut,
    CrosscheckReport,
    CrosscheckRequest,
    DecideReport,
    DecideRequest,
    FieldOut,
    FingerprintOut,
    FingerprintReport,
    FingerprintRequest,
    ForwardReport,
    ForwardRequest,
    IdealEqualReport,
    IdealEqualRequest,
    InferWeightsReport,
    InferWeightsRequest,
    Lie0Report,
    Lie0Request,
    PencilCommandReport,
    PencilOut,
    PencilRequest,
    ProblemModel,
    SaitoReport,
    SaitoRequest,
    ThetaReport,
    ThetaRequest,
    TransportReport,
    TransportRequest,
)


class ProblemError(ValueError):
    """Bad problem data: unparsable polynomials, missing fields, etc."""


def parse_rational(value: Union[int, str, Fraction]) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ProblemError(f"bad rational literal {value!r}: {exc}") from None


class Context:
    """Parsed problem data; fields are parsed lazily and validated once."""

    def __init__(self, problem: ProblemModel):
        self.problem = problem
        self.ring = PolyRing(tuple(problem.variables))
        self.weights = WeightSystem(problem.weights)

    def _parse(self, text: str, label: str) -> qpoly.Polynomial:
        try:
            return parse_poly(text, self.ring)
        except PolyParseError as exc:
            raise ProblemError(f"{label}: {exc}") from None

    def poly(self, label: str, required: bool = True) -> Optional[qpoly.Polynomial]:
        text = getattr(self.problem, label)
        if text is None:
            if required:
                raise ProblemError(f"problem file needs field {label!r} for this command")
            return None
        return self._parse(text, label)

    def substitution(self, override: Optional[list[str]]) -> equiv.Substitution:
        texts = override if override is not None else self.problem.subst
        if not texts:
            raise ProblemError("this command needs substitution images (subst)")
        try:
            return equiv.Substitution.from_texts(texts, self.ring)
        except PolyParseError as exc:
            raise ProblemError(f"subst: {exc}") from None

    def truncation(self, override: Optional[Union[int, str]]) -> Fraction:
        """Explicit value, or the default 2*deg(f) + deg(phi)."""
        raw = override if override is not None else self.problem.truncation
        if raw is not None:
            value = parse_rational(raw)
            if value < 0:
                raise ProblemError("truncation must be nonnegative")
            return value
        f = self.poly("f")
        phi = self.poly("phi")
        df = qpoly.quasi_degree(f, self.weights)
        dphi = qpoly.quasi_degree(phi, self.weights)
        if df is None or dphi is None:
            raise ProblemError(
                "cannot infer a default truncation from non-quasihomogeneous data; "
                "set 'truncation' explicitly"
            )
        return 2 * df + dphi


def _field_out(xi) -> FieldOut:
    return FieldOut(components=[format_poly(c) for c in xi.components])


def run_check_qh(req: CheckQhRequest) -> CheckQhReport:
    ctx = Context(req.problem)
    f = ctx.poly("f")
    d = qpoly.quasi_degree(f, ctx.weights)
    euler_ok = False
    if d is not None:
        euler_ok = qpoly.euler_apply(f, ctx.weights) == f * d
    return CheckQhReport(
        version=__version__,
        quasihomogeneous=d is not None,
        degree=str(d) if d is not None else None,
        euler_identity_ok=euler_ok,
        weights=list(ctx.weights.weights),
    )


def run_infer_weights(req: InferWeightsRequest) -> InferWeightsReport:
    ctx = Context(req.problem)
    f = ctx.poly("f")
    if f.is_zero:
        raise ProblemError("cannot infer weights for the zero polynomial")
    inferred = qpoly.infer_weights(f)
    canonical_weights = None
    canonical_degree = None
    if inferred.canonical is not None:
        ws, degree = inferred.canonical
        canonical_weights = list(ws.weights)
        canonical_degree = str(degree)
    return InferWeightsReport(
        version=__version__,
        dimension=inferred.dimension,
        basis=[[str(c) for c in vec] for vec in inferred.basis],
        canonical_weights=canonical_weights,
        canonical_degree=canonical_degree,
    )


def run_theta(req: ThetaRequest) -> ThetaReport:
    ctx = Context(req.problem)
    phi = ctx.poly("phi")
    degree = parse_rational(req.degree)
    basis = theta_piece(phi, ctx.weights, degree, req.require_vanish)
    return ThetaReport(
        version=__version__,
        degree=str(degree),
        require_vanish=req.require_vanish,
        dimension=basis.dim,
        fields=[_field_out(xi) for xi in basis.fields],
    )


def run_lie0(req: Lie0Request) -> Lie0Report:
    ctx = Context(req.problem)
    fields = lie0_ambient(ctx.ring, ctx.weights)
    return Lie0Report(
        version=__version__,
        count=len(fields),
        fields=[_field_out(xi) for xi in fields],
    )


def run_fingerprint(req: FingerprintRequest) -> FingerprintReport:
    ctx = Context(req.problem)
    f = ctx.poly("f")
    phi = ctx.poly("phi")
    d_max = ctx.truncation(req.max_degree)
    fp = milnor.hilbert_fingerprint(f, phi, ctx.weights, d_max)
    return FingerprintReport(
        version=__version__,
        fingerprint=FingerprintOut(
            degrees=[str(d) for d in fp.degrees],
            dims=list(fp.dims),
            truncation=str(fp.truncation),
        ),
    )


def run_ideal_equal(req: IdealEqualRequest) -> IdealEqualReport:
    ctx = Context(req.problem)
    f = ctx.poly("f")
    g = ctx.poly("g")
    phi = ctx.poly("phi")
    d_max = ctx.truncation(req.max_degree)
    result = milnor.ideal_equal_up_to(f, g, phi, ctx.weights, d_max)
    return IdealEqualReport(
        version=__version__,
        equal=result.equal,
        witness_degree=str(result.witness_degree) if result.witness_degree is not None else None,
        truncation=str(result.truncation),
    )


def run_pencil(req: PencilRequest) -> PencilCommandReport:
    ctx = Context(req.problem)
    f = ctx.poly("f")
    g = ctx.poly("g")
    phi = ctx.poly("phi")
    d_max = ctx.truncation(req.max_degree)
    report = mather_verdict(f, g, phi, ctx.weights, d_max)
    payload = report.to_json_dict()
    return PencilCommandReport(version=__version__, **payload)


def run_decide(req: DecideRequest) -> DecideReport:
    ctx = Context(req.problem)
    f = ctx.poly("f")
    g = ctx.poly("g")
    phi = ctx.poly("phi")
    d_max = ctx.truncation(req.max_degree)
    subst = None
    if req.problem.subst:
        subst = ctx.substitution(None)
    seed = req.seed if req.seed is not None else (req.problem.seed or 0)
    options = equiv.DecideOptions(
        substitution=subst,
        search=req.search,
        search_draws=req.draws,
        seed=seed,
    )
    verdict = equiv.decide_rv_equiv(f, g, phi, ctx.weights, d_max, options)
    pencil_out = None
    if verdict.pencil_report is not None:
        pencil_out = PencilOut(**verdict.pencil_report.to_json_dict())
    return DecideReport(
        version=__version__,
        status=verdict.status,
        reason=verdict.reason,
        truncation=str(verdict.truncation),
        witness_degree=str(verdict.witness_degree) if verdict.witness_degree is not None else None,
        substitution=verdict.substitution.image_texts() if verdict.substitution else None,
        pencil=pencil_out,
        seed=seed if req.search else None,
    )


def run_transport(req: TransportRequest) -> TransportReport:
    ctx = Context(req.problem)
    f = ctx.poly("f")
    g = ctx.poly("g")
    phi = ctx.poly("phi")
    u = ctx.substitution(req.subst)
    d_max = ctx.truncation(req.max_degree)
    try:
        verified = equiv.verify_transport(u, f, g, phi, ctx.weights, d_max)
    except (equiv.NotInvertibleError, ValueError) as exc:
        raise ProblemError(str(exc)) from None
    return TransportReport(
        version=__version__,
        verified=verified,
        truncation=str(d_max),
        substitution=u.image_texts(),
    )


def run_forward(req: ForwardRequest) -> ForwardReport:
    ctx = Context(req.problem)
    f = ctx.poly("f")
    phi = ctx.poly("phi")
    psi = ctx.substitution(req.subst)
    d_max = ctx.truncation(req.max_degree)
    try:
        holds = equiv.forward_invariance_check(psi, f, phi, ctx.weights, d_max)
    except (equiv.NotInvertibleError, ValueError) as exc:
        raise ProblemError(str(exc)) from None
    return ForwardReport(
        version=__version__,
        invariant_holds=holds,
        truncation=str(d_max),
        substitution=psi.image_texts(),
    )


def run_crosscheck(req: CrosscheckRequest) -> CrosscheckReport:
    if req.instances < 1:
        raise ProblemError("instances must be at least 1")
    results = oracle.run_crosscheck(req.instances, req.seed, req.max_degree)
    outs = [
        CrosscheckInstanceOut(
            index=r.index,
            variables=list(r.variables),
            weights=list(r.weights),
            phi=r.phi,
            f=r.f,
            max_degree=str(r.max_degree),
            tangent_match=r.tangent_match,
            ideal_match=r.ideal_match,
            fingerprint_match=r.fingerprint_match,
            ok=r.ok,
        )
        for r in results
    ]
    return CrosscheckReport(
        version=__version__,
        instances=req.instances,
        seed=req.seed,
        all_match=all(r.ok for r in results),
        results=outs,
    )


def run_saito(req: SaitoRequest) -> SaitoReport:
    ctx = Context(req.problem)
    f = ctx.poly("f")
    if f.is_zero:
        raise ProblemError("f must be nonzero")
    gradient = [f.diff(i) for i in range(ctx.ring.nvars)]
    gradient = [p for p in gradient if not p.is_zero]
    if not gradient:
        raise ProblemError("f has a zero gradient; membership in the empty ideal is trivial")
    result = reduce_mod_ideal(f, gradient, ctx.weights)
    return SaitoReport(
        version=__version__,
        member=result.is_member,
        remainder=format_poly(result.remainder),
        f=format_poly(f),
    )


HANDLERS = {
    "check-qh": (CheckQhRequest, run_check_qh),
    "infer-weights": (InferWeightsRequest, run_infer_weights),
    "theta": (ThetaRequest, run_theta),
    "lie0": (Lie0Request, run_lie0),
    "fingerprint": (FingerprintRequest, run_fingerprint),
    "ideal-equal": (IdealEqualRequest, run_ideal_equal),
    "pencil": (PencilRequest, run_pencil),
    "decide": (DecideRequest, run_decide),
    "transport": (TransportRequest, run_transport),
    "forward": (ForwardRequest, run_forward),
    "crosscheck": (CrosscheckRequest, run_crosscheck),
    "saito-membership": (SaitoRequest, run_saito),
}


def create_app() -> FastAPI:
    app = FastAPI(title="relmilnor", version=__version__)

    def wrap(handler):
        def route(req):
            try:
                return handler(req)
            except ProblemError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from None
            except ValueError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from None

        return route

    for name, (request_model, handler) in HANDLERS.items():
        route = wrap(handler)
        route.__annotations__ = {"req": request_model}
        app.post(f"/{name}", name=name.replace("-", "_"))(route)

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    return app


app = create_app()
