"""Request and report models for the service and CLI.

One pydantic model per command in each direction. The JSON Schema files
shipped in schemas/ are generated from these models, so the models are the
single source of truth for the wire format.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, TypeAdapter, field_validator


class ProblemModel(BaseModel):
    """A problem file: ring, weights, and the polynomial data as text."""

    variables: list[str] = Field(min_length=1)
    weights: list[int] = Field(min_length=1)
    phi: Optional[str] = None
    f: Optional[str] = None
    g: Optional[str] = None
    truncation: Optional[Union[int, str]] = None
    subst: Optional[list[str]] = None
    seed: Optional[int] = None

    @field_validator("weights")
    @classmethod
    def _positive(cls, v):
        if any(w <= 0 for w in v):
            raise ValueError("weights must be positive integers")
        return v

    def model_post_init(self, _ctx):
        if len(self.weights) != len(self.variables):
            raise ValueError("weights length must equal variables length")


# --- requests ----------------------------------------------------------------

class CheckQhRequest(BaseModel):
    problem: ProblemModel


class InferWeightsRequest(BaseModel):
    problem: ProblemModel


class ThetaRequest(BaseModel):
    problem: ProblemModel
    degree: Union[int, str]
    require_vanish: bool = True


class Lie0Request(BaseModel):
    problem: ProblemModel


class FingerprintRequest(BaseModel):
    problem: ProblemModel
    max_degree: Optional[Union[int, str]] = None


class IdealEqualRequest(BaseModel):
    problem: ProblemModel
    max_degree: Optional[Union[int, str]] = None


class PencilRequest(BaseModel):
    problem: ProblemModel
    max_degree: Optional[Union[int, str]] = None


class DecideRequest(BaseModel):
    problem: ProblemModel
    max_degree: Optional[Union[int, str]] = None
    search: bool = False
    draws: int = 200
    seed: Optional[int] = None


class TransportRequest(BaseModel):
    problem: ProblemModel
    subst: Optional[list[str]] = None
    max_degree: Optional[Union[int, str]] = None


class ForwardRequest(BaseModel):
    problem: ProblemModel
    subst: Optional[list[str]] = None
    max_degree: Optional[Union[int, str]] = None


class CrosscheckRequest(BaseModel):
    instances: int = 50
    seed: int = 0
    max_degree: Optional[int] = None


class SaitoRequest(BaseModel):
    problem: ProblemModel


# --- reports -------------------------------------------------------------------

class CheckQhReport(BaseModel):
    command: Literal["check-qh"] = "check-qh"
    version: str
    quasihomogeneous: bool
    degree: Optional[str] = None
    euler_identity_ok: bool
    weights: list[int]


class InferWeightsReport(BaseModel):
    command: Literal["infer-weights"] = "infer-weights"
    version: str
    dimension: int
    basis: list[list[str]]
    canonical_weights: Optional[list[int]] = None
    canonical_degree: Optional[str] = None


class FieldOut(BaseModel):
    """A vector field as one polynomial text per component."""

    components: list[str]


class ThetaReport(BaseModel):
    command: Literal["theta"] = "theta"
    version: str
    degree: str
    require_vanish: bool
    dimension: int
    fields: list[FieldOut]


class Lie0Report(BaseModel):
    command: Literal["lie0"] = "lie0"
    version: str
    count: int
    fields: list[FieldOut]


class FingerprintOut(BaseModel):
    degrees: list[str]
    dims: list[int]
    truncation: str


class FingerprintReport(BaseModel):
    command: Literal["fingerprint"] = "fingerprint"
    version: str
    fingerprint: FingerprintOut


class IdealEqualReport(BaseModel):
    command: Literal["ideal-equal"] = "ideal-equal"
    version: str
    equal: bool
    witness_degree: Optional[str] = None
    truncation: str


class PencilOut(BaseModel):
    s: int
    exceptional_poly: list[str]
    rational_roots: list[str]
    endpoints_ok: bool
    tangent_inclusion: bool
    hypothesis_ok: bool
    verdict: str
    truncation: str


class PencilCommandReport(BaseModel):
    command: Literal["pencil"] = "pencil"
    version: str
    s: int
    exceptional_poly: list[str]
    rational_roots: list[str]
    endpoints_ok: bool
    tangent_inclusion: bool
    hypothesis_ok: bool
    verdict: str
    truncation: str


class DecideReport(BaseModel):
    command: Literal["decide"] = "decide"
    version: str
    status: str
    reason: str
    truncation: str
    witness_degree: Optional[str] = None
    substitution: Optional[list[str]] = None
    pencil: Optional[PencilOut] = None
    seed: Optional[int] = None


class TransportReport(BaseModel):
    command: Literal["transport"] = "transport"
    version: str
    verified: bool
    truncation: str
    substitution: list[str]


class ForwardReport(BaseModel):
    command: Literal["forward"] = "forward"
    version: str
    invariant_holds: bool
    truncation: str
    substitution: list[str]


class CrosscheckInstanceOut(BaseModel):
    index: int
    variables: list[str]
    weights: list[int]
    phi: str
    f: str
    max_degree: str
    tangent_match: bool
    ideal_match: bool
    fingerprint_match: bool
    ok: bool


class CrosscheckReport(BaseModel):
    command: Literal["crosscheck"] = "crosscheck"
    version: str
    instances: int
    seed: int
    all_match: bool
    results: list[CrosscheckInstanceOut]


class SaitoReport(BaseModel):
    command: Literal["saito-membership"] = "saito-membership"
    version: str
    member: bool
    remainder: str
    f: str


AnyReport = Union[
    CheckQhReport,
    InferWeightsReport,
    ThetaReport,
    Lie0Report,
    FingerprintReport,
    IdealEqualReport,
    PencilCommandReport,
    DecideReport,
    TransportReport,
    ForwardReport,
    CrosscheckReport,
    SaitoReport,
]


def problem_schema() -> dict:
    return ProblemModel.model_json_schema()


def reports_schema() -> dict:
    return TypeAdapter(AnyReport).json_schema()
