import json
from pathlib import Path

import pytest

from relmilnor.schemas import ProblemModel, problem_schema, reports_schema
from relmilnor.service import HANDLERS

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"


def load(name):
    return json.loads((SCHEMA_DIR / name).read_text())


def test_problem_schema_file_in_sync():
    assert load("problem.schema.json") == problem_schema()


def test_reports_schema_file_in_sync():
    assert load("reports.schema.json") == reports_schema()


def test_problem_model_accepts_minimal():
    p = ProblemModel(variables=["x"], weights=[1])
    assert p.phi is None and p.f is None


def test_problem_model_rejects_bad_weights():
    with pytest.raises(ValueError):
        ProblemModel(variables=["x"], weights=[0])
    with pytest.raises(ValueError):
        ProblemModel(variables=["x", "y"], weights=[1])


def test_every_handler_report_validates():
    jsonschema = pytest.importorskip("jsonschema")
    schema = reports_schema()
    problem = ProblemModel(
        variables=["x", "y"],
        weights=[1, 1],
        phi="x*y",
        f="x^3 + y^3",
        g="2*x^3 + 5*y^3",
        subst=["1/2*x", "y"],
    )
    overrides = {
        "theta": {"degree": 0},
        "crosscheck": {"instances": 2, "seed": 1, "max_degree": 4},
        "fingerprint": {"max_degree": 5},
    }
    for name, (request_model, handler) in HANDLERS.items():
        kwargs = overrides.get(name, {})
        if "problem" in request_model.model_fields:
            kwargs["problem"] = problem
        report = handler(request_model(**kwargs))
        payload = report.model_dump(mode="json")
        jsonschema.validate(payload, schema)
        assert payload["command"] == name
