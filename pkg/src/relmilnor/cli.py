"""Command-line client.

Thin layer over the service handlers: builds the same request models, runs
them in-process by default, or posts them to a running server with
--server. Prints one JSON report on stdout; diagnostics go to stderr.

Exit codes: 0 affirmative, 1 negative verdict, 2 unknown, 64 usage error,
65 bad data, 66 missing file, 69 server unreachable, 70 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from pydantic import ValidationError

from . import __version__
from .qpoly import PolyParseError
from .schemas import (
    CheckQhRequest,
    CrosscheckRequest,
    DecideRequest,
    FingerprintRequest,
    ForwardRequest,
    IdealEqualRequest,
    InferWeightsRequest,
    Lie0Request,
    PencilRequest,
    ProblemModel,
    SaitoRequest,
    ThetaRequest,
    TransportRequest,
)
from .service import HANDLERS, ProblemError

EX_OK = 0
EX_NEGATIVE = 1
EX_UNKNOWN = 2
EX_USAGE = 64
EX_DATAERR = 65
EX_NOINPUT = 66
EX_UNAVAILABLE = 69
EX_SOFTWARE = 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="relmilnor", description=__doc__)
    parser.add_argument("--version", action="version", version=f"relmilnor {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, needs_problem=True, **kwargs):
        p = sub.add_parser(name, **kwargs)
        if needs_problem:
            p.add_argument("problem", help="path to a JSON problem file")
        p.add_argument("--server", default=None, help="POST to a running server instead of computing in-process")
        return p

    cmd("check-qh", help="is f quasihomogeneous for the given weights")
    cmd("infer-weights", help="solve for weight systems making f quasihomogeneous")

    p = cmd("theta", help="graded piece of the tangent fields of V")
    p.add_argument("--degree", required=True, help="field degree (integer or p/q)")
    p.add_argument("--no-vanish", action="store_true", help="do not require vanishing at the origin")

    cmd("lie0", help="degree-0 monomial fields of the ambient weighted space")

    p = cmd("fingerprint", help="graded dimensions of the relative Milnor algebra")
    p.add_argument("--max-degree", default=None, help="truncation degree (default 2*deg(f)+deg(phi))")

    p = cmd("ideal-equal", help="compare graded Jacobian ideals of f and g")
    p.add_argument("--max-degree", default=None)

    p = cmd("pencil", help="full pencil certificate for f and g")
    p.add_argument("--max-degree", default=None)

    p = cmd("decide", help="decide equivalence of f and g relative to V")
    p.add_argument("--max-degree", default=None)
    p.add_argument("--search", action="store_true", help="heuristic substitution search")
    p.add_argument("--draws", type=int, default=200, help="search draw count")
    p.add_argument("--seed", type=int, default=None, help="search seed (default from problem file, else 0)")
    p.add_argument("--subst", action="append", default=None, help="candidate image of the next variable (repeat per variable)")

    p = cmd("transport", help="verify that a substitution transports g to f")
    p.add_argument("--subst", action="append", default=None)
    p.add_argument("--max-degree", default=None)

    p = cmd("forward", help="fingerprint invariance under a V-preserving substitution")
    p.add_argument("--subst", action="append", default=None)
    p.add_argument("--max-degree", default=None)

    p = cmd("crosscheck", needs_problem=False, help="random main-path vs oracle sweep")
    p.add_argument("--instances", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=None)

    cmd("saito-membership", help="does f lie in its own gradient ideal")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def load_problem(path: str) -> ProblemModel:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    return ProblemModel.model_validate(data)


def build_request(args) -> object:
    command = args.command
    if command == "crosscheck":
        return CrosscheckRequest(
            instances=args.instances, seed=args.seed, max_degree=args.max_degree
        )
    problem = load_problem(args.problem)
    if getattr(args, "subst", None):
        problem = problem.model_copy(update={"subst": args.subst})
    if command == "check-qh":
        return CheckQhRequest(problem=problem)
    if command == "infer-weights":
        return InferWeightsRequest(problem=problem)
    if command == "theta":
        return ThetaRequest(problem=problem, degree=args.degree, require_vanish=not args.no_vanish)
    if command == "lie0":
        return Lie0Request(problem=problem)
    if command == "fingerprint":
        return FingerprintRequest(problem=problem, max_degree=args.max_degree)
    if command == "ideal-equal":
        return IdealEqualRequest(problem=problem, max_degree=args.max_degree)
    if command == "pencil":
        return PencilRequest(problem=problem, max_degree=args.max_degree)
    if command == "decide":
        return DecideRequest(
            problem=problem,
            max_degree=args.max_degree,
            search=args.search,
            draws=args.draws,
            seed=args.seed,
        )
    if command == "transport":
        return TransportRequest(problem=problem, subst=None, max_degree=args.max_degree)
    if command == "forward":
        return ForwardRequest(problem=problem, subst=None, max_degree=args.max_degree)
    if command == "saito-membership":
        return SaitoRequest(problem=problem)
    raise UsageError(f"unknown command {command!r}")


def exit_code_for(command: str, report: dict) -> int:
    if command == "check-qh":
        return EX_OK if report.get("quasihomogeneous") else EX_NEGATIVE
    if command == "infer-weights":
        return EX_OK if report.get("canonical_weights") else EX_NEGATIVE
    if command in ("theta", "lie0", "fingerprint"):
        return EX_OK
    if command == "ideal-equal":
        return EX_OK if report.get("equal") else EX_NEGATIVE
    if command == "pencil":
        return EX_OK if report.get("verdict") == "EQUIVALENT" else EX_NEGATIVE
    if command == "decide":
        status = report.get("status")
        if status == "EQUIVALENT":
            return EX_OK
        if status == "NOT_EQUIVALENT":
            return EX_NEGATIVE
        return EX_UNKNOWN
    if command == "transport":
        return EX_OK if report.get("verified") else EX_NEGATIVE
    if command == "forward":
        return EX_OK if report.get("invariant_holds") else EX_NEGATIVE
    if command == "crosscheck":
        return EX_OK if report.get("all_match") else EX_NEGATIVE
    if command == "saito-membership":
        return EX_OK if report.get("member") else EX_NEGATIVE
    return EX_SOFTWARE


def _post(server: str, command: str, request) -> dict:
    import httpx

    url = server.rstrip("/") + "/" + command
    response = httpx.post(url, json=request.model_dump(mode="json"), timeout=300.0)
    if response.status_code == 422:
        detail = response.json().get("detail", response.text)
        raise ProblemError(str(detail))
    response.raise_for_status()
    return response.json()


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE

    if args.command == "serve":
        import uvicorn

        uvicorn.run("relmilnor.service:app", host=args.host, port=args.port)
        return EX_OK

    try:
        request = build_request(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except (json.JSONDecodeError, ValidationError, ProblemError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR

    try:
        server = getattr(args, "server", None)
        if server:
            report_dict = _post(server, args.command, request)
        else:
            _, handler = HANDLERS[args.command]
            report = handler(request)
            report_dict = report.model_dump(mode="json", exclude_none=True)
    except (ProblemError, PolyParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except ConnectionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_UNAVAILABLE
    except Exception as exc:  # noqa: BLE001
        if type(exc).__module__.startswith("httpx"):
            print(f"error: {exc}", file=sys.stderr)
            return EX_UNAVAILABLE
        print(f"internal error: {exc}", file=sys.stderr)
        return EX_SOFTWARE

    print(json.dumps(report_dict, indent=2))
    return exit_code_for(args.command, report_dict)


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
