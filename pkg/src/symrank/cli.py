"""Command-line client for the toolkit.

Subcommands map one-to-one onto the service endpoints: count, oracle,
build, verify, density, plus serve to start the HTTP service.  By
default the service handlers run in-process; --server URL sends the
same request models to a running instance over HTTP instead.

Exit codes: 0 success, 1 a mathematical check failed (a violated bound,
a failed certificate, an oracle mismatch), 2 usage or validation error,
3 an enumeration refused its budget.  A code measuring as not perfect
or not maximum is a result, not a failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from symrank.errors import BudgetExceeded, ConstructionError
from symrank.matspace import DEFAULT_AMBIENT_BUDGET
from symrank.codes import ALL_CHECKS, DEFAULT_CODEWORD_BUDGET
from symrank.service.schemas import (BuildRequest, BuildResponse, CodeModel,
                                     CountRequest, CountResponse,
                                     DensityRequest, DensityResponse,
                                     OracleRequest, OracleResponse,
                                     VerifyRequest, VerifyResponse)

__all__ = ["main", "entrypoint"]


# ---------------------------------------------------------------------------
# transport


class LocalClient:
    """Runs the service handlers in-process."""

    def count(self, req: CountRequest) -> CountResponse:
        from symrank.service.app import run_count
        return run_count(req)

    def oracle(self, req: OracleRequest) -> OracleResponse:
        from symrank.service.app import run_oracle
        return run_oracle(req)

    def build(self, req: BuildRequest) -> BuildResponse:
        from symrank.service.app import run_build
        return run_build(req)

    def verify(self, req: VerifyRequest) -> VerifyResponse:
        from symrank.service.app import run_verify
        return run_verify(req)

    def density(self, req: DensityRequest) -> DensityResponse:
        from symrank.service.app import run_density
        return run_density(req)


class HttpClient:
    """Sends request models to a running service."""

    def __init__(self, base_url: str):
        self.base_url = base_url.rstrip("/")

    def _post(self, path: str, req, response_cls):
        import httpx

        try:
            r = httpx.post(f"{self.base_url}{path}", json=req.model_dump(),
                           timeout=600.0)
        except httpx.HTTPError as e:
            raise ValueError(f"server request failed: {e}") from e
        if r.status_code != 200:
            self._raise(r)
        return response_cls(**r.json())

    @staticmethod
    def _raise(r) -> None:
        try:
            payload = r.json()
        except Exception:
            payload = {}
        kind = payload.get("kind", "validation")
        detail = payload.get("detail", f"HTTP {r.status_code}")
        if kind == "budget":
            raise BudgetExceeded(str(payload.get("what", detail)),
                                 int(payload.get("size", 0)),
                                 int(payload.get("budget", 0)))
        if kind == "construction":
            raise ConstructionError(str(detail))
        raise ValueError(str(detail))

    def count(self, req):
        return self._post("/count", req, CountResponse)

    def oracle(self, req):
        return self._post("/oracle", req, OracleResponse)

    def build(self, req):
        return self._post("/build", req, BuildResponse)

    def verify(self, req):
        return self._post("/verify", req, VerifyResponse)

    def density(self, req):
        return self._post("/density", req, DensityResponse)


def _client(args):
    if args.server:
        return HttpClient(args.server)
    return LocalClient()


# ---------------------------------------------------------------------------
# output


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines)


def _csv(headers: list[str], rows: list[list[str]]) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(headers)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _ratio(d: dict) -> str:
    if d["den"] == "1":
        return d["num"]
    return f"{d['num']}/{d['den']}"


def _formatted(args, headers, rows, model, preamble="", footer="") -> str:
    if args.format == "json":
        return json.dumps(model.model_dump(), indent=2)
    if args.format == "csv":
        return _csv(headers, rows)
    parts = []
    if preamble:
        parts.append(preamble)
    if args.seed is not None:
        parts.append(f"seed: {args.seed}")
    parts.append(_table(headers, rows))
    if footer:
        parts.append(footer)
    return "\n".join(parts)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_count(args) -> int:
    req = CountRequest(q=args.q, m=args.m, t_max=args.t_max)
    resp = _client(args).count(req)
    headers = ["t", "sphere", "ball", "sphere_lower", "sphere_upper",
               "ball_lower", "ball_upper", "within_bounds"]
    rows = [[str(r.t), r.sphere, r.ball, r.sphere_lower, r.sphere_upper,
             r.ball_lower, r.ball_upper, str(r.within_bounds).lower()]
            for r in resp.rows]
    _emit(_formatted(args, headers, rows, resp,
                     preamble=f"spheres and balls for q={resp.q}, m={resp.m}"),
          args.out)
    return 0


def _cmd_oracle(args) -> int:
    req = OracleRequest(q=args.q, m=args.m, ambient_budget=args.budget_ambient)
    resp = _client(args).oracle(req)
    headers = ["t", "census", "formula", "match"]
    rows = [[str(r.t), r.census, r.formula, str(r.match).lower()]
            for r in resp.rows]
    verdict = "census matches the closed forms" if resp.ok \
        else "MISMATCH between census and closed forms"
    _emit(_formatted(args, headers, rows, resp,
                     preamble=f"rank census for q={resp.q}, m={resp.m}",
                     footer=verdict),
          args.out)
    return 0 if resp.ok else 1


def _cmd_build(args) -> int:
    req = BuildRequest(q=args.q, m=args.m, d=args.d,
                       codeword_budget=args.budget_codewords)
    resp = _client(args).build(req)
    path = args.out or f"code_q{args.q}_m{args.m}_d{args.d}.json"
    with open(path, "w") as fh:
        json.dump(resp.code.model_dump(), fh, indent=2)
        fh.write("\n")
    if args.format == "json":
        print(json.dumps(resp.model_dump(), indent=2))
    else:
        lines = [
            f"built ({args.q}, {args.m}, {args.d}) via the "
            f"{resp.construction} construction",
            f"dimension: {resp.dimension}",
            f"cardinality: {resp.cardinality}",
        ]
        if resp.measurement_refused:
            lines.append("min_distance: not measured (over codeword budget)")
        else:
            lines.append(f"min_distance: {resp.min_distance}")
            lines.append(f"maximum (Singleton equality): {resp.is_mrd}")
        lines.append(f"wrote {path}")
        print("\n".join(lines))
    return 0


def _load_code_model(path: str) -> CodeModel:
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except OSError as e:
        raise ValueError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ValueError(f"{path} is not valid JSON: {e}") from e
    return CodeModel.model_validate(payload)


def _cmd_verify(args) -> int:
    code = _load_code_model(args.code)
    req = VerifyRequest(code=code, checks=args.check or None,
                        radius=args.radius,
                        ambient_budget=args.budget_ambient,
                        codeword_budget=args.budget_codewords)
    resp = _client(args).verify(req)
    headers = ["check", "satisfied", "slack"]
    rows = [[c.name, str(c.satisfied).lower(), c.slack]
            for c in resp.bound_checks]
    if args.format == "json":
        _emit(json.dumps(resp.model_dump(), indent=2), args.out)
    elif args.format == "csv":
        _emit(_csv(headers, rows), args.out)
    else:
        lines = [f"code: q={resp.q}, m={resp.m}, dimension={resp.dimension}, "
                 f"design distance={resp.d_design}"]
        if args.seed is not None:
            lines.append(f"seed: {args.seed}")
        if resp.min_distance is not None:
            lines.append(f"min_distance: {resp.min_distance}")
        for label, value in [("maximum (Singleton equality)", resp.is_mrd),
                             ("perfect", resp.is_perfect),
                             ("packing certificate", resp.packing_ok),
                             ("covering certificate", resp.covering_ok)]:
            if value is not None:
                lines.append(f"{label}: {value}")
        if resp.density is not None:
            lines.append(f"covering density: {_ratio(resp.density.model_dump())}")
        if rows:
            lines.append(_table(headers, rows))
        if resp.refusals:
            lines.append(f"refused (budget): {', '.join(resp.refusals)}")
        lines.append("all checks passed" if resp.all_passed
                     else "CHECK FAILED")
        _emit("\n".join(lines), args.out)
    return 0 if resp.all_passed else 1


def _cmd_density(args) -> int:
    req = DensityRequest(q=args.q, m_values=args.m, d=args.d,
                         ambient_budget=args.budget_ambient,
                         codeword_budget=args.budget_codewords)
    resp = _client(args).density(req)
    headers = ["q", "m", "d", "t", "dim", "density", "approx", "upper",
               "attains_upper", "source"]
    rows = [[str(r.q), str(r.m), str(r.d), str(r.t), str(r.dimension),
             _ratio(r.density.model_dump()), f"{r.density_float:.6g}",
             _ratio(r.upper_bound.model_dump()),
             str(r.attains_upper).lower(), r.source]
            for r in resp.rows]
    _emit(_formatted(args, headers, rows, resp,
                     preamble=f"covering density of maximum codes, q={resp.q}, "
                              f"d={resp.d}",
                     footer=f"quasi-perfect verdict at d={resp.d}: "
                            f"{resp.verdict}"),
          args.out)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from symrank.service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# ---------------------------------------------------------------------------
# parser


def _int_list(text: str) -> list[int]:
    """Comma list with ranges: "4,6,8" or "3-7" or "2,4-6"."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "-" in token[1:]:
            a, b = token.split("-", 1)
            lo, hi = int(a), int(b)
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {token}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(token))
    if not out:
        raise argparse.ArgumentTypeError("no matrix orders given")
    return out


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"),
                        default="plain", help="output format")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write output to a file (for build: the code "
                             "JSON path)")
    common.add_argument("--server", metavar="URL", default=None,
                        help="send the request to a running service instead "
                             "of computing in-process")
    common.add_argument("--budget-ambient", type=int,
                        default=DEFAULT_AMBIENT_BUDGET, metavar="N",
                        help="max ambient-space points to scan")
    common.add_argument("--budget-codewords", type=int,
                        default=DEFAULT_CODEWORD_BUDGET, metavar="N",
                        help="max codewords to enumerate")
    common.add_argument("--seed", type=int, default=None, metavar="N",
                        help="random seed for sampled checks (echoed in "
                             "output)")
    return common


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symrank",
        description="Symmetric rank-metric codes: exact counting, "
                    "constructions, and verification.")
    common = _common_flags()
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common],
                       help="sphere/ball closed forms with power-of-q bounds")
    p.add_argument("--q", type=int, required=True, help="field order")
    p.add_argument("--m", type=int, required=True, help="matrix order")
    p.add_argument("--t-max", type=int, default=None, dest="t_max",
                   help="largest radius (default m)")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("oracle", parents=[common],
                       help="brute-force rank census vs the closed forms")
    p.add_argument("--q", type=int, required=True, help="field order")
    p.add_argument("--m", type=int, required=True, help="matrix order")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("build", parents=[common],
                       help="construct the maximum code for (q, m, d)")
    p.add_argument("--q", type=int, required=True, help="field order")
    p.add_argument("--m", type=int, required=True, help="matrix order")
    p.add_argument("--d", type=int, required=True, help="design distance")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", parents=[common],
                       help="measure a serialized code and check every bound")
    p.add_argument("code", help="path to a code JSON file")
    p.add_argument("--check", action="append", choices=ALL_CHECKS,
                   help="run only the named checks (repeatable)")
    p.add_argument("--radius", type=int, default=None,
                   help="override the packing radius for "
                        "density/packing/covering")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("density", parents=[common],
                       help="covering density of maximum codes across m")
    p.add_argument("--q", type=int, required=True, help="field order")
    p.add_argument("--m", type=_int_list, required=True,
                   help="matrix orders, e.g. 4,6,8 or 3-7")
    p.add_argument("--d", type=int, required=True, help="design distance")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("serve", parents=[common],
                       help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        return 3
    except ConstructionError as e:
        print(f"construction failed: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
