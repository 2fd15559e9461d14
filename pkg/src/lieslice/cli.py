"""Command-line client.

Thin by design: every subcommand builds the same pydantic request model the
service accepts, dispatches it (in-process by default, over HTTP with
--server), and prints the JSON response document.  Exit codes: 0 success,
1 domain error (machine-readable record on stdout), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from . import schemas as S
from .service import HANDLERS, DomainError


def _parse_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"bad JSON for {what}: {exc}") from exc


class MalformedInput(Exception):
    pass


def _matrix_arg(args, attr="matrix"):
    raw = getattr(args, attr)
    if raw is None or raw == "-":
        raw = sys.stdin.read()
    doc = _parse_json(raw, attr)
    if isinstance(doc, dict):
        # full element document {"algebra": ..., "matrix": ...}
        return doc.get("algebra", {"family": args.algebra, "n": len(doc["matrix"])}), doc["matrix"]
    return {"family": args.algebra, "n": len(doc)}, doc


def _int_list(text):
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _element_request(args) -> S.ElementRequest:
    algebra, matrix = _matrix_arg(args)
    return S.ElementRequest(algebra=algebra, matrix=matrix)


def _build_request(args):
    cmd = args.command
    if cmd in ("jordan", "jm", "slodowy", "classify", "natural-slice", "comp-slice", "residual"):
        return _element_request(args)
    if cmd == "class-dim":
        pairs = _parse_json(args.label, "label")
        n = sum(p["size"] for p in pairs)
        return S.ClassDimRequest(
            label={"algebra": {"family": args.algebra, "n": n}, "pairs": pairs}
        )
    if cmd == "enumerate":
        return S.EnumerateRequest(algebra={"family": args.algebra, "n": args.n})
    if cmd == "induce":
        return S.InduceRequest(
            blocks=_int_list(args.blocks), orbits=_parse_json(args.orbits, "orbits")
        )
    if cmd == "richardson":
        return S.RichardsonRequest(blocks=_int_list(args.blocks))
    if cmd == "membership":
        x = _parse_json(args.x, "x")
        y = _parse_json(args.y, "y")
        return S.MembershipRequest(
            algebra={"family": args.algebra, "n": len(x)}, x=x, y=y
        )
    if cmd == "verify":
        return S.VerifyRequest(
            suite=args.suite,
            seed=args.seed,
            samples=args.samples,
            n_max=args.n_max,
            n=args.n,
        )
    if cmd == "atlas":
        return S.AtlasRequest(
            algebra={"family": args.algebra, "n": args.n},
            format=args.format,
            bound=args.bound,
        )
    raise MalformedInput(f"unknown command {cmd!r}")


def _dispatch(command, request, server=None):
    if server:
        import httpx

        response = httpx.post(
            server.rstrip("/") + "/" + command,
            json=request.model_dump(),
            timeout=600.0,
        )
        if response.status_code == 400:
            record = response.json().get("detail", {})
            raise DomainError(
                record.get("kind", "domain_error"),
                record.get("message", "remote domain error"),
                record.get("detail"),
            )
        if response.status_code == 422:
            raise MalformedInput(response.text)
        response.raise_for_status()
        return response.json()
    handler, _model = HANDLERS[command]
    result = handler(request)
    return result.model_dump(by_alias=True)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lieslice",
        description="Exact computational Lie theory in type A: Jordan data, "
        "slices, decomposition classes, residual groups.",
    )
    parser.add_argument("--server", help="dispatch to a running service instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_matrix(p):
        p.add_argument("--matrix", help="JSON matrix (rational strings or ints); '-' or omitted reads stdin")
        p.add_argument("--algebra", choices=["gl", "sl"], default="gl")

    for name, help_text in [
        ("jordan", "Jordan-Chevalley decomposition with polynomial witness"),
        ("jm", "complete a nilpotent to an sl2-triple"),
        ("slodowy", "Slodowy slice and contracting weights of a nilpotent"),
        ("classify", "decomposition-class label of an element"),
        ("natural-slice", "natural-slice descriptor at an element"),
        ("comp-slice", "complementary slice at an element"),
        ("residual", "residual subquotient data L, L', T, N, A, C"),
    ]:
        p = sub.add_parser(name, help=help_text)
        with_matrix(p)

    p = sub.add_parser("class-dim", help="dimension of a decomposition class")
    p.add_argument("--label", required=True, help='JSON pairs, e.g. [{"size":2,"partition":[2]}]')
    p.add_argument("--algebra", choices=["gl", "sl"], default="gl")

    p = sub.add_parser("enumerate", help="all decomposition classes of gl_n/sl_n")
    p.add_argument("--algebra", choices=["gl", "sl"], default="gl")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("induce", help="Lusztig-Spaltenstein induction")
    p.add_argument("--blocks", required=True, help="comma-separated Levi block sizes")
    p.add_argument("--orbits", required=True, help="JSON list of partitions, one per block")

    p = sub.add_parser("richardson", help="Richardson orbit of a parabolic")
    p.add_argument("--blocks", required=True, help="comma-separated Levi block sizes")

    p = sub.add_parser("membership", help="membership of y in the natural slice S_x")
    p.add_argument("--x", required=True, help="JSON matrix for x")
    p.add_argument("--y", required=True, help="JSON matrix for y")
    p.add_argument("--algebra", choices=["gl", "sl"], default="gl")

    p = sub.add_parser("verify", help="run a seeded verification sweep")
    p.add_argument("suite", help="suite name (e.g. jordan, slodowy, classes, all)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--n", type=int)

    p = sub.add_parser("atlas", help="export the class poset (certified subset)")
    p.add_argument("--algebra", choices=["gl", "sl"], default="gl")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--bound", type=int, default=6)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "verify" and args.suite == "all":
            from .sweeps import SWEEPS

            reports = []
            ok = True
            for suite in sorted(SWEEPS):
                req = S.VerifyRequest(
                    suite=suite, seed=args.seed, samples=args.samples, n_max=args.n_max
                )
                doc = _dispatch("verify", req, args.server)
                reports.append(doc)
                ok = ok and doc["pass"]
            print(json.dumps({"suites": reports, "pass": ok}, indent=2))
            return 0 if ok else 1
        request = _build_request(args)
        doc = _dispatch(args.command, request, args.server)
    except MalformedInput as exc:
        print(json.dumps({"error": {"kind": "malformed_input", "message": str(exc)}}))
        return 2
    except ValidationError as exc:
        print(json.dumps({"error": {"kind": "validation", "message": str(exc)}}))
        return 2
    except DomainError as exc:
        print(json.dumps({"error": exc.record.model_dump()}))
        return 1
    except KeyError as exc:
        print(json.dumps({"error": {"kind": "unknown_command", "message": str(exc)}}))
        return 2
    if args.command == "atlas" and doc.get("format") == "dot":
        print(doc["document"])
    else:
        print(json.dumps(doc, indent=2))
    if args.command == "verify" and not doc.get("pass", True):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
