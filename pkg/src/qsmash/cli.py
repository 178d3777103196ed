"""Command-line client for the computation service.

Every subcommand talks HTTP to the service layer.  By default the
application is mounted in-process, so nothing needs to be running;
``--url`` points the same commands at a live server instead.  Exit
codes: 0 success, 1 a verification suite reported failures, 2 bad
usage or bad input.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Optional

import httpx

from .service import create_app
from .verify import SUITE_NAMES

_TIMEOUT = 600.0  # suites may grind through big exact kernels


def _call(url: Optional[str], method: str, path: str, payload=None) -> httpx.Response:
    if url:
        with httpx.Client(base_url=url, timeout=_TIMEOUT) as client:
            return client.request(method, path, json=payload)

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://qsmash", timeout=_TIMEOUT
        ) as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _report_error(resp: httpx.Response) -> int:
    try:
        data = resp.json()
    except ValueError:
        print(f"error: HTTP {resp.status_code}: {resp.text}", file=sys.stderr)
        return 2
    if isinstance(data, dict) and "message" in data:
        where = f" (column {data['column']})" if data.get("column") else ""
        print(f"error: {data['message']}{where}", file=sys.stderr)
    else:
        print(f"error: HTTP {resp.status_code}: {json.dumps(data)}", file=sys.stderr)
    return 2


def _print_json(data) -> None:
    print(json.dumps(data, indent=2))


def _render_checks(data: dict, as_json: bool) -> int:
    if as_json:
        _print_json(data)
    else:
        for row in data["checks"]:
            flag = "PASS" if row["passed"] else "FAIL"
            detail = f"  ({row['detail']})" if row["detail"] else ""
            print(f"{flag}  {row['name']}{detail}")
        total = len(data["checks"])
        failed = sum(1 for row in data["checks"] if not row["passed"])
        if failed:
            print(f"{failed} of {total} checks failed")
        else:
            print(f"all {total} checks passed")
    return 0 if data["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsmash",
        description="Exact computations in a q-deformed smash product algebra.",
    )
    parser.add_argument(
        "--url",
        default=None,
        help="base URL of a running service (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("normalize", help="print the canonical form of an expression")
    sp.add_argument("expr", help="expression over K, Kinv, X, Y, E, phi, q")
    sp.add_argument(
        "--in",
        dest="algebra",
        default="A",
        metavar="ALGEBRA",
        help="evaluation context: A (default), a quotient preset, or preset(param)",
    )
    sp.add_argument("--json", action="store_true", help="structured output")

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", default="all", choices=SUITE_NAMES)
    sp.add_argument("--json", action="store_true", help="structured output")

    sp = sub.add_parser("spectrum", help="emit the prime inclusion diagram")
    sp.add_argument(
        "--dot", metavar="PATH", default=None, help="write DOT to PATH ('-' for stdout)"
    )
    sp.add_argument("--json", action="store_true", help="print the adjacency structure")

    sp = sub.add_parser("aut", help="automorphism calculator")
    aut_sub = sp.add_subparsers(dest="aut_command", required=True)
    ap = aut_sub.add_parser("apply", help="apply aut(lambda;mu;gamma;i) to an expression")
    ap.add_argument("aut")
    ap.add_argument("expr")
    ap.add_argument("--json", action="store_true")
    ap = aut_sub.add_parser("compose", help="compose two literals (first after second)")
    ap.add_argument("first")
    ap.add_argument("second")
    ap.add_argument("--json", action="store_true")
    ap = aut_sub.add_parser("inverse", help="invert a literal")
    ap.add_argument("aut")
    ap.add_argument("--json", action="store_true")

    sp = sub.add_parser("act", help="apply an element to a module basis vector")
    sp.add_argument("--module", required=True, help="weight(k;l), point(k), case-b(l), ...")
    sp.add_argument("--word", required=True, help="element of the full algebra")
    sp.add_argument("--start", required=True, help="basis label: (i,m) or an integer")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("center", help="basis of central elements up to a degree")
    sp.add_argument("--in", dest="algebra", default="A", metavar="ALGEBRA")
    sp.add_argument("--deg", type=int, default=3)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("gwa-check", help="verify the degree-graded product structure")
    sp.add_argument("--triples", type=int, default=100)
    sp.add_argument("--pairs", type=int, default=200)
    sp.add_argument("--seed", type=int, default=20260413)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)

    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "serve":
        import uvicorn

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    if args.command == "normalize":
        resp = _call(args.url, "POST", "/normalize", {"text": args.expr, "algebra": args.algebra})
        if resp.status_code != 200:
            return _report_error(resp)
        data = resp.json()
        if args.json:
            _print_json(data)
        else:
            print(data["text"])
        return 0

    if args.command == "verify":
        resp = _call(args.url, "POST", "/verify", {"suite": args.suite})
        if resp.status_code != 200:
            return _report_error(resp)
        return _render_checks(resp.json(), args.json)

    if args.command == "spectrum":
        if args.json:
            resp = _call(args.url, "GET", "/spectrum/adjacency")
            if resp.status_code != 200:
                return _report_error(resp)
            _print_json(resp.json())
            return 0
        resp = _call(args.url, "GET", "/spectrum/dot")
        if resp.status_code != 200:
            return _report_error(resp)
        if args.dot and args.dot != "-":
            with open(args.dot, "w") as handle:
                handle.write(resp.text)
            print(f"wrote {args.dot}")
        else:
            sys.stdout.write(resp.text)
        return 0

    if args.command == "aut":
        if args.aut_command == "apply":
            resp = _call(args.url, "POST", "/aut/apply", {"aut": args.aut, "text": args.expr})
            if resp.status_code != 200:
                return _report_error(resp)
            data = resp.json()
            if args.json:
                _print_json(data)
            else:
                print(data["text"])
            return 0
        if args.aut_command == "compose":
            payload = {"first": args.first, "second": args.second}
            resp = _call(args.url, "POST", "/aut/compose", payload)
        else:
            resp = _call(args.url, "POST", "/aut/inverse", {"aut": args.aut})
        if resp.status_code != 200:
            return _report_error(resp)
        data = resp.json()
        if args.json:
            _print_json(data)
        else:
            print(data["literal"])
        return 0

    if args.command == "act":
        payload = {"module": args.module, "word": args.word, "start": args.start}
        resp = _call(args.url, "POST", "/act", payload)
        if resp.status_code != 200:
            return _report_error(resp)
        data = resp.json()
        if args.json:
            _print_json(data)
        elif not data["vector"]:
            print("0")
        else:
            for entry in data["vector"]:
                print(f"{entry['label']}  {entry['coeff']}")
        return 0

    if args.command == "center":
        resp = _call(args.url, "POST", "/center", {"algebra": args.algebra, "degree": args.deg})
        if resp.status_code != 200:
            return _report_error(resp)
        data = resp.json()
        if args.json:
            _print_json(data)
        else:
            print(f"dimension {data['dimension']} in degree <= {data['degree']}")
            for text in data["basis"]:
                print(text)
        return 0

    if args.command == "gwa-check":
        payload = {"triples": args.triples, "pairs": args.pairs, "seed": args.seed}
        resp = _call(args.url, "POST", "/gwa-check", payload)
        if resp.status_code != 200:
            return _report_error(resp)
        return _render_checks(resp.json(), args.json)

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except httpx.HTTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
