"""Command-line front end: a thin client over the HTTP service.

Every subcommand builds one request, posts it to the service (in-process
by default, a remote base URL with --server), and renders the returned
run report.  Exit codes: 0 all verdicts pass, 1 a verification failed,
2 usage error or malformed input.  Output is byte-identical across runs
unless --timings is given.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from typing import Any

import httpx

USAGE_EXIT = 2
FAIL_EXIT = 1


def _read_json_arg(arg: str) -> dict:
    """Load a JSON object from a file path, or from stdin when arg is '-'."""
    text = sys.stdin.read() if arg == "-" else open(arg).read()
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("expected a JSON object")
    return obj


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip() != ""]


def _coeff_list(text: str) -> list[Any]:
    """Coefficients as JSON ('[1,0]', '[[1,0,1],0]') or comma integers."""
    stripped = text.strip()
    if stripped.startswith("["):
        return json.loads(stripped)
    return _int_list(stripped)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="costaskit",
        description="Costas sequences, circular Costas maps, product difference sets, and Costas polynomials.",
    )
    parser.add_argument("--emit", choices=["json", "csv", "text"], default="text", help="output format (csv: bounds table only)")
    parser.add_argument("--timings", action="store_true", help="include elapsed milliseconds in the output")
    parser.add_argument("--threads", type=int, default=None, help="worker processes for censuses (fallback: COSTAS_THREADS)")
    parser.add_argument("--server", default=None, help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="module", metavar="MODULE")

    classic = sub.add_parser("classic", help="integer Costas sequences").add_subparsers(dest="action", metavar="ACTION")
    p = classic.add_parser("verify", help="check the distinct-differences property")
    p.add_argument("sequence", help="comma-separated permutation, e.g. 2,4,3,1")
    p = classic.add_parser("welch", help="exponential construction over a prime")
    p.add_argument("-p", dest="p", type=int, required=True, help="odd prime")
    p.add_argument("--alpha", type=int, default=None, help="primitive root (default: whole family)")
    p.add_argument("-c", dest="c", type=int, default=0, help="exponent shift")
    p = classic.add_parser("census", help="enumerate all Costas sequences of one order")
    p.add_argument("-n", dest="n", type=int, required=True)
    p.add_argument("--cap", type=int, default=8, help="largest order accepted")

    group = sub.add_parser("group", help="finite abelian groups").add_subparsers(dest="action", metavar="ACTION")
    p = group.add_parser("iso", help="isomorphism test with explicit witness")
    p.add_argument("g1", help="group descriptor, e.g. Z4xZ5")
    p.add_argument("g2")
    p = group.add_parser("aut", help="automorphism count")
    p.add_argument("g")

    gmap = sub.add_parser("map", help="maps between abelian groups").add_subparsers(dest="action", metavar="ACTION")
    p = gmap.add_parser("verify", help="circular Costas check for a map JSON file")
    p.add_argument("file", help="map JSON path, or - for stdin")
    p = gmap.add_parser("welch", help="exponential-logarithm map into an elementary abelian group")
    p.add_argument("-q", dest="q", required=True, help="prime power, e.g. 9 or 3^2")
    p.add_argument("--L", dest="L", type=_coeff_list, default=None, help="linearized permutation coefficients")
    p.add_argument("-c", dest="c", type=int, default=0, help="exponent shift")
    p = gmap.add_parser("export-array", help="periodic binary array of a map")
    p.add_argument("file", nargs="?", default=None, help="map JSON path (omit to build a welch map)")
    p.add_argument("-q", dest="q", default=None)
    p.add_argument("--L", dest="L", type=_coeff_list, default=None)
    p.add_argument("-c", dest="c", type=int, default=0)
    p.add_argument("--domain-split", type=_int_list, required=True, help="domain factorization, e.g. 8,3")
    p.add_argument("--codomain-split", type=_int_list, required=True, help="codomain factorization, e.g. 5,5")
    p = gmap.add_parser("equiv", help="equivalence under group isomorphism pairs")
    p.add_argument("f", help="first map JSON path")
    p.add_argument("g", help="second map JSON path")
    p.add_argument("--translate", action="store_true", help="also allow image translation")

    dpds = sub.add_parser("dpds", help="product difference sets").add_subparsers(dest="action", metavar="ACTION")
    p = dpds.add_parser("verify", help="exact off-axis difference coverage")
    p.add_argument("file", help="set JSON path, or - for stdin")
    p = dpds.add_parser("from-map", help="graph of a circular Costas map")
    p.add_argument("file", help="map JSON path")
    p = dpds.add_parser("to-map", help="associated function of a difference set")
    p.add_argument("file", help="set JSON path")
    p = dpds.add_parser("equiv", help="equivalence under automorphisms and translations")
    p.add_argument("d1")
    p.add_argument("d2")
    p = dpds.add_parser("search-none", help="exhaustive nonexistence search at one order")
    p.add_argument("-n", dest="n", type=int, required=True)
    p.add_argument("--full", action="store_true", help="search all translates, not just sets through the origin")

    cpoly = sub.add_parser("cpoly", help="Costas permutation polynomials").add_subparsers(dest="action", metavar="ACTION")
    p = cpoly.add_parser("verify", help="all difference polynomials permute")
    p.add_argument("file", help="polynomial JSON path, or - for stdin")
    p = cpoly.add_parser("shifting", help="differences are dilations of the polynomial itself")
    p.add_argument("file", help="polynomial JSON path, or - for stdin")
    p = cpoly.add_parser("count", help="closed-form count of linearized-power polynomials")
    p.add_argument("-p", dest="p", type=int, required=True)
    p.add_argument("-m", dest="m", type=int, required=True)
    p = cpoly.add_parser("enumerate", help="list the linearized-power polynomials of one field")
    p.add_argument("-q", dest="q", required=True)
    p = cpoly.add_parser("census-shifting", help="exhaustive shifting census against the enumeration")
    p.add_argument("-q", dest="q", required=True)
    p.add_argument("--allow-large", action="store_true", help="permit censuses beyond 8! candidates")
    p = cpoly.add_parser("census-circular", help="exhaustive prime circular census against the welch family")
    p.add_argument("-p", dest="p", type=int, required=True)
    p.add_argument("--allow-large", action="store_true")
    p = cpoly.add_parser("bounds", help="exact count-to-bound ratio table")
    p.add_argument("--p-lo", type=int, default=2)
    p.add_argument("--p-hi", type=int, default=13)
    p.add_argument("--m-lo", type=int, default=3)
    p.add_argument("--m-hi", type=int, default=3)

    suite = sub.add_parser("suite", help="reproduction checks").add_subparsers(dest="action", metavar="ACTION")
    p = suite.add_parser("run", help="run the named checks (default: all fast)")
    p.add_argument("names", nargs="*", help="check names (default: every fast check)")
    p.add_argument("--include-slow", action="store_true", help="add the large censuses and searches")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _build_request(args: argparse.Namespace, threads: int) -> tuple[str, dict]:
    module, action = args.module, getattr(args, "action", None)
    if module == "classic":
        if action == "verify":
            return "/classic/verify", {"sequence": args.sequence}
        if action == "welch":
            return "/classic/welch", {"p": args.p, "alpha": args.alpha, "c": args.c}
        if action == "census":
            return "/classic/census", {"n": args.n, "cap": args.cap, "threads": threads}
    if module == "group":
        if action == "iso":
            return "/group/iso", {"g1": args.g1, "g2": args.g2}
        if action == "aut":
            return "/group/aut", {"g": args.g}
    if module == "map":
        if action == "verify":
            return "/map/verify", {"map": _read_json_arg(args.file)}
        if action == "welch":
            return "/map/welch", {"q": args.q, "L": args.L, "c": args.c}
        if action == "export-array":
            body: dict[str, Any] = {
                "domain_split": args.domain_split,
                "codomain_split": args.codomain_split,
            }
            if args.file is not None:
                body["map"] = _read_json_arg(args.file)
            else:
                body.update({"q": args.q, "L": args.L, "c": args.c})
            return "/map/export-array", body
        if action == "equiv":
            return "/map/equiv", {
                "f": _read_json_arg(args.f),
                "g": _read_json_arg(args.g),
                "translate": args.translate,
            }
    if module == "dpds":
        if action == "verify":
            return "/dpds/verify", {"set": _read_json_arg(args.file)}
        if action == "from-map":
            return "/dpds/from-map", {"map": _read_json_arg(args.file)}
        if action == "to-map":
            return "/dpds/to-map", {"set": _read_json_arg(args.file)}
        if action == "equiv":
            return "/dpds/equiv", {"d1": _read_json_arg(args.d1), "d2": _read_json_arg(args.d2)}
        if action == "search-none":
            return "/dpds/search-none", {"n": args.n, "normalize": not args.full}
    if module == "cpoly":
        if action in ("verify", "shifting"):
            obj = _read_json_arg(args.file)
            return f"/cpoly/{action}", {"field": obj.get("field"), "coeffs": obj.get("coeffs")}
        if action == "count":
            return "/cpoly/count", {"p": args.p, "m": args.m}
        if action == "enumerate":
            return "/cpoly/enumerate", {"q": args.q}
        if action == "census-shifting":
            return "/cpoly/census-shifting", {"q": args.q, "threads": threads, "allow_large": args.allow_large}
        if action == "census-circular":
            return "/cpoly/census-circular", {"p": args.p, "threads": threads, "allow_large": args.allow_large}
        if action == "bounds":
            return "/cpoly/bounds", {"p_lo": args.p_lo, "p_hi": args.p_hi, "m_lo": args.m_lo, "m_hi": args.m_hi}
    if module == "suite" and action == "run":
        return "/suite/run", {
            "names": args.names or None,
            "include_slow": args.include_slow,
            "threads": threads,
        }
    raise ValueError(f"unknown command: {module} {action}")


def _post(server: str | None, path: str, body: dict) -> httpx.Response:
    if server is not None:
        return httpx.post(server.rstrip("/") + path, json=body, timeout=600.0)

    async def go() -> httpx.Response:
        from .service.app import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, base_url="http://service") as client:
            return await client.post(path, json=body, timeout=600.0)

    return asyncio.run(go())


def _render_text(report: dict, out) -> None:
    print(f"# {report['command']}", file=out)
    for verdict in report["verdicts"]:
        mark = "PASS" if verdict["passed"] else "FAIL"
        detail = f"  {verdict['detail']}" if verdict.get("detail") else ""
        print(f"[{mark}] {verdict['name']}{detail}", file=out)
    for count in report["counts"]:
        print(f"{count['name']} = {count['value']}", file=out)
    payload = report.get("payload", {})
    for key in ("grid", "render"):
        if key in payload:
            print(payload.pop(key), file=out)
    for key in sorted(payload):
        value = payload[key]
        rendered = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
        print(f"{key} = {rendered}", file=out)
    if "elapsed_ms" in report:
        print(f"elapsed_ms = {report['elapsed_ms']:.1f}", file=out)


def _render_csv(report: dict, out) -> None:
    import csv

    rows = report.get("payload", {}).get("rows")
    if rows is None:
        raise ValueError("csv output is only available for the bounds table")
    writer = csv.writer(out)
    writer.writerow(["p", "m", "R_num", "R_den", "R_float"])
    for row in rows:
        writer.writerow([row["p"], row["m"], row["R_num"], row["R_den"], repr(row["R_float"])])


def dispatch(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.module is None:
        parser.print_help(sys.stderr)
        return USAGE_EXIT
    if args.module == "serve":
        import uvicorn

        from .service.app import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0
    if getattr(args, "action", None) is None:
        parser.print_help(sys.stderr)
        return USAGE_EXIT

    threads = args.threads if args.threads is not None else int(os.environ.get("COSTAS_THREADS", "1"))
    try:
        path, body = _build_request(args, threads)
    except (OSError, ValueError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_EXIT

    response = _post(args.server, path, body)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        print(f"error: {detail}", file=sys.stderr)
        return USAGE_EXIT

    report = response.json()
    if not args.timings:
        report.pop("elapsed_ms", None)

    try:
        if args.emit == "csv":
            _render_csv(report, out)
        elif args.emit == "json":
            print(json.dumps(report, sort_keys=True, indent=2), file=out)
        else:
            _render_text(report, out)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_EXIT

    failed = any(not v["passed"] for v in report["verdicts"])
    return FAIL_EXIT if failed else 0


def entry() -> None:
    raise SystemExit(dispatch())


if __name__ == "__main__":
    entry()
