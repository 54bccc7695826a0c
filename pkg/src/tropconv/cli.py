"""Command-line client for the tropical convexity toolkit.

Reads a JSON input document (a bare n x d array, or an object with
"points" and optional "options"), dispatches to the shared operation
layer, and prints a deterministic JSON result.  With ``--server`` the
command is sent to a running HTTP service instead.

Exit codes: 0 success, 1 usage/parse error, 2 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import ops

COMMANDS = (
    "tdet", "tsgn", "singular",
    "pseudovertices", "vertices", "type", "contains", "bounded-complex",
    "halfspaces", "cornered-hull", "dual-subdivision", "alexander-dual",
    "generic", "pluecker", "matroid-subdivision", "contraction",
    "tree-metric", "tree", "arrangement", "svg",
)

_NEEDS_POINT = {"type", "contains"}
_NEEDS_INDEX = {"contraction", "tree-metric", "tree"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropconv",
        description="Exact computations with tropical polytopes.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "input", nargs="?", default="-",
        help="input JSON file ('-' or omitted: stdin)",
    )
    parser.add_argument("--point", help="comma-separated point coordinates")
    parser.add_argument("--index", type=int, help="contraction index")
    parser.add_argument("--offset", help="metric normalization offset")
    parser.add_argument("--scale", help="metric normalization scale")
    parser.add_argument("--sign-cap", type=int, default=None,
                        help="permutation cap for tropical signs")
    parser.add_argument("--zero-based", action="store_true",
                        help="emit 0-based indices")
    parser.add_argument("--no-timing", action="store_true",
                        help="suppress the timing field")
    parser.add_argument("--layers", help="comma-separated SVG layers")
    parser.add_argument("--out", help="write SVG to this file")
    parser.add_argument("--server", help="base URL of a running service")
    return parser


def _load_document(path: str) -> dict:
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                raw = fh.read()
    except OSError as exc:
        raise ops.ParseError(f"cannot read input: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ops.ParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if isinstance(doc, list):
        doc = {"points": doc}
    if not isinstance(doc, dict) or "points" not in doc:
        raise ops.ParseError("expected an array of rows or {'points': ...}")
    return doc


def _dispatch(command: str, doc: dict, args) -> object:
    points = doc["points"]
    opts = doc.get("options", {}) or {}
    if not isinstance(opts, dict):
        raise ops.ParseError("'options' must be an object")
    zero_based = bool(args.zero_based or opts.get("zero_based", False))
    sign_cap = args.sign_cap if args.sign_cap is not None else opts.get(
        "sign_cap", 8
    )
    offset = args.offset if args.offset is not None else opts.get("offset")
    scale = args.scale if args.scale is not None else opts.get("scale")

    if command in _NEEDS_POINT:
        point = args.point if args.point is not None else opts.get("point")
        if point is None:
            raise ops.ParseError(f"'{command}' needs --point")
    if command in _NEEDS_INDEX:
        index = args.index if args.index is not None else opts.get("index")
        if index is None:
            raise ops.ParseError(f"'{command}' needs --index")

    if command == "tdet":
        return ops.op_tdet(points, zero_based=zero_based)
    if command == "tsgn":
        return ops.op_tsgn(points, sign_cap=sign_cap)
    if command == "singular":
        return ops.op_singular(points)
    if command == "pseudovertices":
        return ops.op_pseudovertices(points)
    if command == "vertices":
        return ops.op_vertices(points, zero_based=zero_based)
    if command == "type":
        return ops.op_type(points, point, zero_based=zero_based)
    if command == "contains":
        return ops.op_contains(points, point)
    if command == "bounded-complex":
        return ops.op_bounded_complex(points, zero_based=zero_based)
    if command == "halfspaces":
        return ops.op_halfspaces(points, zero_based=zero_based)
    if command == "cornered-hull":
        return ops.op_cornered_hull(points)
    if command == "dual-subdivision":
        return ops.op_dual_subdivision(points, zero_based=zero_based)
    if command == "alexander-dual":
        return ops.op_alexander_dual(points, zero_based=zero_based)
    if command == "generic":
        return ops.op_generic(points)
    if command == "pluecker":
        return ops.op_pluecker(points, zero_based=zero_based)
    if command == "matroid-subdivision":
        return ops.op_matroid_subdivision(points, zero_based=zero_based)
    if command == "contraction":
        return ops.op_contraction(points, index, zero_based=zero_based)
    if command == "tree-metric":
        return ops.op_tree_metric(points, index, offset=offset, scale=scale,
                                  zero_based=zero_based)
    if command == "tree":
        return ops.op_tree(points, index, offset=offset, scale=scale,
                           zero_based=zero_based)
    if command == "arrangement":
        return ops.op_arrangement(points, offset=offset, scale=scale,
                                  zero_based=zero_based)
    if command == "svg":
        layers = args.layers.split(",") if args.layers else None
        return ops.op_svg(points, layers=layers)
    raise AssertionError(f"unhandled command {command}")


def _remote(command: str, doc: dict, args) -> int:
    import httpx

    body = {"points": doc["points"]}
    options = dict(doc.get("options", {}) or {})
    if args.sign_cap is not None:
        options["sign_cap"] = args.sign_cap
    if args.offset is not None:
        options["offset"] = args.offset
    if args.scale is not None:
        options["scale"] = args.scale
    if args.zero_based:
        options["zero_based"] = True
    if options:
        body["options"] = options
    if command in _NEEDS_POINT:
        body["point"] = [tok.strip() for tok in (args.point or "").split(",")]
    if command in _NEEDS_INDEX:
        body["index"] = args.index
    if command == "svg" and args.layers:
        body["layers"] = args.layers.split(",")
    url = args.server.rstrip("/") + "/" + command
    resp = httpx.post(url, json=body, timeout=60.0)
    print(resp.text)
    if resp.status_code == 200:
        return 0
    return 2 if resp.status_code == 422 else 1


def _emit(command: str, result: object, args, elapsed_ms: float) -> None:
    if command == "svg":
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(result)
            doc = {"command": command, "out": args.out}
            if not args.no_timing:
                doc["timing_ms"] = round(elapsed_ms, 3)
            print(json.dumps(doc, indent=2))
        else:
            print(result)
        return
    doc = {"command": command, "result": result}
    if not args.no_timing:
        doc["timing_ms"] = round(elapsed_ms, 3)
    print(json.dumps(doc, indent=2))


def _print_error(kind: str, message: str) -> None:
    print(json.dumps({"error": {"kind": kind, "message": message}}, indent=2))


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        doc = _load_document(args.input)
        if args.server:
            return _remote(args.command, doc, args)
        start = time.perf_counter()
        result = _dispatch(args.command, doc, args)
        elapsed = (time.perf_counter() - start) * 1000.0
    except ops.ParseError as exc:
        _print_error("parse", str(exc))
        return 1
    except ops.PRECONDITION_ERRORS as exc:
        _print_error("precondition", str(exc))
        return 2
    _emit(args.command, result, args, elapsed)
    return 0


if __name__ == "__main__":
    sys.exit(main())
