"""FastAPI service exposing the tropical convexity operations.

Thin wrappers over :mod:`tropconv.ops`; the CLI drives the same
functions in-process or talks to this app over HTTP.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .. import ops
from .models import ComputeRequest, IndexRequest, PointRequest, SvgRequest

app = FastAPI(
    title="tropconv",
    description="Exact tropical convexity computations",
    version="0.1.0",
)


@app.exception_handler(ops.ParseError)
async def _parse_error(_: Request, exc: ops.ParseError):
    return JSONResponse(
        status_code=400,
        content={"error": {"kind": "parse", "message": str(exc)}},
    )


async def _precondition_error(_: Request, exc: Exception):
    return JSONResponse(
        status_code=422,
        content={"error": {"kind": "precondition", "message": str(exc)}},
    )


for _exc_type in ops.PRECONDITION_ERRORS:
    app.add_exception_handler(_exc_type, _precondition_error)


@app.post("/tdet")
def tdet(req: ComputeRequest):
    return ops.op_tdet(req.points, zero_based=req.options.zero_based)


@app.post("/tsgn")
def tsgn(req: ComputeRequest):
    return ops.op_tsgn(req.points, sign_cap=req.options.sign_cap)


@app.post("/singular")
def singular(req: ComputeRequest):
    return ops.op_singular(req.points)


@app.post("/pseudovertices")
def pseudovertices(req: ComputeRequest):
    return ops.op_pseudovertices(req.points)


@app.post("/vertices")
def vertices(req: ComputeRequest):
    return ops.op_vertices(req.points, zero_based=req.options.zero_based)


@app.post("/type")
def type_(req: PointRequest):
    return ops.op_type(req.points, req.point, zero_based=req.options.zero_based)


@app.post("/contains")
def contains(req: PointRequest):
    return ops.op_contains(req.points, req.point)


@app.post("/bounded-complex")
def bounded_complex(req: ComputeRequest):
    return ops.op_bounded_complex(req.points, zero_based=req.options.zero_based)


@app.post("/halfspaces")
def halfspaces(req: ComputeRequest):
    return ops.op_halfspaces(req.points, zero_based=req.options.zero_based)


@app.post("/cornered-hull")
def cornered_hull(req: ComputeRequest):
    return ops.op_cornered_hull(req.points)


@app.post("/dual-subdivision")
def dual_subdivision(req: ComputeRequest):
    return ops.op_dual_subdivision(req.points, zero_based=req.options.zero_based)


@app.post("/alexander-dual")
def alexander_dual(req: ComputeRequest):
    return ops.op_alexander_dual(req.points, zero_based=req.options.zero_based)


@app.post("/generic")
def generic(req: ComputeRequest):
    return ops.op_generic(req.points)


@app.post("/pluecker")
def pluecker(req: ComputeRequest):
    return ops.op_pluecker(req.points, zero_based=req.options.zero_based)


@app.post("/matroid-subdivision")
def matroid_subdivision(req: ComputeRequest):
    return ops.op_matroid_subdivision(req.points, zero_based=req.options.zero_based)


@app.post("/contraction")
def contraction(req: IndexRequest):
    return ops.op_contraction(
        req.points, req.index, zero_based=req.options.zero_based
    )


@app.post("/tree-metric")
def tree_metric(req: IndexRequest):
    return ops.op_tree_metric(
        req.points,
        req.index,
        offset=req.options.offset,
        scale=req.options.scale,
        zero_based=req.options.zero_based,
    )


@app.post("/tree")
def tree(req: IndexRequest):
    return ops.op_tree(
        req.points,
        req.index,
        offset=req.options.offset,
        scale=req.options.scale,
        zero_based=req.options.zero_based,
    )


@app.post("/arrangement")
def arrangement(req: ComputeRequest):
    return ops.op_arrangement(
        req.points,
        offset=req.options.offset,
        scale=req.options.scale,
        zero_based=req.options.zero_based,
    )


@app.post("/svg")
def svg(req: SvgRequest):
    text = ops.op_svg(req.points, layers=req.layers)
    return Response(content=text, media_type="image/svg+xml")
