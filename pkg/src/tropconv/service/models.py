"""Pydantic request models for the HTTP service.

Scalars travel as bare integers or strings ("p/q", and "inf" where the
endpoint permits extended values).
"""

from __future__ import annotations

from typing import List, Optional, Union

from pydantic import BaseModel, Field

Scalar = Union[int, str]


class Options(BaseModel):
    sign_cap: int = 8
    offset: Optional[Scalar] = None
    scale: Optional[Scalar] = None
    zero_based: bool = False


class ComputeRequest(BaseModel):
    """A point configuration (or matrix, for determinant endpoints)."""

    points: List[List[Scalar]]
    options: Options = Field(default_factory=Options)


class PointRequest(ComputeRequest):
    point: List[Scalar]


class IndexRequest(ComputeRequest):
    index: int


class SvgRequest(ComputeRequest):
    layers: Optional[List[str]] = None


class ErrorBody(BaseModel):
    kind: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
