"""Request/response schemas for the HTTP service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel


class ServiceInfo(BaseModel):
    name: str
    version: str
    families: list[str]


class FamilyInfo(BaseModel):
    key: str
    oeis_id: str
    description: str
    steps: list[str]
    span_factor: int
    constrained: bool
    forbid_up_then_flat: bool
    offset: int


class SeqResponse(BaseModel):
    family: str
    oeis_id: str
    method: str
    offset: int
    terms: list[int]


class SeriesJson(BaseModel):
    """The wire form of a truncated series: exact 'p/q' coefficient strings."""

    order: int
    coeffs: list[str]


class GfResponse(BaseModel):
    family: str
    oeis_id: str
    series: SeriesJson


class TriangleResponse(BaseModel):
    name: str
    rows: list[list[int]]


class PathsResponse(BaseModel):
    family: str
    n: int
    span: int
    count: int
    paths: Optional[list[str]] = None
    grids: Optional[list[str]] = None


class CheckInfo(BaseModel):
    name: str
    ok: bool
    cases: int
    detail: str = ""


class VerifyResponse(BaseModel):
    ok: bool
    max_n: int
    order: int
    checks: list[CheckInfo]


class Mismatch(BaseModel):
    n: int
    reference: int
    computed: int


class OeisCompareResponse(BaseModel):
    family: str
    oeis_id: str
    requested: int
    checked: int
    agree: bool
    source: str
    first_mismatch: Optional[Mismatch] = None
    note: str = ""
