"""HTTP face of the package.

Thin resource wrappers over :mod:`latticepaths.catalog`,
:mod:`latticepaths.paths`, :mod:`latticepaths.verify` and
:mod:`latticepaths.oeis`.  Library exceptions are mapped to structured
error bodies ``{"detail": {"code": ..., "message": ...}}`` so clients
(the bundled CLI in particular) can translate failures into stable exit
codes.

Run it with any ASGI server, e.g. ``uvicorn latticepaths.service.app:app``.
"""

from __future__ import annotations

import os
from typing import Literal, Optional

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from latticepaths import __version__, catalog, oeis, verify
from latticepaths.catalog import FAMILIES, Family, UnknownFamilyError, get_family
from latticepaths.paths import EnumerationLimitError, enumerate_paths, render_grid
from latticepaths.riordan import (
    delannoy_array,
    motzkin_array,
    pascal_array,
    uh_insertion_array,
)
from latticepaths.service import models

TRIANGLES = {
    "delannoy": delannoy_array,
    "motzkin": motzkin_array,
    "uh": uh_insertion_array,
    "pascal": pascal_array,
}

MAX_TERMS = 128
MAX_OEIS_TERMS = 1000

app = FastAPI(
    title="latticepaths",
    version=__version__,
    description="Exact lattice-path counting: sequences, triangles, path listings, "
    "and cross-verification of the counting formulas.",
)


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"detail": {"code": code, "message": message}})


@app.exception_handler(UnknownFamilyError)
async def _unknown_family(request: Request, exc: UnknownFamilyError):
    return _error(404, "unknown-family", str(exc))


@app.exception_handler(EnumerationLimitError)
async def _resource_limit(request: Request, exc: EnumerationLimitError):
    return _error(422, "resource-limit", str(exc))


@app.exception_handler(oeis.FetchError)
async def _network(request: Request, exc: oeis.FetchError):
    return _error(502, "network-unreachable", str(exc))


@app.exception_handler(oeis.BFileParseError)
async def _bad_bfile(request: Request, exc: oeis.BFileParseError):
    return _error(502, "bfile-parse", str(exc))


@app.exception_handler(catalog.ConsistencyError)
async def _inconsistent(request: Request, exc: catalog.ConsistencyError):
    return _error(500, "consistency", str(exc))


@app.exception_handler(ValueError)
async def _bad_value(request: Request, exc: ValueError):
    return _error(400, "invalid-argument", str(exc))


def _family_info(family: Family) -> models.FamilyInfo:
    return models.FamilyInfo(
        key=family.key,
        oeis_id=family.oeis_id,
        description=family.description,
        steps=sorted(s.name for s in family.steps),
        span_factor=family.span_factor,
        constrained=family.constrained,
        forbid_up_then_flat=family.forbid_up_then_flat,
        offset=family.offset,
    )


@app.get("/", response_model=models.ServiceInfo)
def service_info() -> models.ServiceInfo:
    return models.ServiceInfo(
        name="latticepaths", version=__version__, families=list(FAMILIES)
    )


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.get("/families", response_model=list[models.FamilyInfo])
def families() -> list[models.FamilyInfo]:
    return [_family_info(f) for f in FAMILIES.values()]


@app.get("/families/{name}", response_model=models.FamilyInfo)
def family_detail(name: str) -> models.FamilyInfo:
    return _family_info(get_family(name))


@app.get("/seq/{name}", response_model=models.SeqResponse)
def seq(
    name: str,
    terms: int = Query(10, ge=1, le=MAX_TERMS),
    method: Literal["formula", "gf", "riordan", "brute"] = "formula",
) -> models.SeqResponse:
    family = get_family(name)
    values = catalog.terms(family, terms, method=method)
    return models.SeqResponse(
        family=family.key,
        oeis_id=family.oeis_id,
        method=method,
        offset=family.offset,
        terms=values,
    )


@app.get("/gf/{name}", response_model=models.SeriesJson)
def gf(name: str, order: int = Query(10, ge=1, le=MAX_TERMS)) -> models.SeriesJson:
    family = get_family(name)
    return models.SeriesJson(**catalog.gf(family, order).to_dict())


@app.get("/triangle/{name}", response_model=models.TriangleResponse)
def triangle(name: str, rows: int = Query(8, ge=1, le=MAX_TERMS)) -> models.TriangleResponse:
    if name not in TRIANGLES:
        raise UnknownFamilyError(
            f"unknown triangle {name!r}; expected one of {', '.join(TRIANGLES)}"
        )
    array = TRIANGLES[name](rows)
    return models.TriangleResponse(
        name=name, rows=[[int(v) for v in row] for row in array.triangle(rows)]
    )


@app.get("/paths/{name}", response_model=models.PathsResponse, response_model_exclude_none=True)
def paths(
    name: str,
    n: int = Query(..., ge=0),
    include_paths: bool = Query(False, alias="list"),
    ascii_art: bool = Query(False, alias="ascii"),
) -> models.PathsResponse:
    family = get_family(name)
    problem = family.path_family(n)
    found = enumerate_paths(problem)
    listing = [p.labels for p in found] if (include_paths or ascii_art) else None
    grids = [render_grid(p) for p in found] if ascii_art else None
    return models.PathsResponse(
        family=family.key,
        n=n,
        span=problem.span,
        count=len(found),
        paths=listing,
        grids=grids,
    )


@app.get("/verify", response_model=models.VerifyResponse)
def run_verify(
    max_n: int = Query(verify.DEFAULT_MAX_N, ge=0, le=24),
    order: int = Query(verify.DEFAULT_ORDER, ge=1, le=MAX_TERMS),
) -> models.VerifyResponse:
    results = verify.run_checks(max_n=max_n, order=order)
    return models.VerifyResponse(
        ok=all(r.ok for r in results),
        max_n=max_n,
        order=order,
        checks=[
            models.CheckInfo(name=r.name, ok=r.ok, cases=r.cases, detail=r.detail)
            for r in results
        ],
    )


@app.get("/oeis/{name}", response_model=models.OeisCompareResponse, response_model_exclude_none=True)
def oeis_compare(
    name: str,
    terms: int = Query(100, ge=1, le=MAX_OEIS_TERMS),
    cache_dir: Optional[str] = None,
    refresh: bool = False,
) -> models.OeisCompareResponse:
    family = get_family(name)
    directory = cache_dir or os.environ.get(oeis.CACHE_ENV_VAR) or None
    report = oeis.compare(family, terms, cache_dir=directory, refresh=refresh)
    mismatch = None
    if report.first_mismatch is not None:
        n, reference, computed = report.first_mismatch
        mismatch = models.Mismatch(n=n, reference=reference, computed=computed)
    return models.OeisCompareResponse(
        family=report.family,
        oeis_id=report.oeis_id,
        requested=report.requested,
        checked=report.checked,
        agree=report.agree,
        source=report.source,
        first_mismatch=mismatch,
        note=report.note,
    )
