"""HTTP wrapper around the verification suites.

The report body returned by /verify is the same deterministic document
the CLI prints with --json; timings and the timestamp live under meta.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from .algebra.parse import ParseError, parse_poly
from .checks import (
    PARSE_VARS,
    SUITE_DESCRIPTIONS,
    SUITE_NAMES,
    ConfigError,
    attach_meta,
    build_config,
    parse_parameter,
    report_document,
    run_suite,
)

app = FastAPI(
    title="hesselab",
    description="exact verification of a pencil of plane cubics and its "
    "degenerate fibers",
)


class VerifyRequest(BaseModel):
    suite: str = "all"
    lambdas: list[str] | None = None
    shear_seed: int = 0
    jobs: int | None = None


class ParseRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    text: str
    slope: str | None = Field(default=None, alias="lambda")


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.get("/suites")
def suites() -> dict:
    return {
        "suites": [
            {"name": name, "description": SUITE_DESCRIPTIONS[name]}
            for name in SUITE_NAMES + ("all",)
        ]
    }


@app.post("/verify")
def verify(request: VerifyRequest) -> dict:
    try:
        config = build_config(
            request.suite,
            request.lambdas,
            shear_seed=request.shear_seed,
            jobs=request.jobs,
        )
    except ConfigError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    report = run_suite(config)
    return attach_meta(report_document(report), report)


@app.post("/parse")
def parse(request: ParseRequest) -> dict:
    try:
        form = parse_poly(request.text, PARSE_VARS)
        if request.slope is not None:
            param = parse_parameter(request.slope)
            form = form.subs({"l0": param.lam0, "l1": param.lam1})
    except (ParseError, ConfigError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return {"text": str(form.restrict_to_used())}
