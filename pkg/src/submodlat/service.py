"""HTTP facade over the analysis core.

The handler functions (`handle_*`) are plain functions over a Context so the
CLI can call them in-process; the FastAPI app is a thin wrapper adding
request validation and error mapping. A group is referenced either by
catalog name or by inline spec text (same format as spec files).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .catalog import builtin_catalog
from .classes import analyze
from .context import Context, Limits
from .errors import ResourceLimitError, SpecParseError
from .groups import GroupSpec
from .lattice import dot_export
from .modularity import modular_relation
from .specfile import parse_spec_text
from .verify import ALL_SUITE_IDS, run_suites


class GroupRef(BaseModel):
    name: str | None = None
    spec: str | None = None
    subgroup_cap: int | None = Field(default=None, gt=0)
    element_cap: int | None = Field(default=None, gt=0)


class AnalyzeRequest(GroupRef):
    pass


class LatticeRequest(GroupRef):
    pass


class VerifyRequest(BaseModel):
    suites: list[str] = ["all"]
    extra_specs: list[str] = []
    jobs: int = Field(default=1, ge=1)


class CatalogEntry(BaseModel):
    name: str
    order: int
    degree: int


class CatalogResponse(BaseModel):
    groups: list[CatalogEntry]


class AnalyzeResponse(BaseModel):
    report: dict


class LatticeResponse(BaseModel):
    name: str
    nodes: int
    edges: int
    dot: str


class VerifyResponse(BaseModel):
    report: dict


def resolve_spec(name: str | None, spec_text: str | None) -> GroupSpec:
    """A group reference is exactly one of: catalog name, inline spec text."""
    if (name is None) == (spec_text is None):
        raise ValueError("provide exactly one of 'name' or 'spec'")
    if name is not None:
        from .catalog import catalog_spec
        return catalog_spec(name)
    return parse_spec_text(spec_text)


def handle_analyze(ctx: Context, spec: GroupSpec) -> dict:
    return analyze(ctx.group(spec), ctx).to_dict()


def handle_lattice(ctx: Context, spec: GroupSpec) -> dict:
    g = ctx.group(spec)
    lat = ctx.lattice(g)
    rel = modular_relation(lat)
    modular = {i for i in range(lat.size) if rel.mod[i, lat.top]}
    return {
        "name": g.name,
        "nodes": lat.size,
        "edges": int(lat.covers.sum()),
        "dot": dot_export(lat, modular=modular),
    }


def handle_verify(ctx: Context, suites, extra_specs=(), jobs: int = 1,
                  progress: bool = False) -> dict:
    specs = list(builtin_catalog())
    specs.extend(parse_spec_text(t) for t in extra_specs)
    return run_suites(suites, specs=specs, ctx=ctx, jobs=jobs, progress=progress)


def handle_catalog(ctx: Context) -> dict:
    groups = [
        {"name": s.name, "order": ctx.group(s).order, "degree": s.degree}
        for s in builtin_catalog()
    ]
    return {"groups": groups}


def _request_ctx(app_ctx: Context, ref: GroupRef) -> Context:
    if ref.subgroup_cap is None and ref.element_cap is None:
        return app_ctx
    base = app_ctx.limits
    return Context(Limits(
        element_cap=ref.element_cap or base.element_cap,
        subgroup_cap=ref.subgroup_cap or base.subgroup_cap,
    ))


def create_app(limits: Limits | None = None) -> FastAPI:
    app = FastAPI(title="submodlat", description="subgroup-lattice analysis service")
    ctx = Context(limits)

    def _spec_or_422(ref: GroupRef) -> GroupSpec:
        try:
            return resolve_spec(ref.name, ref.spec)
        except KeyError as e:
            raise HTTPException(status_code=404, detail=f"unknown catalog group {e.args[0]!r}")
        except (ValueError, SpecParseError) as e:
            raise HTTPException(status_code=422, detail=str(e))

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/catalog", response_model=CatalogResponse)
    def catalog():
        return handle_catalog(ctx)

    @app.get("/suites")
    def suites():
        return {"suites": ALL_SUITE_IDS}

    @app.post("/analyze", response_model=AnalyzeResponse)
    def analyze_ep(req: AnalyzeRequest):
        spec = _spec_or_422(req)
        try:
            return {"report": handle_analyze(_request_ctx(ctx, req), spec)}
        except ResourceLimitError as e:
            raise HTTPException(status_code=413, detail=str(e))

    @app.post("/lattice", response_model=LatticeResponse)
    def lattice_ep(req: LatticeRequest):
        spec = _spec_or_422(req)
        try:
            return handle_lattice(_request_ctx(ctx, req), spec)
        except ResourceLimitError as e:
            raise HTTPException(status_code=413, detail=str(e))

    @app.post("/verify", response_model=VerifyResponse)
    def verify_ep(req: VerifyRequest):
        try:
            report = handle_verify(ctx, req.suites, req.extra_specs, jobs=req.jobs)
        except SpecParseError as e:
            raise HTTPException(status_code=422, detail=str(e))
        except ValueError as e:
            raise HTTPException(status_code=422, detail=str(e))
        except ResourceLimitError as e:
            raise HTTPException(status_code=413, detail=str(e))
        return {"report": report}

    return app


app = create_app()
