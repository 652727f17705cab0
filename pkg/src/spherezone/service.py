"""FastAPI service exposing the arrangement engine.

Every endpoint takes an arrangement source (inline document, seeded random
spec, or the built-in example) and returns machine-readable JSON.  Exact
rationals are serialized as "p/q" strings.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, Query
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, model_validator

from .arrangement import build_sphere, quotient_projective
from .discharge import (
    classify_negative,
    enumerate_lemma_multisets,
    run_discharging,
)
from .documents import (
    document_from_line_set,
    document_to_dict,
    parse_document,
)
from .errors import (
    DegenerateInputError,
    DocumentError,
    ExampleVerificationError,
    GenerationError,
    HeadlineFindingError,
    InternalConsistencyError,
    OnBoundaryError,
)
from .generate import ICOSAHEDRAL_CENSUS, icosahedral_example, random_arrangement
from .render import render_svg
from .search import question1_stats, search_max_CL
from .zones import verify_identities, vertex_zone, vertex_zone_complexity

app = FastAPI(
    title="spherezone",
    description="Exact zone analytics and discharging for great-circle "
    "arrangements on the sphere and line arrangements in the "
    "projective plane.",
    version="0.1.0",
)


class RandomSpec(BaseModel):
    n: int = Field(ge=3)
    bound: int = Field(default=50, ge=1)
    seed: int = 0


class SourceSpec(BaseModel):
    """Exactly one of: an inline document, a random spec, or an example name."""

    document: Optional[dict] = None
    random: Optional[RandomSpec] = None
    example: Optional[Literal["icosahedral"]] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        given = [x for x in (self.document, self.random, self.example)
                 if x is not None]
        if len(given) != 1:
            raise ValueError(
                "provide exactly one of 'document', 'random', 'example'"
            )
        return self

    def line_set(self):
        if self.document is not None:
            return parse_document(self.document).line_set()
        if self.random is not None:
            return random_arrangement(self.random.n, self.random.bound,
                                      self.random.seed)
        return icosahedral_example()


class Counts(BaseModel):
    V: int
    E: int
    F: int


class BuildResponse(BaseModel):
    n: int
    ring: str
    sphere: Counts
    projective: Counts
    f_vector: dict[int, int]
    document: dict


class LineZoneOut(BaseModel):
    line: int
    C_l: int
    r_l: int
    ratio: float


class ZonesResponse(BaseModel):
    n: int
    C_L: int
    per_line: list[LineZoneOut]
    zone_theorem_ok: bool
    r_bound_ok: bool


class VertexZoneOut(BaseModel):
    vertex: int
    line_pair: tuple[int, int]
    K_v: tuple[int, int, int, int]
    C_v: int


class VertexZonesResponse(BaseModel):
    n: int
    C_L: int
    per_vertex: list[VertexZoneOut]
    type_census: dict[str, int]


class VerifyResponse(BaseModel):
    n: int
    C_L: int
    identities: dict[str, bool]
    identities_ok: bool
    theorem_ok: bool
    zone_theorem_ok: bool
    r_bound_ok: bool
    ok: bool


class DischargeResponse(BaseModel):
    n: int
    totals: dict[str, str]
    conserved: bool
    min_w2: str
    min_w3: str
    negative_w2: int
    donors: int
    theorem_witnesses: int


class SearchRecordOut(BaseModel):
    seed: int
    C_L: int
    f_vector: dict[int, int]
    best_so_far: bool
    runtime: float


class SearchResponse(BaseModel):
    n: int
    trials: int
    max_C_L: int
    best_seed: Optional[int]
    records: list[SearchRecordOut]


class StatsResponse(BaseModel):
    n: int
    trials: int
    mean: float
    max: float
    histogram: dict[float, int]
    per_line_bound_ok: bool


class RenderRequest(BaseModel):
    source: SourceSpec
    tint_faces: bool = False
    label_complexities: bool = False
    size: int = Field(default=600, ge=100, le=4000)


class RenderResponse(BaseModel):
    svg: str


def _proj(source):
    return quotient_projective(build_sphere(source.line_set()))


@app.exception_handler(DegenerateInputError)
@app.exception_handler(DocumentError)
@app.exception_handler(GenerationError)
@app.exception_handler(OnBoundaryError)
async def _degenerate_handler(request, exc):
    return JSONResponse(
        status_code=422,
        content={"detail": {"code": "degenerate-input", "message": str(exc)}},
    )


@app.exception_handler(InternalConsistencyError)
@app.exception_handler(ExampleVerificationError)
async def _consistency_handler(request, exc):
    return JSONResponse(
        status_code=500,
        content={"detail": {"code": "internal-consistency",
                            "message": str(exc)}},
    )


@app.exception_handler(HeadlineFindingError)
async def _headline_handler(request, exc):
    return JSONResponse(
        status_code=500,
        content={"detail": {"code": "headline-finding", "message": str(exc)}},
    )


@app.get("/healthz")
def healthz():
    return {"status": "ok"}


@app.post("/build", response_model=BuildResponse)
def build(source: SourceSpec):
    line_set = source.line_set()
    sphere = build_sphere(line_set)
    proj = quotient_projective(sphere)
    return BuildResponse(
        n=line_set.n,
        ring=line_set.ring,
        sphere=Counts(V=sphere.vertex_count, E=sphere.edge_count,
                      F=sphere.face_count),
        projective=Counts(V=proj.V, E=proj.E, F=proj.F),
        f_vector=dict(sorted(proj.face_sizes().items())),
        document=document_to_dict(document_from_line_set(line_set)),
    )


@app.post("/zones", response_model=ZonesResponse)
def zones(source: SourceSpec):
    proj = _proj(source)
    report = verify_identities(proj)
    per_line = [
        LineZoneOut(line=i.line, C_l=i.C_l, r_l=i.r_l,
                    ratio=i.C_l / (proj.n - 1))
        for i in report.per_line
    ]
    return ZonesResponse(
        n=proj.n,
        C_L=report.C_L,
        per_line=per_line,
        zone_theorem_ok=report.zone_theorem_ok,
        r_bound_ok=report.r_bound_ok,
    )


@app.post("/vertex-zones", response_model=VertexZonesResponse)
def vertex_zones(source: SourceSpec):
    proj = _proj(source)
    per_vertex = []
    census: dict[str, int] = {}
    c_l = None
    for pv in range(proj.V):
        kv = vertex_zone(proj, pv)
        cv = vertex_zone_complexity(proj, pv)
        c_l = cv if c_l is None else min(c_l, cv)
        key = ",".join(map(str, kv))
        census[key] = census.get(key, 0) + 1
        per_vertex.append(VertexZoneOut(
            vertex=pv, line_pair=proj.vertex_line_pair(pv), K_v=kv, C_v=cv))
    return VertexZonesResponse(n=proj.n, C_L=c_l, per_vertex=per_vertex,
                               type_census=census)


@app.post("/verify", response_model=VerifyResponse)
def verify(source: SourceSpec):
    proj = _proj(source)
    report = verify_identities(proj)
    identities = {
        "eq1": all(report.identities.eq1.values()),
        "eq1_1": all(report.identities.eq1_1.values()),
        "eq2": all(report.identities.eq2.values()),
        "eq3": all(report.identities.eq3.values()),
        "eq4": all(report.identities.eq4.values()),
    }
    theorem_ok = report.C_L <= 5
    ok = (report.identities_ok and theorem_ok and report.zone_theorem_ok
          and report.r_bound_ok)
    return VerifyResponse(
        n=proj.n,
        C_L=report.C_L,
        identities=identities,
        identities_ok=report.identities_ok,
        theorem_ok=theorem_ok,
        zone_theorem_ok=report.zone_theorem_ok,
        r_bound_ok=report.r_bound_ok,
        ok=ok,
    )


@app.post("/discharge", response_model=DischargeResponse)
def discharge(source: SourceSpec):
    sphere = build_sphere(source.line_set())
    w1, w2, w3 = run_discharging(sphere)
    classes = classify_negative(w2, sphere)
    donors = sum(
        1 for v in sphere.vertices
        if w2.vertex_charge[v.id] >= 0
    )
    return DischargeResponse(
        n=sphere.n,
        totals={"w1": str(w1.total), "w2": str(w2.total), "w3": str(w3.total)},
        conserved=w1.total == w2.total == w3.total == -6,
        min_w2=str(min(w2.vertex_charge.values())),
        min_w3=str(min(w3.vertex_charge.values())),
        negative_w2=sum(1 for c in classes if c.negative),
        donors=donors,
        theorem_witnesses=sum(1 for c in classes if c.theorem_witness),
    )


@app.get("/lemma")
def lemma(cap: int = Query(default=12, ge=12)):
    return {"cap": cap,
            "multisets": [list(k) for k in enumerate_lemma_multisets(cap)]}


@app.post("/search", response_model=SearchResponse)
def search(n: int, trials: int, seed: int = 0,
           strategy: str = "random", bound: int = 50):
    records, summary = search_max_CL(n, trials, seed, strategy, bound)
    return SearchResponse(
        n=n,
        trials=trials,
        max_C_L=summary.max_C_L,
        best_seed=summary.best_seed,
        records=[SearchRecordOut(seed=r.seed, C_L=r.C_L,
                                 f_vector=r.f_vector,
                                 best_so_far=r.best_so_far,
                                 runtime=r.runtime)
                 for r in records],
    )


@app.post("/stats-q1", response_model=StatsResponse)
def stats_q1(n: int, trials: int, seed: int = 0, bound: int = 50):
    stats = question1_stats(n, trials, seed, bound)
    return StatsResponse(
        n=stats.n, trials=stats.trials, mean=stats.mean, max=stats.max,
        histogram=stats.histogram, per_line_bound_ok=stats.per_line_bound_ok,
    )


@app.get("/example/icosahedral")
def example_icosahedral():
    line_set = icosahedral_example()
    census = dict(ICOSAHEDRAL_CENSUS)
    return {
        "document": document_to_dict(
            document_from_line_set(line_set, name="icosahedral")),
        "census": {
            "vertices": census["vertices"],
            "f_vector": census["f_vector"],
            "vertex_types": {",".join(map(str, k)): v
                             for k, v in census["vertex_types"].items()},
            "C_by_type": {",".join(map(str, k)): v
                          for k, v in census["C_by_type"].items()},
            "C_L": census["C_L"],
        },
    }


@app.post("/render", response_model=RenderResponse)
def render(req: RenderRequest):
    proj = _proj(req.source)
    labels = None
    if req.label_complexities and proj.n >= 4:
        labels = {pv: str(vertex_zone_complexity(proj, pv))
                  for pv in range(proj.V)}
    return RenderResponse(svg=render_svg(proj, tint_faces=req.tint_faces,
                                         vertex_labels=labels,
                                         size=req.size))
