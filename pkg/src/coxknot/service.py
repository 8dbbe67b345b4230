"""HTTP/JSON service exposing analysis, geometry, translation and search.

All field names are snake_case and all geometry coordinates are integers,
so clients can render exactly what the core computed.
"""

from __future__ import annotations

from importlib import resources

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from . import coxeter as cx
from . import cubic
from .report import gallery_report, geometry_document
from .search import SearchConfig, enumerate_records

SEARCH_LENGTH_CAP = 12

app = FastAPI(title="coxknot", version="0.1.0")
app.add_middleware(
    CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(HTTPException)
async def _http_error(request: Request, exc: HTTPException):
    return JSONResponse(status_code=exc.status_code,
                        content={"error": str(exc.detail)})


@app.exception_handler(RequestValidationError)
async def _validation_error(request: Request, exc: RequestValidationError):
    return JSONResponse(status_code=400, content={"error": str(exc.errors())})

_report_cache: dict = {}


class GalleryRequest(BaseModel):
    word: str
    repeat: int = 1
    seed: int = 0


class TranslateRequest(BaseModel):
    static_word: str
    sigma: str
    max_refine: int = 4
    seed: int = 0


class SearchRequest(BaseModel):
    mode: str
    max_piece_length: int
    max_d_count: int | None = None
    limit: int = 100
    seed: int = 0


def _validated_report(req: GalleryRequest) -> dict:
    key = (req.word, req.repeat, req.seed)
    if key in _report_cache:
        return _report_cache[key]
    try:
        report = gallery_report(req.word, req.repeat, req.seed)
    except cx.WordError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    _report_cache[key] = report
    return report


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/gallery/analyze")
def analyze(req: GalleryRequest):
    return _validated_report(req)


@app.post("/gallery/geometry")
def geometry(req: GalleryRequest):
    _validated_report(req)  # raise the same errors first
    return geometry_document(req.word, req.repeat, req.seed)


@app.post("/translate")
def translate(req: TranslateRequest):
    try:
        sigma = cubic.StaticRotation.parse(req.sigma)
        result = cubic.translate_piece(req.static_word, sigma, req.max_refine)
    except cubic.CubicError as exc:
        text = str(exc)
        status = 400 if "not a static word" in text else 422
        raise HTTPException(status_code=status, detail=text)
    word = result["unshifted_word"]
    return {
        "coxeter_word": word,
        "shifted_word": result["coxeter_word"],
        "shift": result["shift"],
        "refinement": result["refinement"],
        "tnb_word": result["tnb_word"],
        "tau": result["tau"].describe() or "identity",
        "gluing": {"kind": result["gluing"].kind, "s": result["gluing"].s},
        "report": gallery_report(word, 3, req.seed),
    }


@app.post("/search")
def search(req: SearchRequest):
    if req.max_piece_length > SEARCH_LENGTH_CAP:
        raise HTTPException(
            status_code=413,
            detail=f"max_piece_length capped at {SEARCH_LENGTH_CAP} over HTTP")
    try:
        config = SearchConfig(mode=req.mode,
                              max_piece_length=req.max_piece_length,
                              max_d_count=req.max_d_count, seed=req.seed)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    records = []
    for record in enumerate_records(config):
        if len(records) >= req.limit:
            break
        records.append({
            "word": record.word,
            "total_length": record.total_length,
            "knot": record.knot,
            "certainty": record.certainty,
            "d_count": record.d_count,
            "cube_visits": record.cube_visits,
        })
    return {"records": records, "truncated": len(records) >= req.limit}


@app.get("/corpus/words", response_class=PlainTextResponse)
def corpus_words():
    """The shipped corpus file: word, repeat, expected knot per line."""
    return resources.files("coxknot").joinpath("data/corpus_words.txt").read_text()
