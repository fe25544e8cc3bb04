"""HTTP facade for the interactive authoring loop.

Analyze a sentence, show every alternative formalization, let the user
accept one into a project, export the project ontology.  Projects are
stored one JSON file each, written atomically (temp file then rename), so
a crash can corrupt nothing and the directory is greppable.

Endpoints:
    POST /api/analyze                      sentence in, alternatives out
    POST /api/projects                     create project
    GET  /api/projects/{id}                fetch project
    POST /api/projects/{id}/accept         accept one alternative
    GET  /api/projects/{id}/export?format= dl | ofn | json
Static UI files, when present, are served under /.
"""

from __future__ import annotations

import json
import os
import re
import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import FileResponse, HTMLResponse, JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .axioms import (
    axiom_from_json,
    axiom_to_json,
    functional_axiom,
    serialize_dl,
    serialize_functional,
)
from .model import EmptySentenceError
from .pipeline import analysis_to_json, analyze_sentence

MAX_SENTENCE_CHARS = 2000
_ID_RE = re.compile(r"^[0-9a-f]{32}$")


class AnalyzeRequest(BaseModel):
    sentence: str = Field(min_length=1)


class CreateProjectRequest(BaseModel):
    name: str = Field(min_length=1, max_length=200)


class AcceptRequest(BaseModel):
    sentence: str = Field(min_length=1)
    alternativeIndex: int = Field(ge=0)


class ProjectStore:
    """One JSON document per project under `root`; mutations serialized
    per project id, analyze traffic untouched."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock(self, project_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(project_id, threading.Lock())

    def _path(self, project_id: str) -> Path:
        if not _ID_RE.match(project_id):
            raise HTTPException(status_code=404, detail="unknown project")
        return self.root / f"{project_id}.json"

    def create(self, name: str) -> dict:
        project_id = uuid.uuid4().hex
        now = _now()
        doc = {
            "id": project_id,
            "name": name,
            "createdAt": now,
            "updatedAt": now,
            "accepted": [],
        }
        with self._lock(project_id):
            self._write(project_id, doc)
        return doc

    def load(self, project_id: str) -> dict:
        path = self._path(project_id)
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise HTTPException(status_code=404, detail="unknown project")

    def _write(self, project_id: str, doc: dict) -> None:
        path = self._path(project_id)
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(json.dumps(doc, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
        os.replace(tmp, path)

    def accept(self, project_id: str, sentence: str, index: int) -> dict:
        with self._lock(project_id):
            doc = self.load(project_id)
            analysis = analyze_sentence(sentence)
            if not analysis.tedei:
                raise HTTPException(status_code=422, detail="sentence is not in the language")
            if index >= len(analysis.readings):
                raise HTTPException(
                    status_code=422,
                    detail=f"alternative index {index} out of range "
                    f"({len(analysis.readings)} alternatives)",
                )
            axiom = analysis.readings[index].axiom
            key = repr(axiom.key())
            for record in doc["accepted"]:
                if record["key"] == key:
                    raise HTTPException(
                        status_code=409, detail="axiom already accepted in this project"
                    )
            record = {
                "axiom": axiom_to_json(axiom),
                "key": key,
                "sourceSentence": sentence,
                "acceptedAlternativeIndex": index,
                "timestamp": _now(),
            }
            doc["accepted"].append(record)
            doc["updatedAt"] = record["timestamp"]
            self._write(project_id, doc)
            return record


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _alternatives(analysis) -> list[dict]:
    out = []
    for r in analysis.readings:
        ax = r.axiom
        out.append(
            {
                "aceSurface": r.ace,
                "aceTagged": r.tagged,
                "dl": serialize_dl(ax),
                "functional": functional_axiom(ax),
                "axiom": axiom_to_json(ax),
                "provenance": {
                    "lexicalizationIndex": r.lexicalization_index,
                    "interpretationIndex": r.interpretation_index,
                    "quantifier": r.interpretation.quantifier_choice,
                    "axiomForm": r.interpretation.axiom_form.value,
                    "distributed": r.interpretation.distributed,
                    "patterns": list(r.interpretation.patterns),
                },
            }
        )
    return out


def _default_static_dir() -> Path | None:
    env = os.environ.get("TEDEI_UI")
    if env:
        return Path(env)
    # editable-install layout: src/tedei/service.py -> repo root/frontend/dist
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


_PLACEHOLDER = """<!doctype html>
<meta charset="utf-8">
<title>tedei</title>
<p>The web UI bundle is not built. Run <code>npm run build</code> in
<code>frontend/</code>, or use the JSON API under <code>/api/</code>.</p>
"""


def create_app(
    data_dir: str | Path = "./tedei-projects",
    *,
    dev_cors: bool = False,
    max_sentence_chars: int = MAX_SENTENCE_CHARS,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="tedei", docs_url="/api/docs", openapi_url="/api/openapi.json")
    store = ProjectStore(data_dir)

    if dev_cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(EmptySentenceError)
    async def _empty_sentence(request: Request, exc: EmptySentenceError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    # malformed request bodies are client errors, not unprocessable entities:
    # 422 is reserved for semantically stale accept requests
    @app.exception_handler(RequestValidationError)
    async def _bad_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.post("/api/analyze")
    def analyze(body: AnalyzeRequest):
        if len(body.sentence) > max_sentence_chars:
            raise HTTPException(
                status_code=413,
                detail=f"sentence exceeds {max_sentence_chars} characters",
            )
        analysis = analyze_sentence(body.sentence)
        doc = analysis_to_json(analysis)
        doc["alternatives"] = _alternatives(analysis)
        return doc

    @app.post("/api/projects", status_code=201)
    def create_project(body: CreateProjectRequest):
        return store.create(body.name)

    @app.get("/api/projects/{project_id}")
    def get_project(project_id: str):
        return store.load(project_id)

    @app.post("/api/projects/{project_id}/accept", status_code=201)
    def accept(project_id: str, body: AcceptRequest):
        if len(body.sentence) > max_sentence_chars:
            raise HTTPException(
                status_code=413,
                detail=f"sentence exceeds {max_sentence_chars} characters",
            )
        return store.accept(project_id, body.sentence, body.alternativeIndex)

    @app.get("/api/projects/{project_id}/export")
    def export(project_id: str, format: str = "json"):
        doc = store.load(project_id)
        axioms = [axiom_from_json(rec["axiom"]) for rec in doc["accepted"]]
        if format == "dl":
            text = "".join(serialize_dl(ax) + "\n" for ax in axioms)
            return PlainTextResponse(text, media_type="text/plain; charset=utf-8")
        if format == "ofn":
            iri = f"https://example.org/tedei/project/{project_id}"
            return PlainTextResponse(
                serialize_functional(axioms, iri),
                media_type="text/owl-functional; charset=utf-8",
            )
        if format == "json":
            return {
                "id": doc["id"],
                "name": doc["name"],
                "axioms": [rec["axiom"] for rec in doc["accepted"]],
            }
        raise HTTPException(status_code=400, detail="format must be dl, ofn or json")

    resolved_static = Path(static_dir) if static_dir else _default_static_dir()
    if resolved_static and resolved_static.is_dir():

        @app.get("/", include_in_schema=False)
        def index():
            return FileResponse(resolved_static / "index.html")

        app.mount("/", StaticFiles(directory=resolved_static), name="ui")
    else:

        @app.get("/", include_in_schema=False)
        def placeholder():
            return HTMLResponse(_PLACEHOLDER)

    return app
