"""HTTP facade over the engine.

Endpoints (JSON over HTTP, UTF-8):

* ``POST /api/v1/analyze``      {text, lexicon?} -> readability report
* ``POST /api/v1/schedule``     {text | document_id, profile?} -> schedule
* ``POST /api/v1/documents``    multipart file upload (text or PDF)
* ``GET  /api/v1/documents/{id}``
* ``GET  /api/v1/gradient?document_id=...&width=55``

All error bodies are ``{"error": {"code": ..., "message": ...}}``.
Configuration comes from the environment: ``THOTH_DATA_DIR``,
``THOTH_MAX_TEXT_BYTES``, ``THOTH_MAX_PDF_BYTES``, ``THOTH_ALLOWED_ORIGIN``
and ``THOTH_PORT`` (used by the CLI's ``serve``).
"""

from __future__ import annotations

import os
from dataclasses import asdict

from fastapi import FastAPI, Request, Response, UploadFile
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .errors import ExtractionError, InsufficientTextError, ProfileError
from .familiarity import LEXICON_NAMES, builtin_lexicon
from .gradient import GradientConfig, gradient_payload
from .ingest import tokenize
from .pdf import extract_pdf_text
from .readability import analyze, report_json
from .scheduler import ReaderProfile, build_schedule, schedule_json
from .store import DocumentStore

__all__ = ["create_app"]

DEFAULT_DATA_DIR = "./data/store"
DEFAULT_MAX_TEXT_BYTES = 2 * 1024 * 1024
DEFAULT_MAX_PDF_BYTES = 20 * 1024 * 1024

PROFILE_FIELDS = {
    "base_wpm", "reader_age", "unfamiliar_multiplier", "lexicon",
    "length_modifier_enabled", "punctuation_pauses_enabled",
}


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"error": {"code": code, "message": message}})


def _parse_profile(raw: object) -> ReaderProfile:
    if raw is None:
        return ReaderProfile()
    if not isinstance(raw, dict):
        raise ApiError(422, "invalid_profile", "profile must be an object")
    unknown = set(raw) - PROFILE_FIELDS
    if unknown:
        raise ApiError(422, "invalid_profile", f"unknown profile fields: {sorted(unknown)}")
    try:
        return ReaderProfile(**raw)
    except (ProfileError, TypeError) as exc:
        raise ApiError(422, "invalid_profile", str(exc))


def create_app(data_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="thoth", docs_url=None, redoc_url=None)

    store = DocumentStore(data_dir or os.environ.get("THOTH_DATA_DIR", DEFAULT_DATA_DIR))
    max_text = int(os.environ.get("THOTH_MAX_TEXT_BYTES", DEFAULT_MAX_TEXT_BYTES))
    max_pdf = int(os.environ.get("THOTH_MAX_PDF_BYTES", DEFAULT_MAX_PDF_BYTES))
    origin = os.environ.get("THOTH_ALLOWED_ORIGIN", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return _error_response(exc.status, exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError):
        return _error_response(422, "validation_error", str(exc.errors()[:1]))

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_exception(request: Request, exc: StarletteHTTPException):
        return _error_response(exc.status_code, "http_error", str(exc.detail))

    async def read_json(request: Request) -> dict:
        try:
            payload = await request.json()
        except Exception:
            raise ApiError(400, "invalid_json", "request body must be a JSON object")
        if not isinstance(payload, dict):
            raise ApiError(400, "invalid_json", "request body must be a JSON object")
        return payload

    def require_text(payload: dict) -> str:
        text = payload.get("text")
        if not isinstance(text, str) or not text.strip():
            raise ApiError(400, "empty_text", "text must be a non-empty string")
        if len(text.encode("utf-8")) > max_text:
            raise ApiError(413, "text_too_large", f"text exceeds {max_text} bytes")
        return text

    def lookup_lexicon(name: object):
        if name is None:
            return None
        if name not in LEXICON_NAMES:
            raise ApiError(422, "unknown_lexicon",
                           f"lexicon must be one of {list(LEXICON_NAMES)}")
        return builtin_lexicon(name)

    @app.post("/api/v1/analyze")
    async def analyze_endpoint(request: Request) -> Response:
        payload = await read_json(request)
        text = require_text(payload)
        lexicon = lookup_lexicon(payload.get("lexicon"))
        try:
            report = analyze(tokenize(text), lexicon)
        except InsufficientTextError as exc:
            raise ApiError(400, "insufficient_text", str(exc))
        return Response(content=report_json(report), media_type="application/json")

    @app.post("/api/v1/schedule")
    async def schedule_endpoint(request: Request) -> Response:
        payload = await read_json(request)
        has_text = "text" in payload
        has_id = "document_id" in payload
        if has_text == has_id:
            raise ApiError(400, "bad_source",
                           "provide exactly one of 'text' or 'document_id'")
        if has_text:
            text = require_text(payload)
        else:
            doc_rec = store.get(str(payload["document_id"]))
            if doc_rec is None:
                raise ApiError(404, "document_not_found", "unknown document id")
            text = doc_rec.text
        profile = _parse_profile(payload.get("profile"))
        doc = tokenize(text)
        lexicon = builtin_lexicon(profile.lexicon)
        try:
            report = analyze(doc, lexicon) if profile.reader_age is not None else None
            schedule = build_schedule(doc, report, profile, lexicon)
        except InsufficientTextError as exc:
            raise ApiError(400, "insufficient_text", str(exc))
        return Response(content=schedule_json(schedule), media_type="application/json")

    @app.post("/api/v1/documents")
    async def upload_endpoint(file: UploadFile) -> JSONResponse:
        data = await file.read()
        filename = file.filename or "upload"
        if data.startswith(b"%PDF-"):
            if len(data) > max_pdf:
                raise ApiError(413, "pdf_too_large", f"pdf exceeds {max_pdf} bytes")
            try:
                text = extract_pdf_text(data)
            except ExtractionError as exc:
                raise ApiError(422, f"extraction_{exc.reason}", str(exc))
            media_type = "pdf"
        else:
            if len(data) > max_text:
                raise ApiError(413, "text_too_large", f"text exceeds {max_text} bytes")
            try:
                text = data.decode("utf-8")
            except UnicodeDecodeError:
                raise ApiError(415, "unsupported_media_type",
                               "expected UTF-8 text or a PDF file")
            media_type = "text"
        if not text.strip():
            raise ApiError(422, "empty_document", "document contains no text")
        doc_rec, created = store.put(filename, media_type, text)
        body = {"id": doc_rec.id, "media_type": doc_rec.media_type,
                "char_count": len(doc_rec.text)}
        return JSONResponse(status_code=201 if created else 200, content=body)

    @app.get("/api/v1/documents/{doc_id}")
    async def get_document(doc_id: str) -> JSONResponse:
        doc_rec = store.get(doc_id)
        if doc_rec is None:
            raise ApiError(404, "document_not_found", "unknown document id")
        return JSONResponse(content=asdict(doc_rec))

    @app.get("/api/v1/gradient")
    async def gradient_endpoint(document_id: str = "", width: int = 55) -> JSONResponse:
        if not document_id:
            raise ApiError(400, "missing_document_id", "document_id is required")
        doc_rec = store.get(document_id)
        if doc_rec is None:
            raise ApiError(404, "document_not_found", "unknown document id")
        try:
            config = GradientConfig(line_width_cpl=width)
        except ValueError as exc:
            raise ApiError(422, "invalid_width", str(exc))
        payload = gradient_payload(tokenize(doc_rec.text), config)
        payload["document_id"] = doc_rec.id
        return JSONResponse(content=payload)

    return app
