"""FastAPI application exposing the embedding provider contract.

Endpoints:
    POST /embed   {"texts": [...]} -> {"vectors": [[...]], "dim": D, "model": str}
    GET  /health  -> {"status": "ok", "model": str, "dim": D}

Schema violations return 400, size-limit violations 413, and both endpoints
return 503 until the backend has loaded. Environment:
    EMBEDSVC_MODEL  model identifier (default all-MiniLM-L6-v2)
    EMBEDSVC_STUB   "1" selects the deterministic offline stub
    EMBEDSVC_SEED   stub seed (default 42)
    EMBEDSVC_DIM    stub dimension (default 384)
    EMBEDSVC_PORT   serve port (default 8787)
"""

from __future__ import annotations

import os
from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .stub import StubBackend

DEFAULT_MODEL = "all-MiniLM-L6-v2"
MAX_TEXTS = 256
MAX_TEXT_BYTES = 8192


class EmbedRequest(BaseModel):
    texts: list[str] = Field(min_length=1)


class ModelBackend:
    """Wraps a sentence-transformers encoder in deterministic eval mode."""

    def __init__(self, model_name: str):
        from sentence_transformers import SentenceTransformer

        self.model_name = model_name
        self._model = SentenceTransformer(model_name, device="cpu")
        self._model.eval()
        self.dim = int(self._model.get_sentence_embedding_dimension())

    def encode(self, texts: list[str]):
        return self._model.encode(
            texts, convert_to_numpy=True, show_progress_bar=False
        )


def _build_backend():
    if os.environ.get("EMBEDSVC_STUB") == "1":
        return StubBackend(
            dim=int(os.environ.get("EMBEDSVC_DIM", "384")),
            seed=int(os.environ.get("EMBEDSVC_SEED", "42")),
        )
    return ModelBackend(os.environ.get("EMBEDSVC_MODEL", DEFAULT_MODEL))


def create_app(backend=None, defer_load: bool = False) -> FastAPI:
    """Build the service; ``defer_load`` leaves the backend unloaded (503s)."""

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        if app.state.backend is None and not defer_load:
            app.state.backend = _build_backend()
        yield

    app = FastAPI(title="embedsvc", lifespan=lifespan)
    app.state.backend = backend

    @app.exception_handler(RequestValidationError)
    async def schema_violation(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    def require_backend():
        if app.state.backend is None:
            raise HTTPException(status_code=503, detail="model not loaded")
        return app.state.backend

    @app.get("/health")
    async def health():
        be = require_backend()
        return {"status": "ok", "model": be.model_name, "dim": be.dim}

    @app.post("/embed")
    async def embed(request: EmbedRequest):
        be = require_backend()
        if len(request.texts) > MAX_TEXTS:
            raise HTTPException(
                status_code=413, detail=f"at most {MAX_TEXTS} texts per request"
            )
        for i, text in enumerate(request.texts):
            if len(text.encode("utf-8")) > MAX_TEXT_BYTES:
                raise HTTPException(
                    status_code=413, detail=f"text {i} exceeds {MAX_TEXT_BYTES} bytes"
                )
        vectors = be.encode(request.texts)
        return {
            "vectors": [[float(x) for x in vec] for vec in vectors],
            "dim": be.dim,
            "model": be.model_name,
        }

    return app


def main():
    import uvicorn

    uvicorn.run(
        create_app(),
        host=os.environ.get("EMBEDSVC_HOST", "127.0.0.1"),
        port=int(os.environ.get("EMBEDSVC_PORT", "8787")),
        log_level="info",
    )


if __name__ == "__main__":
    main()
