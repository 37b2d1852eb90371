"""HTTP prediction service behind the interactive demo.

Raw text in, tagged entities out. Models are loaded once at startup and
never mutated afterwards, so any number of requests can be served
concurrently without locks. Responses are pure functions of (model, text).
"""

from __future__ import annotations

import re
import time
import unicodedata
from typing import NamedTuple, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .tagger import TaggerModel, predict

MAX_TEXT_CHARS = 10_000


class Token(NamedTuple):
    text: str
    start_char: int
    end_char: int


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def tokenize(text: str) -> list[Token]:
    """Whitespace tokenization with leading/trailing punctuation split off
    into separate tokens. Offsets always index the original string, so the
    input can be reconstructed from tokens plus the gaps between them."""
    tokens: list[Token] = []
    for match in re.finditer(r"\S+", text):
        chunk = match.group()
        start = match.start()
        end = match.end()
        while chunk and _is_punct(chunk[0]):
            tokens.append(Token(chunk[0], start, start + 1))
            start += 1
            chunk = chunk[1:]
        trailing: list[Token] = []
        while chunk and _is_punct(chunk[-1]):
            trailing.append(Token(chunk[-1], end - 1, end))
            end -= 1
            chunk = chunk[:-1]
        if chunk:
            tokens.append(Token(chunk, start, end))
        tokens.extend(reversed(trailing))
    return tokens


class PredictRequest(BaseModel):
    text: str = ""
    model: Optional[str] = None


def create_app(models: dict[str, TaggerModel], static_dir=None) -> FastAPI:
    """Build the service around a fixed model registry.

    The first entry of ``models`` is the default for requests that do not
    name one. When ``static_dir`` is given, the web demo bundle is served
    from the root path.
    """
    if not models:
        raise ValueError("serve needs at least one model")
    default_name = next(iter(models))
    app = FastAPI(title="nerkit", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/models")
    def list_models():
        return [{"name": name, "labels": model.labels} for name, model in models.items()]

    @app.post("/predict")
    def handle_predict(req: PredictRequest):
        text = req.text
        if not text.strip():
            raise HTTPException(status_code=400, detail="text must not be empty")
        if len(text) > MAX_TEXT_CHARS:
            raise HTTPException(
                status_code=400, detail=f"text exceeds {MAX_TEXT_CHARS} characters"
            )
        name = req.model or default_name
        model = models.get(name)
        if model is None:
            raise HTTPException(status_code=404, detail=f"unknown model {name!r}")
        started = time.perf_counter()
        try:
            tokens = tokenize(text)
            prediction = predict([t.text for t in tokens], model)
        except HTTPException:
            raise
        except Exception:
            # opaque on purpose: internals never leak to clients
            raise HTTPException(status_code=500, detail="internal error") from None
        return {
            "tokens": [
                {"text": t.text, "start_char": t.start_char, "end_char": t.end_char}
                for t in tokens
            ],
            "spans": [
                {
                    "type": span.entity_type,
                    "start_token": span.start,
                    "end_token": span.end,
                    "text": text[tokens[span.start].start_char : tokens[span.end - 1].end_char],
                    "score": span.score,
                }
                for span in prediction.spans
            ],
            "model": name,
            "elapsed_ms": (time.perf_counter() - started) * 1000.0,
        }

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="demo")

    return app
