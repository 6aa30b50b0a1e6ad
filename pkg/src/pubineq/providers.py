"""Embedding providers: a deterministic offline stub and an HTTP client.

Both expose the same contract: ``embed(texts)`` returns one vector per text,
order-preserving, as a float64 array of shape (len(texts), dim).

The stub maps a text to the unit-normalized sum of per-token pseudorandom
vectors, one Gaussian vector per distinct token seeded from
blake2b("{seed}:{token}"). Tokens are sorted before summing, so any two texts
with the same token multiset get bitwise-identical vectors, in any process.
The embedding service ships the same algorithm for its offline mode.
"""

from __future__ import annotations

import hashlib
import re
from typing import Sequence

import numpy as np
import requests

from .errors import DimMismatchError, ProviderError

DEFAULT_DIM = 384
DEFAULT_STUB_SEED = 42
MAX_BATCH = 256

_TOKEN_RE = re.compile(r"[a-z0-9]+")
_EMPTY_TOKEN = "\x00empty"


def stub_vector(text: str, dim: int = DEFAULT_DIM, seed: int = DEFAULT_STUB_SEED,
                _cache: dict | None = None) -> np.ndarray:
    """Deterministic unit vector for one text (the stub's per-text oracle)."""
    tokens = _TOKEN_RE.findall(text.lower()) or [_EMPTY_TOKEN]
    acc = np.zeros(dim, dtype=np.float64)
    for token in sorted(tokens):
        vec = None if _cache is None else _cache.get(token)
        if vec is None:
            digest = hashlib.blake2b(
                f"{seed}:{token}".encode("utf-8"), digest_size=8
            ).digest()
            rng = np.random.default_rng(int.from_bytes(digest, "big"))
            vec = rng.standard_normal(dim)
            if _cache is not None:
                _cache[token] = vec
        acc += vec
    norm = float(np.linalg.norm(acc))
    if norm == 0.0:  # measure-zero Gaussian cancellation
        acc[0] = 1.0
        norm = 1.0
    return acc / norm


class StubEmbedder:
    """Offline provider: seeded hashed bag-of-words projection, unit norm."""

    def __init__(self, dim: int = DEFAULT_DIM, seed: int = DEFAULT_STUB_SEED):
        self.dim = dim
        self.seed = seed
        self.model = "stub"
        self._token_cache: dict[str, np.ndarray] = {}

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        out = np.empty((len(texts), self.dim), dtype=np.float64)
        for i, text in enumerate(texts):
            out[i] = stub_vector(text, self.dim, self.seed, _cache=self._token_cache)
        return out


class HttpEmbedder:
    """Client for the embedding service's POST /embed contract."""

    def __init__(self, url: str, timeout: float = 120.0, batch_size: int = MAX_BATCH):
        if batch_size < 1 or batch_size > MAX_BATCH:
            raise ValueError(f"batch_size must be in [1, {MAX_BATCH}]")
        self.url = url.rstrip("/")
        self.timeout = timeout
        self.batch_size = batch_size
        self.dim: int | None = None
        self.model: str | None = None

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        batches: list[np.ndarray] = []
        for start in range(0, len(texts), self.batch_size):
            chunk = list(texts[start : start + self.batch_size])
            try:
                resp = requests.post(
                    f"{self.url}/embed", json={"texts": chunk}, timeout=self.timeout
                )
            except requests.RequestException as exc:
                raise ProviderError(f"embed request failed: {exc}") from exc
            if resp.status_code != 200:
                raise ProviderError(
                    f"embed request returned {resp.status_code}: {resp.text[:200]}"
                )
            payload = resp.json()
            vectors = np.asarray(payload["vectors"], dtype=np.float64)
            if vectors.shape[0] != len(chunk):
                raise ProviderError(
                    f"provider returned {vectors.shape[0]} vectors for {len(chunk)} texts"
                )
            dim = int(payload["dim"])
            if vectors.ndim != 2 or vectors.shape[1] != dim:
                raise ProviderError("provider vectors do not match declared dim")
            if self.dim is None:
                self.dim = dim
                self.model = str(payload.get("model", ""))
            elif dim != self.dim:
                raise DimMismatchError(f"provider dim changed from {self.dim} to {dim}")
            if not np.all(np.isfinite(vectors)):
                raise ProviderError("provider returned non-finite components")
            batches.append(vectors)
        if not batches:
            return np.empty((0, self.dim or 0), dtype=np.float64)
        return np.vstack(batches)


def get_provider(spec: str, dim: int = DEFAULT_DIM, seed: int = DEFAULT_STUB_SEED):
    """Build a provider from a config value: "stub" or a service base URL."""
    if spec == "stub":
        return StubEmbedder(dim=dim, seed=seed)
    if spec.startswith("http://") or spec.startswith("https://"):
        return HttpEmbedder(spec)
    raise ValueError(f"provider must be 'stub' or an http(s) URL, got {spec!r}")
