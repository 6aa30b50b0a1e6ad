"""Deterministic offline embedding backend.

Mirrors the analysis toolkit's in-process stub exactly: a text maps to the
unit-normalized sum of per-token Gaussian vectors seeded from
blake2b("{seed}:{token}"), tokens sorted before summing. Two processes with
the same seed and dim therefore return bitwise-identical vectors, and so does
the toolkit's local stub, which keeps hermetic tests meaningful.
"""

from __future__ import annotations

import hashlib
import re

import numpy as np

_TOKEN_RE = re.compile(r"[a-z0-9]+")
_EMPTY_TOKEN = "\x00empty"


class StubBackend:
    model_name = "stub"

    def __init__(self, dim: int = 384, seed: int = 42):
        self.dim = dim
        self.seed = seed
        self._cache: dict[str, np.ndarray] = {}

    def _token_vector(self, token: str) -> np.ndarray:
        vec = self._cache.get(token)
        if vec is None:
            digest = hashlib.blake2b(
                f"{self.seed}:{token}".encode("utf-8"), digest_size=8
            ).digest()
            rng = np.random.default_rng(int.from_bytes(digest, "big"))
            vec = rng.standard_normal(self.dim)
            self._cache[token] = vec
        return vec

    def encode(self, texts: list[str]) -> np.ndarray:
        out = np.empty((len(texts), self.dim), dtype=np.float64)
        for i, text in enumerate(texts):
            tokens = _TOKEN_RE.findall(text.lower()) or [_EMPTY_TOKEN]
            acc = np.zeros(self.dim, dtype=np.float64)
            for token in sorted(tokens):
                acc += self._token_vector(token)
            norm = float(np.linalg.norm(acc))
            if norm == 0.0:
                acc[0] = 1.0
                norm = 1.0
            out[i] = acc / norm
        return out
