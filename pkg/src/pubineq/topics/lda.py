"""Latent Dirichlet Allocation fit by collapsed Gibbs sampling.

The per-token sweep runs in a compiled Cython kernel when the extension was
built, with a pure-Python fallback selected at import time (force the
fallback with ``PUBINEQ_PURE_PYTHON=1``). Both kernels consume the same
numpy-generated uniform stream and are arithmetic-identical, so a fit does
not depend on which one is active.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateVocabError, EmptyCorpusError, TopicOutOfRangeError
from .preprocess import TokenizedDoc

DEFAULT_TOPICS = 5
DEFAULT_BETA = 0.01
DEFAULT_ITERATIONS = 1000
DEFAULT_SEED = 42
DEFAULT_TOP_WORDS = 4


def _select_kernel():
    if not os.environ.get("PUBINEQ_PURE_PYTHON"):
        try:
            from . import _gibbs

            return _gibbs, "cython"
        except ImportError:
            pass
    from . import _gibbs_py

    return _gibbs_py, "python"


_KERNEL, _KERNEL_NAME = _select_kernel()


def active_kernel_name() -> str:
    """Which sweep implementation this process is using: cython or python."""
    return _KERNEL_NAME


@dataclass
class TopicModel:
    """Fitted model state: distributions, assignments, and the fit recipe."""

    n_topics: int
    vocab: list[str]
    phi: np.ndarray  # n_topics x |vocab|, rows sum to 1
    theta: np.ndarray  # n_docs x n_topics, rows sum to 1
    assignments: list[np.ndarray]  # per-doc token topic ids
    alpha: float
    beta: float
    seed: int
    iterations: int


def lda_fit(
    docs: list[TokenizedDoc],
    n_topics: int = DEFAULT_TOPICS,
    alpha: float | None = None,
    beta: float = DEFAULT_BETA,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = DEFAULT_SEED,
) -> TopicModel:
    """Fit a topic model over tokenized docs, deterministically for a seed.

    ``alpha`` defaults to 50 / n_topics. Distributions are estimated from the
    final sweep's counts with Dirichlet smoothing: phi = (count + beta) /
    (topic total + |V| beta), theta = (count + alpha) / (doc length + K alpha).

    Raises:
        EmptyCorpusError: no documents.
        DegenerateVocabError: documents exist but carry no tokens.
    """
    if n_topics < 1:
        raise ValueError("n_topics must be >= 1")
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    if not docs:
        raise EmptyCorpusError("no documents to model")
    if alpha is None:
        alpha = 50.0 / n_topics

    vocab = sorted({tok for doc in docs for tok in doc.tokens})
    if not vocab:
        raise DegenerateVocabError("no vocabulary left after preprocessing")
    word_index = {w: i for i, w in enumerate(vocab)}

    doc_ids_list: list[int] = []
    word_ids_list: list[int] = []
    doc_lengths = np.zeros(len(docs), dtype=np.int64)
    for d, doc in enumerate(docs):
        doc_lengths[d] = len(doc.tokens)
        for tok in doc.tokens:
            doc_ids_list.append(d)
            word_ids_list.append(word_index[tok])

    doc_ids = np.asarray(doc_ids_list, dtype=np.int32)
    word_ids = np.asarray(word_ids_list, dtype=np.int32)
    n_tokens = doc_ids.shape[0]
    n_docs = len(docs)
    vocab_size = len(vocab)

    rng = np.random.default_rng(seed)
    z = rng.integers(0, n_topics, size=n_tokens, dtype=np.int32)

    n_dk = np.zeros((n_docs, n_topics), dtype=np.int32)
    n_kw = np.zeros((n_topics, vocab_size), dtype=np.int32)
    n_k = np.zeros(n_topics, dtype=np.int32)
    np.add.at(n_dk, (doc_ids, z), 1)
    np.add.at(n_kw, (z, word_ids), 1)
    np.add.at(n_k, z, 1)

    for _ in range(iterations):
        uniforms = rng.random(n_tokens)
        _KERNEL.sweep(doc_ids, word_ids, z, n_dk, n_kw, n_k, alpha, beta, uniforms)

    phi = (n_kw + beta) / (n_k[:, None] + vocab_size * beta)
    theta = (n_dk + alpha) / (doc_lengths[:, None] + n_topics * alpha)

    assignments = []
    cursor = 0
    for d in range(n_docs):
        length = int(doc_lengths[d])
        assignments.append(z[cursor : cursor + length].copy())
        cursor += length

    return TopicModel(
        n_topics=n_topics,
        vocab=vocab,
        phi=phi,
        theta=theta,
        assignments=assignments,
        alpha=alpha,
        beta=beta,
        seed=seed,
        iterations=iterations,
    )


def top_words(model: TopicModel, topic: int, n: int = DEFAULT_TOP_WORDS) -> list[str]:
    """The n highest-probability terms of a topic, ties broken alphabetically."""
    if topic < 0 or topic >= model.n_topics:
        raise TopicOutOfRangeError(f"topic {topic} not in [0, {model.n_topics})")
    if n <= 0:
        return []
    order = sorted(range(len(model.vocab)), key=lambda i: (-model.phi[topic, i], model.vocab[i]))
    return [model.vocab[i] for i in order[:n]]
