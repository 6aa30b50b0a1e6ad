"""Country-level embedding pipeline and cosine similarity matrices.

An abstract is treated as one paragraph: it is split into sentences, each
sentence is embedded by the provider, and the sentence vectors are averaged
component-wise into a paragraph vector. A country's vector is the plain
average of its paragraph vectors. No renormalization happens between stages;
the final cosine absorbs scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from ..errors import DimMismatchError, NoAbstractsError, ZeroVectorError
from ..records import ArticleRecord
from .preprocess import sentence_split


@dataclass
class SimilarityMatrix:
    labels: list[str]
    cells: np.ndarray  # square, symmetric, unit diagonal

    def value(self, a: str, b: str) -> float:
        return float(self.cells[self.labels.index(a), self.labels.index(b)])


def paragraph_embedding(abstract: str, provider) -> np.ndarray:
    """Mean of the abstract's sentence embeddings (the paragraph stage)."""
    sentences = sentence_split(abstract)
    if not sentences:
        raise NoAbstractsError("cannot embed an empty abstract")
    vectors = provider.embed(sentences)
    return vectors.sum(axis=0) / len(sentences)


def country_embedding(articles: Sequence[ArticleRecord], provider) -> np.ndarray:
    """Mean of paragraph embeddings over every article with an abstract.

    Articles are averaged in sorted article_id order, so the result is exactly
    invariant to input ordering.

    Raises:
        NoAbstractsError: no article carries a non-empty abstract.
    """
    withabs = sorted(
        (a for a in articles if a.abstract.strip()), key=lambda a: a.article_id
    )
    if not withabs:
        raise NoAbstractsError("no non-empty abstracts in group")
    paragraphs = [paragraph_embedding(a.abstract, provider) for a in withabs]
    stacked = np.stack(paragraphs)
    return stacked.sum(axis=0) / len(paragraphs)


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity; raises on mismatched dims or zero vectors."""
    if a.shape != b.shape:
        raise DimMismatchError(f"vector dims differ: {a.shape} vs {b.shape}")
    norm_a = float(np.linalg.norm(a))
    norm_b = float(np.linalg.norm(b))
    if norm_a == 0.0 or norm_b == 0.0:
        raise ZeroVectorError("cosine of a zero vector is undefined")
    return float(np.dot(a, b) / (norm_a * norm_b))


def similarity_matrix(embeddings: Mapping[str, np.ndarray]) -> SimilarityMatrix:
    """Symmetric cosine matrix over labeled vectors, labels sorted.

    Raises:
        ValueError: fewer than two labels.
        DimMismatchError / ZeroVectorError: bad vectors.
    """
    labels = sorted(embeddings)
    if len(labels) < 2:
        raise ValueError("similarity matrix needs at least two labels")
    size = len(labels)
    cells = np.eye(size, dtype=np.float64)
    for i in range(size):
        for j in range(i + 1, size):
            value = cosine(embeddings[labels[i]], embeddings[labels[j]])
            cells[i, j] = value
            cells[j, i] = value
    return SimilarityMatrix(labels=labels, cells=cells)
