"""Abstract preprocessing, LDA topic models, and country-level embeddings."""

from .preprocess import TokenizedDoc, load_stopwords, preprocess, sentence_split
from .lda import TopicModel, active_kernel_name, lda_fit, top_words
from .embedding import (
    SimilarityMatrix,
    country_embedding,
    paragraph_embedding,
    similarity_matrix,
)

__all__ = [
    "TokenizedDoc",
    "TopicModel",
    "SimilarityMatrix",
    "active_kernel_name",
    "country_embedding",
    "lda_fit",
    "load_stopwords",
    "paragraph_embedding",
    "preprocess",
    "sentence_split",
    "similarity_matrix",
    "top_words",
]
