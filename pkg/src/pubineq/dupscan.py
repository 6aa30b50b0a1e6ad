"""Duplicate-publication scanning: same authors, near-identical text.

Pairs of articles sharing an author set (order-insensitive, Jaccard over
normalized keys) are scored by embedding cosine of their titles and their
paragraph-stage abstract embeddings. The scan flags pairs for human review;
it never labels misconduct on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import EmptyInputError
from .records import ArticleRecord, Corpus, normalize_name
from .topics.embedding import cosine, paragraph_embedding

DEFAULT_TAU_TITLE = 0.85
DEFAULT_TAU_ABSTRACT = 0.85


@dataclass
class DupCandidate:
    article_a: str  # ids stored in lexical order
    article_b: str
    author_set_relation: str  # "identical" or "jaccard=0.6667"
    title_similarity: float
    abstract_similarity: float | None  # None when an abstract is missing
    flagged: bool

    @property
    def max_similarity(self) -> float:
        if self.abstract_similarity is None:
            return self.title_similarity
        return max(self.title_similarity, self.abstract_similarity)


def _author_key_set(article: ArticleRecord) -> frozenset:
    return frozenset(normalize_name(a.given_names, a.surname) for a in article.authors)


def candidate_pairs(
    corpus: Corpus, min_author_jaccard: float = 1.0
) -> list[tuple[str, str]]:
    """Unordered article pairs whose author-key sets overlap enough.

    The default threshold 1.0 keeps only identical author sets (shuffled
    order still matches). Output pairs carry ids in lexical order and the
    list is sorted, so article ordering never matters.
    """
    if not 0.0 < min_author_jaccard <= 1.0:
        raise ValueError("min_author_jaccard must be in (0, 1]")
    articles = sorted(corpus.articles, key=lambda a: a.article_id)
    keysets = {a.article_id: _author_key_set(a) for a in articles}
    pairs = []
    for a, b in combinations(articles, 2):
        sa, sb = keysets[a.article_id], keysets[b.article_id]
        union = len(sa | sb)
        if union == 0:
            continue
        if len(sa & sb) / union >= min_author_jaccard:
            pairs.append((a.article_id, b.article_id))
    return pairs


def score_pair(
    a: ArticleRecord,
    b: ArticleRecord,
    provider,
    tau_title: float = DEFAULT_TAU_TITLE,
    tau_abstract: float = DEFAULT_TAU_ABSTRACT,
) -> DupCandidate:
    """Embedding-similarity score for one article pair.

    A missing abstract on either side drops the abstract channel; the flag
    decision then rests on the title alone.
    """
    if not a.title.strip() or not b.title.strip():
        raise EmptyInputError("score_pair requires non-empty titles")
    first, second = sorted((a, b), key=lambda art: art.article_id)

    title_vecs = provider.embed([first.title, second.title])
    title_sim = cosine(title_vecs[0], title_vecs[1])

    abstract_sim: float | None = None
    if first.abstract.strip() and second.abstract.strip():
        abstract_sim = cosine(
            paragraph_embedding(first.abstract, provider),
            paragraph_embedding(second.abstract, provider),
        )

    set_a, set_b = _author_key_set(first), _author_key_set(second)
    if set_a == set_b:
        relation = "identical"
    else:
        jaccard = len(set_a & set_b) / len(set_a | set_b)
        relation = f"jaccard={jaccard:.4f}"

    flagged = title_sim >= tau_title or (
        abstract_sim is not None and abstract_sim >= tau_abstract
    )
    return DupCandidate(
        article_a=first.article_id,
        article_b=second.article_id,
        author_set_relation=relation,
        title_similarity=title_sim,
        abstract_similarity=abstract_sim,
        flagged=flagged,
    )


def dup_report(
    corpus: Corpus,
    provider,
    tau_title: float = DEFAULT_TAU_TITLE,
    tau_abstract: float = DEFAULT_TAU_ABSTRACT,
    min_author_jaccard: float = 1.0,
) -> list[DupCandidate]:
    """Score every candidate pair, most similar first.

    Unflagged candidates stay in the report so a human reviewer sees the
    near-misses too.
    """
    by_id = {a.article_id: a for a in corpus.articles}
    results = []
    for id_a, id_b in candidate_pairs(corpus, min_author_jaccard):
        results.append(
            score_pair(by_id[id_a], by_id[id_b], provider, tau_title, tau_abstract)
        )
    results.sort(key=lambda c: (-c.max_similarity, c.article_a, c.article_b))
    return results
