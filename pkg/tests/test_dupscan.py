"""Duplicate-publication candidate generation and scoring."""

import random

import pytest

from helpers import dup_fixture_articles, dup_fixture_corpus, make_article
from pubineq.dupscan import candidate_pairs, dup_report, score_pair
from pubineq.errors import EmptyInputError
from pubineq.providers import StubEmbedder
from pubineq.records import build_corpus


class TestCandidatePairs:
    def test_shuffled_author_order_matches(self):
        articles = [
            make_article("p1", 2021, [("A", "One"), ("B", "Two"), ("C", "Three")]),
            make_article("p2", 2022, [("C", "Three"), ("B", "Two"), ("A", "One")]),
        ]
        corpus = build_corpus(articles, "HRI")
        assert candidate_pairs(corpus) == [("p1", "p2")]

    def test_partial_overlap_excluded_at_full_threshold(self):
        articles = [
            make_article("p1", 2021, [("A", "One"), ("B", "Two")]),
            make_article("p2", 2022, [("A", "One"), ("C", "Three")]),
        ]
        corpus = build_corpus(articles, "HRI")
        assert candidate_pairs(corpus) == []
        # Jaccard 1/3 passes a relaxed threshold.
        assert candidate_pairs(corpus, min_author_jaccard=0.3) == [("p1", "p2")]

    def test_disjoint_corpus_empty(self):
        articles = [
            make_article(f"p{i}", 2020, [(f"G{i}", f"S{i}")]) for i in range(5)
        ]
        assert candidate_pairs(build_corpus(articles, "HRI")) == []

    def test_invariant_under_article_reordering(self):
        articles = dup_fixture_articles()
        shuffled = list(articles)
        random.Random(8).shuffle(shuffled)
        assert candidate_pairs(build_corpus(articles, "HRI")) == candidate_pairs(
            build_corpus(shuffled, "HRI")
        )

    def test_threshold_validated(self):
        with pytest.raises(ValueError):
            candidate_pairs(dup_fixture_corpus(), min_author_jaccard=0.0)


class TestScorePair:
    def test_identical_text_scores_one_and_flags(self):
        a = make_article("p1", 2021, [("A", "One")], title="Same Title", abstract="Same words here.")
        b = make_article("p2", 2022, [("A", "One")], title="Same Title", abstract="Same words here.")
        result = score_pair(a, b, StubEmbedder())
        assert result.title_similarity == pytest.approx(1.0, abs=1e-9)
        assert result.abstract_similarity == pytest.approx(1.0, abs=1e-9)
        assert result.flagged
        assert result.author_set_relation == "identical"

    def test_unrelated_text_scores_near_zero(self):
        a = make_article("p1", 2021, [("A", "One")],
                         title="Quantum annealing of protein folds",
                         abstract="Lattice models fold faster on annealers.")
        b = make_article("p2", 2022, [("A", "One")],
                         title="Harvest scheduling for orchard drones",
                         abstract="Ripeness maps drive picking routes.")
        result = score_pair(a, b, StubEmbedder())
        assert abs(result.title_similarity) < 0.3
        assert abs(result.abstract_similarity) < 0.3
        assert not result.flagged

    def test_symmetry_under_argument_swap(self):
        articles = dup_fixture_articles()
        a, b = articles[0], articles[1]
        provider = StubEmbedder()
        left = score_pair(a, b, provider)
        right = score_pair(b, a, provider)
        assert left == right

    def test_missing_abstract_falls_back_to_title(self):
        a = make_article("p1", 2021, [("A", "One")], title="Same Title", abstract="")
        b = make_article("p2", 2022, [("A", "One")], title="Same Title", abstract="Words.")
        result = score_pair(a, b, StubEmbedder())
        assert result.abstract_similarity is None
        assert result.flagged  # title similarity 1.0 carries the decision

    def test_jaccard_relation_reported(self):
        a = make_article("p1", 2021, [("A", "One"), ("B", "Two")], title="T1")
        b = make_article("p2", 2022, [("A", "One"), ("C", "Three")], title="T2")
        result = score_pair(a, b, StubEmbedder())
        assert result.author_set_relation == "jaccard=0.3333"

    def test_flag_monotone_in_thresholds(self):
        articles = dup_fixture_articles()
        a, b = articles[0], articles[1]
        provider = StubEmbedder()
        strict = score_pair(a, b, provider, tau_title=0.99, tau_abstract=0.99)
        loose = score_pair(a, b, provider, tau_title=0.5, tau_abstract=0.5)
        if strict.flagged:
            assert loose.flagged

    def test_empty_title_rejected(self):
        a = make_article("p1", 2021, [("A", "One")], title="")
        b = make_article("p2", 2022, [("A", "One")], title="T")
        with pytest.raises(EmptyInputError):
            score_pair(a, b, StubEmbedder())


class TestDupReport:
    def test_empty_corpus(self):
        corpus = build_corpus([], "HRI")
        assert dup_report(corpus, StubEmbedder()) == []

    def test_planted_pair_is_only_flag(self):
        report = dup_report(dup_fixture_corpus(), StubEmbedder())
        flagged = [(c.article_a, c.article_b) for c in report if c.flagged]
        assert flagged == [("d01", "d02")]
        # The same-team control pair is reported for review but unflagged.
        pairs = [(c.article_a, c.article_b) for c in report]
        assert ("s01", "s02") in pairs

    def test_sorted_by_score_descending(self):
        report = dup_report(dup_fixture_corpus(), StubEmbedder())
        scores = [c.max_similarity for c in report]
        assert scores == sorted(scores, reverse=True)
