"""Grouping schemes and RPD comparison reports."""

import pytest

from helpers import make_article
from pubineq import grouping, metrics
from pubineq.errors import EmptyGroupError, EmptyMappingError
from pubineq.records import build_corpus

COUNTRY_RULES = """pattern_or_country,label,tier
USA,USA,top5
China,China,top5
Japan,Japan,top5
South Korea,South Korea,top5
Germany,Germany,top5
Australia,Australia,non_top5
Canada,Canada,non_top5
"""

RANKING_RULES = """pattern_or_country,label,tier
stanford,top10,
carnegie mellon,top10,
*,other,
"""


@pytest.fixture
def country_scheme(tmp_path):
    path = tmp_path / "countries.csv"
    path.write_text(COUNTRY_RULES, encoding="utf-8")
    return grouping.load_grouping(str(path), "country")


@pytest.fixture
def ranking_scheme(tmp_path):
    path = tmp_path / "ranking.csv"
    path.write_text(RANKING_RULES, encoding="utf-8")
    return grouping.load_grouping(str(path), "ranking_top10")


def two_country_corpus():
    """Group A (USA) publishes every year; group B (China) once each."""
    articles = []
    serial = 0
    for i in range(2):
        for year in range(2010, 2025):
            articles.append(
                make_article(
                    f"a{serial}", year, [(f"Steady{i}", f"Pub{i}")], country="USA"
                )
            )
            serial += 1
    for i in range(2):
        articles.append(
            make_article(f"b{serial}", 2012, [(f"Once{i}", f"Shot{i}")], country="China")
        )
        serial += 1
    return build_corpus(articles, "HRI")


class TestLoadGrouping:
    def test_top5_labels_carry_tier(self, country_scheme):
        for label in ("USA", "China", "Japan", "South Korea", "Germany"):
            assert country_scheme.tier_map[label] == "top5"
        assert country_scheme.tier_map["Australia"] == "non_top5"

    def test_country_membership_by_profile_country(self, country_scheme):
        corpus = build_corpus(
            [
                make_article(
                    "a1",
                    2015,
                    [("Wei", "Hu")],
                    affiliation="Tsinghua University, Beijing, China",
                    country="China",
                )
            ],
            "HRI",
        )
        membership = grouping.resolve_membership(corpus, country_scheme)
        assert set(membership.values()) == {"China"}

    def test_unmatched_affiliation_is_unknown(self, tmp_path):
        path = tmp_path / "ranking.csv"
        path.write_text("pattern_or_country,label,tier\nstanford,top10,\n", encoding="utf-8")
        scheme = grouping.load_grouping(str(path), "ranking_top10")
        corpus = build_corpus(
            [make_article("a1", 2015, [("A", "B")], affiliation="Moon Base")], "HRI"
        )
        membership = grouping.resolve_membership(corpus, scheme)
        assert set(membership.values()) == {"unknown"}

    def test_catch_all_labels_the_rest(self, ranking_scheme):
        corpus = build_corpus(
            [
                make_article("a1", 2015, [("A", "B")], affiliation="Stanford University"),
                make_article("a2", 2015, [("C", "D")], affiliation="Moon Base"),
            ],
            "HRI",
        )
        membership = grouping.resolve_membership(corpus, ranking_scheme)
        assert sorted(membership.values()) == ["other", "top10"]

    def test_empty_file_raises(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("pattern_or_country,label,tier\n", encoding="utf-8")
        with pytest.raises(EmptyMappingError):
            grouping.load_grouping(str(path), "country")

    def test_longest_pattern_wins(self, tmp_path):
        path = tmp_path / "inst.csv"
        path.write_text(
            "pattern_or_country,label,tier\n"
            "university,academic,\n"
            "university hospital,healthcare,\n",
            encoding="utf-8",
        )
        scheme = grouping.load_grouping(str(path), "institution_type")
        corpus = build_corpus(
            [make_article("a1", 2015, [("A", "B")], affiliation="University Hospital Bonn")],
            "HRI",
        )
        membership = grouping.resolve_membership(corpus, scheme)
        assert set(membership.values()) == {"healthcare"}


class TestGroupGini:
    def test_single_member_group_matches_author_pool(self, country_scheme):
        corpus = build_corpus(
            [make_article("a1", 2010, [("Solo", "Act")], country="USA")], "HRI"
        )
        value = grouping.group_gini(corpus, country_scheme, "USA").value
        assert value == pytest.approx(metrics.conference_gini(corpus).value)

    def test_duplicated_profiles_do_not_move_group_gini(self, country_scheme):
        one = build_corpus(
            [make_article("a1", 2010, [("Solo", "Act")], country="USA")], "HRI"
        )
        two = build_corpus(
            [
                make_article("a1", 2010, [("Solo", "Act")], country="USA"),
                make_article("a2", 2010, [("Other", "Act")], country="USA"),
            ],
            "HRI",
        )
        gini_one = grouping.group_gini(one, country_scheme, "USA").value
        gini_two = grouping.group_gini(two, country_scheme, "USA").value
        assert gini_two == pytest.approx(gini_one)

    def test_steady_group_less_unequal_than_one_shot_group(self, country_scheme):
        corpus = two_country_corpus()
        steady = grouping.group_gini(corpus, country_scheme, "USA").value
        one_shot = grouping.group_gini(corpus, country_scheme, "China").value
        assert steady < one_shot

    def test_empty_group_raises(self, country_scheme):
        corpus = two_country_corpus()
        with pytest.raises(EmptyGroupError):
            grouping.group_gini(corpus, country_scheme, "Japan")


class TestRPDReport:
    def test_equal_groups_have_zero_rpd(self, country_scheme):
        articles = [
            make_article("a1", 2010, [("One", "Usa")], country="USA"),
            make_article("a2", 2010, [("One", "Chn")], country="China"),
        ]
        corpus = build_corpus(articles, "HRI")
        report = grouping.rpd_report(corpus, country_scheme)
        rows = {r.label: r for r in report.rows}
        assert rows["USA"].rpd_percent == pytest.approx(0.0)
        assert rows["China"].rpd_percent == pytest.approx(0.0)

    def test_absent_label_row_is_undefined(self, country_scheme):
        corpus = two_country_corpus()
        report = grouping.rpd_report(corpus, country_scheme)
        rows = {r.label: r for r in report.rows}
        assert rows["Japan"].rpd_percent is None
        assert rows["Japan"].group_size == 0

    def test_country_complement_stays_within_tier(self, country_scheme):
        # USA vs rest of top5 (China): both present; Australia alone in its
        # tier has no complement.
        articles = [
            make_article("a1", 2010, [("One", "Usa")], country="USA"),
            make_article("a2", 2011, [("Two", "Chn")], country="China"),
            make_article("a3", 2012, [("Tre", "Aus")], country="Australia"),
        ]
        corpus = build_corpus(articles, "HRI")
        report = grouping.rpd_report(corpus, country_scheme)
        rows = {r.label: r for r in report.rows}
        assert rows["USA"].rpd_percent is not None
        assert rows["Australia"].rpd_percent is None  # empty tier complement

    def test_partition_property(self, country_scheme):
        corpus = two_country_corpus()
        membership = grouping.resolve_membership(corpus, country_scheme)
        sizes = {}
        for label in membership.values():
            sizes[label] = sizes.get(label, 0) + 1
        assert sum(sizes.values()) == len(corpus.authors)

    def test_two_label_scheme_symmetric(self, ranking_scheme):
        articles = [
            make_article("a1", 2010, [("A", "B")], affiliation="Stanford University"),
            make_article("a2", 2011, [("C", "D")], affiliation="Stanford University"),
            make_article("a3", 2012, [("E", "F")], affiliation="Moon Base"),
        ]
        corpus = build_corpus(articles, "HRI")
        report = grouping.rpd_report(corpus, ranking_scheme)
        values = [r.rpd_percent for r in report.rows]
        assert len(values) == 2
        assert values[0] == pytest.approx(values[1])

    def test_invariant_under_rule_reordering(self, tmp_path):
        corpus = two_country_corpus()
        forward = tmp_path / "f.csv"
        forward.write_text(COUNTRY_RULES, encoding="utf-8")
        lines = COUNTRY_RULES.strip().splitlines()
        backward = tmp_path / "b.csv"
        backward.write_text(
            "\n".join([lines[0]] + list(reversed(lines[1:]))) + "\n", encoding="utf-8"
        )
        report_f = grouping.rpd_report(
            corpus, grouping.load_grouping(str(forward), "country")
        )
        report_b = grouping.rpd_report(
            corpus, grouping.load_grouping(str(backward), "country")
        )
        assert report_f == report_b

    def test_rpd_recomputable_from_gini_columns(self, country_scheme):
        corpus = two_country_corpus()
        report = grouping.rpd_report(corpus, country_scheme)
        for row in report.rows:
            if row.rpd_percent is not None:
                assert row.rpd_percent == pytest.approx(
                    metrics.rpd(row.group_gini, row.complement_gini)
                )
