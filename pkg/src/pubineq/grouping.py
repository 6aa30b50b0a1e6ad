"""Author grouping schemes and group-level RPD comparison reports.

Three schemes are supported: institution_type and ranking_top10 match
case-insensitive substrings of an author's affiliations against a rule file;
country matches the author's country exactly. Rule files are CSV with columns
``pattern_or_country,label,tier`` (tier only used by the country scheme to
split top5 from non_top5).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

from . import metrics
from .errors import EmptyGroupError, EmptyMappingError, ParseError, UndefinedRPDError
from .metrics import DEFAULT_WINDOWS, GiniResult, WindowSpec
from .records import AuthorKey, Corpus

SCHEME_NAMES = ("institution_type", "ranking_top10", "country")
UNKNOWN_LABEL = "unknown"
CATCH_ALL = "*"


@dataclass(frozen=True)
class GroupRule:
    pattern: str
    label: str
    tier: str | None = None


@dataclass
class GroupingScheme:
    """Parsed rules plus (once resolved against a corpus) the membership map."""

    name: str
    rules: list[GroupRule]
    label_universe: list[str]
    tier_map: dict[str, str] = field(default_factory=dict)
    membership: dict[AuthorKey, str] = field(default_factory=dict)


@dataclass
class RPDRow:
    label: str
    group_gini: float | None  # None renders as NaN (insufficient data)
    complement_gini: float | None
    rpd_percent: float | None
    group_size: int


@dataclass
class RPDReport:
    scheme: str
    rows: list[RPDRow]


def load_grouping(path: str, scheme: str) -> GroupingScheme:
    """Parse a grouping rule file. Membership is filled when a corpus is seen.

    Raises:
        EmptyMappingError: the file defines no rules.
        ParseError: malformed row.
    """
    if scheme not in SCHEME_NAMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEME_NAMES}")
    rules: list[GroupRule] = []
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read grouping file {path}: {exc}") from exc
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise EmptyMappingError(f"{path}: empty grouping file")
        if [h.strip().lower() for h in header[:2]] != ["pattern_or_country", "label"]:
            raise ParseError(f"{path}: expected header pattern_or_country,label[,tier]")
        for lineno, row in enumerate(reader, start=2):
            if not row or not "".join(row).strip():
                continue
            if len(row) < 2:
                raise ParseError(f"{path}: need at least pattern and label", row=lineno)
            pattern = row[0].strip()
            label = row[1].strip()
            tier = row[2].strip() if len(row) > 2 and row[2].strip() else None
            if not pattern or not label:
                raise ParseError(f"{path}: blank pattern or label", row=lineno)
            rules.append(GroupRule(pattern=pattern, label=label, tier=tier))
    if not rules:
        raise EmptyMappingError(f"{path}: no rules found")

    labels = sorted({r.label for r in rules})
    tier_map = {r.label: r.tier for r in rules if r.tier}
    return GroupingScheme(name=scheme, rules=rules, label_universe=labels, tier_map=tier_map)


def resolve_membership(corpus: Corpus, scheme: GroupingScheme) -> dict[AuthorKey, str]:
    """Assign every corpus author exactly one label (or "unknown").

    Institution schemes match rule patterns as case-insensitive substrings of
    any affiliation seen for the author. When several patterns match, the
    longest pattern wins, then the lexicographically smallest label, so the
    outcome never depends on rule-file ordering. A ``*`` pattern, if present,
    labels whatever nothing else matched; without one the fallback label is
    "unknown".
    """
    ranked = sorted(
        (r for r in scheme.rules if r.pattern != CATCH_ALL),
        key=lambda r: (-len(r.pattern), r.label),
    )
    fallback = UNKNOWN_LABEL
    for rule in scheme.rules:
        if rule.pattern == CATCH_ALL:
            fallback = rule.label
            break

    membership: dict[AuthorKey, str] = {}
    for key, profile in corpus.authors.items():
        label = fallback
        if scheme.name == "country":
            country = profile.country.strip().lower()
            for rule in ranked:
                if rule.pattern.strip().lower() == country:
                    label = rule.label
                    break
        else:
            haystacks = [a.lower() for a in profile.affiliations]
            for rule in ranked:
                needle = rule.pattern.lower()
                if any(needle in hay for hay in haystacks):
                    label = rule.label
                    break
        membership[key] = label
        profile.groups.add(f"{scheme.name}:{label}")
    scheme.membership = dict(membership)
    return membership


def _restricted_corpus(corpus: Corpus, keys: set[AuthorKey]) -> Corpus:
    return Corpus(
        conference=corpus.conference,
        articles=corpus.articles,
        authors={k: corpus.authors[k] for k in keys},
        dedup_stats=corpus.dedup_stats,
        year_range=corpus.year_range,
    )


def group_gini(
    corpus: Corpus,
    scheme: GroupingScheme,
    label: str,
    spec: WindowSpec = DEFAULT_WINDOWS,
    basis: str = "pooled",
) -> GiniResult:
    """Conference-style Gini restricted to authors carrying ``label``."""
    membership = scheme.membership or resolve_membership(corpus, scheme)
    members = {k for k, lab in membership.items() if lab == label}
    if not members:
        raise EmptyGroupError(f"no authors labeled {label!r} under {scheme.name}")
    result = metrics.conference_gini(_restricted_corpus(corpus, members), spec, basis=basis)
    return GiniResult(
        value=result.value,
        level="group",
        population_size=result.population_size,
        basis=f"{result.basis} [{scheme.name}={label}]",
    )


def _comparison_pool(scheme: GroupingScheme, membership: dict[AuthorKey, str], label: str) -> set[AuthorKey]:
    """Authors the labeled group is compared against (label group included)."""
    if scheme.name == "country" and scheme.tier_map:
        tier = scheme.tier_map.get(label)
        pool_labels = {lab for lab, t in scheme.tier_map.items() if t == tier}
    else:
        pool_labels = set(scheme.label_universe)
    return {k for k, lab in membership.items() if lab in pool_labels}


def rpd_report(
    corpus: Corpus,
    scheme: GroupingScheme,
    spec: WindowSpec = DEFAULT_WINDOWS,
    basis: str = "pooled",
) -> RPDReport:
    """Compare each label's Gini against its complement within the scheme pool.

    For the country scheme the pool is the label's own tier (top5 vs
    non_top5); otherwise it is all authors with a known label. Labels with an
    empty group or empty complement get an undefined RPD instead of failing.
    """
    membership = scheme.membership or resolve_membership(corpus, scheme)
    rows: list[RPDRow] = []
    for label in sorted(scheme.label_universe):
        members = {k for k, lab in membership.items() if lab == label}
        if not members:
            rows.append(RPDRow(label, None, None, None, 0))
            continue
        g_value = group_gini(corpus, scheme, label, spec, basis=basis).value
        pool = _comparison_pool(scheme, membership, label)
        complement = pool - members
        if not complement:
            rows.append(RPDRow(label, g_value, None, None, len(members)))
            continue
        c_value = metrics.conference_gini(
            _restricted_corpus(corpus, complement), spec, basis=basis
        ).value
        try:
            value = metrics.rpd(g_value, c_value)
        except UndefinedRPDError:
            value = None
        rows.append(RPDRow(label, g_value, c_value, value, len(members)))
    return RPDReport(scheme=scheme.name, rows=rows)
