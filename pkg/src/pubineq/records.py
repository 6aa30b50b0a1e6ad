"""Corpus ingestion and author identity normalization.

Publication exports arrive as CSV (one row per article/author pair) or JSON
(one object per article). Author rows are merged into profiles keyed by a
diacritic-free (first, last) name pair, and each profile carries a per-year
publication count over the configured corpus range.
"""

from __future__ import annotations

import csv
import json
import re
import unicodedata
from dataclasses import dataclass, field

from .errors import (
    EmptyNameError,
    MixedConferenceError,
    ParseError,
    SchemaError,
)

DEFAULT_YEAR_RANGE = (2010, 2024)

CSV_COLUMNS = (
    "article_id",
    "conference",
    "year",
    "title",
    "abstract",
    "author_given",
    "author_surname",
    "affiliation",
    "country",
)

JSON_ARTICLE_KEYS = ("article_id", "conference", "year", "title", "abstract", "authors")
JSON_AUTHOR_KEYS = ("given", "surname", "affiliation", "country")

_TRAILING_PUNCT_RE = re.compile(r"[\W_]+$")


@dataclass(frozen=True)
class AuthorKey:
    """Lowercase, diacritic-free (first, last) pair used to merge author rows.

    ``country_tag`` is only set in strict mode, where same-named authors from
    different countries are kept apart to surface possible collisions.
    """

    first: str
    last: str
    country_tag: str | None = None


@dataclass(frozen=True)
class ArticleAuthor:
    """One author entry as it appears on an article."""

    given_names: str
    surname: str
    affiliation: str
    country: str


@dataclass
class ArticleRecord:
    """One published paper with its ordered author list."""

    article_id: str
    conference: str
    year: int
    title: str
    abstract: str
    authors: list[ArticleAuthor]


@dataclass
class AuthorProfile:
    """Merged view of one author key across a corpus."""

    key: AuthorKey
    display_name: str
    affiliations: list[str]
    country: str
    year_counts: dict[int, int]
    groups: set[str] = field(default_factory=set)

    def total_publications(self) -> int:
        return sum(self.year_counts.values())


@dataclass(frozen=True)
class DedupStats:
    """How many raw (display name, affiliation) rows merged into shared keys."""

    raw_name_rows: int
    merged_rows: int
    duplicate_fraction: float


@dataclass
class Corpus:
    """All articles of one conference plus the merged author profiles."""

    conference: str
    articles: list[ArticleRecord]
    authors: dict[AuthorKey, AuthorProfile]
    dedup_stats: DedupStats
    year_range: tuple[int, int] = DEFAULT_YEAR_RANGE


def _strip_diacritics(text: str) -> str:
    # Canonical decomposition, then drop combining marks.
    decomposed = unicodedata.normalize("NFD", text)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def normalize_name(given_names: str, surname: str) -> AuthorKey:
    """Build the unique author key from a raw given-name string and surname.

    The first key half is the first whitespace-separated token of the given
    names (middle names and initials are dropped) with trailing punctuation
    stripped. The second half is the surname with internal whitespace
    collapsed to a single hyphen. Both halves are lowercased with diacritics
    removed, so "José A. García-López" and "Jose García-López" collide on
    purpose.

    Raises:
        EmptyNameError: if either input is blank after trimming, or nothing
            survives normalization.
    """
    given = given_names.strip()
    last_raw = surname.strip()
    if not given or not last_raw:
        raise EmptyNameError(f"blank name part in ({given_names!r}, {surname!r})")

    first_token = _strip_diacritics(given).lower().split()[0]
    first = _TRAILING_PUNCT_RE.sub("", first_token)
    last = "-".join(_strip_diacritics(last_raw).lower().split())
    if not first or not last:
        raise EmptyNameError(f"name reduced to nothing: ({given_names!r}, {surname!r})")
    return AuthorKey(first=first, last=last)


def ingest_articles(
    path: str,
    format: str = "csv",
    year_range: tuple[int, int] = DEFAULT_YEAR_RANGE,
    warnings_out: list[str] | None = None,
) -> list[ArticleRecord]:
    """Read an exported publication file into article records.

    Rows whose year falls outside ``year_range`` are skipped; a message per
    skipped article is appended to ``warnings_out`` when provided.

    Raises:
        SchemaError: a required column/key is missing.
        ParseError: a row is malformed (bad year, blank id, blank author).
    """
    if format == "csv":
        articles = _read_csv(path)
    elif format == "json":
        articles = _read_json(path)
    else:
        raise ValueError(f"unknown format {format!r} (expected 'csv' or 'json')")

    lo, hi = year_range
    kept = []
    for art in articles:
        if lo <= art.year <= hi:
            kept.append(art)
        elif warnings_out is not None:
            warnings_out.append(
                f"article {art.article_id}: year {art.year} outside {lo}-{hi}; skipped"
            )
    return kept


def _read_csv(path: str) -> list[ArticleRecord]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            return []
        for col in CSV_COLUMNS:
            if col not in reader.fieldnames:
                raise SchemaError(f"{path}: missing column {col!r}")

        by_id: dict[str, ArticleRecord] = {}
        for lineno, row in enumerate(reader, start=2):
            art_id = (row["article_id"] or "").strip()
            if not art_id:
                raise ParseError("blank article_id", row=lineno)
            try:
                year = int(row["year"])
            except (TypeError, ValueError):
                raise ParseError(f"bad year {row['year']!r}", row=lineno) from None
            given = (row["author_given"] or "").strip()
            surname = (row["author_surname"] or "").strip()
            if not given or not surname:
                raise ParseError("blank author name", row=lineno)

            author = ArticleAuthor(
                given_names=given,
                surname=surname,
                affiliation=(row["affiliation"] or "").strip(),
                country=(row["country"] or "").strip(),
            )
            art = by_id.get(art_id)
            if art is None:
                by_id[art_id] = ArticleRecord(
                    article_id=art_id,
                    conference=(row["conference"] or "").strip(),
                    year=year,
                    title=row["title"] or "",
                    abstract=row["abstract"] or "",
                    authors=[author],
                )
            else:
                if art.year != year or art.conference != (row["conference"] or "").strip():
                    raise ParseError(
                        f"article {art_id} repeats with different year/conference",
                        row=lineno,
                    )
                art.authors.append(author)
    return list(by_id.values())


def _read_json(path: str) -> list[ArticleRecord]:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, list):
        raise SchemaError(f"{path}: expected a top-level array of articles")

    articles = []
    for i, obj in enumerate(data):
        for key in JSON_ARTICLE_KEYS:
            if key not in obj:
                raise SchemaError(f"{path}: article {i} missing key {key!r}")
        try:
            year = int(obj["year"])
        except (TypeError, ValueError):
            raise ParseError(f"article {i}: bad year {obj['year']!r}", row=i) from None
        if not str(obj["article_id"]).strip():
            raise ParseError(f"article {i}: blank article_id", row=i)
        authors = []
        for j, a in enumerate(obj["authors"]):
            for key in JSON_AUTHOR_KEYS:
                if key not in a:
                    raise SchemaError(
                        f"{path}: article {i} author {j} missing key {key!r}"
                    )
            if not str(a["given"]).strip() or not str(a["surname"]).strip():
                raise ParseError(f"article {i}: blank author name", row=i)
            authors.append(
                ArticleAuthor(
                    given_names=str(a["given"]).strip(),
                    surname=str(a["surname"]).strip(),
                    affiliation=str(a["affiliation"]).strip(),
                    country=str(a["country"]).strip(),
                )
            )
        if not authors:
            raise ParseError(f"article {i}: empty author list", row=i)
        articles.append(
            ArticleRecord(
                article_id=str(obj["article_id"]).strip(),
                conference=str(obj["conference"]).strip(),
                year=year,
                title=str(obj["title"]),
                abstract=str(obj["abstract"]),
                authors=authors,
            )
        )
    return articles


def build_corpus(
    articles: list[ArticleRecord],
    conference: str,
    year_range: tuple[int, int] = DEFAULT_YEAR_RANGE,
    strict: bool = False,
) -> Corpus:
    """Merge article author lists into keyed profiles and tally yearly counts.

    Articles are processed in (year, article_id) order so the result is
    independent of input ordering; "most recent" fields (display name,
    country) come from the last article in that order. Yearly counts tally
    distinct article ids, so an author listed twice on one paper counts once.

    With ``strict=True`` the author key additionally carries the country, so
    same-named authors from different countries stay separate.

    Raises:
        MixedConferenceError: an article belongs to a different conference.
        ValueError: duplicate article ids.
    """
    ordered = sorted(articles, key=lambda a: (a.year, a.article_id))
    seen_ids: set[str] = set()
    for art in ordered:
        if art.conference != conference:
            raise MixedConferenceError(
                f"article {art.article_id} is from {art.conference!r}, not {conference!r}"
            )
        if art.article_id in seen_ids:
            raise ValueError(f"duplicate article_id {art.article_id!r}")
        seen_ids.add(art.article_id)

    lo, hi = year_range
    profiles: dict[AuthorKey, AuthorProfile] = {}
    raw_rows: set[tuple[str, str]] = set()

    for art in ordered:
        keys_on_article: set[AuthorKey] = set()
        for author in art.authors:
            key = normalize_name(author.given_names, author.surname)
            if strict:
                key = AuthorKey(key.first, key.last, author.country.lower() or None)
            display = f"{author.given_names} {author.surname}"
            raw_rows.add((display, author.affiliation))

            profile = profiles.get(key)
            if profile is None:
                profile = AuthorProfile(
                    key=key,
                    display_name=display,
                    affiliations=[],
                    country=author.country,
                    year_counts={y: 0 for y in range(lo, hi + 1)},
                )
                profiles[key] = profile
            # Later articles in canonical order win the "most recent" fields.
            profile.display_name = display
            profile.country = author.country
            if author.affiliation and author.affiliation not in profile.affiliations:
                profile.affiliations.append(author.affiliation)
            keys_on_article.add(key)

        for key in keys_on_article:
            profiles[key].year_counts[art.year] += 1

    for profile in profiles.values():
        profile.affiliations.sort()

    raw_count = len(raw_rows)
    # Strict keys can outnumber raw rows when one name/affiliation pair
    # appears under two countries; the merge count never goes negative.
    merged = max(0, raw_count - len(profiles))
    stats = DedupStats(
        raw_name_rows=raw_count,
        merged_rows=merged,
        duplicate_fraction=(merged / raw_count) if raw_count else 0.0,
    )
    return Corpus(
        conference=conference,
        articles=ordered,
        authors=profiles,
        dedup_stats=stats,
        year_range=year_range,
    )
