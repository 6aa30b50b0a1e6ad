"""Windowed publication rates and inequality statistics.

The weighted rate R for a window of P years is T / (P + (P/2)(n-1)), where T
is the number of papers in the window and n the length of the longest run of
consecutive publishing years inside it; R is 0 for an empty window. With the
default P=4 the denominator is 4 + 2(n-1): publishing in consecutive years
grows it by 50% per extra year. An author submitting one paper a year to a
venue with a ~25% acceptance rate therefore lands at R = 1/4 by chance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    EmptyInputError,
    NegativeValueError,
    UndefinedRPDError,
)
from .records import AuthorProfile, Corpus

DEFAULT_WINDOW_LENGTH = 4


@dataclass(frozen=True)
class WindowSpec:
    """Consecutive spans [y, y+length-1] for y from start_year on."""

    start_year: int = 2010
    end_year: int = 2024
    length: int = DEFAULT_WINDOW_LENGTH

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("window length must be >= 1")
        if self.end_year - self.start_year + 1 < self.length:
            raise ValueError("year range shorter than one window")

    def windows(self) -> list[tuple[int, int]]:
        last_start = self.end_year - self.length + 1
        return [(y, y + self.length - 1) for y in range(self.start_year, last_start + 1)]

    @property
    def count(self) -> int:
        return self.end_year - self.start_year - self.length + 2


DEFAULT_WINDOWS = WindowSpec()


@dataclass
class WindowRateSeries:
    """One author's R value per window, in window order."""

    author: object
    rates: list[float]
    window_spec: WindowSpec


@dataclass(frozen=True)
class GiniResult:
    value: float
    level: str  # author | conference | group
    population_size: int
    basis: str


@dataclass
class LotkaTable:
    """Observed author counts by papers-published k, with inverse-square expectations."""

    year: int
    rows: list[tuple[int, int, float]]  # (k, observed, expected = C1 / k^2)


def _longest_run(year_counts: Mapping[int, int], start: int, end: int) -> int:
    run = best = 0
    for year in range(start, end + 1):
        if year_counts.get(year, 0) >= 1:
            run += 1
            best = max(best, run)
        else:
            run = 0
    return best


def window_rate(year_counts: Mapping[int, int], window: tuple[int, int]) -> float:
    """Weighted publication rate for one window; missing years count as 0."""
    start, end = window
    length = end - start + 1
    if length < 1:
        raise ValueError(f"empty window {window}")
    n = _longest_run(year_counts, start, end)
    if n == 0:
        return 0.0
    total = sum(year_counts.get(y, 0) for y in range(start, end + 1))
    return total / (length + (length / 2) * (n - 1))


def rate_series(profile: AuthorProfile, spec: WindowSpec = DEFAULT_WINDOWS) -> WindowRateSeries:
    rates = [window_rate(profile.year_counts, w) for w in spec.windows()]
    return WindowRateSeries(author=profile.key, rates=rates, window_spec=spec)


def gini(values: Sequence[float] | np.ndarray) -> float:
    """Gini index of a non-negative vector via the sorted rank formula.

    Equals sum_ij |x_i - x_j| / (2 m^2 mean); an all-zero vector is treated
    as perfectly equal (0), and the maximum for m values is 1 - 1/m.

    Raises:
        EmptyInputError: no values.
        NegativeValueError: any value below zero.
    """
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise EmptyInputError("gini of an empty vector")
    if np.any(arr < 0):
        raise NegativeValueError("gini requires non-negative values")
    total = float(arr.sum())
    if total == 0.0:
        return 0.0
    arr = np.sort(arr)
    m = arr.size
    ranks = np.arange(1, m + 1, dtype=float)
    value = float((2.0 * np.dot(ranks, arr) - (m + 1) * total) / (m * total))
    # Near-equal vectors can cancel to a tiny negative; the index is >= 0.
    return max(0.0, value)


def _pooled_rates(corpus: Corpus, spec: WindowSpec) -> np.ndarray:
    series = []
    for key in sorted(corpus.authors, key=lambda k: (k.first, k.last, k.country_tag or "")):
        series.extend(rate_series(corpus.authors[key], spec).rates)
    return np.asarray(series, dtype=float)


def author_gini(profile: AuthorProfile, spec: WindowSpec = DEFAULT_WINDOWS) -> GiniResult:
    """Gini over one author's window R values."""
    rates = rate_series(profile, spec).rates
    return GiniResult(
        value=gini(rates),
        level="author",
        population_size=1,
        basis=f"{len(rates)} window R values for one author",
    )


def conference_gini(
    corpus: Corpus,
    spec: WindowSpec = DEFAULT_WINDOWS,
    basis: str = "pooled",
) -> GiniResult:
    """Gini across a whole corpus.

    ``pooled`` runs over the multiset of all author-window R values (the
    default basis); ``per-author-mean`` first averages each author's windows,
    as a sensitivity check.
    """
    if not corpus.authors:
        raise EmptyInputError("corpus has no authors")
    if basis == "pooled":
        values = _pooled_rates(corpus, spec)
        desc = "pooled author-window R values"
    elif basis == "per-author-mean":
        values = np.asarray(
            [
                float(np.mean(rate_series(corpus.authors[key], spec).rates))
                for key in sorted(
                    corpus.authors, key=lambda k: (k.first, k.last, k.country_tag or "")
                )
            ]
        )
        desc = "per-author mean R values"
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return GiniResult(
        value=gini(values),
        level="conference",
        population_size=len(corpus.authors),
        basis=desc,
    )


def rate_summary(
    corpus: Corpus,
    spec: WindowSpec = DEFAULT_WINDOWS,
    mode: str = "all",
) -> tuple[float, float]:
    """Mean and population standard deviation of pooled window R values.

    ``nonzero`` mode restricts to R > 0.
    """
    if not corpus.authors:
        raise EmptyInputError("corpus has no authors")
    values = _pooled_rates(corpus, spec)
    if mode == "nonzero":
        values = values[values > 0]
    elif mode != "all":
        raise ValueError(f"unknown mode {mode!r}")
    if values.size == 0:
        raise EmptyInputError(f"no rate values in mode {mode!r}")
    return float(values.mean()), float(values.std())


def lotka_table(corpus: Corpus, year: int) -> LotkaTable:
    """Observed vs inverse-square expected author counts for one year.

    expected(k) = observed(1) / k^2, anchored so expected(1) = observed(1).
    Years where nobody published exactly one paper yield an empty table (the
    anchor is undefined).
    """
    counts: dict[int, int] = {}
    for profile in corpus.authors.values():
        k = profile.year_counts.get(year, 0)
        if k >= 1:
            counts[k] = counts.get(k, 0) + 1
    c1 = counts.get(1, 0)
    if c1 == 0:
        return LotkaTable(year=year, rows=[])
    rows = [(k, counts[k], c1 / (k * k)) for k in sorted(counts)]
    return LotkaTable(year=year, rows=rows)


def rpd(a: float, b: float) -> float:
    """Relative percentage difference |a-b| / mean(a,b) * 100, in [0, 200].

    Raises:
        UndefinedRPDError: both inputs are zero (reported as NaN upstream).
        NegativeValueError: either input is negative.
    """
    if a < 0 or b < 0:
        raise NegativeValueError("rpd requires non-negative inputs")
    if a == 0 and b == 0:
        raise UndefinedRPDError("rpd(0, 0) is undefined")
    # 200(|a-b|/(a+b)) == |a-b|/((a+b)/2)*100, but survives subnormal halving
    # and the ratio <= 1 keeps the result exactly within [0, 200].
    return 200.0 * (abs(a - b) / (a + b))


def iter_years(corpus: Corpus) -> Iterable[int]:
    lo, hi = corpus.year_range
    return range(lo, hi + 1)
