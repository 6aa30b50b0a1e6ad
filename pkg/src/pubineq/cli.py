"""Command-line front end: reproducible report runs over publication exports.

A run is configured by a JSON file plus flag overrides (flags win). All
randomness flows from the single configured seed, and the stub provider makes
whole-report runs byte-for-byte reproducible.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass, field
from importlib import resources

import click

from . import dupscan as dupscan_mod
from . import grouping as grouping_mod
from . import metrics
from .errors import ConfigError, PubineqError
from .providers import DEFAULT_DIM, get_provider
from .records import DEFAULT_YEAR_RANGE, Corpus, build_corpus, ingest_articles
from .tables import (
    atomic_write_text,
    file_sha256,
    fmt4,
    fmt_lotka,
    fmt_percent,
    fmt3,
    write_table,
)
from .topics import (
    country_embedding,
    lda_fit,
    load_stopwords,
    preprocess,
    similarity_matrix,
    top_words,
)

DEFAULT_SEED = 42


def _packaged(name: str) -> str:
    return str(resources.files("pubineq.data").joinpath(name))


@dataclass
class RunConfig:
    corpora: dict[str, str] = field(default_factory=dict)  # conference -> path
    year_range: tuple[int, int] = DEFAULT_YEAR_RANGE
    window_length: int = 4
    groupings: dict[str, str] = field(default_factory=dict)  # scheme -> path
    lda_topics: int = 5
    lda_alpha: float | None = None  # None -> 50/K
    lda_beta: float = 0.01
    lda_iterations: int = 1000
    lda_top_words: int = 4
    provider: str = "stub"
    stub_dim: int = DEFAULT_DIM
    tau_title: float = 0.85
    tau_abstract: float = 0.85
    min_author_jaccard: float = 1.0
    out_dir: str = "out"
    seed: int = DEFAULT_SEED
    stem: bool = False
    basis: str = "pooled"
    mode: str | None = None  # None emits both summary modes
    strict: bool = False

    def window_spec(self) -> metrics.WindowSpec:
        lo, hi = self.year_range
        return metrics.WindowSpec(lo, hi, self.window_length)

    def grouping_path(self, scheme: str) -> str:
        if scheme in self.groupings:
            return self.groupings[scheme]
        return _packaged(
            {
                "institution_type": "institution_types.csv",
                "ranking_top10": "ranking_top10.csv",
                "country": "country_tiers.csv",
            }[scheme]
        )


def load_run_config(config_path: str | None, **overrides) -> RunConfig:
    cfg = RunConfig()
    raw: dict = {}
    if config_path:
        try:
            with open(config_path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {config_path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError(f"{config_path}: config must be a JSON object")
        cfg.corpora = dict(raw.get("corpora", {}))
        if "year_range" in raw:
            lo, hi = raw["year_range"]
            cfg.year_range = (int(lo), int(hi))
        cfg.window_length = int(raw.get("window_length", cfg.window_length))
        cfg.groupings = dict(raw.get("groupings", {}))
        lda = raw.get("lda", {})
        cfg.lda_topics = int(lda.get("n_topics", cfg.lda_topics))
        cfg.lda_alpha = lda.get("alpha", cfg.lda_alpha)
        cfg.lda_beta = float(lda.get("beta", cfg.lda_beta))
        cfg.lda_iterations = int(lda.get("iterations", cfg.lda_iterations))
        cfg.lda_top_words = int(lda.get("top_words", cfg.lda_top_words))
        cfg.provider = raw.get("provider", cfg.provider)
        cfg.stub_dim = int(raw.get("stub_dim", cfg.stub_dim))
        cfg.tau_title = float(raw.get("tau_title", cfg.tau_title))
        cfg.tau_abstract = float(raw.get("tau_abstract", cfg.tau_abstract))
        cfg.min_author_jaccard = float(
            raw.get("min_author_jaccard", cfg.min_author_jaccard)
        )
        cfg.out_dir = raw.get("out_dir", cfg.out_dir)
        cfg.seed = int(raw.get("seed", cfg.seed))
        cfg.stem = bool(raw.get("stem", cfg.stem))
        cfg.basis = raw.get("basis", cfg.basis)
        cfg.mode = raw.get("mode", cfg.mode)
        cfg.strict = bool(raw.get("strict", cfg.strict))

    # Precedence: flag > config file > BIBLIO_PROVIDER_URL > built-in "stub".
    env_provider = os.environ.get("BIBLIO_PROVIDER_URL")
    if env_provider and "provider" not in raw and overrides.get("provider") is None:
        cfg.provider = env_provider

    for name, value in overrides.items():
        if value is None:
            continue
        if name == "out":
            cfg.out_dir = value
        elif name == "stem":
            if value:  # flag only turns stemming on
                cfg.stem = True
        elif name == "strict":
            if value:
                cfg.strict = True
        else:
            setattr(cfg, name, value)

    if cfg.basis not in ("pooled", "per-author-mean"):
        raise ConfigError(f"basis must be pooled or per-author-mean, got {cfg.basis!r}")
    if cfg.mode not in (None, "all", "nonzero"):
        raise ConfigError(f"mode must be all or nonzero, got {cfg.mode!r}")
    return cfg


def _load_corpus(cfg: RunConfig, conference: str) -> tuple[Corpus, list[str]]:
    path = cfg.corpora.get(conference)
    if path is None:
        raise ConfigError(f"no corpus path configured for conference {conference!r}")
    if not os.path.exists(path):
        raise ConfigError(f"corpus file not found: {path}")
    fmt = "json" if path.endswith(".json") else "csv"
    warnings: list[str] = []
    articles = ingest_articles(path, fmt, cfg.year_range, warnings_out=warnings)
    corpus = build_corpus(articles, conference, cfg.year_range, strict=cfg.strict)
    return corpus, warnings


def _conferences(cfg: RunConfig, conference: str | None) -> list[str]:
    if conference:
        return [conference]
    if not cfg.corpora:
        raise ConfigError("no corpora configured (use --config or --conference)")
    return sorted(cfg.corpora)


def _author_label(key) -> str:
    tag = f" ({key.country_tag})" if key.country_tag else ""
    return f"{key.first} {key.last}{tag}"


def _country_label_map(cfg: RunConfig) -> dict[str, str]:
    """country string (lowercased) -> canonical label, from the country rules."""
    scheme = grouping_mod.load_grouping(cfg.grouping_path("country"), "country")
    return {r.pattern.strip().lower(): r.label for r in scheme.rules if r.pattern != "*"}


def _articles_by_country(corpus: Corpus, cfg: RunConfig) -> dict[str, list]:
    labels = _country_label_map(cfg)
    scheme = grouping_mod.load_grouping(cfg.grouping_path("country"), "country")
    top5 = sorted(lab for lab, tier in scheme.tier_map.items() if tier == "top5")
    out: dict[str, list] = {lab: [] for lab in top5}
    for art in sorted(corpus.articles, key=lambda a: a.article_id):
        seen = set()
        for author in art.authors:
            label = labels.get(author.country.strip().lower())
            if label in out and label not in seen:
                out[label].append(art)
                seen.add(label)
    return out


# ---------------------------------------------------------------- commands


def run_ingest(cfg: RunConfig, conference: str, out_dir: str) -> list[str]:
    corpus, warnings = _load_corpus(cfg, conference)
    rows = []
    lo, hi = cfg.year_range
    for key in sorted(corpus.authors, key=lambda k: (k.first, k.last, k.country_tag or "")):
        p = corpus.authors[key]
        rows.append(
            [
                _author_label(key),
                p.display_name,
                p.country,
                ";".join(p.affiliations),
            ]
            + [str(p.year_counts[y]) for y in range(lo, hi + 1)]
        )
    header = ["author_key", "display_name", "country", "affiliations"] + [
        str(y) for y in range(lo, hi + 1)
    ]
    files = write_table(os.path.join(out_dir, "authors"), header, rows, seed=cfg.seed)

    ds = corpus.dedup_stats
    stat_rows = [
        ["articles", str(len(corpus.articles))],
        ["authors", str(len(corpus.authors))],
        ["raw_name_rows", str(ds.raw_name_rows)],
        ["merged_rows", str(ds.merged_rows)],
        ["duplicate_fraction", fmt4(ds.duplicate_fraction)],
        ["skipped_rows", str(len(warnings))],
    ]
    files += write_table(
        os.path.join(out_dir, "ingest_stats"), ["stat", "value"], stat_rows, seed=cfg.seed
    )
    if warnings:
        path = os.path.join(out_dir, "ingest_warnings.txt")
        atomic_write_text(path, "\n".join(warnings) + "\n")
        files.append(path)
    return files


def run_rates(cfg: RunConfig, conference: str, out_dir: str) -> list[str]:
    corpus, _ = _load_corpus(cfg, conference)
    spec = cfg.window_spec()
    windows = spec.windows()
    header = ["author_key"] + [f"{a}-{b}" for a, b in windows]
    rows = []
    for key in sorted(corpus.authors, key=lambda k: (k.first, k.last, k.country_tag or "")):
        series = metrics.rate_series(corpus.authors[key], spec)
        rows.append([_author_label(key)] + [fmt4(r) for r in series.rates])
    files = write_table(os.path.join(out_dir, "rates"), header, rows, seed=cfg.seed)

    summary_rows = []
    modes = ("all", "nonzero") if cfg.mode is None else (cfg.mode,)
    for mode in modes:
        try:
            mean, std = metrics.rate_summary(corpus, spec, mode=mode)
            summary_rows.append([mode, fmt4(mean), fmt4(std)])
        except PubineqError:
            summary_rows.append([mode, "NaN", "NaN"])
    files += write_table(
        os.path.join(out_dir, "rate_summary"),
        ["mode", "mean", "std"],
        summary_rows,
        seed=cfg.seed,
    )
    return files


def run_gini(cfg: RunConfig, conference: str, out_dir: str) -> list[str]:
    corpus, _ = _load_corpus(cfg, conference)
    spec = cfg.window_spec()
    rows = []
    for key in sorted(corpus.authors, key=lambda k: (k.first, k.last, k.country_tag or "")):
        result = metrics.author_gini(corpus.authors[key], spec)
        rows.append([_author_label(key), fmt4(result.value)])
    files = write_table(
        os.path.join(out_dir, "author_gini"), ["author_key", "gini"], rows, seed=cfg.seed
    )

    conf_rows = []
    for basis in ("pooled", "per-author-mean"):
        result = metrics.conference_gini(corpus, spec, basis=basis)
        conf_rows.append(
            [basis, fmt4(result.value), str(result.population_size), result.basis]
        )
    files += write_table(
        os.path.join(out_dir, "conference_gini"),
        ["basis", "gini", "authors", "value_vector"],
        conf_rows,
        seed=cfg.seed,
    )
    return files


def run_lotka(cfg: RunConfig, conference: str, out_dir: str, year: int | None) -> list[str]:
    corpus, _ = _load_corpus(cfg, conference)
    lo, hi = cfg.year_range
    years = [year] if year is not None else list(range(lo, hi + 1))
    files = []
    for y in years:
        table = metrics.lotka_table(corpus, y)
        rows = [[str(k), str(obs), fmt_lotka(exp)] for k, obs, exp in table.rows]
        files += write_table(
            os.path.join(out_dir, f"lotka_{y}"),
            ["papers", "observed", "expected"],
            rows,
            seed=cfg.seed,
        )
    return files


def run_rpd(cfg: RunConfig, conference: str, out_dir: str) -> list[str]:
    corpus, _ = _load_corpus(cfg, conference)
    spec = cfg.window_spec()
    files = []
    for scheme_name in grouping_mod.SCHEME_NAMES:
        scheme = grouping_mod.load_grouping(cfg.grouping_path(scheme_name), scheme_name)
        report = grouping_mod.rpd_report(corpus, scheme, spec, basis=cfg.basis)
        rows = []
        for r in report.rows:
            rows.append(
                [
                    r.label,
                    "NaN" if r.group_gini is None else fmt4(r.group_gini),
                    "NaN" if r.complement_gini is None else fmt4(r.complement_gini),
                    fmt_percent(r.rpd_percent),
                    str(r.group_size),
                ]
            )
        files += write_table(
            os.path.join(out_dir, f"rpd_{scheme_name}"),
            ["label", "group_gini", "complement_gini", "rpd", "group_size"],
            rows,
            seed=cfg.seed,
        )
    return files


def run_lda(cfg: RunConfig, conference: str, out_dir: str) -> list[str]:
    corpus, _ = _load_corpus(cfg, conference)
    stopwords = load_stopwords()
    by_country = _articles_by_country(corpus, cfg)
    rows = []
    for country in sorted(by_country):
        docs = [
            preprocess(
                a.abstract, article_id=a.article_id, country=country,
                stopwords=stopwords, stem=cfg.stem,
            )
            for a in by_country[country]
            if a.abstract.strip()
        ]
        docs = [d for d in docs if d.tokens]
        if not docs:
            rows.append([country, "-", "(no abstracts)"])
            continue
        model = lda_fit(
            docs,
            n_topics=cfg.lda_topics,
            alpha=cfg.lda_alpha,
            beta=cfg.lda_beta,
            iterations=cfg.lda_iterations,
            seed=cfg.seed,
        )
        for topic in range(model.n_topics):
            words = top_words(model, topic, cfg.lda_top_words)
            rows.append([country, str(topic), " ".join(words)])
    return write_table(
        os.path.join(out_dir, "lda_topics"),
        ["country", "topic", "keywords"],
        rows,
        seed=cfg.seed,
    )


def run_topicsim(cfg: RunConfig, conference: str, out_dir: str) -> list[str]:
    corpus, _ = _load_corpus(cfg, conference)
    provider = get_provider(cfg.provider, dim=cfg.stub_dim, seed=cfg.seed)
    by_country = _articles_by_country(corpus, cfg)
    embeddings = {}
    for country, articles in by_country.items():
        if any(a.abstract.strip() for a in articles):
            embeddings[country] = country_embedding(articles, provider)
    if len(embeddings) < 2:
        rows = [["(insufficient data)", "", ""]]
        return write_table(
            os.path.join(out_dir, "topic_similarity"),
            ["country", "country", "cosine"],
            rows,
            seed=cfg.seed,
        )
    matrix = similarity_matrix(embeddings)
    header = ["country"] + matrix.labels
    rows = []
    for i, label in enumerate(matrix.labels):
        rows.append([label] + [fmt3(matrix.cells[i, j]) for j in range(len(matrix.labels))])
    return write_table(
        os.path.join(out_dir, "topic_similarity"), header, rows, seed=cfg.seed
    )


def run_dupscan(cfg: RunConfig, conference: str, out_dir: str) -> list[str]:
    corpus, _ = _load_corpus(cfg, conference)
    provider = get_provider(cfg.provider, dim=cfg.stub_dim, seed=cfg.seed)
    report = dupscan_mod.dup_report(
        corpus,
        provider,
        tau_title=cfg.tau_title,
        tau_abstract=cfg.tau_abstract,
        min_author_jaccard=cfg.min_author_jaccard,
    )
    rows = []
    for c in report:
        rows.append(
            [
                c.article_a,
                c.article_b,
                c.author_set_relation,
                fmt4(c.title_similarity),
                "NaN" if c.abstract_similarity is None else fmt4(c.abstract_similarity),
                "yes" if c.flagged else "no",
            ]
        )
    return write_table(
        os.path.join(out_dir, "dupscan"),
        ["article_a", "article_b", "author_relation", "title_sim", "abstract_sim", "flagged"],
        rows,
        seed=cfg.seed,
    )


_SUBCOMMAND_RUNNERS = {
    "ingest": run_ingest,
    "rates": run_rates,
    "gini": run_gini,
    "rpd": run_rpd,
    "lda": run_lda,
    "topicsim": run_topicsim,
    "dupscan": run_dupscan,
}


def run_report(cfg: RunConfig, conference: str | None) -> list[str]:
    """Full pipeline over every configured conference plus a checksum manifest."""
    all_files = []
    for conf in _conferences(cfg, conference):
        out_dir = os.path.join(cfg.out_dir, conf)
        for name, runner in _SUBCOMMAND_RUNNERS.items():
            all_files += runner(cfg, conf, out_dir)
        all_files += run_lotka(cfg, conf, out_dir, year=None)

    manifest_entries = []
    for path in sorted(set(all_files)):
        rel = os.path.relpath(path, cfg.out_dir)
        manifest_entries.append({"path": rel, "sha256": file_sha256(path)})
    manifest = {"seed": cfg.seed, "files": manifest_entries}
    manifest_path = os.path.join(cfg.out_dir, "manifest.json")
    atomic_write_text(manifest_path, json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return all_files + [manifest_path]


# ---------------------------------------------------------------- click wiring


def common_options(f):
    options = [
        click.option("--config", "config_path", type=str, default=None, help="JSON run config."),
        click.option("--conference", default=None, help="Restrict to one conference."),
        click.option("--out", default=None, help="Output directory."),
        click.option("--seed", type=int, default=None, help="Run seed (recorded in outputs)."),
        click.option("--provider", default=None, help="'stub' or embedding service URL."),
        click.option("--basis", type=click.Choice(["pooled", "per-author-mean"]), default=None),
        click.option("--mode", type=click.Choice(["all", "nonzero"]), default=None),
        click.option("--stem", is_flag=True, default=False, help="Enable light stemming."),
        click.option("--strict", is_flag=True, default=False, help="Partition author keys by country."),
        click.option("--tau-title", "tau_title", type=float, default=None),
        click.option("--tau-abstract", "tau_abstract", type=float, default=None),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _dispatch(runner, config_path, conference, year=None, **overrides):
    try:
        cfg = load_run_config(config_path, **overrides)
        if runner is run_report:
            files = run_report(cfg, conference)
        else:
            files = []
            for conf in _conferences(cfg, conference):
                out_dir = os.path.join(cfg.out_dir, conf)
                if runner is run_lotka:
                    files += runner(cfg, conf, out_dir, year)
                else:
                    files += runner(cfg, conf, out_dir)
        for path in files:
            click.echo(path)
    except PubineqError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(1)


@click.group()
def main():
    """Publication-inequality analysis toolkit."""


def _register(name, runner, help_text, with_year=False):
    @common_options
    def cmd(config_path, conference, year=None, **overrides):
        _dispatch(runner, config_path, conference, year=year, **overrides)

    cmd.__name__ = name
    if with_year:
        cmd = click.option("--year", type=int, default=None, help="Single year table.")(cmd)
    main.command(name=name, help=help_text)(cmd)


_register("ingest", run_ingest, "Normalize authors and write the yearly count table.")
_register("rates", run_rates, "Windowed publication rates and their summary stats.")
_register("gini", run_gini, "Per-author and conference-level Gini tables.")
_register("lotka", run_lotka, "Observed vs expected author productivity counts.", with_year=True)
_register("rpd", run_rpd, "Group-level Gini comparisons for all schemes.")
_register("lda", run_lda, "Per-country topic keyword tables.")
_register("topicsim", run_topicsim, "Country-level embedding similarity matrix.")
_register("dupscan", run_dupscan, "Duplicate-publication candidate report.")
_register("report", run_report, "Full pipeline plus checksum manifest.")


if __name__ == "__main__":
    main()
