"""Shared test fixtures and independent oracles.

The oracles here deliberately avoid the library's own code paths: the Gini
oracle is the O(m^2) pairwise sum, window rates are recomputed by explicit
enumeration, and expected values frozen in tests were produced by these.
"""

from __future__ import annotations

import numpy as np

from pubineq.records import (
    ArticleAuthor,
    ArticleRecord,
    AuthorKey,
    AuthorProfile,
    build_corpus,
)
from pubineq.topics.preprocess import TokenizedDoc


def gini_pairwise(values) -> float:
    """Brute-force sum_ij |x_i - x_j| / (2 m^2 mean)."""
    values = list(values)
    m = len(values)
    mean = sum(values) / m
    if mean == 0:
        return 0.0
    total = sum(abs(a - b) for a in values for b in values)
    return total / (2 * m * m * mean)


def make_profile(year_counts: dict[int, int], first="test", last="author") -> AuthorProfile:
    counts = {y: 0 for y in range(2010, 2025)}
    counts.update(year_counts)
    return AuthorProfile(
        key=AuthorKey(first, last),
        display_name=f"{first.title()} {last.title()}",
        affiliations=["Test University"],
        country="USA",
        year_counts=counts,
    )


def make_article(
    article_id: str,
    year: int,
    authors: list[tuple[str, str]],
    conference: str = "HRI",
    title: str = "A Study",
    abstract: str = "",
    affiliation: str = "Test University",
    country: str = "USA",
) -> ArticleRecord:
    return ArticleRecord(
        article_id=article_id,
        conference=conference,
        year=year,
        title=title,
        abstract=abstract,
        authors=[
            ArticleAuthor(given, surname, affiliation, country)
            for given, surname in authors
        ],
    )


def single_author_corpus(year: int, conference: str = "HRI"):
    """One author with exactly one paper in ``year``."""
    art = make_article("a1", year, [("Solo", "Writer")], conference=conference)
    return build_corpus([art], conference)


def planted_lda_corpus(n_docs_per_topic=100, n_terms=20, doc_len=25, seed=2024):
    """Two disjoint vocabularies; docs draw Zipf-weighted tokens from one side.

    Returns (docs, vocab_a, vocab_b). The construction RNG is fixed and
    independent of any fit seed.
    """
    vocab_a = [f"ampere{i:02d}" for i in range(n_terms)]
    vocab_b = [f"barrel{i:02d}" for i in range(n_terms)]
    weights = np.array([1.0 / (i + 1) for i in range(n_terms)])
    weights /= weights.sum()
    rng = np.random.default_rng(seed)
    docs = []
    for side, vocab in (("a", vocab_a), ("b", vocab_b)):
        for d in range(n_docs_per_topic):
            tokens = [vocab[i] for i in rng.choice(n_terms, size=doc_len, p=weights)]
            docs.append(TokenizedDoc(article_id=f"{side}{d:03d}", tokens=tokens))
    return docs, set(vocab_a), set(vocab_b)


# A 20-article corpus holding exactly one author-shuffled near-duplicate pair
# (d01/d02) plus one same-author pair with unrelated content (s01/s02).
_DUP_AUTHORS = [
    ("Ming", "Zhao"),
    ("Lei", "Chen"),
    ("Hua", "Lin"),
    ("Jun", "Wang"),
    ("Yan", "Sun"),
]

_FILLER_TOPICS = [
    ("gesture recognition for wheelchairs", "We sense arm movement with radar. Users steer a wheelchair by gesture. Trials show low error rates."),
    ("swarm robots painting murals", "Tiny robots carry pigment across walls. A scheduler allocates wall regions. The mural emerges without collisions."),
    ("haptic gloves for surgeons", "Force feedback guides suturing practice. The glove renders tissue stiffness. Residents improved suture scores."),
    ("drone choreography for theater", "Drones follow musical cues on stage. Safety nets bound the flight volume. Audiences rated the show highly."),
    ("underwater robot kelp surveys", "An autonomous float counts kelp stipes. Sonar maps the canopy density. Divers validated the counts."),
    ("robot barista latte art", "A wrist mechanism pours steamed milk. Vision tracks the pour trajectory. Patterns match trained baristas."),
    ("exoskeleton stair assistance", "Knee torque assists stair ascent. Load cells trigger the assist phase. Elderly users climbed faster."),
    ("warehouse shelf auditing robots", "A mast camera scans shelf labels. Inventory gaps are reported nightly. Stockouts dropped in trials."),
    ("companion robot for gardening", "The rover reminds owners to water plants. Soil probes schedule the reminders. Gardens stayed healthier."),
    ("sign language avatar tutors", "An avatar demonstrates handshapes. Learners mirror the avatar with a camera. Feedback highlights finger errors."),
    ("museum guide robot narratives", "The guide adapts stories to visitor age. Dwell time tunes the narration. Children asked more questions."),
    ("robotic guide dogs at crossings", "A quadruped halts at curb edges. Traffic sound triggers the halt. Handlers trusted the crossings."),
    ("origami grippers for produce", "Folded fingers cradle ripe fruit. Pressure stays under bruising thresholds. Packers rejected fewer berries."),
    ("rehab games with mobile robots", "A ball-chasing game trains balance. The robot modulates chase speed. Patients extended session lengths."),
    ("classroom attendance robots", "The robot greets students by name. Greeting logs mark attendance. Teachers saved morning minutes."),
    ("robot sommelier aroma sensing", "Gas sensors profile wine aroma. A model suggests food pairings. Sommeliers agreed with most pairings."),
]


def dup_fixture_articles() -> list[ArticleRecord]:
    articles = []

    base_authors = _DUP_AUTHORS
    shuffled = [base_authors[4], base_authors[3], base_authors[2], base_authors[1], base_authors[0]]
    articles.append(
        make_article(
            "d01",
            2024,
            base_authors,
            title="Dream Lamp: A Pillow Robot Helps Children Fall Asleep Calmly",
            abstract=(
                "Bedtime struggles worry many families. "
                "We built a pillow robot that hums and pats to soothe a child. "
                "A prototype was tested with nine families at home. "
                "Children fell asleep sooner with the robot present."
            ),
            affiliation="Harbor Institute of Design",
            country="China",
        )
    )
    articles.append(
        make_article(
            "d02",
            2024,
            shuffled,
            title="Dream Lamp: A Pillow Robot That Helps Children Fall Asleep",
            abstract=(
                "Bedtime struggles worry many families. "
                "We built a pillow robot that hums and pats to soothe a child. "
                "A prototype was tested with nine families at home. "
                "Children fell asleep sooner once the robot was present."
            ),
            affiliation="Harbor Institute of Design",
            country="China",
        )
    )

    same_team = [("Aiko", "Mori"), ("Kenta", "Abe")]
    articles.append(
        make_article(
            "s01",
            2022,
            same_team,
            title="Tactile Paving Robots for Station Platforms",
            abstract=(
                "Platform edges endanger blind travelers. "
                "A crawler lays temporary tactile strips during construction. "
                "Station staff deployed it in two field tests."
            ),
            affiliation="Tohoku Mobility Lab",
            country="Japan",
        )
    )
    articles.append(
        make_article(
            "s02",
            2023,
            same_team,
            title="Scheduling Elevator Fleets with Commuter Flow Forecasts",
            abstract=(
                "Morning rushes overload station elevators. "
                "A forecast model staggers elevator assignments. "
                "Simulated stations cleared queues faster."
            ),
            affiliation="Tohoku Mobility Lab",
            country="Japan",
        )
    )

    for i, (topic, abstract) in enumerate(_FILLER_TOPICS):
        articles.append(
            make_article(
                f"f{i:02d}",
                2010 + (i % 15),
                [(f"Given{i:02d}", f"Surname{i:02d}"), (f"Other{i:02d}", f"Name{i:02d}")],
                title=f"Toward {topic}",
                abstract=abstract,
                affiliation=f"University {i:02d}",
                country="USA",
            )
        )
    return articles


def dup_fixture_corpus():
    return build_corpus(dup_fixture_articles(), "HRI")
