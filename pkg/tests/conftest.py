"""Shared fixtures: hand-built corpora and random instance generators."""

from __future__ import annotations

import random

import pytest

from journet.corpus import (
    AffiliationRecord,
    AuthorRecord,
    Corpus,
    PaperRecord,
    ReferenceKey,
)
from journet.graph import author_node, build_graph


def make_paper(paper_id, authors, pacs=(), refs=(), title=None, year=None):
    """PaperRecord shorthand; refs entries are keys or (key, internal_id) pairs."""
    from journet.corpus import parse_paper_id

    volume, issue, _ = parse_paper_id(paper_id)
    reference_keys = []
    for ref in refs:
        if isinstance(ref, tuple):
            reference_keys.append(ReferenceKey(ref[0], ref[1]))
        else:
            reference_keys.append(ReferenceKey(ref))
    reference_keys.sort(key=lambda r: r.key)
    return PaperRecord(
        paper_id=paper_id,
        title=title or f"On {paper_id}",
        volume=volume,
        issue=issue,
        year=year,
        author_ids=tuple(authors),
        pacs_codes=frozenset(pacs),
        reference_keys=tuple(reference_keys),
    )


def make_authors(ids):
    return [AuthorRecord(aid, f"Author {aid}", frozenset()) for aid in ids]


@pytest.fixture
def quartet_corpus():
    """Author 3672 co-authors exactly one paper with 3671, 3673 and 3674."""
    paper = make_paper("v1n1p1", [3671, 3672, 3673, 3674])
    return Corpus([paper], make_authors([3671, 3672, 3673, 3674]))


@pytest.fixture
def triple_relation_corpus():
    """v4n2p17 shares an author, a citation arc and a PACS code with v4n4p14.

    The other two papers each share exactly one relation with v4n4p14, so
    the three-layer intersection is {v4n2p17} alone.
    """
    papers = [
        make_paper("v4n1p1", [203, 204], pacs={"75.10.-b"}, refs=["older survey"]),
        make_paper("v4n2p17", [201, 202], pacs={"05.50.+q"}, refs=["smith 1990"]),
        make_paper("v4n3p5", [204], pacs={"64.60.Cn"}),
        make_paper(
            "v4n4p14",
            [202, 203],
            pacs={"05.50.+q", "64.60.Cn"},
            refs=[("petrenko 2001", "v4n2p17"), "smith 1990"],
        ),
    ]
    authors = [
        AuthorRecord(201, "A. Kovalenko", frozenset({1})),
        AuthorRecord(202, "B. Petrenko", frozenset({1})),
        AuthorRecord(203, "C. Shevchenko", frozenset({2})),
        AuthorRecord(204, "D. Melnyk", frozenset()),
    ]
    affiliations = [
        AffiliationRecord(1, "Institute for Theory", "UA"),
        AffiliationRecord(2, "University of the West", None),
    ]
    return Corpus(papers, authors, affiliations)


@pytest.fixture
def two_triangle_graph():
    """Two triangles {1,2,3} and {4,5,6} joined by the bridge 3-4."""
    n = author_node
    edges = [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4)]
    return build_graph(False, [(n(a), n(b), 1) for a, b in edges])


def random_graph(rng: random.Random, n: int, p: float):
    """Erdos-Renyi style undirected graph on author nodes 1..n."""
    links = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                links.append((author_node(u), author_node(v), rng.randint(1, 3)))
    isolated = [author_node(u) for u in range(1, n + 1)]
    return build_graph(False, links, isolated_nodes=isolated)


PACS_POOL = [
    "05.50.+q",
    "64.60.Cn",
    "75.10.-b",
    "02.50.Ey",
    "61.20.Gy",
    "71.10.Fd",
    "05.70.Fh",
]


def random_corpus(
    rng: random.Random,
    volumes: int = 3,
    issues_per_volume: int = 2,
    papers_per_issue: int = 4,
    author_pool: int = 12,
    external_keys: int = 10,
) -> Corpus:
    """Synthetic but structurally valid journal data.

    Citations point at earlier papers or at a pool of external works, so
    every internal reference resolves and nothing cites itself.
    """
    papers = []
    published: list[str] = []
    key_pool = [f"external work {k}" for k in range(external_keys)]
    for vol in range(1, volumes + 1):
        for iss in range(1, issues_per_volume + 1):
            for seq in range(1, papers_per_issue + 1):
                pid = f"v{vol}n{iss}p{seq}"
                team = rng.sample(range(101, 101 + author_pool), rng.randint(1, 3))
                pacs = set(rng.sample(PACS_POOL, rng.randint(0, 3)))
                refs = []
                used = set()
                for key in rng.sample(key_pool, rng.randint(0, 4)):
                    refs.append(key)
                    used.add(key)
                if published and rng.random() < 0.7:
                    for target in rng.sample(published, min(len(published), rng.randint(1, 2))):
                        key = f"journal item {target}"
                        if key not in used:
                            refs.append((key, target))
                            used.add(key)
                papers.append(make_paper(pid, team, pacs=pacs, refs=refs))
                published.append(pid)
    authors = make_authors(range(101, 101 + author_pool))
    return Corpus(papers, authors)
