"""Construction of every network layer a journal corpus supports.

One-mode layers (co-authorship, common-author, common-PACS, co-citation,
bibliographic coupling) and the directed citation layer, plus the three
bipartite graphs they derive from.  Co-citation and coupling are
computed straight from the reference lists; the shared-counterpart
projections go through :func:`project_one_mode`, so the two routes stay
independently checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .corpus import Corpus
from .graph import (
    AUTHOR,
    PACS,
    PAPER,
    REFERENCE,
    Graph,
    NodeRef,
    author_node,
    build_graph,
    pacs_node,
    paper_node,
    reference_node,
)


class Layer(Enum):
    """Named network layers; values double as CLI tokens."""

    COAUTHORSHIP = "coauthorship"
    PAPER_COMMON_AUTHOR = "paper-common-author"
    PAPER_CITATION = "paper-citation"
    PAPER_COMMON_PACS = "paper-common-pacs"
    COCITATION = "cocitation"
    COUPLING = "coupling"
    AUTHOR_COMMON_PACS = "author-common-pacs"
    BIPARTITE_AUTHOR_PAPER = "bipartite-author-paper"
    BIPARTITE_PAPER_PACS = "bipartite-paper-pacs"
    BIPARTITE_PAPER_REFERENCE = "bipartite-paper-reference"

    @property
    def directed(self) -> bool:
        return self is Layer.PAPER_CITATION

    @property
    def bipartite(self) -> bool:
        return self in (
            Layer.BIPARTITE_AUTHOR_PAPER,
            Layer.BIPARTITE_PAPER_PACS,
            Layer.BIPARTITE_PAPER_REFERENCE,
        )

    @property
    def node_kinds(self) -> frozenset[str]:
        """Kinds of node this layer contains (two for bipartite layers)."""
        return _LAYER_KINDS[self]


_LAYER_KINDS = {
    Layer.COAUTHORSHIP: frozenset({AUTHOR}),
    Layer.AUTHOR_COMMON_PACS: frozenset({AUTHOR}),
    Layer.PAPER_COMMON_AUTHOR: frozenset({PAPER}),
    Layer.PAPER_CITATION: frozenset({PAPER}),
    Layer.PAPER_COMMON_PACS: frozenset({PAPER}),
    Layer.COUPLING: frozenset({PAPER}),
    Layer.COCITATION: frozenset({REFERENCE}),
    Layer.BIPARTITE_AUTHOR_PAPER: frozenset({AUTHOR, PAPER}),
    Layer.BIPARTITE_PAPER_PACS: frozenset({PAPER, PACS}),
    Layer.BIPARTITE_PAPER_REFERENCE: frozenset({PAPER, REFERENCE}),
}


@dataclass(frozen=True)
class BipartiteGraph:
    """Undirected graph whose links only ever cross from left kind to right kind."""

    graph: Graph
    left_kind: str
    right_kind: str

    def side(self, which: str) -> list[NodeRef]:
        kind = {"left": self.left_kind, "right": self.right_kind}[which]
        return [n for n in self.graph.nodes() if n.kind == kind]


def is_bipartite_between(graph: Graph, left_kind: str, right_kind: str) -> bool:
    """Scan check: every link joins one left-kind node to one right-kind node."""
    for u, v, _ in graph.links():
        if {u.kind, v.kind} != {left_kind, right_kind}:
            return False
    return True


def build_bipartite(corpus: Corpus, layer: Layer) -> BipartiteGraph:
    """Build one of the three two-kind graphs, all nodes retained.

    Author-paper: author linked to each paper they wrote.  Paper-PACS:
    paper linked to each of its codes.  Paper-reference: paper linked to
    each distinct key in its reference list.  All weights are 1.
    """
    links: list[tuple[NodeRef, NodeRef, int]] = []
    isolated: list[NodeRef] = []

    if layer is Layer.BIPARTITE_AUTHOR_PAPER:
        left, right = AUTHOR, PAPER
        isolated = [author_node(a) for a in corpus.authors]
        isolated += [paper_node(p) for p in corpus.papers]
        for pid in sorted(corpus.papers):
            for aid in corpus.papers[pid].author_ids:
                links.append((author_node(aid), paper_node(pid), 1))
    elif layer is Layer.BIPARTITE_PAPER_PACS:
        left, right = PAPER, PACS
        isolated = [paper_node(p) for p in corpus.papers]
        for pid in sorted(corpus.papers):
            for code in sorted(corpus.papers[pid].pacs_codes):
                links.append((paper_node(pid), pacs_node(code), 1))
    elif layer is Layer.BIPARTITE_PAPER_REFERENCE:
        left, right = PAPER, REFERENCE
        isolated = [paper_node(p) for p in corpus.papers]
        for pid in sorted(corpus.papers):
            for key in sorted({r.key for r in corpus.papers[pid].reference_keys}):
                links.append((paper_node(pid), reference_node(key), 1))
    else:
        raise ValueError(f"{layer.value} is not a bipartite layer")

    return BipartiteGraph(build_graph(False, links, isolated_nodes=isolated), left, right)


def project_one_mode(bipartite: BipartiteGraph, side: str) -> Graph:
    """Collapse a bipartite graph onto one side.

    Two same-side nodes link whenever they share at least one counterpart
    on the other side; the weight is the number of shared counterparts.
    Side nodes without any shared counterpart stay as isolated nodes.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    keep_kind = bipartite.left_kind if side == "left" else bipartite.right_kind
    other = [n for n in bipartite.graph.nodes() if n.kind != keep_kind]

    weights: dict[tuple[NodeRef, NodeRef], int] = {}
    for counterpart in other:
        for u, v in combinations(bipartite.graph.neighbors(counterpart), 2):
            pair = (u, v)
            weights[pair] = weights.get(pair, 0) + 1

    links = [(u, v, w) for (u, v), w in weights.items()]
    return build_graph(False, links, isolated_nodes=bipartite.side(side))


def build_layer(corpus: Corpus, layer: Layer, internal_only: bool = False) -> Graph:
    """Build the named layer from a corpus.

    ``internal_only`` restricts the co-citation layer to cited works that
    are themselves journal papers; other layers ignore the flag.
    Citation arcs point from the citing paper to the cited one.
    """
    if layer is Layer.COAUTHORSHIP:
        projected = project_one_mode(build_bipartite(corpus, Layer.BIPARTITE_AUTHOR_PAPER), "left")
        paper_counts = {
            author_node(aid): len(corpus.papers_by_author.get(aid, ()))
            for aid in corpus.authors
        }
        return projected.with_aux(paper_counts)

    if layer is Layer.PAPER_COMMON_AUTHOR:
        return project_one_mode(build_bipartite(corpus, Layer.BIPARTITE_AUTHOR_PAPER), "right")

    if layer is Layer.PAPER_COMMON_PACS:
        return project_one_mode(build_bipartite(corpus, Layer.BIPARTITE_PAPER_PACS), "left")

    if layer is Layer.AUTHOR_COMMON_PACS:
        # Author uses a code if any of their papers carries it.
        links = []
        for aid in sorted(corpus.authors):
            codes: set[str] = set()
            for pid in corpus.papers_by_author.get(aid, ()):
                codes |= corpus.papers[pid].pacs_codes
            links += [(author_node(aid), pacs_node(code), 1) for code in sorted(codes)]
        isolated = [author_node(a) for a in corpus.authors]
        bip = BipartiteGraph(build_graph(False, links, isolated_nodes=isolated), AUTHOR, PACS)
        return project_one_mode(bip, "left")

    if layer is Layer.PAPER_CITATION:
        arcs = set()
        for pid in sorted(corpus.papers):
            for ref in corpus.papers[pid].reference_keys:
                if ref.internal_paper_id is not None:
                    arcs.add((pid, ref.internal_paper_id))
        links = [(paper_node(p), paper_node(q), 1) for p, q in sorted(arcs)]
        isolated = [paper_node(p) for p in corpus.papers]
        return build_graph(True, links, isolated_nodes=isolated)

    if layer is Layer.COCITATION:
        # Two works link once per paper whose reference list holds both.
        internal_keys = set(corpus.internal_id_for_key()) if internal_only else None
        weights: dict[tuple[NodeRef, NodeRef], int] = {}
        seen_keys: set[str] = set()
        for pid in sorted(corpus.papers):
            keys = {r.key for r in corpus.papers[pid].reference_keys}
            if internal_keys is not None:
                keys &= internal_keys
            seen_keys |= keys
            for x, y in combinations(sorted(keys), 2):
                pair = (reference_node(x), reference_node(y))
                weights[pair] = weights.get(pair, 0) + 1
        links = [(u, v, w) for (u, v), w in weights.items()]
        isolated = [reference_node(k) for k in seen_keys]
        return build_graph(False, links, isolated_nodes=isolated)

    if layer is Layer.COUPLING:
        # Papers link with weight = number of shared reference keys.
        weights: dict[tuple[NodeRef, NodeRef], int] = {}
        for citing in corpus.citing_by_key.values():
            for p, q in combinations(citing, 2):
                pair = (paper_node(p), paper_node(q))
                weights[pair] = weights.get(pair, 0) + 1
        links = [(u, v, w) for (u, v), w in weights.items()]
        isolated = [paper_node(p) for p in corpus.papers]
        return build_graph(False, links, isolated_nodes=isolated)

    if layer.bipartite:
        return build_bipartite(corpus, layer).graph

    raise ValueError(f"unknown layer {layer!r}")


def layer_from_token(token: str) -> Layer:
    try:
        return Layer(token)
    except ValueError:
        valid = ", ".join(layer.value for layer in Layer)
        raise ValueError(f"unknown layer {token!r}; valid layers: {valid}") from None
