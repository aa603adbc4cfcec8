"""Weighted graph container with typed nodes.

Nodes are (kind, id) pairs so authors, papers, PACS codes and cited works
can coexist in one structure (the bipartite layers need two kinds at
once).  Links carry positive integer weights counting multiplicity:
shared papers, shared codes, co-citations.  A graph is immutable once
built and every accessor returns data in canonical sorted order, so
reports and exported files are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

AUTHOR = "author"
PAPER = "paper"
PACS = "pacs"
REFERENCE = "reference"

NODE_KINDS = (AUTHOR, PAPER, PACS, REFERENCE)


class GraphError(ValueError):
    """Structurally invalid graph input: self-loop, bad weight, bad node."""


@dataclass(frozen=True)
class NodeRef:
    """Typed node handle.  Author ids are integers, all other ids text."""

    kind: str
    id: int | str

    def __post_init__(self):
        if self.kind not in NODE_KINDS:
            raise GraphError(f"unknown node kind {self.kind!r}; expected one of {NODE_KINDS}")
        if self.kind == AUTHOR:
            if not isinstance(self.id, int) or isinstance(self.id, bool):
                raise GraphError(f"author ids are integers, got {self.id!r}")
        elif not isinstance(self.id, str):
            raise GraphError(f"{self.kind} ids are text, got {self.id!r}")

    @property
    def sort_key(self) -> tuple:
        return (self.kind, self.id)

    def __lt__(self, other: "NodeRef"):
        return self.sort_key < other.sort_key

    def __str__(self):
        return f"{self.kind}:{self.id}"


def author_node(author_id: int) -> NodeRef:
    return NodeRef(AUTHOR, author_id)


def paper_node(paper_id: str) -> NodeRef:
    return NodeRef(PAPER, paper_id)


def pacs_node(code: str) -> NodeRef:
    return NodeRef(PACS, code)


def reference_node(key: str) -> NodeRef:
    return NodeRef(REFERENCE, key)


class Graph:
    """Undirected edges or directed arcs over NodeRef nodes.

    Build instances with :func:`build_graph`; treat them as read-only
    afterwards.  No self-loops, no parallel links (duplicates aggregate
    into the weight), weights always >= 1.  Undirected adjacency is
    stored symmetrically.
    """

    def __init__(self, directed: bool, adj, in_adj=None, aux=None):
        self.directed = directed
        # store nodes and neighbours in sorted insertion order once, so
        # every later traversal is canonical without re-sorting
        self._adj = {
            u: {v: adj[u][v] for v in sorted(adj[u])} for u in sorted(adj)
        }
        self._in = None
        if directed:
            self._in = {
                u: {v: in_adj[u][v] for v in sorted(in_adj[u])} for u in sorted(in_adj)
            }
        self._aux = dict(aux) if aux else None

    # -- node accessors ----------------------------------------------------

    def nodes(self) -> list[NodeRef]:
        return list(self._adj)

    @property
    def node_count(self) -> int:
        return len(self._adj)

    def has_node(self, node: NodeRef) -> bool:
        return node in self._adj

    @property
    def aux_counts(self) -> dict[NodeRef, int] | None:
        """Optional per-node auxiliary count (co-authorship: papers written)."""
        return dict(self._aux) if self._aux is not None else None

    def with_aux(self, aux: Mapping[NodeRef, int]) -> "Graph":
        """Same topology with an auxiliary count attached to every node."""
        return Graph(self.directed, self._adj, self._in, aux)

    # -- link accessors ----------------------------------------------------

    @property
    def link_count(self) -> int:
        total = sum(len(nbrs) for nbrs in self._adj.values())
        return total if self.directed else total // 2

    def neighbors(self, node: NodeRef) -> list[NodeRef]:
        """Sorted neighbours; out-neighbours for a directed graph."""
        return list(self._adj[node])

    def in_neighbors(self, node: NodeRef) -> list[NodeRef]:
        if not self.directed:
            return self.neighbors(node)
        return list(self._in[node])

    def all_neighbors(self, node: NodeRef) -> list[NodeRef]:
        """Out and in neighbours combined (identical to neighbors when undirected)."""
        if not self.directed:
            return self.neighbors(node)
        return sorted(set(self._adj[node]) | set(self._in[node]))

    def has_link(self, u: NodeRef, v: NodeRef) -> bool:
        return u in self._adj and v in self._adj[u]

    def weight(self, u: NodeRef, v: NodeRef) -> int:
        return self._adj[u][v]

    def degree(self, node: NodeRef) -> int:
        """Neighbour count; for directed graphs out-degree plus in-degree."""
        if not self.directed:
            return len(self._adj[node])
        return len(self._adj[node]) + len(self._in[node])

    def links(self) -> Iterator[tuple[NodeRef, NodeRef, int]]:
        """Canonical link iteration: undirected edges once with u < v, sorted."""
        for u, nbrs in self._adj.items():
            for v, w in nbrs.items():
                if self.directed or u < v:
                    yield u, v, w

    def symmetrized(self) -> "Graph":
        """Undirected view of a directed graph; weights of opposite arcs add."""
        if not self.directed:
            return self
        links = [(u, v, w) for u, v, w in self.links()]
        return build_graph(False, links, isolated_nodes=self._adj)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        # Equality is over topology and weights; aux counts are presentation.
        if not isinstance(other, Graph):
            return NotImplemented
        return self.directed == other.directed and self._adj == other._adj

    def __repr__(self):
        shape = "directed" if self.directed else "undirected"
        return f"<Graph {shape} nodes={self.node_count} links={self.link_count}>"


def build_graph(
    directed: bool,
    links: Iterable[tuple[NodeRef, NodeRef, int]],
    isolated_nodes: Iterable[NodeRef] = (),
    aux: Mapping[NodeRef, int] | None = None,
) -> Graph:
    """Aggregate (u, v, weight) triples into a Graph.

    Duplicate links add their weights.  For undirected graphs (u, v) and
    (v, u) are the same link.  Self-loops are rejected.  Nodes listed in
    ``isolated_nodes`` exist in the result even without links.
    """
    adj: dict[NodeRef, dict[NodeRef, int]] = {}
    in_adj: dict[NodeRef, dict[NodeRef, int]] = {}

    def ensure(node):
        adj.setdefault(node, {})
        if directed:
            in_adj.setdefault(node, {})

    for node in isolated_nodes:
        ensure(node)

    for u, v, w in links:
        if u == v:
            raise GraphError(f"self-loop rejected: ({u}, {v})")
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise GraphError(f"link weight must be an integer >= 1, got {w!r} for ({u}, {v})")
        ensure(u)
        ensure(v)
        if directed:
            adj[u][v] = adj[u].get(v, 0) + w
            in_adj[v][u] = in_adj[v].get(u, 0) + w
        else:
            adj[u][v] = adj[u].get(v, 0) + w
            adj[v][u] = adj[u][v]

    return Graph(directed, adj, in_adj if directed else None, aux)


@dataclass(frozen=True)
class AdjacencyRow:
    """One node with its sorted nearest neighbours, degree and aux count."""

    node: NodeRef
    neighbours: tuple[NodeRef, ...]
    degree: int
    aux_count: int


def adjacency_rows(graph: Graph, aux: Mapping[NodeRef, int] | None = None) -> list[AdjacencyRow]:
    """One row per node, sorted by node id.

    For directed graphs the neighbour column is the union of out- and
    in-neighbours and the degree counts them once each.  ``aux`` (or the
    graph's own aux counts) fills the last column; absent both, zero.
    """
    if aux is None:
        aux = graph.aux_counts
    if aux is not None:
        missing = [n for n in graph.nodes() if n not in aux]
        if missing:
            raise ValueError(f"aux mapping does not cover node {missing[0]}")
    rows = []
    for node in graph.nodes():
        nbrs = tuple(graph.all_neighbors(node))
        rows.append(
            AdjacencyRow(
                node=node,
                neighbours=nbrs,
                degree=len(nbrs),
                aux_count=aux[node] if aux is not None else 0,
            )
        )
    return rows
