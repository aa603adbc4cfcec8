"""Divisive community detection by repeated removal of high-traffic edges.

Edge betweenness counts shortest paths fractionally (Brandes-style BFS
accumulation), the highest-scoring edge is removed, betweenness is
recomputed, and every time the graph falls apart a partition is
recorded together with its modularity against the original graph.  The
best partition is the modularity maximum.  Tie-breaking is fully
deterministic so repeated runs agree edge for edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .graph import Graph, NodeRef

Edge = tuple[NodeRef, NodeRef]


def _edge_key(u: NodeRef, v: NodeRef) -> Edge:
    return (u, v) if u < v else (v, u)


def _betweenness_on_adj(adj: dict[NodeRef, list[NodeRef]]) -> dict[Edge, float]:
    """Shortest-path edge betweenness over unordered node pairs.

    One BFS per source builds shortest-path counts sigma and predecessor
    lists; walking the BFS order backwards pushes each pair's unit of
    flow down the shortest-path DAG, split proportionally to sigma.
    Summing over all sources counts every unordered pair twice, hence
    the final halving.  Sources and neighbours are visited in sorted
    order so the floating-point sums are reproducible.
    """
    betweenness: dict[Edge, float] = {
        _edge_key(u, v): 0.0 for u in adj for v in adj[u] if u < v
    }
    for source in sorted(adj):
        dist = {source: 0}
        sigma = {v: 0 for v in adj}
        sigma[source] = 1
        preds: dict[NodeRef, list[NodeRef]] = {v: [] for v in adj}
        order: list[NodeRef] = []
        queue = deque([source])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        delta = {v: 0.0 for v in order}
        for w in reversed(order):
            for v in preds[w]:
                flow = sigma[v] / sigma[w] * (1.0 + delta[w])
                betweenness[_edge_key(v, w)] += flow
                delta[v] += flow
    return {edge: value / 2.0 for edge, value in betweenness.items()}


def edge_betweenness(graph: Graph) -> dict[Edge, float]:
    """Betweenness per unordered edge; contributions per node pair sum to 1."""
    if graph.directed:
        raise ValueError("edge betweenness needs an undirected graph; symmetrize first")
    adj = {u: graph.neighbors(u) for u in graph.nodes()}
    return _betweenness_on_adj(adj)


def modularity(graph: Graph, partition: Mapping[NodeRef, int]) -> float:
    """Q = sum over communities of (internal link share - squared degree share).

    Unweighted: link multiplicities are ignored.  The partition must
    label exactly the graph's nodes and the graph must have at least one
    edge.  The sum is carried in exact rationals and rounded once at the
    end, so the result never depends on community iteration order.
    """
    if graph.directed:
        raise ValueError("modularity needs an undirected graph; symmetrize first")
    m = graph.link_count
    if m == 0:
        raise ValueError("modularity is undefined for a graph without edges")
    if set(partition) != set(graph.nodes()):
        raise ValueError("partition does not cover exactly the graph's node set")
    internal: dict[int, int] = {}
    degree: dict[int, int] = {}
    for u, v, _ in graph.links():
        if partition[u] == partition[v]:
            internal[partition[u]] = internal.get(partition[u], 0) + 1
    for node in graph.nodes():
        label = partition[node]
        degree[label] = degree.get(label, 0) + graph.degree(node)
    q = Fraction(0)
    for label in degree:
        q += Fraction(internal.get(label, 0), m) - Fraction(degree[label], 2 * m) ** 2
    return float(q)


def canonical_partition(components: list[list[NodeRef]]) -> dict[NodeRef, int]:
    """Dense labels 0..c-1; the community with the smallest node gets 0."""
    ordered = sorted(components, key=lambda c: min(c).sort_key)
    return {node: label for label, members in enumerate(ordered) for node in members}


def _components_of_adj(adj: dict[NodeRef, list[NodeRef]]) -> list[list[NodeRef]]:
    seen: set[NodeRef] = set()
    components = []
    for start in sorted(adj):
        if start in seen:
            continue
        members = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    members.append(v)
                    queue.append(v)
        components.append(sorted(members))
    return components


@dataclass(frozen=True)
class PartitionRecord:
    """One dendrogram level: the split observed after removed_edges removals."""

    removed_edges: int
    community_count: int
    partition: dict[NodeRef, int]
    modularity: float


@dataclass
class CommunityResult:
    records: list[PartitionRecord]
    best_index: int

    @property
    def best(self) -> PartitionRecord:
        return self.records[self.best_index]


def girvan_newman(graph: Graph) -> CommunityResult:
    """Full divisive dendrogram with the modularity-best level marked.

    The starting partition (connected components of the input) is always
    recorded first; afterwards the maximum-betweenness edge is removed
    (ties broken toward the smallest (min endpoint, max endpoint) pair)
    and a new level is recorded whenever the component count grows.
    Modularity is always evaluated against the original graph.  Runs
    until no edges remain, so the last level is all singletons.  Best is
    the highest Q; equal Q prefers fewer communities, then the earlier
    recording.
    """
    if graph.directed:
        raise ValueError("community detection needs an undirected graph; symmetrize first")
    if graph.link_count == 0:
        raise ValueError("community detection needs at least one edge")

    adj = {u: graph.neighbors(u) for u in graph.nodes()}

    def record(removed, components):
        partition = canonical_partition(components)
        return PartitionRecord(removed, len(components), partition, modularity(graph, partition))

    records = [record(0, _components_of_adj(adj))]
    removed = 0
    while any(adj[u] for u in adj):
        scores = _betweenness_on_adj(adj)
        best_edge = None
        best_score = -1.0
        for edge in sorted(scores):
            if scores[edge] > best_score:
                best_edge, best_score = edge, scores[edge]
        u, v = best_edge
        adj[u].remove(v)
        adj[v].remove(u)
        removed += 1
        components = _components_of_adj(adj)
        if len(components) > records[-1].community_count:
            records.append(record(removed, components))

    best_index = 0
    for i, entry in enumerate(records):
        if entry.modularity > records[best_index].modularity:
            best_index = i
    return CommunityResult(records, best_index)


def community_of(result: CommunityResult, node: NodeRef) -> list[NodeRef]:
    """Sorted members of the node's community in the best partition."""
    partition = result.best.partition
    if node not in partition:
        raise ValueError(f"node {node} was not part of the analyzed graph")
    label = partition[node]
    return sorted(n for n, lab in partition.items() if lab == label)
