"""Related-item queries across one or several network layers.

A neighborhood is the exact BFS ball of a given radius around a seed
node.  Overlap queries intersect the direct neighbours of a seed across
several layers; ranking orders every node adjacent in at least one
layer by how many layers agree, then by total link weight.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import Corpus
from .graph import Graph, NodeRef
from .layers import Layer, build_layer

DIRECTIONS = ("both", "out", "in")


@dataclass
class NeighborhoodResult:
    seed: NodeRef
    depth: int
    members: dict[NodeRef, int]


def neighborhood(
    graph: Graph, seed: NodeRef, depth: int, direction: str = "both"
) -> NeighborhoodResult:
    """All nodes within ``depth`` hops of the seed, with their distances.

    The seed itself is excluded.  Directed graphs are walked both ways
    unless ``direction`` restricts the traversal to out- or in-arcs.
    """
    if not graph.has_node(seed):
        raise ValueError(f"seed node {seed} is not in the graph")
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    step = {
        "both": graph.all_neighbors,
        "out": graph.neighbors,
        "in": graph.in_neighbors,
    }[direction]
    dist = {seed: 0}
    queue = deque([seed])
    while queue:
        u = queue.popleft()
        if dist[u] == depth:
            continue
        for v in step(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    del dist[seed]
    return NeighborhoodResult(seed, depth, dist)


@dataclass
class OverlapResult:
    seed: NodeRef
    layers: tuple[Layer, ...]
    per_layer: dict[Layer, frozenset[NodeRef]]
    common: frozenset[NodeRef]


@dataclass(frozen=True)
class RelatedItem:
    node: NodeRef
    layer_count: int
    weight_sum: int


def _check_query(seed: NodeRef, layers: Sequence[Layer], direction: str) -> tuple[Layer, ...]:
    """Validate a multi-layer query; repeated layers collapse to one."""
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    deduped = tuple(dict.fromkeys(layers))
    if len(deduped) < 2:
        raise ValueError("need at least two distinct layers to compare")
    for layer in deduped:
        if seed.kind not in layer.node_kinds:
            raise ValueError(
                f"seed kind {seed.kind!r} does not fit layer {layer.value!r}"
                f" (holds {', '.join(sorted(layer.node_kinds))} nodes)"
            )
    return deduped


def _adjacent_weights(graph: Graph, seed: NodeRef, citation_direction: str) -> dict[NodeRef, int]:
    """Direct neighbours with their link weights; arcs both ways add up."""
    if not graph.has_node(seed):
        raise ValueError(f"seed node {seed} is not in the graph")
    if not graph.directed:
        return {v: graph.weight(seed, v) for v in graph.neighbors(seed)}
    weights: dict[NodeRef, int] = {}
    if citation_direction in ("both", "out"):
        for v in graph.neighbors(seed):
            weights[v] = weights.get(v, 0) + graph.weight(seed, v)
    if citation_direction in ("both", "in"):
        for v in graph.in_neighbors(seed):
            weights[v] = weights.get(v, 0) + graph.weight(v, seed)
    return weights


def layer_overlap(
    corpus: Corpus,
    seed: NodeRef,
    layers: Iterable[Layer],
    citation_direction: str = "both",
) -> OverlapResult:
    """Nodes directly related to the seed in every one of the given layers."""
    layers = _check_query(seed, tuple(layers), citation_direction)
    per_layer: dict[Layer, frozenset[NodeRef]] = {}
    for layer in layers:
        graph = build_layer(corpus, layer)
        per_layer[layer] = frozenset(_adjacent_weights(graph, seed, citation_direction))
    common = frozenset.intersection(*per_layer.values())
    return OverlapResult(seed, layers, per_layer, common)


def related_rank(
    corpus: Corpus,
    seed: NodeRef,
    layers: Iterable[Layer],
    citation_direction: str = "both",
) -> list[RelatedItem]:
    """Every node adjacent to the seed in >= 1 layer, best-connected first.

    Sorted by number of agreeing layers, then total weight, then node id;
    the id tie-break makes the order total.
    """
    layers = _check_query(seed, tuple(layers), citation_direction)
    counts: dict[NodeRef, int] = {}
    weights: dict[NodeRef, int] = {}
    for layer in layers:
        graph = build_layer(corpus, layer)
        for node, w in _adjacent_weights(graph, seed, citation_direction).items():
            counts[node] = counts.get(node, 0) + 1
            weights[node] = weights.get(node, 0) + w
    items = [RelatedItem(node, counts[node], weights[node]) for node in counts]
    items.sort(key=lambda it: (-it.layer_count, -it.weight_sum, it.node.sort_key))
    return items
