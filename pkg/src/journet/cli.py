"""Command-line front end.

Thin bindings over the library: every subcommand loads a corpus (or
ingests one), calls the corresponding library function and prints the
serialized result.  Data goes to stdout or --out files, diagnostics to
stderr.  Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import reports
from .communities import community_of, girvan_newman
from .corpus import TimeIndex, ingest_corpus, load_corpus, persist_corpus, snapshot
from .graph import NodeRef
from .layers import Layer, build_layer, layer_from_token
from .metrics import EVOLUTION_METRICS, degree_stats, evolution_series, metrics_report
from .pajek import export_pajek, infer_node
from .retrieval import layer_overlap, neighborhood, related_rank

LAYER_TOKENS = [layer.value for layer in Layer]


class _Parser(argparse.ArgumentParser):
    """argparse, but usage problems exit 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _node_for_layers(token: str, layers: list[Layer]) -> NodeRef:
    """Parse a node id so that its kind fits every given layer."""
    kinds = frozenset.intersection(*(layer.node_kinds for layer in layers))
    if not kinds:
        raise ValueError(
            "the given layers hold no common node kind; pick layers over the same nodes"
        )
    node = infer_node(token)
    if node.kind not in kinds:
        raise ValueError(
            f"node id {token!r} looks like a {node.kind} id but the layers hold"
            f" {', '.join(sorted(kinds))} nodes"
        )
    return node


def _write_or_print(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_ingest(args) -> int:
    corpus = ingest_corpus(
        args.papers, args.authors, args.links, args.refs, args.affils
    )
    persist_corpus(corpus, args.out)
    print(
        f"ingested {corpus.paper_count} papers, {corpus.author_count} authors,"
        f" {len(corpus.affiliations)} affiliations -> {args.out}",
        file=sys.stderr,
    )
    return 0


def _load(args):
    corpus = load_corpus(args.corpus)
    as_of = getattr(args, "as_of", None)
    if as_of:
        corpus = snapshot(corpus, TimeIndex.parse(as_of))
    return corpus


def _cmd_stats(args) -> int:
    graph = build_layer(_load(args), layer_from_token(args.layer))
    report = metrics_report(graph)
    text = reports.metrics_csv(report) if args.format == "csv" else reports.metrics_kv(report)
    sys.stdout.write(text)
    return 0


def _cmd_distribution(args) -> int:
    graph = build_layer(_load(args), layer_from_token(args.layer))
    _write_or_print(reports.degree_distribution_csv(degree_stats(graph)), args.out)
    return 0


def _cmd_communities(args) -> int:
    layer = layer_from_token(args.layer)
    graph = build_layer(_load(args), layer)
    if graph.directed:
        graph = graph.symmetrized()
    result = girvan_newman(graph)
    if args.dump_dendrogram:
        sys.stdout.write(reports.dendrogram_lines(result))
    elif args.node is not None:
        node = _node_for_layers(args.node, [layer])
        members = community_of(result, node)
        sys.stdout.write(reports.community_members_csv(members))
    else:
        sys.stdout.write(reports.partition_csv(result.best.partition))
    return 0


def _cmd_neighbors(args) -> int:
    layer = layer_from_token(args.layer)
    graph = build_layer(_load(args), layer)
    node = _node_for_layers(args.node, [layer])
    result = neighborhood(graph, node, args.depth, direction=args.direction)
    sys.stdout.write(reports.neighborhood_csv(result))
    return 0


def _split_layers(tokens: str) -> list[Layer]:
    return [layer_from_token(t) for t in tokens.split(",") if t]


def _cmd_overlap(args) -> int:
    layers = _split_layers(args.layers)
    corpus = _load(args)
    node = _node_for_layers(args.node, layers)
    result = layer_overlap(corpus, node, layers, citation_direction=args.direction)
    sys.stdout.write(reports.overlap_csv(result))
    return 0


def _cmd_rank(args) -> int:
    layers = _split_layers(args.layers)
    corpus = _load(args)
    node = _node_for_layers(args.node, layers)
    items = related_rank(corpus, node, layers, citation_direction=args.direction)
    sys.stdout.write(reports.ranking_csv(items))
    return 0


def _cmd_evolution(args) -> int:
    series = evolution_series(_load(args), layer_from_token(args.layer), args.metric)
    _write_or_print(reports.evolution_csv(series), args.out)
    return 0


def _cmd_export(args) -> int:
    graph = build_layer(_load(args), layer_from_token(args.layer))
    if args.format == "pajek":
        text = export_pajek(graph)
    else:
        text = reports.adjacency_report_csv(graph)
    _write_or_print(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="journet", description="Journal network analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="read CSV tables, write a corpus file")
    p.add_argument("--papers", required=True)
    p.add_argument("--authors", required=True)
    p.add_argument("--links", required=True, help="authorship CSV (paper, author, position)")
    p.add_argument("--refs", required=True)
    p.add_argument("--affils", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_ingest)

    def corpus_arg(p):
        p.add_argument("--corpus", required=True)

    p = sub.add_parser("stats", help="network statistics for one layer")
    corpus_arg(p)
    p.add_argument("--layer", required=True, choices=LAYER_TOKENS)
    p.add_argument("--as-of", dest="as_of", default=None, metavar="vVnI")
    p.add_argument("--format", choices=["kv", "csv"], default="kv")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("distribution", help="degree distribution as CSV")
    corpus_arg(p)
    p.add_argument("--layer", required=True, choices=LAYER_TOKENS)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_distribution)

    p = sub.add_parser("communities", help="divisive community detection")
    corpus_arg(p)
    p.add_argument("--layer", required=True, choices=LAYER_TOKENS)
    p.add_argument("--node", default=None, help="print the community of this node")
    p.add_argument("--dump-dendrogram", action="store_true")
    p.set_defaults(func=_cmd_communities)

    p = sub.add_parser("neighbors", help="BFS ball around a node in one layer")
    corpus_arg(p)
    p.add_argument("--layer", required=True, choices=LAYER_TOKENS)
    p.add_argument("--node", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--direction", choices=["both", "out", "in"], default="both")
    p.set_defaults(func=_cmd_neighbors)

    p = sub.add_parser("overlap", help="nodes related to a seed in every layer")
    corpus_arg(p)
    p.add_argument("--node", required=True)
    p.add_argument("--layers", required=True, help="comma-separated layer names")
    p.add_argument("--direction", choices=["both", "out", "in"], default="both")
    p.set_defaults(func=_cmd_overlap)

    p = sub.add_parser("rank", help="related nodes ordered by layer agreement")
    corpus_arg(p)
    p.add_argument("--node", required=True)
    p.add_argument("--layers", required=True, help="comma-separated layer names")
    p.add_argument("--direction", choices=["both", "out", "in"], default="both")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("evolution", help="metric over cumulative time slices")
    corpus_arg(p)
    p.add_argument("--layer", required=True, choices=LAYER_TOKENS)
    p.add_argument("--metric", required=True, choices=list(EVOLUTION_METRICS))
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_evolution)

    p = sub.add_parser("export", help="write a layer as Pajek or adjacency CSV")
    corpus_arg(p)
    p.add_argument("--layer", required=True, choices=LAYER_TOKENS)
    p.add_argument("--format", required=True, choices=["pajek", "adjacency"])
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"journet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
