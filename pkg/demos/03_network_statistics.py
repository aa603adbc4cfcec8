"""Standard statistics for a few layers, plus a metric traced over time."""

from pathlib import Path

from journet import Layer, build_layer, evolution_series, ingest_corpus, metrics_report
from journet.metrics import degree_stats
from journet.reports import metrics_kv

DATA = Path(__file__).parent / "data"
corpus = ingest_corpus(
    DATA / "papers.csv", DATA / "authors.csv", DATA / "authorship.csv",
    DATA / "references.csv", DATA / "affiliations.csv",
)

for layer in (Layer.COAUTHORSHIP, Layer.PAPER_COMMON_PACS, Layer.COCITATION):
    print(f"--- {layer.value}")
    print(metrics_kv(metrics_report(build_layer(corpus, layer))), end="")

g = build_layer(corpus, Layer.COAUTHORSHIP)
stats = degree_stats(g)
print("co-authorship degree distribution:")
for k in sorted(stats.distribution):
    print(f"  degree {k}: {stats.distribution[k]} authors")

print("\nauthors per issue (cumulative):")
series = evolution_series(corpus, Layer.COAUTHORSHIP, "node_count")
for t, value in series.points:
    print(f"  {t}: {value}")

series = evolution_series(corpus, Layer.COAUTHORSHIP, "giant_component_size")
print("\ngiant co-authorship component per issue:")
for t, value in series.points:
    print(f"  {t}: {value}")
