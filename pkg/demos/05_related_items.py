"""Related-item queries: neighborhoods, multi-layer overlap, ranking.

A paper related to the seed through several different kinds of links at
once is a stronger "see also" candidate than one sharing a single link,
which is what the ranking encodes.
"""

from pathlib import Path

from journet import Layer, build_layer, ingest_corpus, layer_overlap, neighborhood, related_rank
from journet.graph import author_node, paper_node

DATA = Path(__file__).parent / "data"
corpus = ingest_corpus(
    DATA / "papers.csv", DATA / "authors.csv", DATA / "authorship.csv",
    DATA / "references.csv", DATA / "affiliations.csv",
)

g = build_layer(corpus, Layer.COAUTHORSHIP)
seed = author_node(101)
for depth in (1, 2):
    ball = neighborhood(g, seed, depth)
    print(f"author 101, depth {depth}: "
          + ", ".join(f"{n.id}@{d}" for n, d in sorted(ball.members.items())))

common_pacs = build_layer(corpus, Layer.AUTHOR_COMMON_PACS)
ball = neighborhood(common_pacs, seed, 1)
print("author 101 shares PACS codes with:", sorted(n.id for n in ball.members))

paper_layers = [Layer.PAPER_COMMON_AUTHOR, Layer.PAPER_CITATION, Layer.PAPER_COMMON_PACS]
seed_paper = paper_node("v2n2p1")
overlap = layer_overlap(corpus, seed_paper, paper_layers)
print(f"\npapers related to {seed_paper.id} in every layer:")
for layer in paper_layers:
    print(f"  {layer.value:20}: {sorted(n.id for n in overlap.per_layer[layer])}")
print(f"  common              : {sorted(n.id for n in overlap.common)}")

print(f"\nranked related papers for {seed_paper.id}:")
for item in related_rank(corpus, seed_paper, paper_layers):
    print(f"  {item.node.id:8} layers={item.layer_count} weight={item.weight_sum}")
