"""Ingest the sample journal tables, validate, slice in time, persist.

Run from anywhere: paths resolve relative to this file.
"""

from pathlib import Path

from journet import TimeIndex, ingest_corpus, persist_corpus, snapshot, validate_corpus

DATA = Path(__file__).parent / "data"

corpus = ingest_corpus(
    DATA / "papers.csv",
    DATA / "authors.csv",
    DATA / "authorship.csv",
    DATA / "references.csv",
    DATA / "affiliations.csv",
)
print(corpus)

report = validate_corpus(corpus)
print("validation violations:", len(report.violations))

print("\nissues present:", ", ".join(str(t) for t in corpus.time_indexes()))

# everything published up to volume 1, issue 2
early = snapshot(corpus, TimeIndex(1, 2))
print("as of v1n2:", early)
for pid, paper in sorted(early.papers.items()):
    print(f"  {pid}: {paper.title} by {list(paper.author_ids)}")

# a forward citation loses its in-journal resolution inside a snapshot
out = Path(__file__).parent / "sample.corpus"
persist_corpus(corpus, out)
print(f"\nwrote {out.name} ({out.stat().st_size} bytes)")
