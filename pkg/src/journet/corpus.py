"""Journal metadata store: papers, authors, affiliations, cited works.

Ingestion reads five CSV tables, validates everything up front and
returns an immutable, fully cross-referenced corpus.  Paper ids encode
publication time as "v{volume}n{issue}p{seq}", which stands in for
dates: time slicing works on (volume, issue) pairs.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass
from functools import total_ordering
from pathlib import Path
from typing import Iterable, Mapping

PAPER_ID_RE = re.compile(r"^v(\d+)n(\d+)p(\d+)$")
PACS_RE = re.compile(r"^\d{2}\.\d{2}\.[0-9A-Za-z+\-]{2}$")

FORMAT_HEADER = "journet-corpus v1"


class IngestError(ValueError):
    """Fatal ingestion problem; carries every issue found, no partial corpus."""

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class CorpusFormatError(ValueError):
    """Persisted corpus file is unreadable or has the wrong format version."""


def parse_paper_id(paper_id: str) -> tuple[int, int, int]:
    """Split a canonical paper id into (volume, issue, seq) or raise ValueError."""
    m = PAPER_ID_RE.match(paper_id)
    if not m:
        raise ValueError(f"paper id {paper_id!r} does not match v<vol>n<issue>p<seq>")
    volume, issue, seq = (int(g) for g in m.groups())
    if f"v{volume}n{issue}p{seq}" != paper_id:
        raise ValueError(f"paper id {paper_id!r} is not in canonical form")
    if volume < 1 or issue < 1:
        raise ValueError(f"paper id {paper_id!r} has a non-positive volume or issue")
    return volume, issue, seq


def is_valid_pacs(code: str) -> bool:
    return bool(PACS_RE.match(code))


def normalize_ref_key(raw: str) -> str:
    """Canonical citation key: trimmed, single-spaced, case-folded."""
    return " ".join(raw.split()).casefold()


@total_ordering
@dataclass(frozen=True)
class TimeIndex:
    """(volume, issue) pair ordered like publication time."""

    volume: int
    issue: int

    def __lt__(self, other: "TimeIndex"):
        return (self.volume, self.issue) < (other.volume, other.issue)

    @classmethod
    def parse(cls, token: str) -> "TimeIndex":
        m = re.match(r"^v(\d+)n(\d+)$", token)
        if not m:
            raise ValueError(f"time index {token!r} does not match v<vol>n<issue>")
        return cls(int(m.group(1)), int(m.group(2)))

    def __str__(self):
        return f"v{self.volume}n{self.issue}"


@dataclass(frozen=True)
class ReferenceKey:
    """One cited work: normalized key text, plus the paper id when in-journal."""

    key: str
    internal_paper_id: str | None = None


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    title: str
    volume: int
    issue: int
    year: int | None
    author_ids: tuple[int, ...]
    pacs_codes: frozenset[str]
    reference_keys: tuple[ReferenceKey, ...]

    @property
    def time_index(self) -> TimeIndex:
        return TimeIndex(self.volume, self.issue)


@dataclass(frozen=True)
class AuthorRecord:
    author_id: int
    name: str
    affiliation_ids: frozenset[int]


@dataclass(frozen=True)
class AffiliationRecord:
    affiliation_id: int
    name: str
    country: str | None = None


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: str
    message: str


@dataclass
class ValidationReport:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> list[str]:
        return [v.kind for v in self.violations]


class Corpus:
    """Immutable record store with derived inverted indexes.

    ``papers_by_author``, ``papers_by_pacs`` and ``citing_by_key`` are
    computed at construction; they map to sorted tuples of paper ids.
    Do not mutate a corpus after building it.
    """

    def __init__(
        self,
        papers: Iterable[PaperRecord],
        authors: Iterable[AuthorRecord],
        affiliations: Iterable[AffiliationRecord] = (),
    ):
        self.papers: dict[str, PaperRecord] = {}
        for p in papers:
            if p.paper_id in self.papers:
                raise ValueError(f"duplicate paper id {p.paper_id}")
            self.papers[p.paper_id] = p
        self.authors: dict[int, AuthorRecord] = {}
        for a in authors:
            if a.author_id in self.authors:
                raise ValueError(f"duplicate author id {a.author_id}")
            self.authors[a.author_id] = a
        self.affiliations: dict[int, AffiliationRecord] = {}
        for f in affiliations:
            if f.affiliation_id in self.affiliations:
                raise ValueError(f"duplicate affiliation id {f.affiliation_id}")
            self.affiliations[f.affiliation_id] = f

        self.papers_by_author = _index_papers_by_author(self.papers)
        self.papers_by_pacs = _index_papers_by_pacs(self.papers)
        self.citing_by_key = _index_citing_by_key(self.papers)

    @property
    def paper_count(self) -> int:
        return len(self.papers)

    @property
    def author_count(self) -> int:
        return len(self.authors)

    def time_indexes(self) -> list[TimeIndex]:
        """Distinct (volume, issue) pairs present, ascending."""
        return sorted({p.time_index for p in self.papers.values()})

    def internal_id_for_key(self) -> dict[str, str]:
        """Map each reference key to an in-journal paper id where one is known."""
        mapping: dict[str, str] = {}
        for pid in sorted(self.papers):
            for ref in self.papers[pid].reference_keys:
                if ref.internal_paper_id is not None:
                    mapping.setdefault(ref.key, ref.internal_paper_id)
        return mapping

    def __eq__(self, other):
        if not isinstance(other, Corpus):
            return NotImplemented
        return (
            self.papers == other.papers
            and self.authors == other.authors
            and self.affiliations == other.affiliations
        )

    def __repr__(self):
        return (
            f"<Corpus papers={len(self.papers)} authors={len(self.authors)}"
            f" affiliations={len(self.affiliations)}>"
        )


def _index_papers_by_author(papers: Mapping[str, PaperRecord]) -> dict[int, tuple[str, ...]]:
    index: dict[int, list[str]] = {}
    for pid in sorted(papers):
        for aid in papers[pid].author_ids:
            index.setdefault(aid, []).append(pid)
    return {aid: tuple(pids) for aid, pids in index.items()}


def _index_papers_by_pacs(papers: Mapping[str, PaperRecord]) -> dict[str, tuple[str, ...]]:
    index: dict[str, list[str]] = {}
    for pid in sorted(papers):
        for code in sorted(papers[pid].pacs_codes):
            index.setdefault(code, []).append(pid)
    return {code: tuple(pids) for code, pids in index.items()}


def _index_citing_by_key(papers: Mapping[str, PaperRecord]) -> dict[str, tuple[str, ...]]:
    index: dict[str, list[str]] = {}
    for pid in sorted(papers):
        for key in sorted({ref.key for ref in papers[pid].reference_keys}):
            index.setdefault(key, []).append(pid)
    return {key: tuple(pids) for key, pids in index.items()}


def validate_corpus(corpus: Corpus) -> ValidationReport:
    """List every invariant violation; an empty report means the corpus is valid.

    Read-only: violations are data, not exceptions.
    """
    out: list[Violation] = []

    def bad(kind, subject, message):
        out.append(Violation(kind, str(subject), message))

    for pid in sorted(corpus.papers):
        paper = corpus.papers[pid]
        try:
            vol, iss, _ = parse_paper_id(pid)
            if (vol, iss) != (paper.volume, paper.issue):
                bad("bad-paper-id", pid, f"id encodes v{vol}n{iss} but record says v{paper.volume}n{paper.issue}")
        except ValueError as exc:
            bad("bad-paper-id", pid, str(exc))
        if not paper.author_ids:
            bad("no-authors", pid, "paper has an empty author list")
        seen: set[int] = set()
        for aid in paper.author_ids:
            if aid in seen:
                bad("duplicate-author", pid, f"author {aid} listed twice")
            seen.add(aid)
            if aid not in corpus.authors:
                bad("dangling-author", pid, f"author {aid} has no record")
        for code in sorted(paper.pacs_codes):
            if not is_valid_pacs(code):
                bad("bad-pacs", pid, f"PACS code {code!r} is not NN.NN.xx")
        for ref in paper.reference_keys:
            if not ref.key:
                bad("empty-ref-key", pid, "reference with empty key")
            if ref.internal_paper_id is not None:
                if ref.internal_paper_id not in corpus.papers:
                    bad("dangling-internal-ref", pid, f"cited paper {ref.internal_paper_id} has no record")
                elif ref.internal_paper_id == pid:
                    bad("self-citation", pid, "paper cites itself by id")

    for aid in sorted(corpus.authors):
        for fid in sorted(corpus.authors[aid].affiliation_ids):
            if fid not in corpus.affiliations:
                bad("dangling-affiliation", aid, f"affiliation {fid} has no record")

    # Index drift would mean the corpus was mutated after construction.
    if corpus.papers_by_author != _index_papers_by_author(corpus.papers):
        bad("index-mismatch", "papers_by_author", "stored index differs from rebuild")
    if corpus.papers_by_pacs != _index_papers_by_pacs(corpus.papers):
        bad("index-mismatch", "papers_by_pacs", "stored index differs from rebuild")
    if corpus.citing_by_key != _index_citing_by_key(corpus.papers):
        bad("index-mismatch", "citing_by_key", "stored index differs from rebuild")

    return ValidationReport(out)


# -- CSV ingestion ----------------------------------------------------------

PAPERS_HEADER = ["paper_id", "title", "volume", "issue", "year", "pacs"]
AUTHORS_HEADER = ["author_id", "name", "affiliation_ids"]
AUTHORSHIP_HEADER = ["paper_id", "author_id", "position"]
REFERENCES_HEADER = ["citing_paper_id", "ref_key", "internal_paper_id"]
AFFILIATIONS_HEADER = ["affiliation_id", "name", "country"]


def _read_rows(path, expected_header, problems):
    """Yield (line_number, row) for every data row; header and arity checked."""
    path = Path(path)
    # utf-8-sig: spreadsheet exports often prepend a BOM
    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            problems.append(f"{path.name}:1: missing header row")
            return
        if header != expected_header:
            problems.append(
                f"{path.name}:1: bad header {header!r}, expected {expected_header!r}"
            )
            return
        for row in reader:
            if not row:
                continue
            line = reader.line_num
            if len(row) != len(expected_header):
                problems.append(
                    f"{path.name}:{line}: expected {len(expected_header)} fields, got {len(row)}"
                )
                continue
            yield line, row


def _parse_int(text, what, where, problems, minimum=None):
    try:
        value = int(text)
    except ValueError:
        problems.append(f"{where}: {what} {text!r} is not an integer")
        return None
    if minimum is not None and value < minimum:
        problems.append(f"{where}: {what} {value} is below {minimum}")
        return None
    return value


def ingest_corpus(
    papers_file,
    authors_file,
    authorship_file,
    references_file,
    affiliations_file=None,
) -> Corpus:
    """Build a validated corpus from the five CSV tables.

    Any malformed row, duplicate primary id or dangling foreign id is
    fatal: an IngestError carries every problem found (with file and
    line number) and nothing partial is returned.  The affiliations file
    is optional and its absence means an empty affiliation table.  Input
    row order never affects the result: authors sort by the explicit
    position column, reference lists by key.
    """
    problems: list[str] = []

    affiliations: dict[int, AffiliationRecord] = {}
    if affiliations_file is not None:
        name = Path(affiliations_file).name
        for line, row in _read_rows(affiliations_file, AFFILIATIONS_HEADER, problems):
            where = f"{name}:{line}"
            fid = _parse_int(row[0], "affiliation_id", where, problems)
            if fid is None:
                continue
            if fid in affiliations:
                problems.append(f"{where}: duplicate affiliation id {fid}")
                continue
            affiliations[fid] = AffiliationRecord(fid, row[1], row[2] or None)

    authors: dict[int, AuthorRecord] = {}
    name = Path(authors_file).name
    for line, row in _read_rows(authors_file, AUTHORS_HEADER, problems):
        where = f"{name}:{line}"
        aid = _parse_int(row[0], "author_id", where, problems)
        if aid is None:
            continue
        if aid in authors:
            problems.append(f"{where}: duplicate author id {aid}")
            continue
        fids = set()
        ok = True
        for part in filter(None, row[2].split(";")):
            fid = _parse_int(part, "affiliation id", where, problems)
            if fid is None:
                ok = False
                continue
            if fid not in affiliations:
                problems.append(f"{where}: unknown affiliation id {fid}")
                ok = False
                continue
            fids.add(fid)
        if ok:
            authors[aid] = AuthorRecord(aid, row[1], frozenset(fids))

    paper_rows: dict[str, tuple[str, int, int, int | None, frozenset[str]]] = {}
    name = Path(papers_file).name
    for line, row in _read_rows(papers_file, PAPERS_HEADER, problems):
        where = f"{name}:{line}"
        pid = row[0]
        try:
            vol, iss, _ = parse_paper_id(pid)
        except ValueError as exc:
            problems.append(f"{where}: {exc}")
            continue
        if pid in paper_rows:
            problems.append(f"{where}: duplicate paper id {pid}")
            continue
        volume = _parse_int(row[2], "volume", where, problems, minimum=1)
        issue = _parse_int(row[3], "issue", where, problems, minimum=1)
        if volume is None or issue is None:
            continue
        if (vol, iss) != (volume, issue):
            problems.append(f"{where}: paper id {pid} disagrees with volume/issue columns")
            continue
        year = None
        if row[4]:
            year = _parse_int(row[4], "year", where, problems)
            if year is None:
                continue
        codes = set()
        ok = True
        for code in filter(None, row[5].split(";")):
            if not is_valid_pacs(code):
                problems.append(f"{where}: PACS code {code!r} is not NN.NN.xx")
                ok = False
                continue
            codes.add(code)
        if ok:
            paper_rows[pid] = (row[1], volume, issue, year, frozenset(codes))

    authorship: dict[str, dict[int, int]] = {}
    name = Path(authorship_file).name
    for line, row in _read_rows(authorship_file, AUTHORSHIP_HEADER, problems):
        where = f"{name}:{line}"
        pid = row[0]
        aid = _parse_int(row[1], "author_id", where, problems)
        pos = _parse_int(row[2], "position", where, problems, minimum=1)
        if aid is None or pos is None:
            continue
        if pid not in paper_rows:
            problems.append(f"{where}: unknown paper id {pid}")
            continue
        if aid not in authors:
            problems.append(f"{where}: unknown author id {aid}")
            continue
        slots = authorship.setdefault(pid, {})
        if pos in slots:
            problems.append(f"{where}: duplicate author position {pos} for paper {pid}")
            continue
        if aid in slots.values():
            problems.append(f"{where}: author {aid} listed twice for paper {pid}")
            continue
        slots[pos] = aid

    references: dict[str, dict[str, ReferenceKey]] = {}
    name = Path(references_file).name
    for line, row in _read_rows(references_file, REFERENCES_HEADER, problems):
        where = f"{name}:{line}"
        pid = row[0]
        if pid not in paper_rows:
            problems.append(f"{where}: unknown citing paper id {pid}")
            continue
        key = normalize_ref_key(row[1])
        if not key:
            problems.append(f"{where}: empty reference key")
            continue
        internal = row[2] or None
        if internal is not None:
            if internal not in paper_rows:
                problems.append(f"{where}: unknown cited paper id {internal}")
                continue
            if internal == pid:
                problems.append(f"{where}: paper {pid} cites itself")
                continue
        refs = references.setdefault(pid, {})
        if key in refs:
            problems.append(f"{where}: duplicate reference key {key!r} for paper {pid}")
            continue
        refs[key] = ReferenceKey(key, internal)

    if problems:
        raise IngestError(problems)

    papers = []
    for pid, (title, volume, issue, year, codes) in paper_rows.items():
        slots = authorship.get(pid, {})
        author_ids = tuple(slots[pos] for pos in sorted(slots))
        refs = references.get(pid, {})
        papers.append(
            PaperRecord(
                paper_id=pid,
                title=title,
                volume=volume,
                issue=issue,
                year=year,
                author_ids=author_ids,
                pacs_codes=codes,
                reference_keys=tuple(refs[k] for k in sorted(refs)),
            )
        )

    corpus = Corpus(papers, authors.values(), affiliations.values())
    report = validate_corpus(corpus)
    if not report.ok:
        raise IngestError([f"{v.kind} [{v.subject}]: {v.message}" for v in report.violations])
    return corpus


# -- time slicing -------------------------------------------------------------

def snapshot(corpus: Corpus, as_of: TimeIndex) -> Corpus:
    """The corpus as of (volume, issue): papers up to that index, the
    authors and affiliations they reach, and their reference lists.

    A citation whose in-journal target falls outside the snapshot keeps
    its key but loses the internal id, exactly as it would have been
    ingested before the target existed.  The result is itself valid.
    """
    kept = {pid for pid, p in corpus.papers.items() if p.time_index <= as_of}

    papers = []
    author_ids: set[int] = set()
    for pid in sorted(kept):
        p = corpus.papers[pid]
        author_ids.update(p.author_ids)
        refs = tuple(
            ref if ref.internal_paper_id in kept else ReferenceKey(ref.key, None)
            for ref in p.reference_keys
        )
        papers.append(
            PaperRecord(
                paper_id=p.paper_id,
                title=p.title,
                volume=p.volume,
                issue=p.issue,
                year=p.year,
                author_ids=p.author_ids,
                pacs_codes=p.pacs_codes,
                reference_keys=refs,
            )
        )

    authors = [corpus.authors[aid] for aid in sorted(author_ids)]
    affiliation_ids = sorted({fid for a in authors for fid in a.affiliation_ids})
    affiliations = [corpus.affiliations[fid] for fid in affiliation_ids]
    return Corpus(papers, authors, affiliations)


# -- persistence --------------------------------------------------------------

def _paper_to_dict(p: PaperRecord) -> dict:
    return {
        "paper_id": p.paper_id,
        "title": p.title,
        "volume": p.volume,
        "issue": p.issue,
        "year": p.year,
        "author_ids": list(p.author_ids),
        "pacs_codes": sorted(p.pacs_codes),
        "reference_keys": [
            {"key": r.key, "internal_paper_id": r.internal_paper_id}
            for r in p.reference_keys
        ],
    }


def persist_corpus(corpus: Corpus, path) -> None:
    """Write the corpus as a single self-describing text file."""
    payload = {
        "papers": [_paper_to_dict(corpus.papers[pid]) for pid in sorted(corpus.papers)],
        "authors": [
            {
                "author_id": a.author_id,
                "name": a.name,
                "affiliation_ids": sorted(a.affiliation_ids),
            }
            for a in (corpus.authors[aid] for aid in sorted(corpus.authors))
        ],
        "affiliations": [
            {
                "affiliation_id": f.affiliation_id,
                "name": f.name,
                "country": f.country,
            }
            for f in (corpus.affiliations[fid] for fid in sorted(corpus.affiliations))
        ],
    }
    text = FORMAT_HEADER + "\n" + json.dumps(payload, sort_keys=True, indent=1) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def load_corpus(path) -> Corpus:
    """Read a file written by persist_corpus; wrong version or shape fails."""
    text = Path(path).read_text(encoding="utf-8")
    header, _, body = text.partition("\n")
    if header != FORMAT_HEADER:
        raise CorpusFormatError(
            f"expected format header {FORMAT_HEADER!r}, found {header!r}"
        )
    try:
        payload = json.loads(body)
        papers = [
            PaperRecord(
                paper_id=d["paper_id"],
                title=d["title"],
                volume=d["volume"],
                issue=d["issue"],
                year=d["year"],
                author_ids=tuple(d["author_ids"]),
                pacs_codes=frozenset(d["pacs_codes"]),
                reference_keys=tuple(
                    ReferenceKey(r["key"], r["internal_paper_id"])
                    for r in d["reference_keys"]
                ),
            )
            for d in payload["papers"]
        ]
        authors = [
            AuthorRecord(d["author_id"], d["name"], frozenset(d["affiliation_ids"]))
            for d in payload["authors"]
        ]
        affiliations = [
            AffiliationRecord(d["affiliation_id"], d["name"], d["country"])
            for d in payload["affiliations"]
        ]
        corpus = Corpus(papers, authors, affiliations)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise CorpusFormatError(f"corrupt corpus file: {exc}") from exc
    report = validate_corpus(corpus)
    if not report.ok:
        first = report.violations[0]
        raise CorpusFormatError(
            f"corpus file fails validation: {first.kind} [{first.subject}]: {first.message}"
        )
    return corpus
