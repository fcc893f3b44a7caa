"""File formats and the shipped corpus of certified realizations.

Coordinate files: UTF-8 text, one vertex per line as three whitespace
separated integers or rationals ``p/q``; ``#`` starts a comment; vertex
order defines the cycle.

Certificate files: a self-contained document with the knot name, vertex
list, parity, and either a single line ``u: <integers>`` (even edge
count) or ``U:`` followed by n rows of n integers (odd edge count).

The shipped corpus contains 22 integer-coordinate realizations: twenty
carry a published null-vector certificate, and two (11n_72 and 12n_553,
11 sticks each) are certified by edge count and bridge index alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .certificates import CertificateBundle, VerifiedBound, verify_bundle
from .enumeration import superbridge_number
from .geometry import PolygonalKnot
from .linalg import SuperbridgeError, format_rational, rational


class ParseError(SuperbridgeError):
    def __init__(self, path, line_no: int, message: str):
        self.path = str(path)
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {message}")


def _content_lines(path):
    text = Path(path).read_text(encoding="utf-8")
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def load_realization(path) -> PolygonalKnot:
    """Parse a coordinate file; the knot name is the file stem."""
    rows = []
    for line_no, line in _content_lines(path):
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(path, line_no, f"expected 3 coordinates, got {len(parts)}")
        try:
            rows.append(tuple(rational(tok) for tok in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(path, line_no, f"bad coordinate: {exc}") from exc
    if not rows:
        raise ParseError(path, 1, "no vertices found")
    return PolygonalKnot.from_coordinates(Path(path).stem, rows)


def save_realization(knot: PolygonalKnot, path) -> None:
    lines = [f"# {knot.name}: {knot.n}-vertex closed polygon"]
    for v in knot.vertices:
        lines.append(" ".join(format_rational(c) for c in v))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


@dataclass(frozen=True)
class CertificateDocument:
    """A knot together with its certificate, as stored in one file."""

    knot: PolygonalKnot
    bundle: CertificateBundle


def load_certificate_document(path) -> CertificateDocument:
    lines = list(_content_lines(path))
    pos = 0

    def expect_field(key: str) -> str:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(path, lines[-1][0] if lines else 1, f"missing '{key}:' field")
        line_no, line = lines[pos]
        if not line.startswith(key + ":"):
            raise ParseError(path, line_no, f"expected '{key}:', got {line!r}")
        pos += 1
        return line[len(key) + 1 :].strip()

    name = expect_field("knot")
    parity = expect_field("parity")
    if parity not in ("even", "odd"):
        raise ParseError(path, lines[pos - 1][0], f"parity must be even/odd, got {parity!r}")
    expect_field("vertices")
    rows = []
    while pos < len(lines):
        line_no, line = lines[pos]
        if line.startswith(("u:", "U:")):
            break
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(path, line_no, f"expected 3 coordinates, got {len(parts)}")
        rows.append(tuple(rational(tok) for tok in parts))
        pos += 1
    knot = PolygonalKnot.from_coordinates(name, rows)
    n = knot.n
    if pos >= len(lines):
        raise ParseError(path, lines[-1][0], "missing 'u:' or 'U:' section")
    line_no, line = lines[pos]
    if parity == "even":
        if not line.startswith("u:"):
            raise ParseError(path, line_no, "even parity requires a 'u:' line")
        entries = line[2:].split()
        if len(entries) != n:
            raise ParseError(path, line_no, f"u has {len(entries)} entries, expected {n}")
        try:
            vector = tuple(int(tok) for tok in entries)
        except ValueError as exc:
            raise ParseError(path, line_no, f"bad integer: {exc}") from exc
        return CertificateDocument(knot=knot, bundle=CertificateBundle(vector=vector))
    if not line.startswith("U:"):
        raise ParseError(path, line_no, "odd parity requires a 'U:' section")
    pos += 1
    matrix = []
    while pos < len(lines) and len(matrix) < n:
        line_no, line = lines[pos]
        parts = line.split()
        if len(parts) != n:
            raise ParseError(path, line_no, f"matrix row has {len(parts)} entries, expected {n}")
        try:
            matrix.append(tuple(int(tok) for tok in parts))
        except ValueError as exc:
            raise ParseError(path, line_no, f"bad integer: {exc}") from exc
        pos += 1
    if len(matrix) != n:
        raise ParseError(path, lines[-1][0], f"matrix has {len(matrix)} rows, expected {n}")
    return CertificateDocument(knot=knot, bundle=CertificateBundle(matrix=tuple(matrix)))


def load_certificate(path) -> CertificateBundle:
    """Certificate bundle from a certificate document file."""
    return load_certificate_document(path).bundle


def save_certificate_document(doc: CertificateDocument, path) -> None:
    knot = doc.knot
    lines = [f"knot: {knot.name}", f"parity: {'even' if knot.n % 2 == 0 else 'odd'}", "vertices:"]
    for v in knot.vertices:
        lines.append(" ".join(format_rational(c) for c in v))
    if doc.bundle.vector is not None:
        lines.append("u: " + " ".join(str(x) for x in doc.bundle.vector))
    else:
        lines.append("U:")
        for row in doc.bundle.matrix:
            lines.append(" ".join(str(x) for x in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


@dataclass(frozen=True)
class CorpusEntry:
    knot: PolygonalKnot
    certificate: Optional[CertificateBundle]
    claimed_sb: int
    source: str


@dataclass(frozen=True)
class EntryReport:
    """Outcome of checking one corpus entry against its claim."""

    name: str
    claimed_sb: int
    verified: bool
    method: str
    bound: Optional[int] = None
    exact_value: Optional[int] = None


def data_root():
    """Traversable root of the packaged data directory."""
    return resources.files("superbridge") / "data"


def _as_path(traversable) -> Path:
    # Packaged data ships as real files; resources.as_file is unnecessary.
    return Path(str(traversable))


def corpus_entries() -> tuple[CorpusEntry, ...]:
    """All shipped realizations, certificates attached where published."""
    root = data_root()
    manifest = json.loads((root / "corpus.json").read_text(encoding="utf-8"))
    out = []
    for item in manifest["entries"]:
        knot = load_realization(_as_path(root / item["realization"]))
        cert = None
        if item.get("certificate"):
            doc = load_certificate_document(_as_path(root / item["certificate"]))
            if doc.knot.vertices != knot.vertices:
                raise SuperbridgeError(f"{knot.name}: certificate vertices disagree")
            cert = doc.bundle
        out.append(
            CorpusEntry(
                knot=knot,
                certificate=cert,
                claimed_sb=item["claimed_sb"],
                source=item["source"],
            )
        )
    return tuple(out)


def corpus_entry(name: str) -> CorpusEntry:
    for entry in corpus_entries():
        if entry.knot.name == name:
            return entry
    raise SuperbridgeError(f"no corpus entry named {name!r}")


def verify_entry(entry: CorpusEntry) -> EntryReport:
    """Check an entry's claim: certificate bound, or exact enumeration.

    With a certificate, the certified bound must equal the claimed value
    and the enumerated superbridge number must reach it. Without one, the
    claim is checked purely by enumeration (for the two 11-stick entries
    the value equals the edge-count bound, so no certificate can exist).
    """
    result = superbridge_number(entry.knot)
    if entry.certificate is not None:
        vb: VerifiedBound = verify_bundle(entry.knot, entry.certificate)
        ok = vb.bound == entry.claimed_sb == result.value
        return EntryReport(
            name=entry.knot.name,
            claimed_sb=entry.claimed_sb,
            verified=ok,
            method="certificate-cross-check",
            bound=vb.bound,
            exact_value=result.value,
        )
    ok = result.value == entry.claimed_sb
    return EntryReport(
        name=entry.knot.name,
        claimed_sb=entry.claimed_sb,
        verified=ok,
        method="enumeration",
        exact_value=result.value,
    )
