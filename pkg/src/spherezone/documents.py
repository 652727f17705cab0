"""JSON line-set documents with string-encoded exact numbers.

Rational coefficients serialize as "p/q" strings; quadratic values as
{"a": "p/q", "b": "r/s"} objects denoting a + b*sqrt(5).  Parsing validates
general position and reports located errors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DocumentError
from .geometry import GreatCircleLine, LineSet, check_general_position
from .scalars import RING_QSQRT5, RING_RATIONAL, ExactScalar


@dataclass
class ArrangementDocument:
    ring: str
    lines: list                      # list of GreatCircleLine
    name: str = ""
    seed: int | None = None
    notes: str = ""

    def line_set(self):
        return LineSet.of(self.lines)


def document_from_line_set(line_set, name="", seed=None, notes=""):
    return ArrangementDocument(line_set.ring, list(line_set.lines), name,
                               seed, notes)


def parse_document(source, check=True):
    """Parse a document from JSON text or an already-decoded dict."""
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
    else:
        data = source
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    ring = data.get("ring", RING_RATIONAL)
    if ring not in (RING_RATIONAL, RING_QSQRT5):
        raise DocumentError(f"unknown ring {ring!r}")
    raw_lines = data.get("lines")
    if not isinstance(raw_lines, list) or not raw_lines:
        raise DocumentError("document needs a nonempty 'lines' list")
    lines = []
    for idx, raw in enumerate(raw_lines):
        if not (isinstance(raw, list) and len(raw) == 3):
            raise DocumentError(f"line {idx}: expected a coefficient triple",
                                line_index=idx)
        try:
            triple = tuple(ExactScalar.decode(x) for x in raw)
        except (ValueError, KeyError, TypeError) as exc:
            raise DocumentError(f"line {idx}: {exc}", line_index=idx) from exc
        if ring == RING_RATIONAL and any(not s.is_rational() for s in triple):
            raise DocumentError(
                f"line {idx}: quadratic coefficient in a rational document",
                line_index=idx,
            )
        try:
            lines.append(GreatCircleLine.of(*triple))
        except ValueError as exc:
            raise DocumentError(f"line {idx}: {exc}", line_index=idx) from exc
    line_set = LineSet.of(lines)
    if check:
        report = check_general_position(line_set)
        if not report.ok:
            raise DocumentError(f"degenerate line set: {report.describe()}")
    return ArrangementDocument(
        line_set.ring,
        list(line_set.lines),
        name=data.get("name", ""),
        seed=data.get("seed"),
        notes=data.get("notes", ""),
    )


def document_to_dict(doc):
    out = {"ring": doc.ring, "lines": []}
    for line in doc.lines:
        triple = line.exact_coeffs()
        out["lines"].append([s.encode(doc.ring) for s in triple])
    if doc.name:
        out["name"] = doc.name
    if doc.seed is not None:
        out["seed"] = doc.seed
    if doc.notes:
        out["notes"] = doc.notes
    return out


def serialize_document(doc):
    """Canonical JSON text; stable across runs for identical line sets."""
    return json.dumps(document_to_dict(doc), indent=2, sort_keys=True) + "\n"
