"""Reading and writing BPA documents and result tables.

A BPA document is a JSON object::

    {"frame": ["a", "b", "c"],
     "masses": {"a": 0.3, "a,b": 0.1, "a,b,c": 0.6},
     "name": "optional", "source": "optional"}

Focal sets are comma-separated frame labels; ``"{}"`` or ``""`` is the
empty set.
"""

from __future__ import annotations

import csv
import io as _io
import json
from collections.abc import Mapping
from dataclasses import dataclass, field

from .core import DEFAULT_TOLERANCE, Frame, MassFunction, members
from .errors import ValidationError
from .transforms import ProbabilityDistribution, SweepTable

FORMATS = ("csv", "json")
DEFAULT_DECIMALS = 4

__all__ = [
    "BpaDocument",
    "FORMATS",
    "ParseError",
    "dump_document",
    "emit_bpa",
    "emit_distribution",
    "emit_sweep",
    "focal_key",
    "load_document",
    "parse_bpa",
]


class ParseError(ValidationError):
    """Syntax or schema error in a document, with its position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class BpaDocument:
    frame: tuple[str, ...]
    entries: tuple[tuple[str, float], ...]
    metadata: Mapping[str, str] = field(default_factory=dict)

    def to_mass_function(
        self, *, strict: bool = False, tolerance: float = DEFAULT_TOLERANCE
    ) -> MassFunction:
        frame = Frame(self.frame)
        pairs = []
        seen: dict[int, str] = {}
        for key, mass in self.entries:
            try:
                mask = frame.mask(_split_focal(key))
            except ValidationError as exc:
                raise ValidationError(f"focal set {key!r}: {exc}") from None
            if mask in seen:
                raise ValidationError(f"focal set {key!r} duplicates {seen[mask]!r}")
            seen[mask] = key
            pairs.append((mask, mass))
        return MassFunction.from_masks(frame, pairs, strict=strict, tolerance=tolerance)


def _split_focal(key: str) -> list[str]:
    text = key.strip()
    if text in ("", "{}"):
        return []
    return [part.strip() for part in text.split(",")]


def focal_key(frame: Frame, mask: int) -> str:
    """Canonical text for a subset: labels in frame order, comma-joined."""
    if not mask:
        return "{}"
    return ",".join(frame.labels[i] for i in members(mask))


def _reject_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ParseError(f"duplicate key {key!r}")
        out[key] = value
    return out


def load_document(text: str) -> BpaDocument:
    try:
        raw = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(raw, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(raw) - {"frame", "masses", "name", "source"}
    if unknown:
        raise ParseError(f"unexpected field(s): {', '.join(sorted(unknown))}")

    labels = raw.get("frame")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError('"frame" must be a list of strings')
    for label in labels:
        if "," in label or label != label.strip() or label == "{}":
            raise ParseError(f"frame label {label!r} cannot be used in focal-set keys")

    masses = raw.get("masses")
    if not isinstance(masses, dict):
        raise ParseError('"masses" must be an object mapping focal sets to numbers')
    entries = []
    for key, value in masses.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError(f"mass for focal set {key!r} is not a number: {value!r}")
        entries.append((key, float(value)))

    metadata = {}
    for name in ("name", "source"):
        if name in raw:
            if not isinstance(raw[name], str):
                raise ParseError(f'"{name}" must be a string')
            metadata[name] = raw[name]
    return BpaDocument(tuple(labels), tuple(entries), metadata)


def parse_bpa(
    text: str, *, strict: bool = False, tolerance: float = DEFAULT_TOLERANCE
) -> MassFunction:
    """Parse a JSON BPA document into a validated :class:`MassFunction`."""
    return load_document(text).to_mass_function(strict=strict, tolerance=tolerance)


def dump_document(doc: BpaDocument) -> str:
    payload: dict = {"frame": list(doc.frame), "masses": dict(doc.entries)}
    payload.update(doc.metadata)
    return json.dumps(payload, indent=2) + "\n"


def emit_bpa(m: MassFunction, metadata: Mapping[str, str] | None = None) -> str:
    """Serialise a mass function at full precision (``repr`` floats).

    Focal sets are ordered by size, then by frame order of their members.
    """
    frame = m.frame
    order = sorted(m.focal, key=lambda fm: (fm[0].bit_count(), list(members(fm[0]))))
    entries = tuple((focal_key(frame, mask), mass) for mask, mass in order)
    return dump_document(BpaDocument(frame.labels, entries, dict(metadata or {})))


def _fmt_q(q: float) -> str:
    return str(int(q)) if float(q).is_integer() else repr(float(q))


def _fmt_prob(p: float, full_precision: bool, decimals: int) -> str:
    return repr(p) if full_precision else f"{p:.{decimals}f}"


def _json_prob(p: float, full_precision: bool, decimals: int) -> float:
    return p if full_precision else round(p, decimals)


def _json_q(q: float) -> int | float:
    return int(q) if float(q).is_integer() else q


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"unknown output format {fmt!r}; expected one of {FORMATS}")


def _csv_text(rows) -> str:
    buf = _io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def emit_distribution(
    p: ProbabilityDistribution,
    format: str = "csv",
    *,
    full_precision: bool = False,
    decimals: int = DEFAULT_DECIMALS,
) -> str:
    _check_format(format)
    if format == "csv":
        q = _fmt_q(p.q)
        rows = [("element", "probability", "q")]
        rows += [(label, _fmt_prob(v, full_precision, decimals), q) for label, v in p]
        return _csv_text(rows)
    payload = {
        "q": _json_q(p.q),
        "probabilities": {label: _json_prob(v, full_precision, decimals) for label, v in p},
    }
    return json.dumps(payload, indent=2) + "\n"


def emit_sweep(
    t: SweepTable,
    format: str = "csv",
    *,
    full_precision: bool = False,
    decimals: int = DEFAULT_DECIMALS,
) -> str:
    _check_format(format)
    labels = t.frame.labels
    if format == "csv":
        rows = [("q", *labels)]
        for q, row in zip(t.qs, t.rows):
            rows.append((_fmt_q(q), *(_fmt_prob(v, full_precision, decimals) for v in row.probs)))
        return _csv_text(rows)
    payload = {
        "frame": list(labels),
        "rows": [
            {
                "q": _json_q(q),
                "probabilities": {
                    label: _json_prob(v, full_precision, decimals) for label, v in row
                },
            }
            for q, row in zip(t.qs, t.rows)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"
