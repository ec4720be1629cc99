"""JSON interchange format for drawings.

A document looks like::

    {"format": "emptyply-drawing", "version": 1,
     "vertices": [{"id": 0, "x": 0.0, "y": 0.0}, ...],
     "edges": [[0, 1], ...],
     "metadata": {...}}

Coordinates are written with ``repr`` so they round-trip exactly.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

from .drawing import Drawing, Graph
from .errors import DomainError

FORMAT = "emptyply-drawing"
VERSION = 1


class DocumentError(DomainError):
    """Malformed drawing document; ``position`` locates the first problem."""

    def __init__(self, message: str, position: str):
        self.position = position
        super().__init__(f"{position}: {message}")


def to_document(drawing: Drawing) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "vertices": [
            {"id": v, "x": float(x), "y": float(y)} for v, (x, y) in enumerate(drawing.positions)
        ],
        "edges": [[u, v] for u, v in drawing.edges],
        "metadata": dict(drawing.metadata),
    }


def _require(cond, message, position):
    if not cond:
        raise DocumentError(message, position)


def _number(value, position):
    ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    _require(ok and math.isfinite(value), "expected a finite number", position)
    return float(value)


def _integer(value, position):
    _require(isinstance(value, int) and not isinstance(value, bool), "expected an integer", position)
    return value


def from_document(doc) -> Drawing:
    """Build a drawing from a parsed document, checking its structure.

    Vertex ids may be any unique integers; vertices are renumbered in the
    order listed.  Non-dense ids are kept under ``metadata["source_ids"]``.
    """
    _require(isinstance(doc, dict), "document must be an object", "$")
    _require(doc.get("format") == FORMAT, f"format must be {FORMAT!r}", "$.format")
    _require(doc.get("version") == VERSION, f"unsupported version {doc.get('version')!r}", "$.version")
    verts = doc.get("vertices")
    _require(isinstance(verts, list), "expected a list", "$.vertices")
    index: dict[int, int] = {}
    pos = []
    for k, rec in enumerate(verts):
        where = f"$.vertices[{k}]"
        _require(isinstance(rec, dict), "expected an object", where)
        for key in ("id", "x", "y"):
            _require(key in rec, f"missing {key!r}", where)
        vid = _integer(rec["id"], where + ".id")
        _require(vid not in index, f"duplicate id {vid}", where + ".id")
        index[vid] = k
        pos.append((_number(rec["x"], where + ".x"), _number(rec["y"], where + ".y")))
    edges_in = doc.get("edges", [])
    _require(isinstance(edges_in, list), "expected a list", "$.edges")
    edges = []
    for k, e in enumerate(edges_in):
        where = f"$.edges[{k}]"
        _require(isinstance(e, list) and len(e) == 2, "expected a pair of ids", where)
        ends = []
        for s, vid in enumerate(e):
            vid = _integer(vid, f"{where}[{s}]")
            _require(vid in index, f"unknown vertex id {vid}", f"{where}[{s}]")
            ends.append(index[vid])
        edges.append(tuple(ends))
    meta = doc.get("metadata", {})
    _require(isinstance(meta, dict), "expected an object", "$.metadata")
    meta = dict(meta)
    if list(index) != list(range(len(verts))):
        meta["source_ids"] = list(index)
    return Drawing(Graph(len(pos), edges), pos, meta)


def loads(text: str) -> Drawing:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return from_document(doc)


def dumps(drawing: Drawing) -> str:
    return json.dumps(to_document(drawing), indent=1)


def load(path) -> Drawing:
    return loads(Path(path).read_text())


def save(drawing: Drawing, path) -> None:
    Path(path).write_text(dumps(drawing) + "\n")
