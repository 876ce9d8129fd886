"""Polytope input formats: plain text, JSON and GRDB-style matrices.

plain
    one polytope per line, ``(x1,y1);(x2,y2);...``, optionally prefixed
    by ``id:``. Blank lines and ``#`` comments are skipped.
json
    an array of ``{"id": ..., "vertices": [[...], ...], "tags": {...}}``.
grdb-matrix
    repeated blocks of ``d n`` followed by d rows of n integers, one row
    per coordinate (columns are vertices). ``transpose=True`` reads n rows
    of d integers instead. A ``# id: name`` comment names the next block.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field

FORMATS = ("plain", "json", "grdb-matrix")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class PolytopeRecord:
    id: str
    vertices: list[tuple[int, ...]]
    tags: dict[str, str] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0


def vertices_text(vertices) -> str:
    return ";".join("(" + ",".join(str(x) for x in v) + ")" for v in vertices)


def content_id(vertices) -> str:
    return hashlib.sha256(vertices_text(vertices).encode()).hexdigest()[:12]


def make_record(vertices, id: str | None = None, **tags) -> PolytopeRecord:
    verts = [tuple(int(x) for x in v) for v in vertices]
    return PolytopeRecord(id or content_id(verts), verts, {k: str(v) for k, v in tags.items()})


_VEC = re.compile(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)")
_PLAIN_LINE = re.compile(r"^\s*(?:(?P<id>[^:()]+?)\s*:)?\s*(?P<body>\(.*)$")


def _parse_vertices(body: str, lineno: int) -> list[tuple[int, ...]]:
    parts = [s.strip() for s in body.split(";") if s.strip()]
    if not parts:
        raise ParseError("no vertices", lineno)
    verts = []
    for part in parts:
        m = _VEC.fullmatch(part)
        if not m:
            raise ParseError(f"malformed vertex {part!r}", lineno)
        verts.append(tuple(int(x) for x in m.group(1).split(",")))
    if len({len(v) for v in verts}) != 1:
        raise ParseError("vertices of mixed dimension", lineno)
    return verts


def parse_plain(text: str) -> list[PolytopeRecord]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _PLAIN_LINE.match(line)
        if not m:
            raise ParseError("expected '(x,y,...);(x,y,...);...'", lineno)
        verts = _parse_vertices(m.group("body"), lineno)
        out.append(make_record(verts, m.group("id")))
    return out


def parse_json(text: str) -> list[PolytopeRecord]:
    if not text.strip():
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno) from e
    if not isinstance(data, list):
        raise ParseError("expected a JSON array of polytopes", 1)
    out = []
    for i, item in enumerate(data):
        try:
            verts = [tuple(int(x) for x in v) for v in item["vertices"]]
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"entry {i}: bad vertices ({e})") from e
        if not verts or len({len(v) for v in verts}) != 1:
            raise ParseError(f"entry {i}: empty or mixed-dimension vertex list")
        out.append(make_record(verts, item.get("id"), **item.get("tags", {})))
    return out


def _tokens(text: str):
    """Integer tokens with their line numbers; ``# id:`` comments as markers."""
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped.startswith("#"):
            m = re.match(r"#\s*id\s*:\s*(\S+)", stripped)
            if m:
                yield ("id", m.group(1), lineno)
            continue
        for tok in stripped.split():
            try:
                yield ("int", int(tok), lineno)
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", lineno) from None


def parse_grdb_matrix(text: str, transpose: bool = False) -> list[PolytopeRecord]:
    toks = list(_tokens(text))
    out = []
    pos = 0
    pending_id = None

    def take():
        nonlocal pos, pending_id
        while pos < len(toks) and toks[pos][0] == "id":
            pending_id = toks[pos][1]
            pos += 1
        if pos >= len(toks):
            return None
        kind, val, lineno = toks[pos]
        pos += 1
        return val, lineno

    block = 0
    while True:
        head = take()
        if head is None:
            break
        d, lineno = head
        nxt = take()
        if nxt is None:
            raise ParseError("missing vertex count", lineno)
        n, _ = nxt
        if d < 1 or n < 1:
            raise ParseError(f"bad header {d} {n}", lineno)
        vals = []
        for _ in range(d * n):
            t = take()
            if t is None:
                raise ParseError(f"block truncated: expected {d * n} entries", lineno)
            vals.append(t[0])
        if transpose:
            verts = [tuple(vals[j * d:(j + 1) * d]) for j in range(n)]
        else:
            verts = [tuple(vals[i * n + j] for i in range(d)) for j in range(n)]
        block += 1
        out.append(make_record(verts, pending_id, source="grdb", grdb_index=block))
        pending_id = None
    return out


def parse(text: str, fmt: str = "plain", transpose: bool = False) -> list[PolytopeRecord]:
    if fmt == "plain":
        return parse_plain(text)
    if fmt == "json":
        return parse_json(text)
    if fmt == "grdb-matrix":
        return parse_grdb_matrix(text, transpose)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def serialize(records, fmt: str = "plain", transpose: bool = False) -> str:
    if fmt == "plain":
        return "".join(f"{r.id}: {vertices_text(r.vertices)}\n" for r in records)
    if fmt == "json":
        data = []
        for r in records:
            item = {"id": r.id, "vertices": [list(v) for v in r.vertices]}
            if r.tags:
                item["tags"] = r.tags
            data.append(item)
        return json.dumps(data, indent=1) + "\n"
    if fmt == "grdb-matrix":
        lines = []
        for r in records:
            d, n = r.dimension, len(r.vertices)
            lines.append(f"# id: {r.id}")
            lines.append(f"{d} {n}")
            if transpose:
                lines.extend(" ".join(str(x) for x in v) for v in r.vertices)
            else:
                lines.extend(" ".join(str(v[i]) for v in r.vertices) for i in range(d))
        return "\n".join(lines) + ("\n" if lines else "")
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
