"""The dgf text format for digraphs.

Multi-line form: optional leading comment lines starting with '#', one
header line "n m", then exactly m arc lines "u v" (decimal, 0-indexed,
meaning arc u -> v).  Inline form for streams: "n;u>v,u>v,..." on a single
line.  Parsing validates the digraph invariants (vertex range, no loops,
antisymmetry) and reports violations as ParseError with a line number.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from .core import Digraph, build_digraph
from .errors import ParseError


@dataclass
class DgfDocument:
    """A parsed dgf document: header values, arcs, and leading comments."""

    n: int
    m: int
    arcs: List[Tuple[int, int]]
    comments: List[str] = field(default_factory=list)

    def to_digraph(self, cap=None) -> Digraph:
        return build_digraph(self.n, self.arcs, cap=cap)


def _check_arc(n: int, u: int, v: int, rows: list, line_no: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(line_no, f"arc ({u}, {v}) out of range for n={n}")
    if u == v:
        raise ParseError(line_no, f"loop at vertex {u}")
    if (rows[v] >> u) & 1:
        raise ParseError(line_no, f"arcs in both directions between {u} and {v}")
    rows[u] |= 1 << v


def _parse_inline(line: str, line_no: int, comments: list) -> DgfDocument:
    head, _, rest = line.partition(";")
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(line_no, f"bad inline header {head.strip()!r}") from None
    if n < 1:
        raise ParseError(line_no, f"vertex count must be positive, got {n}")
    arcs = []
    rows = [0] * n
    rest = rest.strip()
    if rest:
        for item in rest.split(","):
            u_s, sep, v_s = item.partition(">")
            if not sep:
                raise ParseError(line_no, f"bad inline arc {item.strip()!r}")
            try:
                u, v = int(u_s), int(v_s)
            except ValueError:
                raise ParseError(line_no, f"bad inline arc {item.strip()!r}") from None
            _check_arc(n, u, v, rows, line_no)
            arcs.append((u, v))
    return DgfDocument(n=n, m=len(arcs), arcs=arcs, comments=comments)


def parse_dgf(text: str) -> DgfDocument:
    """Parse either dgf form; raises ParseError with a 1-based line number."""
    lines = text.splitlines()
    comments = []
    i = 0
    while i < len(lines) and lines[i].lstrip().startswith("#"):
        comments.append(lines[i].lstrip()[1:].strip())
        i += 1
    if i >= len(lines):
        raise ParseError(len(lines) + 1, "missing header line")
    header = lines[i].strip()
    header_no = i + 1
    if ";" in header:
        doc = _parse_inline(header, header_no, comments)
        extra = [j for j in range(header_no, len(lines)) if lines[j].strip()]
        if extra:
            raise ParseError(extra[0] + 1, "unexpected content after inline document")
        return doc
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(header_no, f"header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(header_no, f"header must be 'n m', got {header!r}") from None
    if n < 1:
        raise ParseError(header_no, f"vertex count must be positive, got {n}")
    if m < 0:
        raise ParseError(header_no, f"arc count must be non-negative, got {m}")
    arcs = []
    rows = [0] * n
    j = header_no
    while len(arcs) < m:
        if j >= len(lines):
            raise ParseError(j + 1, f"expected {m} arcs, found {len(arcs)}")
        line = lines[j].strip()
        line_no = j + 1
        j += 1
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(line_no, f"arc line must be 'u v', got {line!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(line_no, f"arc line must be 'u v', got {line!r}") from None
        _check_arc(n, u, v, rows, line_no)
        arcs.append((u, v))
    for k in range(j, len(lines)):
        if lines[k].strip():
            raise ParseError(k + 1, f"unexpected content after {m} arcs")
    return DgfDocument(n=n, m=m, arcs=arcs, comments=comments)


def emit_dgf(d: Digraph) -> str:
    """Canonical multi-line form: no comments, arcs sorted lexicographically."""
    out = [f"{d.n} {d.arc_count()}"]
    out.extend(f"{u} {v}" for u, v in sorted(d.arcs()))
    return "\n".join(out) + "\n"


def emit_dgf_inline(d: Digraph) -> str:
    """Single-line form "n;u>v,...", arcs sorted lexicographically."""
    return f"{d.n};" + ",".join(f"{u}>{v}" for u, v in sorted(d.arcs()))
