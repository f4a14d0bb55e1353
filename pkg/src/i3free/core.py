"""Digraph representation and basic structural predicates.

Digraphs here are irreflexive and antisymmetric: no loops, and never both
(u, v) and (v, u).  Adjacency is stored as per-vertex bit rows so that
neighbourhood operations reduce to word-parallel integer arithmetic.

Two derived views drive everything else:

* ``delta(v)`` is the set of vertices non-adjacent to ``v`` (no arc in
  either direction);
* the non-adjacency graph has an (undirected) edge exactly on the arc-less
  pairs.

A digraph has no independent triple iff its non-adjacency graph is
triangle-free, and splits into two spanning tournaments iff that graph is
bipartite.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import CapExceeded, InvalidArc, RangeError

# Default upper bound on vertex count; keeps every bit row within one
# machine word so the compiled kernels and the Python paths agree.
VERTEX_CAP = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """Immutable set of vertices of an n-vertex structure, backed by a bitmask.

    Iteration is always in ascending vertex order.  Set algebra is only
    defined between sets over the same ground size ``n``.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] = ()) -> None:
        if n < 0:
            raise RangeError(f"ground size must be non-negative, got {n}")
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise RangeError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "VertexSet":
        s = object.__new__(cls)
        object.__setattr__(s, "n", n)
        object.__setattr__(s, "mask", mask)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"ground sizes differ: {self.n} != {other.n}")

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self.n, self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self.n, self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        full = (1 << self.n) - 1
        return VertexSet.from_mask(self.n, full & ~self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def members(self) -> tuple:
        return tuple(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, members={list(self)})"


class Digraph:
    """An irreflexive antisymmetric digraph on vertices 0..n-1.

    ``rows[u]`` is the bitmask of out-neighbours of ``u``; ``delta[u]`` is
    the bitmask of vertices with no arc to or from ``u`` (excluding ``u``).
    Instances are immutable and hashable; equality is by (n, rows).

    The constructor trusts its input.  Use :func:`build_digraph` to build
    from an arc list with validation.
    """

    __slots__ = ("n", "rows", "delta")

    def __init__(self, n: int, rows: Iterable[int]) -> None:
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        # Transpose via arc iteration: cheap for sparse and dense alike.
        und = list(rows)
        for u in range(n):
            for v in iter_bits(rows[u]):
                und[v] |= 1 << u
        full = (1 << n) - 1
        delta = tuple(full & ~(und[v] | (1 << v)) for v in range(n))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "delta", delta)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def has_arc(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise RangeError(f"vertex pair ({u}, {v}) out of range for n={self.n}")
        return (self.rows[u] >> v) & 1 == 1

    def adjacent(self, u: int, v: int) -> bool:
        """True iff there is an arc between u and v in either direction."""
        return self.has_arc(u, v) or self.has_arc(v, u)

    def arcs(self) -> list:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u])]

    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def with_pair(self, u: int, v: int, state: int) -> "Digraph":
        """Return a copy with the pair {u, v} set to ``state``.

        ``state``: 0 = no arc, 1 = arc u->v, 2 = arc v->u.  Internal helper
        for samplers; recomputes only the two affected delta rows.
        """
        n = self.n
        bu, bv = 1 << u, 1 << v
        rows = list(self.rows)
        rows[u] &= ~bv
        rows[v] &= ~bu
        if state == 1:
            rows[u] |= bv
        elif state == 2:
            rows[v] |= bu
        delta = list(self.delta)
        if state == 0:
            delta[u] |= bv
            delta[v] |= bu
        else:
            delta[u] &= ~bv
            delta[v] &= ~bu
        d = object.__new__(Digraph)
        object.__setattr__(d, "n", n)
        object.__setattr__(d, "rows", tuple(rows))
        object.__setattr__(d, "delta", tuple(delta))
        return d

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


class NonAdjacencyGraph:
    """Undirected graph whose edges are the arc-less pairs of a digraph.

    ``rows[v]`` is the (symmetric) neighbour bitmask of ``v``.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("NonAdjacencyGraph is immutable")

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise RangeError(f"vertex pair ({u}, {v}) out of range for n={self.n}")
        return (self.rows[u] >> v) & 1 == 1

    def edges(self) -> list:
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.rows[u])
            if u < v
        ]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise RangeError(f"vertex {v} out of range for n={self.n}")
        return self.rows[v].bit_count()

    def is_triangle_free(self) -> bool:
        rows = self.rows
        for u in range(self.n):
            # Only look at neighbours above u; a triangle has a least vertex.
            for v in iter_bits(rows[u] >> (u + 1)):
                if rows[u] & rows[v + u + 1]:
                    return False
        return True

    def two_coloring(self) -> Optional[tuple]:
        """Proper 2-colouring as a (side0, side1) pair of VertexSets, or None.

        Deterministic: components are processed in ascending order of their
        smallest vertex, and that smallest vertex always lands on side 0.
        """
        res = _two_color_rows(self.n, self.rows)
        if res is None:
            return None
        c0, c1 = res
        return VertexSet.from_mask(self.n, c0), VertexSet.from_mask(self.n, c1)

    def is_bipartite(self) -> bool:
        return _two_color_rows(self.n, self.rows) is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, NonAdjacencyGraph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"NonAdjacencyGraph(n={self.n}, edges={self.edges()})"


def _two_color_rows(n: int, rows) -> Optional[tuple]:
    """2-colour symmetric adjacency rows; (mask0, mask1) or None on odd cycle.

    Alternating-frontier BFS; smallest unseen vertex starts each component
    on side 0.
    """
    color = [0, 0]
    seen = 0
    for s in range(n):
        if (seen >> s) & 1:
            continue
        frontier = 1 << s
        side = 0
        seen |= frontier
        while frontier:
            color[side] |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                if rows[v] & color[side]:
                    return None
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
            side ^= 1
    return color[0], color[1]


def build_digraph(n: int, arcs: Iterable[tuple], cap: Optional[int] = None) -> Digraph:
    """Validate an arc list and build a :class:`Digraph`.

    Raises RangeError for negative ``n``, CapExceeded when ``n`` exceeds
    ``cap`` (default: the module-level VERTEX_CAP), and InvalidArc on an
    out-of-range endpoint, a loop, or an antisymmetry violation.  Repeating
    the same arc is permitted.
    """
    if cap is None:
        cap = VERTEX_CAP
    if n < 0:
        raise RangeError(f"vertex count must be non-negative, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds vertex cap {cap}")
    rows = [0] * n
    for pair in arcs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidArc("range", (u, v))
        if u == v:
            raise InvalidArc("loop", (u, v))
        if (rows[v] >> u) & 1:
            raise InvalidArc("antisymmetry", (u, v))
        rows[u] |= 1 << v
    return Digraph(n, rows)


def non_adjacency_graph(d: Digraph) -> NonAdjacencyGraph:
    """The undirected graph on the same vertices whose edges are the non-arcs."""
    return NonAdjacencyGraph(d.n, d.delta)


def delta_v(d: Digraph, v: int) -> VertexSet:
    """The set of vertices non-adjacent to ``v`` (v itself excluded)."""
    if not 0 <= v < d.n:
        raise RangeError(f"vertex {v} out of range for n={d.n}")
    return VertexSet.from_mask(d.n, d.delta[v])


def delta_set(d: Digraph, q) -> VertexSet:
    """Vertices outside ``q`` that are non-adjacent to some member of ``q``.

    ``q`` may be a VertexSet or any iterable of vertices.
    """
    if isinstance(q, VertexSet):
        if q.n != d.n:
            raise RangeError(f"vertex set over n={q.n} used with digraph on n={d.n}")
        qmask = q.mask
    else:
        qmask = VertexSet(d.n, q).mask
    acc = 0
    for v in iter_bits(qmask):
        acc |= d.delta[v]
    return VertexSet.from_mask(d.n, acc & ~qmask)


def is_I3_free(d: Digraph) -> bool:
    """True iff no three vertices are pairwise non-adjacent.

    Equivalent to triangle-freeness of the non-adjacency graph: for every
    non-adjacent pair, check for a common non-neighbour.
    """
    delta = d.delta
    for u in range(d.n):
        for v in iter_bits(delta[u] >> (u + 1)):
            if delta[u] & delta[v + u + 1]:
                return False
    return True


def is_tournament(d: Digraph, s) -> bool:
    """True iff every pair inside ``s`` carries an arc.

    ``s`` may be a VertexSet or an iterable of vertices.  The empty set and
    singletons are tournaments.
    """
    if isinstance(s, VertexSet):
        if s.n != d.n:
            raise RangeError(f"vertex set over n={s.n} used with digraph on n={d.n}")
        smask = s.mask
    else:
        smask = VertexSet(d.n, s).mask
    for v in iter_bits(smask):
        if d.delta[v] & smask:
            return False
    return True


def is_bitournament(d: Digraph) -> bool:
    """True iff the vertices split into two disjoint spanning tournaments.

    Implemented as bipartiteness of the non-adjacency graph.
    """
    return _two_color_rows(d.n, d.delta) is not None
