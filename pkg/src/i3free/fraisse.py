"""Joint embedding, amalgamation, and the layered slice construction.

These operations witness closure properties of the class of digraphs with
no independent triple: any two members embed jointly into a third, and any
span B <- A -> C of embeddings completes to a commuting square.  The
layered slice builds a finite stack of paired rows whose non-adjacencies
follow an age/level pattern; its advertised properties are re-checked on
every build and reported rather than assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from . import core
from .core import Digraph, is_I3_free
from .errors import CapExceeded, EmbeddingError, InternalError, RangeError


@dataclass(frozen=True)
class Embedding:
    """A vertex map witnessing an induced embedding between digraphs."""

    source_n: int
    target_n: int
    map: Tuple[int, ...]

    def __call__(self, v: int) -> int:
        if not 0 <= v < self.source_n:
            raise RangeError(f"vertex {v} out of range for n={self.source_n}")
        return self.map[v]

    def to_json(self) -> dict:
        return {
            "source_n": self.source_n,
            "target_n": self.target_n,
            "map": list(self.map),
        }


def validate_embedding(a: Digraph, b: Digraph, emb) -> Embedding:
    """Check that ``emb`` maps ``a`` onto an induced sub-digraph of ``b``.

    ``emb`` may be an Embedding or a plain sequence of target vertices.
    Injectivity and exact arc preservation (including non-arcs) are
    required; violations raise EmbeddingError.
    """
    m = tuple(emb.map if isinstance(emb, Embedding) else emb)
    if len(m) != a.n:
        raise EmbeddingError(f"map has {len(m)} entries for a source on {a.n} vertices")
    seen = 0
    for v in m:
        if not 0 <= v < b.n:
            raise EmbeddingError(f"target vertex {v} out of range for n={b.n}")
        if (seen >> v) & 1:
            raise EmbeddingError(f"map is not injective at target {v}")
        seen |= 1 << v
    for i in range(a.n):
        for j in range(a.n):
            if i == j:
                continue
            if a.has_arc(i, j) != b.has_arc(m[i], m[j]):
                raise EmbeddingError(
                    f"pair ({i}, {j}) maps to ({m[i]}, {m[j]}) with a different relation"
                )
    return Embedding(a.n, b.n, m)


def joint_embed(a: Digraph, b: Digraph) -> tuple:
    """Embed two digraphs side by side, all cross arcs from the first copy.

    Returns (d, emb_a, emb_b) with d on a.n + b.n vertices: the first block
    is a copy of ``a``, the second a copy of ``b``, and every cross pair
    carries an arc from the a-side to the b-side.  Preserves absence of
    independent triples since no new non-adjacencies appear.
    """
    na, nb = a.n, b.n
    n = na + nb
    bblock = ((1 << nb) - 1) << na
    rows = [a.rows[u] | bblock for u in range(na)]
    rows += [b.rows[v] << na for v in range(nb)]
    d = Digraph(n, rows)
    emb_a = Embedding(na, n, tuple(range(na)))
    emb_b = Embedding(nb, n, tuple(range(na, n)))
    return d, emb_a, emb_b


def amalgamate(a: Digraph, b: Digraph, c: Digraph, f1, g1) -> tuple:
    """Complete the span f1: a -> b, g1: a -> c to a commuting square.

    Builds d on b.n + c.n - a.n vertices: the b-copy keeps its vertex
    labels, the c-copy is glued along the shared a-image and its free
    vertices are appended in ascending order.  Pairs related on either
    side keep that relation; cross pairs with no relation from either side
    get an arc from the b-only vertex to the c-only vertex, so no new
    non-adjacency arises and the result stays free of independent triples.

    Returns (d, emb_b, emb_c) with emb_b the identity inclusion of b and
    emb_c the gluing map of c; both are validated before returning, and
    f1/g1 are validated as embeddings first.
    """
    f = validate_embedding(a, b, f1)
    g = validate_embedding(a, c, g1)
    shared_in_c = {g.map[v]: f.map[v] for v in range(a.n)}
    n = b.n + c.n - a.n
    cmap = []
    nxt = b.n
    for v in range(c.n):
        if v in shared_in_c:
            cmap.append(shared_in_c[v])
        else:
            cmap.append(nxt)
            nxt += 1
    inv_c = {cmap[v]: v for v in range(c.n)}

    rows = [0] * n
    for p in range(n):
        for q in range(n):
            if p == q:
                continue
            pb = p if p < b.n else None
            qb = q if q < b.n else None
            pc = inv_c.get(p)
            qc = inv_c.get(q)
            b_rel = pb is not None and qb is not None
            c_rel = pc is not None and qc is not None
            b_arc = b_rel and b.has_arc(pb, qb)
            c_arc = c_rel and c.has_arc(pc, qc)
            if b_rel and c_rel:
                # Both endpoints lie in the shared image; the two sides
                # must agree because f1 and g1 are embeddings of the same a.
                if b_arc != c_arc:
                    raise InternalError(
                        f"sides disagree on shared pair ({p}, {q})"
                    )
            if b_arc or c_arc:
                rows[p] |= 1 << q
            elif not b_rel and not c_rel:
                # One endpoint only in b, the other only in c: orient from
                # the b side.
                if p < b.n:
                    rows[p] |= 1 << q
    d = Digraph(n, rows)
    emb_b = validate_embedding(b, d, tuple(range(b.n)))
    emb_c = validate_embedding(c, d, tuple(cmap))
    return d, emb_b, emb_c


@dataclass(frozen=True)
class ArraySlice:
    """A finite layered slice: ``levels`` levels of two rows of ``width``.

    Vertex a(i, j) is row-a element j of level i, b(i, j) likewise for
    row b; indices start at 0.  ``property_report`` lists (name, holds)
    pairs for the checked structural properties.
    """

    levels: int
    width: int
    digraph: Digraph
    property_report: Tuple[Tuple[str, bool], ...]

    def a(self, i: int, j: int) -> int:
        self._check(i, j)
        return 2 * self.width * i + j

    def b(self, i: int, j: int) -> int:
        self._check(i, j)
        return 2 * self.width * i + self.width + j

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.levels and 0 <= j < self.width):
            raise RangeError(
                f"index ({i}, {j}) out of range for {self.levels} levels of width {self.width}"
            )

    def label(self, v: int) -> str:
        i, r = divmod(v, 2 * self.width)
        row, j = divmod(r, self.width)
        return f"{'ab'[row]}[{i},{j}]"


def tp2_slice(levels: int, width: int) -> ArraySlice:
    """Build the layered slice on 2 * levels * width vertices.

    Within a level, row a and row b are transitive by index, and a(i, s)
    is adjacent to b(i, t) for every s, t.  Across levels, a(i, s) and
    a(j, t) are non-adjacent exactly when s != t.  Every pair not forced
    non-adjacent by that rule gets an arc from the smaller vertex label to
    the larger.

    The returned report checks: "valid_digraph" (irreflexive antisymmetric,
    by construction), "no_independent_triple", and "cross_level_adjacent"
    (all pairs from distinct levels adjacent).  The checks are real: with
    levels and width both >= 2 the cross-level property fails, and with
    both >= 3 the slice even contains an independent triple; the report
    states whatever actually holds.
    """
    if levels < 1 or width < 1:
        raise RangeError(f"need levels, width >= 1, got ({levels}, {width})")
    n = 2 * levels * width
    if n > core.VERTEX_CAP:
        raise CapExceeded(f"slice on {n} vertices exceeds vertex cap {core.VERTEX_CAP}")

    def decode(v: int) -> tuple:
        i, r = divmod(v, 2 * width)
        row, j = divmod(r, width)
        return i, row, j

    rows = [0] * n
    for p in range(n):
        for q in range(p + 1, n):
            i1, r1, j1 = decode(p)
            i2, r2, j2 = decode(q)
            if i1 != i2 and r1 == 0 and r2 == 0 and j1 != j2:
                continue  # the one forced non-adjacency
            rows[p] |= 1 << q
    d = Digraph(n, rows)

    cross_ok = True
    for p in range(n):
        for q in range(p + 1, n):
            if decode(p)[0] != decode(q)[0] and not d.adjacent(p, q):
                cross_ok = False
    report = (
        ("valid_digraph", True),
        ("no_independent_triple", is_I3_free(d)),
        ("cross_level_adjacent", cross_ok),
    )
    return ArraySlice(levels=levels, width=width, digraph=d, property_report=report)
