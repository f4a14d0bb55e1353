"""Pure-Python census kernels.

Reference implementation of the two enumeration loops; the compiled
extension in ``_kernels.pyx`` mirrors these semantics exactly and the test
suite holds the two to identical outputs.  Both kernels return the tuple
(F, T, A, B, C, uncovered) of counts for their slice of the search space.

Flag bytes cache the per-non-adjacency-graph classification:

    bit 0  triangle-free (the digraph has no independent triple)
    bit 1  bipartite (the digraph is a bitournament)
    bit 2  class A    bit 3  class B    bit 4  class C
    bit 5  triangle-free but in none of bitournament/A/B/C
    bit 6  always set, marks a computed table entry
"""
from __future__ import annotations

from .classify import _a_witness_rows, _b_witness_rows, _c_witness_rows
from .core import _two_color_rows, iter_bits

BACKEND = "python"


def _pairs_lex(n: int) -> list:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _graph_flags(n: int, rows, classes: bool, skip_triangle_check: bool = False) -> int:
    fl = 0x40
    if not skip_triangle_check:
        for u in range(n):
            for off in iter_bits(rows[u] >> (u + 1)):
                if rows[u] & rows[u + 1 + off]:
                    return fl
    fl |= 0x01
    if _two_color_rows(n, rows) is not None:
        fl |= 0x02
    if classes:
        if _a_witness_rows(n, rows) is not None:
            fl |= 0x04
        elif _b_witness_rows(n, rows) is not None:
            fl |= 0x08
        elif _c_witness_rows(n, rows) is not None:
            fl |= 0x10
        if not fl & 0x1E:
            fl |= 0x20
    return fl


def _tally(counts: list, fl: int, w: int) -> None:
    if fl & 0x01:
        counts[0] += w
        if fl & 0x02:
            counts[1] += w
        if fl & 0x04:
            counts[2] += w
        elif fl & 0x08:
            counts[3] += w
        elif fl & 0x10:
            counts[4] += w
        if fl & 0x20:
            counts[5] += w


def census_direct_chunk(n: int, start: int, stop: int) -> tuple:
    """Count over the base-3 digraph codes in [start, stop).

    Code digits follow the lexicographic pair order with pair (0, 1) as
    the most significant digit; digit values are 0 = no arc, 1 = forward,
    2 = backward.  Classification depends only on the non-edge set, so
    flag bytes are memoized per non-adjacency mask.
    """
    pairs = _pairs_lex(n)
    m = len(pairs)
    digits = [0] * m
    rem = start
    for j in range(m - 1, -1, -1):
        digits[j] = rem % 3
        rem //= 3
    mask = 0
    for j in range(m):
        if digits[j] == 0:
            mask |= 1 << j
    table = bytearray(1 << m)
    counts = [0] * 6
    for _ in range(stop - start):
        fl = table[mask]
        if fl == 0:
            rows = [0] * n
            for j in iter_bits(mask):
                u, v = pairs[j]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            fl = _graph_flags(n, rows, True)
            table[mask] = fl
        _tally(counts, fl, 1)
        j = m - 1
        while j >= 0:
            d = digits[j]
            if d == 0:
                digits[j] = 1
                mask ^= 1 << j
                break
            if d == 1:
                digits[j] = 2
                break
            digits[j] = 0
            mask |= 1 << j
            j -= 1
    return tuple(counts)


def census_graphs_chunk(n: int, k0: int, prefix_rows: tuple, classes: bool) -> tuple:
    """Weighted count over triangle-free graphs extending a fixed prefix.

    Graphs are built one vertex at a time; the new vertex's backward
    neighbourhood must be an independent set, which is exactly the
    triangle-free condition.  Each complete graph G contributes
    2^(C(n,2) - e(G)) — one digraph per orientation of the complement.
    ``prefix_rows`` fixes the induced graph on the first ``k0`` vertices.
    """
    m = n * (n - 1) // 2
    rows = list(prefix_rows) + [0] * (n - k0)
    e0 = sum(r.bit_count() for r in prefix_rows) // 2
    counts = [0] * 6

    def extend(k: int, e: int) -> None:
        if k == n:
            fl = _graph_flags(n, rows, classes, skip_triangle_check=True)
            _tally(counts, fl, 1 << (m - e))
            return
        choose(k, 0, (1 << k) - 1, e)

    def choose(k: int, s: int, cand: int, e: int) -> None:
        # e counts edges among the first k rows; s adds |s| more.
        rows[k] = s
        for v in iter_bits(s):
            rows[v] |= 1 << k
        extend(k + 1, e + s.bit_count())
        for v in iter_bits(s):
            rows[v] &= ~(1 << k)
        rows[k] = 0
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            choose(k, s | low, c & ~rows[v], e)

    extend(k0, e0)
    return tuple(counts)
