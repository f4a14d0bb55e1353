"""Membership tests for the exceptional digraph classes and the classifier.

All tests operate on digraphs with no independent triple.  Writing n for
the vertex count, k = log_floor(n), and delta(v) for the non-neighbourhood
of v, the three classes are:

* class A: some vertex has |delta(v)| <= k;
* class B (outside A): some v has a k-subset Q of delta(v) whose outer
  non-neighbourhood delta(Q) has size at most (1/2 - 10^-6) n;
* class C (outside A and B): some non-adjacent pair x, y has k-subsets
  Q_x of delta(x) and Q_y of delta(y) with |delta(Q_x) & delta(Q_y)|
  at least n / 100.

The fractional thresholds are compared exactly over the integers, never in
floating point.  Witness searches are deterministic: vertices ascending,
pairs lexicographic, and candidate subsets in ascending numeric order of
their bitmasks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import Digraph, VertexSet, is_bitournament, is_I3_free, iter_bits
from .errors import DomainError, RangeError


def log_floor(n: int) -> int:
    """Floor of the base-2 logarithm of a positive integer."""
    if n < 1:
        raise RangeError(f"log_floor needs a positive integer, got {n}")
    return n.bit_length() - 1


@dataclass(frozen=True)
class BoundConstants:
    """Numeric constants used by the growth and bound reports.

    ``alpha`` is log2(3); ``beta`` and ``gamma`` are the coefficients of
    the class-B and class-C counting bounds; ``eta`` is the per-step shrink
    base 2^(1/3000).  ``eps_half`` and ``eps_cap`` echo the fractional
    slacks used (exactly, over the integers) by the class-B and class-C
    membership tests.
    """

    alpha: float = math.log2(3.0)
    beta: float = (1 + math.log2(3.0)) / 2 + (1 - math.log2(3.0)) / 10**6
    gamma: float = (
        1 + 4 / 10**6 + 3 / 100 + math.log2(3.0) * (1 - 2 / 10**6 - 2 / 100)
    )
    eta: float = 2 ** (1 / 3000)
    eps_half: float = 1e-6
    eps_cap: float = 1 / 100


CONSTANTS = BoundConstants()


def k_subsets_ascending(mask: int, k: int) -> Iterator[int]:
    """Yield the size-k submasks of ``mask`` in ascending numeric order.

    Runs Gosper's hack over the compressed index space and expands through
    the set bits of ``mask``; expansion is monotone, so the expanded masks
    come out ascending as well.
    """
    if k < 0:
        raise RangeError(f"subset size must be non-negative, got {k}")
    positions = list(iter_bits(mask))
    d = len(positions)
    if k > d:
        return
    if k == 0:
        yield 0
        return
    comb = (1 << k) - 1
    limit = 1 << d
    while comb < limit:
        sub = 0
        for i in iter_bits(comb):
            sub |= 1 << positions[i]
        yield sub
        lo = comb & -comb
        ripple = comb + lo
        comb = ripple | (((comb ^ ripple) >> 2) // lo)


def _delta_of_mask(rows, qmask: int) -> int:
    """Outer non-neighbourhood of the vertex mask ``qmask``.

    ``rows`` are symmetric non-adjacency rows; the result excludes the
    members of ``qmask`` themselves.
    """
    acc = 0
    for v in iter_bits(qmask):
        acc |= rows[v]
    return acc & ~qmask


def _a_witness_rows(n: int, rows) -> Optional[int]:
    """Least vertex whose non-neighbourhood has size <= log_floor(n)."""
    k = log_floor(n)
    for v in range(n):
        if rows[v].bit_count() <= k:
            return v
    return None


def _b_witness_rows(n: int, rows) -> Optional[tuple]:
    """Least (v, Q) with Q a k-subset of delta(v) and small outer delta(Q).

    The threshold |delta(Q)| <= (1/2 - 10^-6) n is evaluated exactly as
    10^6 |delta(Q)| <= 499999 n.  Returns (v, qmask) or None.
    """
    k = log_floor(n)
    for v in range(n):
        dv = rows[v]
        if dv.bit_count() < k:
            continue
        for q in k_subsets_ascending(dv, k):
            r = _delta_of_mask(rows, q)
            if 10**6 * r.bit_count() <= 499999 * n:
                return v, q
    return None


def _c_witness_rows(n: int, rows) -> Optional[tuple]:
    """Least (x, y, Q_x, Q_y) with a large overlap of outer deltas.

    Pairs (x, y) are scanned lexicographically over non-adjacent pairs with
    x < y; the threshold |delta(Q_x) & delta(Q_y)| >= n/100 is evaluated
    exactly as 100 |overlap| >= n.  Returns (x, y, qx, qy) masks or None.
    """
    k = log_floor(n)
    for x in range(n):
        dx = rows[x]
        if dx.bit_count() < k:
            continue
        for off in iter_bits(dx >> (x + 1)):
            y = x + 1 + off
            dy = rows[y]
            if dy.bit_count() < k:
                continue
            for qx in k_subsets_ascending(dx, k):
                rx = _delta_of_mask(rows, qx)
                if 100 * rx.bit_count() < n:
                    continue
                for qy in k_subsets_ascending(dy, k):
                    ry = _delta_of_mask(rows, qy)
                    if 100 * (rx & ry).bit_count() >= n:
                        return x, y, qx, qy
    return None


def _require_domain(d: Digraph) -> None:
    if d.n < 1:
        raise RangeError("classification needs at least one vertex")
    if not is_I3_free(d):
        raise DomainError("digraph contains an independent triple")


def a_witness(d: Digraph) -> Optional[int]:
    """Vertex witnessing class-A membership, or None."""
    _require_domain(d)
    return _a_witness_rows(d.n, d.delta)


def b_witness(d: Digraph) -> Optional[tuple]:
    """(v, Q) witnessing class-B membership, or None.

    Class B excludes class A by definition, so this returns None whenever
    a class-A witness exists.
    """
    _require_domain(d)
    if _a_witness_rows(d.n, d.delta) is not None:
        return None
    w = _b_witness_rows(d.n, d.delta)
    if w is None:
        return None
    v, q = w
    return v, VertexSet.from_mask(d.n, q)


def c_witness(d: Digraph) -> Optional[tuple]:
    """(x, y, Q_x, Q_y) witnessing class-C membership, or None.

    Class C excludes classes A and B by definition.
    """
    _require_domain(d)
    rows = d.delta
    if _a_witness_rows(d.n, rows) is not None:
        return None
    if _b_witness_rows(d.n, rows) is not None:
        return None
    w = _c_witness_rows(d.n, rows)
    if w is None:
        return None
    x, y, qx, qy = w
    return x, y, VertexSet.from_mask(d.n, qx), VertexSet.from_mask(d.n, qy)


def in_A(d: Digraph) -> bool:
    """True iff some vertex has non-neighbourhood of size <= log_floor(n)."""
    return a_witness(d) is not None


def in_B(d: Digraph) -> bool:
    """Class-B membership (excludes class A)."""
    return b_witness(d) is not None


def in_C(d: Digraph) -> bool:
    """Class-C membership (excludes classes A and B)."""
    return c_witness(d) is not None


def has_pinwheel(d: Digraph, k: int) -> bool:
    """True iff the non-adjacency graph contains a k-cycle.

    The cycle need not be induced.  Depth-first search anchored at the
    cycle's smallest vertex, extending through larger vertices only, so
    each cycle is inspected from one canonical starting point.
    """
    if k < 3:
        raise RangeError(f"cycle length must be at least 3, got {k}")
    n, rows = d.n, d.delta
    if k > n:
        return False

    def extend(s: int, u: int, used: int, depth: int) -> bool:
        if depth == k:
            return (rows[u] >> s) & 1 == 1
        cand = rows[u] & ~used & (-1 << (s + 1))
        for v in iter_bits(cand):
            if extend(s, v, used | (1 << v), depth + 1):
                return True
        return False

    for s in range(n):
        if extend(s, s, 1 << s, 1):
            return True
    return False


@dataclass(frozen=True)
class ClassFlags:
    """Outcome of classifying one digraph."""

    n: int
    in_t: bool
    in_a: bool
    in_b: bool
    in_c: bool
    covered: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "in_T": self.in_t,
            "in_A": self.in_a,
            "in_B": self.in_b,
            "in_C": self.in_c,
            "covered": self.covered,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def classify(d: Digraph, with_witness: bool = True) -> ClassFlags:
    """Classify a digraph with no independent triple.

    ``in_t`` reports the bitournament property; exactly one of the class
    flags A/B/C can hold (B excludes A, C excludes both).  ``covered`` is
    their disjunction with ``in_t``.  When ``with_witness`` is set, the
    witness of the first class that matched is attached.
    """
    _require_domain(d)
    n, rows = d.n, d.delta
    t = is_bitournament(d)
    a = b = c = False
    witness: Optional[dict] = None
    aw = _a_witness_rows(n, rows)
    if aw is not None:
        a = True
        if with_witness:
            witness = {"class": "A", "v": aw}
    else:
        bw = _b_witness_rows(n, rows)
        if bw is not None:
            b = True
            if with_witness:
                v, q = bw
                witness = {"class": "B", "v": v, "Q": list(iter_bits(q))}
        else:
            cw = _c_witness_rows(n, rows)
            if cw is not None:
                c = True
                if with_witness:
                    x, y, qx, qy = cw
                    witness = {
                        "class": "C",
                        "x": x,
                        "y": y,
                        "Qx": list(iter_bits(qx)),
                        "Qy": list(iter_bits(qy)),
                    }
    return ClassFlags(
        n=n,
        in_t=t,
        in_a=a,
        in_b=b,
        in_c=c,
        covered=t or a or b or c,
        witness=witness,
    )
