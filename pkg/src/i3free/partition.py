"""Two-tournament partitions.

Two routes to a partition of the vertices into two spanning tournaments:

* :func:`bipartition` two-colours the non-adjacency graph and works for
  every bitournament;
* :func:`constructive_partition` runs the anchored construction that the
  counting argument relies on for inputs outside classes A, B and C with
  no short odd cycle (length 5, 7 or 9) in the non-adjacency graph.  It
  returns the full witness of the construction and checks every claimed
  property, raising :class:`~i3free.errors.ConstructionDefect` with the
  witness attached if any check fails.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import (
    _a_witness_rows,
    _b_witness_rows,
    _c_witness_rows,
    has_pinwheel,
    log_floor,
)
from .core import (
    Digraph,
    VertexSet,
    _two_color_rows,
    is_I3_free,
    is_tournament,
    iter_bits,
)
from .errors import (
    ConstructionDefect,
    InputError,
    NoNonArc,
    PreconditionViolated,
)


def bipartition(d: Digraph) -> Optional[tuple]:
    """Split into two spanning tournaments via non-adjacency two-colouring.

    Returns (part1, part2) as VertexSets, or None when the non-adjacency
    graph is not bipartite.  Deterministic: components are processed in
    ascending smallest-vertex order and each component's smallest vertex
    goes to part 1.  A tournament yields ({0..n-1}, {}).
    """
    res = _two_color_rows(d.n, d.delta)
    if res is None:
        return None
    c0, c1 = res
    return VertexSet.from_mask(d.n, c0), VertexSet.from_mask(d.n, c1)


@dataclass(frozen=True)
class PartitionWitness:
    """Everything the anchored construction produced, for audit.

    ``x``, ``y`` are the anchor non-arc; ``q_x``/``q_y`` the chosen probe
    subsets; ``r_x``/``r_y`` their outer non-neighbourhoods; ``u_x``/``u_y``
    the second non-neighbourhoods of x and y; ``w`` the remainder, split
    into ``w_x``/``w_y`` by probe overlap; ``part1``/``part2`` the final
    sides.
    """

    x: int
    y: int
    q_x: VertexSet
    q_y: VertexSet
    r_x: VertexSet
    r_y: VertexSet
    delta_x: VertexSet
    delta_y: VertexSet
    u_x: VertexSet
    u_y: VertexSet
    w: VertexSet
    w_x: VertexSet
    w_y: VertexSet
    part1: VertexSet
    part2: VertexSet

    def parts(self) -> tuple:
        return self.part1, self.part2

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "Qx": list(self.q_x),
            "Qy": list(self.q_y),
            "delta_x": list(self.delta_x),
            "delta_y": list(self.delta_y),
            "Ux": list(self.u_x),
            "Uy": list(self.u_y),
            "W": list(self.w),
            "Wx": list(self.w_x),
            "Wy": list(self.w_y),
            "part1": list(self.part1),
            "part2": list(self.part2),
        }


_SUBSET_RULES = ("least", "greatest")


def _choose_subset(mask: int, k: int, rule: str) -> int:
    """Size-k submask of ``mask`` per the tie-break rule.

    "least" takes the k lowest set bits (the numerically least size-k
    submask); "greatest" takes the k highest.
    """
    if rule == "least":
        out = 0
        for v in iter_bits(mask):
            out |= 1 << v
            k -= 1
            if k == 0:
                return out
        return out
    out = 0
    for v in reversed(list(iter_bits(mask))):
        out |= 1 << v
        k -= 1
        if k == 0:
            return out
    return out


def constructive_partition(d: Digraph, subset_rule: str = "least") -> PartitionWitness:
    """Anchored two-tournament construction with full self-checking.

    Anchors at the lexicographically least non-adjacent pair (x, y), probes
    with the ``subset_rule``-chosen size-log_floor(n) subset Q_v of each
    non-neighbourhood, and assembles

        part1 = W_x | U_x | delta(y),  part2 = W_y | U_y | delta(x)

    where U_v is the second non-neighbourhood of v, W the rest, and W is
    split by whether a vertex's probe overlap meets x's or y's.

    Raises NoNonArc on a tournament, PreconditionViolated when the input
    has an independent triple, lies in class A, B or C, or has a pinwheel
    of length 5, 7 or 9, and ConstructionDefect (witness attached) if any
    claimed property of the output fails.
    """
    if subset_rule not in _SUBSET_RULES:
        raise InputError(f"unknown subset rule {subset_rule!r}")
    n, rows = d.n, d.delta
    if n < 1 or all(r == 0 for r in rows):
        raise NoNonArc("every pair carries an arc; use bipartition instead")

    failed = []
    if not is_I3_free(d):
        failed.append("i3_free")
    else:
        if _a_witness_rows(n, rows) is not None:
            failed.append("outside_A")
        elif _b_witness_rows(n, rows) is not None:
            failed.append("outside_B")
        elif _c_witness_rows(n, rows) is not None:
            failed.append("outside_C")
        for k in (5, 7, 9):
            if has_pinwheel(d, k):
                failed.append(f"no_pinwheel_{k}")
    if failed:
        raise PreconditionViolated(failed)

    k = log_floor(n)
    full = (1 << n) - 1

    # Anchor: lexicographically least non-adjacent pair.  The least vertex
    # with a non-empty non-neighbourhood has its least non-neighbour above
    # it, by symmetry and minimality.
    x = next(v for v in range(n) if rows[v])
    y = (rows[x] & -rows[x]).bit_length() - 1

    def delta_of(mask: int) -> int:
        acc = 0
        for v in iter_bits(mask):
            acc |= rows[v]
        return acc & ~mask

    # Probe subset and outer non-neighbourhood for every vertex.  Outside
    # class A every vertex has |delta(v)| > k, so the choice is total.
    q = [_choose_subset(rows[v], k, subset_rule) for v in range(n)]
    r = [delta_of(q[v]) for v in range(n)]

    dx, dy = rows[x], rows[y]
    ux, uy = delta_of(dx), delta_of(dy)
    w = full & ~(dx | ux | dy | uy)
    # Both W-sides come from their own overlap test; disjointness and cover
    # of W are claims to verify, not assumptions.
    wx = wy = 0
    for v in iter_bits(w):
        if r[v] & r[x]:
            wx |= 1 << v
        if r[v] & r[y]:
            wy |= 1 << v

    part1 = wx | ux | dy
    part2 = wy | uy | dx

    vs = lambda mask: VertexSet.from_mask(n, mask)
    witness = PartitionWitness(
        x=x,
        y=y,
        q_x=vs(q[x]),
        q_y=vs(q[y]),
        r_x=vs(r[x]),
        r_y=vs(r[y]),
        delta_x=vs(dx),
        delta_y=vs(dy),
        u_x=vs(ux),
        u_y=vs(uy),
        w=vs(w),
        w_x=vs(wx),
        w_y=vs(wy),
        part1=vs(part1),
        part2=vs(part2),
    )

    defects = []
    if dx & dy:
        defects.append("delta_overlap")
    if ux & uy:
        defects.append("u_overlap")
    if wx & wy:
        defects.append("w_overlap")
    if (wx | wy) != w:
        defects.append("w_cover")
    if part1 & part2:
        defects.append("parts_disjoint")
    if (part1 | part2) != full:
        defects.append("parts_cover")
    if not is_tournament(d, vs(part1)):
        defects.append("part1_tournament")
    if not is_tournament(d, vs(part2)):
        defects.append("part2_tournament")
    if defects:
        raise ConstructionDefect(defects, witness)
    return witness
