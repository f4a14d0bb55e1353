"""Shared builders and fixtures.

The builders here are deliberately independent of the package's own
constructors where that matters: oracle tests re-derive structure from
raw pair data so a bug in Digraph plumbing cannot vouch for itself.
"""

from itertools import combinations

import pytest

from i3free import build_digraph
from i3free._backend import BACKEND
from i3free import _kernels_py

try:
    from i3free import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def tournament(n, direction="lt"):
    """Transitive tournament; 'lt' arcs low->high, 'gt' the reverse."""
    if direction == "lt":
        arcs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    else:
        arcs = [(v, u) for u in range(n) for v in range(u + 1, n)]
    return build_digraph(n, arcs)


def edgeless(n):
    return build_digraph(n, [])


def comp_bipartite(a, b, rng=None):
    """Orientation of the complement of K_{a,b}.

    Sides are {0..a-1} and {a..a+b-1}; cross pairs stay non-adjacent,
    within-side pairs get an arc (transitive by default, random with rng).
    """
    n = a + b
    arcs = []
    for side in (range(a), range(a, n)):
        for u, v in combinations(side, 2):
            if rng is not None and rng.integers(2):
                arcs.append((v, u))
            else:
                arcs.append((u, v))
    return build_digraph(n, arcs)


def comp_cycle(n, rng=None):
    """Orientation of the complement of the n-cycle 0-1-...-(n-1)-0."""
    arcs = []
    for u, v in combinations(range(n), 2):
        if (v - u) % n in (1, n - 1):
            continue
        if rng is not None and rng.integers(2):
            arcs.append((v, u))
        else:
            arcs.append((u, v))
    return build_digraph(n, arcs)


def from_code(n, code):
    """Digraph from a base-3 pair code, pairs in lexicographic order.

    Pair (0,1) is the most significant trit; trit 1 = arc u->v, 2 = v->u.
    Independent of the package's own code_of_digraph.
    """
    pairs = list(combinations(range(n), 2))
    trits = []
    c = code
    for _ in pairs:
        trits.append(c % 3)
        c //= 3
    trits.reverse()
    arcs = []
    for (u, v), t in zip(pairs, trits):
        if t == 1:
            arcs.append((u, v))
        elif t == 2:
            arcs.append((v, u))
    return build_digraph(n, arcs)


def all_digraphs(n):
    """Every labelled irreflexive antisymmetric digraph on n vertices."""
    m = n * (n - 1) // 2
    for code in range(3 ** m):
        yield from_code(n, code)


def brute_is_i3_free(d):
    """Triple scan straight from the definition."""
    for a, b, c in combinations(range(d.n), 3):
        if not (d.adjacent(a, b) or d.adjacent(a, c) or d.adjacent(b, c)):
            return False
    return True


def brute_triangle_free(edges, n):
    es = set(map(frozenset, edges))
    for a, b, c in combinations(range(n), 3):
        if {a, b} in es and {a, c} in es and {b, c} in es:
            return False
    return True


def brute_bipartite(edges, n):
    es = set(map(frozenset, edges))
    for mask in range(1 << n):
        side = {v for v in range(n) if mask >> v & 1}
        if all((u in side) != (v in side) for u, v in map(tuple, es)):
            return True
    return not es or n == 0


def non_edges(d):
    return [(u, v) for u, v in combinations(range(d.n), 2)
            if not d.adjacent(u, v)]


@pytest.fixture(params=["python"] + (["cython"] if _kernels_c else []))
def kernels(request):
    """Both kernel backends, when the compiled one is importable."""
    if request.param == "python":
        return _kernels_py
    return _kernels_c


@pytest.fixture()
def active_backend():
    return BACKEND
