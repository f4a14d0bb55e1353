"""Exact counts of digraphs with no independent triple, two ways.

The direct method walks all 3^C(n,2) digraphs as a base-3 counter over
pair states; the graph-weighted method sums 2^(C(n,2) - e(G)) over
triangle-free (or bipartite) non-adjacency graphs G.  Both fill a
:class:`CensusCounts`; agreement between them on overlapping n is part of
the test suite.  Growth and bound reports evaluate the counting
inequalities from exact integers, with logarithms taken at high precision.
"""
from __future__ import annotations

import csv
import multiprocessing
import os
import tempfile
from dataclasses import dataclass
from functools import partial
from typing import Iterable, List, Optional

import mpmath

from ._backend import kernels
from .classify import CONSTANTS, BoundConstants, log_floor
from .core import Digraph
from .errors import CapExceeded, InputError, RangeError

DIRECT_CAP = 6
GRAPHS_CAP = 8

# Hard ceilings: the direct table is indexed by the 2^C(n,2) non-edge
# masks, and the compiled graph kernel accumulates in 64-bit integers
# (3^36 for n=9 still fits).
_DIRECT_HARD_CAP = 7
_GRAPHS_HARD_CAP = 9


@dataclass(frozen=True)
class CensusCounts:
    """Exact labelled counts at one n; class fields may be absent (None)."""

    n: int
    method: str  # "direct" or "graph_weighted"
    F: int
    T: int
    A: Optional[int] = None
    B: Optional[int] = None
    C: Optional[int] = None
    uncovered: Optional[int] = None

    def has_classes(self) -> bool:
        return None not in (self.A, self.B, self.C, self.uncovered)


def _effective_workers(workers: int) -> int:
    env = os.environ.get("I3_MAX_WORKERS")
    w = max(1, int(workers))
    if env:
        w = min(w, max(1, int(env)))
    return w


def _direct_task(n: int, bounds: tuple) -> tuple:
    return kernels.census_direct_chunk(n, bounds[0], bounds[1])


def _graphs_task(n: int, k0: int, classes: bool, prefix_rows: tuple) -> tuple:
    return kernels.census_graphs_chunk(n, k0, prefix_rows, classes)


def _sum_parts(parts: Iterable[tuple]) -> tuple:
    return tuple(sum(col) for col in zip(*parts))


def census_direct(n: int, workers: int = 1, cap: Optional[int] = None) -> CensusCounts:
    """Enumerate all 3^C(n,2) digraphs and count every tracked property.

    Deterministic and independent of ``workers``: parallel runs split the
    base-3 code space on a fixed-length most-significant prefix and the
    partial counts are summed.
    """
    if cap is None:
        cap = DIRECT_CAP
    if n < 2:
        raise RangeError(f"census needs n >= 2, got {n}")
    if n > min(cap, _DIRECT_HARD_CAP):
        raise CapExceeded(f"n={n} exceeds direct-enumeration cap {min(cap, _DIRECT_HARD_CAP)}")
    m = n * (n - 1) // 2
    total = 3**m
    w = _effective_workers(workers)
    if w == 1:
        res = kernels.census_direct_chunk(n, 0, total)
    else:
        p = 1
        while 3**p < 4 * w and p < m:
            p += 1
        chunk = 3 ** (m - p)
        tasks = [(i * chunk, (i + 1) * chunk) for i in range(3**p)]
        with multiprocessing.Pool(w) as pool:
            res = _sum_parts(pool.map(partial(_direct_task, n), tasks))
    f, t, a, b, c, unc = res
    return CensusCounts(n=n, method="direct", F=f, T=t, A=a, B=b, C=c, uncovered=unc)


def _triangle_free_prefixes(k0: int) -> List[tuple]:
    pairs = [(u, v) for u in range(k0) for v in range(u + 1, k0)]
    out = []
    for mask in range(1 << len(pairs)):
        rows = [0] * k0
        for j, (u, v) in enumerate(pairs):
            if (mask >> j) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        ok = True
        for u in range(k0):
            t = rows[u] >> (u + 1)
            while t:
                low = t & -t
                if rows[u] & rows[u + 1 + low.bit_length() - 1]:
                    ok = False
                    break
                t ^= low
            if not ok:
                break
        if ok:
            out.append(tuple(rows))
    return out


def census_graphs(
    n: int,
    classes: bool = False,
    workers: int = 1,
    cap: Optional[int] = None,
) -> CensusCounts:
    """Sum orientation weights over triangle-free non-adjacency graphs.

    Every digraph with no independent triple arises from exactly one
    triangle-free graph G (its non-edge set) by orienting the complement,
    so G contributes 2^(C(n,2) - e(G)) to F; restricting to bipartite G
    gives T.  Class membership depends only on G, so with ``classes`` the
    A/B/C/uncovered counts are accumulated the same way.
    """
    if cap is None:
        cap = GRAPHS_CAP
    if n < 2:
        raise RangeError(f"census needs n >= 2, got {n}")
    if n > min(cap, _GRAPHS_HARD_CAP):
        raise CapExceeded(f"n={n} exceeds graph-enumeration cap {min(cap, _GRAPHS_HARD_CAP)}")
    w = _effective_workers(workers)
    if w == 1:
        res = kernels.census_graphs_chunk(n, 0, (), classes)
    else:
        k0 = min(n, 4)
        tasks = _triangle_free_prefixes(k0)
        with multiprocessing.Pool(w) as pool:
            res = _sum_parts(pool.map(partial(_graphs_task, n, k0, classes), tasks))
    f, t, a, b, c, unc = res
    if classes:
        return CensusCounts(n=n, method="graph_weighted", F=f, T=t, A=a, B=b, C=c, uncovered=unc)
    return CensusCounts(n=n, method="graph_weighted", F=f, T=t)


def count_via_graphs(n: int, target: str = "F", workers: int = 1, cap: Optional[int] = None) -> int:
    """The F or T count by the graph-weighted method alone."""
    if target not in ("F", "T"):
        raise InputError(f"target must be 'F' or 'T', got {target!r}")
    c = census_graphs(n, classes=False, workers=workers, cap=cap)
    return c.F if target == "F" else c.T


def growth_check(counts_seq: Iterable[CensusCounts]) -> List[bool]:
    """Evaluate T(n+1)^2 >= 6^n * T(n)^2 for each consecutive pair.

    Squaring both sides keeps the comparison in exact integers.  The input
    must cover consecutive n without gaps or duplicates, with positive T
    counts (there is always at least one tournament).
    """
    seq = sorted(counts_seq, key=lambda c: c.n)
    if len(seq) < 2:
        raise InputError("need counts for at least two consecutive n")
    for prev, cur in zip(seq, seq[1:]):
        if cur.n != prev.n + 1:
            raise InputError(f"gap in n sequence between {prev.n} and {cur.n}")
    for c in seq:
        if c.T is None or c.T <= 0:
            raise InputError(f"T count at n={c.n} must be positive")
    return [
        cur.T**2 >= 6**prev.n * prev.T**2 for prev, cur in zip(seq, seq[1:])
    ]


@dataclass(frozen=True)
class BoundReport:
    """One evaluated counting bound: log2 of a count ratio versus a formula."""

    n: int
    lemma: str  # "A", "B" or "C"
    lhs: float
    rhs: float
    satisfied: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lemma": self.lemma,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "satisfied": self.satisfied,
        }


def _counts_by_n(counts: Iterable[CensusCounts]) -> dict:
    by_n: dict = {}
    for c in counts:
        # Prefer an entry that carries class counts.
        cur = by_n.get(c.n)
        if cur is None or (not cur.has_classes() and c.has_classes()):
            by_n[c.n] = c
    return by_n


def lemma_bound_report(
    n: int,
    counts: Iterable[CensusCounts],
    constants: BoundConstants = CONSTANTS,
) -> List[BoundReport]:
    """Evaluate the three class-count bounds at one n.

    Writing k = log_floor(n), the bounds compare

        log2(A(n) / F(n-1))  against  n + k^2 + k - 1,
        log2(B(n) / F(n-k))  against  beta n k + n + (3/2) k^2 - (1/2) k,
        log2(C(n) / F(n-2))  against  gamma n + 2 k^2 + 2 k.

    The bounds are asymptotic claims; this reports, never asserts.  A zero
    numerator yields lhs = -inf and satisfied = True.  Logarithms are taken
    from the exact integers at 96-bit precision, and ``satisfied`` allows
    2^-30 of slack.
    """
    by_n = _counts_by_n(counts)
    if n not in by_n or not by_n[n].has_classes():
        raise InputError(f"need class counts at n={n}")
    k = log_floor(n)
    numerators = {"A": by_n[n].A, "B": by_n[n].B, "C": by_n[n].C}
    denom_n = {"A": n - 1, "B": n - k, "C": n - 2}
    reports = []
    with mpmath.workprec(96):
        alpha = mpmath.log(3) / mpmath.log(2)
        rhs_exprs = {
            "A": mpmath.mpf(n + k * k + k - 1),
            "B": ((1 + alpha) / 2 + (1 - alpha) / 10**6) * n * k
            + n
            + mpmath.mpf(3) / 2 * k * k
            - mpmath.mpf(1) / 2 * k,
            "C": (
                1
                + mpmath.mpf(4) / 10**6
                + mpmath.mpf(3) / 100
                + alpha * (1 - mpmath.mpf(2) / 10**6 - mpmath.mpf(2) / 100)
            )
            * n
            + 2 * k * k
            + 2 * k,
        }
        slack = mpmath.mpf(2) ** -30
        for lemma in ("A", "B", "C"):
            dn = denom_n[lemma]
            if dn not in by_n:
                raise InputError(f"need F({dn}) for the {lemma} bound at n={n}")
            den = by_n[dn].F
            if den is None or den <= 0:
                raise InputError(f"F({dn}) must be positive")
            num = numerators[lemma]
            rhs = rhs_exprs[lemma]
            if num == 0:
                reports.append(
                    BoundReport(n=n, lemma=lemma, lhs=float("-inf"), rhs=float(rhs), satisfied=True)
                )
                continue
            lhs = mpmath.log(mpmath.mpf(num) / mpmath.mpf(den)) / mpmath.log(2)
            reports.append(
                BoundReport(
                    n=n,
                    lemma=lemma,
                    lhs=float(lhs),
                    rhs=float(rhs),
                    satisfied=bool(lhs <= rhs + slack),
                )
            )
    return reports


# --- digraph <-> base-3 code, in the enumeration order of census_direct ---


def code_of_digraph(d: Digraph) -> int:
    """Index of ``d`` in the base-3 enumeration (pair (0,1) most significant)."""
    code = 0
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if (d.rows[u] >> v) & 1:
                digit = 1
            elif (d.rows[v] >> u) & 1:
                digit = 2
            else:
                digit = 0
            code = code * 3 + digit
    return code


def digraph_of_code(n: int, code: int) -> Digraph:
    """Inverse of :func:`code_of_digraph`."""
    m = n * (n - 1) // 2
    if not 0 <= code < 3**m:
        raise RangeError(f"code {code} out of range for n={n}")
    digits = []
    for _ in range(m):
        digits.append(code % 3)
        code //= 3
    digits.reverse()
    rows = [0] * n
    j = 0
    for u in range(n):
        for v in range(u + 1, n):
            if digits[j] == 1:
                rows[u] |= 1 << v
            elif digits[j] == 2:
                rows[v] |= 1 << u
            j += 1
    return Digraph(n, rows)


# --- CSV cache -------------------------------------------------------------

CSV_FIELDS = ("n", "method", "F", "T", "A", "B", "C", "uncovered")


def read_census_csv(path) -> List[CensusCounts]:
    """Load cache rows; missing class cells come back as None."""
    out = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != CSV_FIELDS:
            raise InputError(f"unexpected census CSV header in {path}")
        for row in reader:
            def cell(key):
                val = row[key]
                return int(val) if val not in (None, "") else None

            out.append(
                CensusCounts(
                    n=int(row["n"]),
                    method=row["method"],
                    F=int(row["F"]),
                    T=int(row["T"]),
                    A=cell("A"),
                    B=cell("B"),
                    C=cell("C"),
                    uncovered=cell("uncovered"),
                )
            )
    return out


def write_census_csv(path, rows: Iterable[CensusCounts]) -> None:
    """Write the cache atomically (temp file + rename), sorted by (n, method)."""
    rows = sorted(rows, key=lambda c: (c.n, c.method))
    path = os.fspath(path)
    dir_name = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=dir_name, suffix=".census.tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_FIELDS)
            for c in rows:
                writer.writerow(
                    [
                        c.n,
                        c.method,
                        c.F,
                        c.T,
                        "" if c.A is None else c.A,
                        "" if c.B is None else c.B,
                        "" if c.C is None else c.C,
                        "" if c.uncovered is None else c.uncovered,
                    ]
                )
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def upsert_census_csv(path, new_rows: Iterable[CensusCounts]) -> List[CensusCounts]:
    """Merge rows into the cache, replacing entries with the same (n, method)."""
    merged = {}
    if os.path.exists(path):
        for c in read_census_csv(path):
            merged[(c.n, c.method)] = c
    for c in new_rows:
        merged[(c.n, c.method)] = c
    rows = sorted(merged.values(), key=lambda c: (c.n, c.method))
    write_census_csv(path, rows)
    return rows
