# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernels.

Same contract as ``_kernels_py``: census_direct_chunk and
census_graphs_chunk return (F, T, A, B, C, uncovered) for their slice.
Counts stay within 64 bits for every admissible n (direct n <= 7, graphs
n <= 9), which the callers in ``census`` enforce via hard caps.
"""

from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil

BACKEND = "cython"

ctypedef unsigned long long u64
ctypedef unsigned int u32

cdef enum:
    MAXN = 16
    MAXPAIRS = 36


cdef inline int _bit_length(int x) nogil:
    cdef int r = 0
    while x:
        x >>= 1
        r += 1
    return r


cdef bint _triangle_free(int n, u32* rows) nogil:
    cdef int u, v
    cdef u32 t
    for u in range(n):
        t = rows[u] >> (u + 1)
        while t:
            v = u + 1 + __builtin_ctz(t)
            t &= t - 1
            if rows[u] & rows[v]:
                return False
    return True


cdef bint _bipartite(int n, u32* rows) nogil:
    cdef u32 color0 = 0, color1 = 0, seen = 0, frontier, nxt, fm
    cdef int s, v, side
    for s in range(n):
        if (seen >> s) & 1:
            continue
        frontier = (<u32>1) << s
        seen |= frontier
        side = 0
        while frontier:
            if side == 0:
                color0 |= frontier
            else:
                color1 |= frontier
            nxt = 0
            fm = frontier
            while fm:
                v = __builtin_ctz(fm)
                fm &= fm - 1
                if side == 0:
                    if rows[v] & color0:
                        return False
                else:
                    if rows[v] & color1:
                        return False
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
            side ^= 1
    return True


cdef inline u32 _delta_of_mask(int n, u32* rows, u32 q) nogil:
    cdef u32 acc = 0, t = q
    cdef int v
    while t:
        v = __builtin_ctz(t)
        t &= t - 1
        acc |= rows[v]
    return acc & ~q


cdef bint _has_a(int n, u32* rows, int k) nogil:
    cdef int v
    for v in range(n):
        if __builtin_popcount(rows[v]) <= k:
            return True
    return False


cdef bint _has_b(int n, u32* rows, int k) nogil:
    cdef int v
    cdef u32 dv, s, r
    for v in range(n):
        dv = rows[v]
        if __builtin_popcount(dv) < k:
            continue
        s = dv
        while True:
            if __builtin_popcount(s) == k:
                r = _delta_of_mask(n, rows, s)
                if 1000000ULL * <u64>__builtin_popcount(r) <= 499999ULL * <u64>n:
                    return True
            if s == 0:
                break
            s = (s - 1) & dv
    return False


cdef bint _has_c(int n, u32* rows, int k) nogil:
    cdef int x, y
    cdef u32 dx, dy, sx, sy, rx, ry
    for x in range(n):
        dx = rows[x]
        if __builtin_popcount(dx) < k:
            continue
        for y in range(x + 1, n):
            if not (dx >> y) & 1:
                continue
            dy = rows[y]
            if __builtin_popcount(dy) < k:
                continue
            sx = dx
            while True:
                if __builtin_popcount(sx) == k:
                    rx = _delta_of_mask(n, rows, sx)
                    if 100 * __builtin_popcount(rx) >= n:
                        sy = dy
                        while True:
                            if __builtin_popcount(sy) == k:
                                ry = _delta_of_mask(n, rows, sy)
                                if 100 * __builtin_popcount(rx & ry) >= n:
                                    return True
                            if sy == 0:
                                break
                            sy = (sy - 1) & dy
                if sx == 0:
                    break
                sx = (sx - 1) & dx
    return False


cdef int _graph_flags(int n, u32* rows, bint classes, bint skip_triangle_check) nogil:
    cdef int fl = 0x40, k
    if not skip_triangle_check and not _triangle_free(n, rows):
        return fl
    fl |= 0x01
    if _bipartite(n, rows):
        fl |= 0x02
    if classes:
        k = _bit_length(n) - 1
        if _has_a(n, rows, k):
            fl |= 0x04
        elif _has_b(n, rows, k):
            fl |= 0x08
        elif _has_c(n, rows, k):
            fl |= 0x10
        if not fl & 0x1E:
            fl |= 0x20
    return fl


def census_direct_chunk(int n, object start, object stop):
    """Count over the base-3 digraph codes in [start, stop)."""
    if n < 2 or n > 7:
        raise ValueError(f"compiled direct kernel handles 2 <= n <= 7, got {n}")
    cdef int m = n * (n - 1) // 2
    cdef long long cstart = start
    cdef long long cstop = stop
    cdef long long total = cstop - cstart
    cdef int pu[MAXPAIRS]
    cdef int pv[MAXPAIRS]
    cdef int j = 0, u, v, fl
    for u in range(n):
        for v in range(u + 1, n):
            pu[j] = u
            pv[j] = v
            j += 1
    cdef signed char digits[MAXPAIRS]
    cdef long long rem = cstart
    for j in range(m - 1, -1, -1):
        digits[j] = rem % 3
        rem //= 3
    cdef u32 mask = 0
    for j in range(m):
        if digits[j] == 0:
            mask |= (<u32>1) << j
    cdef unsigned char* table = <unsigned char*>calloc((<size_t>1) << m, 1)
    if table is NULL:
        raise MemoryError()
    cdef u64 cf = 0, ct = 0, ca = 0, cb = 0, cc = 0, cu = 0
    cdef u32 rows[MAXN]
    cdef u32 z
    cdef long long i
    try:
        with nogil:
            for i in range(total):
                fl = table[mask]
                if fl == 0:
                    for j in range(n):
                        rows[j] = 0
                    z = mask
                    while z:
                        j = __builtin_ctz(z)
                        z &= z - 1
                        rows[pu[j]] |= (<u32>1) << pv[j]
                        rows[pv[j]] |= (<u32>1) << pu[j]
                    fl = _graph_flags(n, rows, True, False)
                    table[mask] = <unsigned char>fl
                if fl & 0x01:
                    cf += 1
                    if fl & 0x02:
                        ct += 1
                    if fl & 0x04:
                        ca += 1
                    elif fl & 0x08:
                        cb += 1
                    elif fl & 0x10:
                        cc += 1
                    if fl & 0x20:
                        cu += 1
                j = m - 1
                while j >= 0:
                    if digits[j] == 0:
                        digits[j] = 1
                        mask ^= (<u32>1) << j
                        break
                    if digits[j] == 1:
                        digits[j] = 2
                        break
                    digits[j] = 0
                    mask |= (<u32>1) << j
                    j -= 1
    finally:
        free(table)
    return (cf, ct, ca, cb, cc, cu)


ctypedef struct GCtx:
    int n
    int m
    bint classes
    u32 rows[MAXN]
    u64 cnt[6]


cdef void _g_extend(GCtx* ctx, int k, int e) nogil:
    cdef int fl
    cdef u64 w
    if k == ctx.n:
        # Leaves are triangle-free by construction.
        fl = _graph_flags(ctx.n, ctx.rows, ctx.classes, True)
        w = (<u64>1) << (ctx.m - e)
        ctx.cnt[0] += w
        if fl & 0x02:
            ctx.cnt[1] += w
        if fl & 0x04:
            ctx.cnt[2] += w
        elif fl & 0x08:
            ctx.cnt[3] += w
        elif fl & 0x10:
            ctx.cnt[4] += w
        if fl & 0x20:
            ctx.cnt[5] += w
        return
    _g_choose(ctx, k, 0, ((<u32>1) << k) - 1, e)


cdef void _g_choose(GCtx* ctx, int k, u32 s, u32 cand, int e) nogil:
    # e counts edges among the first k rows; s adds popcount(s) more.
    cdef u32 t = s, c
    cdef int v
    ctx.rows[k] = s
    while t:
        v = __builtin_ctz(t)
        t &= t - 1
        ctx.rows[v] |= (<u32>1) << k
    _g_extend(ctx, k + 1, e + __builtin_popcount(s))
    t = s
    while t:
        v = __builtin_ctz(t)
        t &= t - 1
        ctx.rows[v] &= ~((<u32>1) << k)
    ctx.rows[k] = 0
    c = cand
    while c:
        v = __builtin_ctz(c)
        c &= c - 1
        _g_choose(ctx, k, s | ((<u32>1) << v), c & ~ctx.rows[v], e)


def census_graphs_chunk(int n, int k0, tuple prefix_rows, bint classes):
    """Weighted count over triangle-free graphs extending a fixed prefix."""
    if n < 2 or n > 9:
        raise ValueError(f"compiled graph kernel handles 2 <= n <= 9, got {n}")
    if k0 < 0 or k0 > n or len(prefix_rows) != k0:
        raise ValueError(f"prefix of {len(prefix_rows)} rows does not match k0={k0}")
    cdef GCtx ctx
    cdef int i, e0 = 0
    ctx.n = n
    ctx.m = n * (n - 1) // 2
    ctx.classes = classes
    for i in range(MAXN):
        ctx.rows[i] = 0
    for i in range(6):
        ctx.cnt[i] = 0
    for i in range(k0):
        ctx.rows[i] = prefix_rows[i]
        e0 += __builtin_popcount(ctx.rows[i])
    e0 //= 2
    with nogil:
        _g_extend(&ctx, k0, e0)
    return (ctx.cnt[0], ctx.cnt[1], ctx.cnt[2], ctx.cnt[3], ctx.cnt[4], ctx.cnt[5])
