# cython: language_level=3
"""Compiled hot loops. Semantics are defined by szl._pykernels."""
from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef enum:
    MAXN = 10
    MAXMASK = 1024


cdef struct Ctx:
    int n
    long modulus
    long first[MAXN]
    long last[MAXN]
    long lo[MAXN + 1]
    long hi[MAXN + 1]
    long gamma[MAXN]
    long cuts[MAXMASK]
    long sums[MAXMASK]
    int lowbit[MAXMASK]


cdef bint _leaf(Ctx *c):
    cdef int full = 1 << c.n
    cdef int m
    cdef long s
    c.sums[0] = 0
    for m in range(1, full):
        s = c.sums[m & (m - 1)] + c.gamma[c.lowbit[m]]
        c.sums[m] = s
        if s > c.cuts[m] or -s > c.cuts[m]:
            return False
    return True


cdef bint _walk(Ctx *c, int v, long acc):
    cdef long t, rest
    if v == c.n:
        return acc == 0 and _leaf(c)
    t = c.first[v]
    while t <= c.last[v]:
        rest = acc + t
        if not (rest + c.lo[v + 1] > 0 or rest + c.hi[v + 1] < 0):
            c.gamma[v] = t
            if _walk(c, v + 1, rest):
                return True
        t += c.modulus
    return False


cdef bint _feasible(Ctx *c, long *degrees, long *beta):
    cdef int v
    cdef long d
    for v in range(c.n):
        d = degrees[v]
        if (beta[v] - d) % 2 != 0:
            return False
        c.first[v] = -d + (beta[v] + d) % c.modulus
        if c.first[v] > d:
            return False
        c.last[v] = c.first[v] + c.modulus * ((d - c.first[v]) // c.modulus)
    c.lo[c.n] = 0
    c.hi[c.n] = 0
    for v in range(c.n - 1, -1, -1):
        c.lo[v] = c.lo[v + 1] + c.first[v]
        c.hi[v] = c.hi[v + 1] + c.last[v]
    return _walk(c, 0, 0)


def failing_boundaries(int n, degrees, cuts, int ell):
    if n < 1 or n > MAXN:
        raise ValueError(f"kernel supports 1 <= n <= {MAXN}, got {n}")
    cdef Ctx *c = <Ctx *> malloc(sizeof(Ctx))
    if c == NULL:
        raise MemoryError()
    cdef long deg[MAXN]
    cdef long beta[MAXN]
    cdef int v, m, full = 1 << n
    cdef long modulus = 2 * ell, total
    out = []
    try:
        c.n = n
        c.modulus = modulus
        for v in range(n):
            deg[v] = degrees[v]
        c.lowbit[0] = 0
        for m in range(full):
            c.cuts[m] = cuts[m]
            if m:
                v = 0
                while not (m >> v) & 1:
                    v += 1
                c.lowbit[m] = v
        # odometer over the first n-1 residues, each stepping by 2 within its parity class
        for v in range(n - 1):
            beta[v] = deg[v] % 2
        while True:
            total = 0
            for v in range(n - 1):
                total += beta[v]
            beta[n - 1] = (modulus - total % modulus) % modulus
            if not _feasible(c, deg, beta):
                out.append(tuple([beta[v] for v in range(n)]))
            v = n - 2
            while v >= 0:
                beta[v] += 2
                if beta[v] < modulus:
                    break
                beta[v] = deg[v] % 2
                v -= 1
            if v < 0:
                break
    finally:
        free(c)
    return out


def achievable_imbalances(int n, upper):
    cdef int p = len(upper)
    cdef int *mult = <int *> malloc(max(p, 1) * sizeof(int))
    cdef int *fwd = <int *> malloc(max(p, 1) * sizeof(int))
    cdef int *pu = <int *> malloc(max(p, 1) * sizeof(int))
    cdef int *pv = <int *> malloc(max(p, 1) * sizeof(int))
    cdef long imb[MAXN]
    cdef int u, v, k, net
    if n > MAXN:
        raise ValueError(f"kernel supports n <= {MAXN}, got {n}")
    out = set()
    try:
        k = 0
        for u in range(n):
            for v in range(u + 1, n):
                pu[k] = u
                pv[k] = v
                mult[k] = upper[k]
                fwd[k] = 0
                k += 1
        while True:
            for v in range(n):
                imb[v] = 0
            for k in range(p):
                net = 2 * fwd[k] - mult[k]
                imb[pu[k]] += net
                imb[pv[k]] -= net
            out.add(tuple([imb[v] for v in range(n)]))
            k = p - 1
            while k >= 0:
                fwd[k] += 1
                if fwd[k] <= mult[k]:
                    break
                fwd[k] = 0
                k -= 1
            if k < 0:
                break
    finally:
        free(mult)
        free(fwd)
        free(pu)
        free(pv)
    return out


def canonical_upper(int n, upper, perms):
    if n > MAXN:
        raise ValueError(f"kernel supports n <= {MAXN}, got {n}")
    cdef int table[MAXN][MAXN]
    cdef int best[MAXN * MAXN]
    cdef int cand[MAXN * MAXN]
    cdef int s[MAXN]
    cdef int u, v, i, j, k, p = len(upper)
    cdef bint have = False, less
    k = 0
    for u in range(n):
        table[u][u] = 0
        for v in range(u + 1, n):
            table[u][v] = upper[k]
            table[v][u] = upper[k]
            k += 1
    for perm in perms:
        for i in range(n):
            s[i] = perm[i]
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                cand[k] = table[s[i]][s[j]]
                k += 1
        if not have:
            less = True
        else:
            less = False
            for k in range(p):
                if cand[k] != best[k]:
                    less = cand[k] < best[k]
                    break
        if less:
            for k in range(p):
                best[k] = cand[k]
            have = True
    if not have:
        return ()
    return tuple([best[k] for k in range(p)])
