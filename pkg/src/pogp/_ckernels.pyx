# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels``; same functions, same results."""

DEF MAXM = 16
DEF MAXN = 64
DEF MAXP = 32

cdef struct Pat:
    int m
    int adj[MAXM]
    int rcnt[MAXM]
    int ru[MAXM][MAXM]
    int rs[MAXM][MAXM]


MAX_LETTERS = MAXM
MAX_LENGTH = MAXN
MAX_PATTERNS = MAXP


cdef int _compile(Pat* p, letters, adj) except -1:
    cdef int m = len(letters)
    cdef int t, u, k
    if m < 1 or m > MAXM:
        raise ValueError("pattern length out of kernel range")
    p.m = m
    for t in range(m):
        p.adj[t] = 1 if (t < m - 1 and adj[t]) else 0
        k = 0
        for u in range(t + 1, m):
            if letters[t] < letters[u]:
                p.ru[t][k] = u
                p.rs[t][k] = -1
                k += 1
            elif letters[t] > letters[u]:
                p.ru[t][k] = u
                p.rs[t][k] = 1
                k += 1
        p.rcnt[t] = k
    return 0


cdef inline bint _fits(const int* vals, const int* idx, const Pat* p, int t, int c) nogil:
    cdef int v = vals[c]
    cdef int k, w
    for k in range(p.rcnt[t]):
        w = vals[idx[p.ru[t][k]]]
        if p.rs[t][k] < 0:
            if v >= w:
                return False
        elif v <= w:
            return False
    return True


cdef bint _exists(const int* vals, const Pat* p, int* idx, int t) nogil:
    if t < 0:
        return True
    cdef int hi = idx[t + 1] - 1
    if hi < t:
        return False
    cdef int lo = hi if p.adj[t] else t
    cdef int c = hi
    while c >= lo:
        if _fits(vals, idx, p, t, c):
            idx[t] = c
            if _exists(vals, p, idx, t - 1):
                return True
        c -= 1
    return False


cdef unsigned long long _count(const int* vals, const Pat* p, int* idx, int t) nogil:
    if t < 0:
        return 1
    cdef int hi = idx[t + 1] - 1
    if hi < t:
        return 0
    cdef int lo = hi if p.adj[t] else t
    cdef int c = hi
    cdef unsigned long long total = 0
    while c >= lo:
        if _fits(vals, idx, p, t, c):
            idx[t] = c
            total += _count(vals, p, idx, t - 1)
        c -= 1
    return total


cdef inline bint _ends_at(const int* vals, int end, const Pat* p) nogil:
    cdef int idx[MAXM]
    if end + 1 < p.m:
        return False
    idx[p.m - 1] = end
    return _exists(vals, p, idx, p.m - 2)


cdef int _load(int* buf, vals) except -1:
    cdef int n = len(vals)
    cdef int i
    if n > MAXN:
        raise ValueError("permutation longer than kernel range")
    for i in range(n):
        buf[i] = vals[i]
    return n


def occurs_ending_at(vals, int end, letters, adj):
    cdef Pat p
    cdef int buf[MAXN]
    _compile(&p, letters, adj)
    _load(buf, vals)
    return _ends_at(buf, end, &p)


def count_occurrences(vals, letters, adj):
    cdef Pat p
    cdef int buf[MAXN]
    cdef int idx[MAXM]
    cdef int n, end
    cdef unsigned long long total = 0
    _compile(&p, letters, adj)
    n = _load(buf, vals)
    for end in range(p.m - 1, n):
        idx[p.m - 1] = end
        total += _count(buf, &p, idx, p.m - 2)
    return int(total)


def contains(vals, letters, adj):
    cdef Pat p
    cdef int buf[MAXN]
    cdef int n, end
    _compile(&p, letters, adj)
    n = _load(buf, vals)
    for end in range(p.m - 1, n):
        if _ends_at(buf, end, &p):
            return True
    return False


cdef struct Walk:
    int n
    int npat
    int vals[MAXN]
    int used[MAXN + 1]
    unsigned long long count


cdef bint _any_ends(Walk* w, const Pat* pats, int d) nogil:
    cdef int k
    for k in range(w.npat):
        if _ends_at(w.vals, d, &pats[k]):
            return True
    return False


cdef void _count_walk(Walk* w, const Pat* pats, int d) nogil:
    cdef int v
    if d == w.n:
        w.count += 1
        return
    for v in range(1, w.n + 1):
        if w.used[v]:
            continue
        w.vals[d] = v
        if _any_ends(w, pats, d):
            continue
        w.used[v] = 1
        _count_walk(w, pats, d + 1)
        w.used[v] = 0


cdef int _compile_all(Pat* pats, patterns) except -1:
    cdef int k = 0
    if len(patterns) > MAXP:
        raise ValueError("too many patterns for kernel")
    for letters, adj in patterns:
        _compile(&pats[k], letters, adj)
        k += 1
    return k


cdef void _init_walk(Walk* w, int n, int npat) nogil:
    cdef int i
    w.n = n
    w.npat = npat
    w.count = 0
    for i in range(MAXN + 1):
        w.used[i] = 0


def count_avoiders(int n, patterns, int first=0):
    cdef Pat pats[MAXP]
    cdef Walk w
    if n > MAXN:
        raise ValueError("length out of kernel range")
    _init_walk(&w, n, _compile_all(pats, patterns))
    if n == 0:
        return 1
    if first:
        w.vals[0] = first
        if _any_ends(&w, pats, 0):
            return 0
        w.used[first] = 1
        with nogil:
            _count_walk(&w, pats, 1)
    else:
        with nogil:
            _count_walk(&w, pats, 0)
    return int(w.count)


cdef _list_walk(Walk* w, const Pat* pats, int d, list out):
    cdef int v, i
    if d == w.n:
        out.append(tuple([w.vals[i] for i in range(w.n)]))
        return
    for v in range(1, w.n + 1):
        if w.used[v]:
            continue
        w.vals[d] = v
        if _any_ends(w, pats, d):
            continue
        w.used[v] = 1
        _list_walk(w, pats, d + 1, out)
        w.used[v] = 0


def list_avoiders(int n, patterns):
    cdef Pat pats[MAXP]
    cdef Walk w
    cdef list out = []
    if n > MAXN:
        raise ValueError("length out of kernel range")
    _init_walk(&w, n, _compile_all(pats, patterns))
    _list_walk(&w, pats, 0, out)
    return out


cdef bint _diff_walk(Walk* w, const Pat* pa, const Pat* pb, int d, bint has_a, bint has_b) nogil:
    cdef int v
    cdef bint a, b
    if d == w.n:
        return has_a != has_b
    for v in range(1, w.n + 1):
        if w.used[v]:
            continue
        w.vals[d] = v
        a = has_a or _ends_at(w.vals, d, pa)
        b = has_b or _ends_at(w.vals, d, pb)
        if a and b:
            continue
        w.used[v] = 1
        if _diff_walk(w, pa, pb, d + 1, a, b):
            return True
        w.used[v] = 0
    return False


def first_difference(int n, pat_a, pat_b):
    cdef Pat pa, pb
    cdef Walk w
    cdef int i
    cdef bint found
    if n > MAXN:
        raise ValueError("length out of kernel range")
    _compile(&pa, pat_a[0], pat_a[1])
    _compile(&pb, pat_b[0], pat_b[1])
    _init_walk(&w, n, 0)
    with nogil:
        found = _diff_walk(&w, &pa, &pb, 0, False, False)
    if not found:
        return None
    return tuple([w.vals[i] for i in range(n)])
