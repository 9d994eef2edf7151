# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical labeling kernel.

Same algorithm, traversal order and certificate as ``_canon_py``; the two
must return identical results.  Hypergraphs with more than 63 edges are
handed to the pure-Python kernel because masks are packed into 64-bit words.
"""

from libc.stdlib cimport malloc, free, realloc, qsort
from libc.string cimport memcpy, memset

from ternarity.hypergraph import _canon_py

BACKEND = "cython"

ctypedef unsigned long long u64


cdef int _cmp_u64(const void* a, const void* b) noexcept nogil:
    cdef u64 x = (<u64*>a)[0]
    cdef u64 y = (<u64*>b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef class _Search:
    cdef int n, m, N
    cdef int* adj_start
    cdef int* adj
    cdef int* colors
    cdef int* cnt
    cdef char* inq
    cdef int* queue
    cdef int* tmp
    cdef u64* emask          # per edge: bitmask over vertices is not needed; membership lists via adj
    cdef u64* masks
    cdef int* order
    cdef int have_first
    cdef int* first_order
    cdef int* first_colors
    cdef u64* first_masks
    cdef int* best_order
    cdef int* best_colors
    cdef u64* best_masks
    cdef int* gens
    cdef int ngens, cap_gens
    cdef int* parent
    cdef int* prefix

    def __cinit__(self, int n, list edges, list colors):
        cdef int e, v, i, total = 0
        self.n = n
        self.m = len(edges)
        self.N = n + self.m
        for e in range(self.m):
            total += len(edges[e])
        self.adj_start = <int*>malloc((self.N + 1) * sizeof(int))
        self.adj = <int*>malloc((2 * total + 1) * sizeof(int))
        self.colors = <int*>malloc((self.m + 1) * sizeof(int))
        self.cnt = <int*>malloc((self.N + 1) * sizeof(int))
        self.inq = <char*>malloc((self.N + 1) * sizeof(char))
        self.queue = <int*>malloc((self.N + 1) * sizeof(int))
        self.tmp = <int*>malloc((self.N + 1) * sizeof(int))
        self.masks = <u64*>malloc((n + 1) * sizeof(u64))
        self.order = <int*>malloc((self.m + 1) * sizeof(int))
        self.first_order = <int*>malloc((self.m + 1) * sizeof(int))
        self.first_colors = <int*>malloc((self.m + 1) * sizeof(int))
        self.first_masks = <u64*>malloc((n + 1) * sizeof(u64))
        self.best_order = <int*>malloc((self.m + 1) * sizeof(int))
        self.best_colors = <int*>malloc((self.m + 1) * sizeof(int))
        self.best_masks = <u64*>malloc((n + 1) * sizeof(u64))
        self.parent = <int*>malloc((self.m + 1) * sizeof(int))
        self.prefix = <int*>malloc((self.m + 1) * sizeof(int))
        self.cap_gens = 8
        self.ngens = 0
        self.gens = <int*>malloc(self.cap_gens * (self.m + 1) * sizeof(int))
        self.have_first = 0

        # degree counts, then CSR fill in the same neighbour order as the Python kernel
        cdef int* deg = <int*>malloc((self.N + 1) * sizeof(int))
        memset(deg, 0, (self.N + 1) * sizeof(int))
        for e in range(self.m):
            for v in edges[e]:
                deg[v] += 1
                deg[n + e] += 1
        self.adj_start[0] = 0
        for i in range(self.N):
            self.adj_start[i + 1] = self.adj_start[i] + deg[i]
        memset(deg, 0, (self.N + 1) * sizeof(int))
        for e in range(self.m):
            self.colors[e] = colors[e]
            for v in edges[e]:
                self.adj[self.adj_start[v] + deg[v]] = n + e
                deg[v] += 1
                self.adj[self.adj_start[n + e] + deg[n + e]] = v
                deg[n + e] += 1
        free(deg)

    def __dealloc__(self):
        free(self.adj_start); free(self.adj); free(self.colors); free(self.cnt)
        free(self.inq); free(self.queue); free(self.tmp); free(self.masks)
        free(self.order); free(self.first_order); free(self.first_colors)
        free(self.first_masks); free(self.best_order); free(self.best_colors)
        free(self.best_masks); free(self.gens); free(self.parent); free(self.prefix)

    cdef void refine(self, int* lab, int* start_of, int* size_at, int qstart) noexcept:
        # FIFO over cell start positions; ring buffer, at most N pending entries
        cdef int N = self.N
        cdef int head = 0, tail = 0, qlen = 0
        cdef int w, pos, y, s, sz, c0, split, i, j, f, c, end, a, b, key
        cdef int* cnt = self.cnt
        cdef int* lst = self.tmp
        memset(self.inq, 0, N * sizeof(char))
        if qstart >= 0:
            self.queue[tail] = qstart; tail = (tail + 1) % (N + 1); qlen += 1
            self.inq[qstart] = 1
        else:
            # initial call: every cell, in position order
            s = 0
            while s < N:
                self.queue[tail] = s; tail = (tail + 1) % (N + 1); qlen += 1
                self.inq[s] = 1
                s += size_at[s]
        while qlen > 0:
            w = self.queue[head]; head = (head + 1) % (N + 1); qlen -= 1
            self.inq[w] = 0
            memset(cnt, 0, N * sizeof(int))
            for pos in range(w, w + size_at[w]):
                a = lab[pos]
                for i in range(self.adj_start[a], self.adj_start[a + 1]):
                    cnt[self.adj[i]] += 1
            s = 0
            while s < N:
                sz = size_at[s]
                if sz > 1:
                    c0 = cnt[lab[s]]
                    split = 0
                    for pos in range(s + 1, s + sz):
                        if cnt[lab[pos]] != c0:
                            split = 1
                            break
                    if split:
                        # stable insertion sort of the block by count
                        for i in range(sz):
                            lst[i] = lab[s + i]
                        for i in range(1, sz):
                            key = lst[i]
                            j = i - 1
                            while j >= 0 and cnt[lst[j]] > cnt[key]:
                                lst[j + 1] = lst[j]
                                j -= 1
                            lst[j + 1] = key
                        for i in range(sz):
                            lab[s + i] = lst[i]
                        end = s + sz
                        i = s
                        f = s
                        while i < end:
                            c = cnt[lab[i]]
                            j = i
                            while j < end and cnt[lab[j]] == c:
                                start_of[lab[j]] = f
                                j += 1
                            size_at[f] = j - f
                            if not self.inq[f]:
                                self.inq[f] = 1
                                self.queue[tail] = f; tail = (tail + 1) % (N + 1); qlen += 1
                            f = j
                            i = j
                s += sz

    cdef int find(self, int a) noexcept:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    cdef void add_gen(self, int* src, int* dst):
        cdef int i
        cdef int m = self.m
        if self.ngens == self.cap_gens:
            self.cap_gens *= 2
            self.gens = <int*>realloc(self.gens, self.cap_gens * (m + 1) * sizeof(int))
        cdef int* g = self.gens + self.ngens * m
        for i in range(m):
            g[src[i]] = dst[i]
        self.ngens += 1

    cdef int cmp_cert(self, int* ca, u64* ma, int* cb, u64* mb) noexcept:
        cdef int i
        for i in range(self.m):
            if ca[i] != cb[i]:
                return -1 if ca[i] < cb[i] else 1
        for i in range(self.n):
            if ma[i] != mb[i]:
                return -1 if ma[i] < mb[i] else 1
        return 0

    cdef void leaf(self, int* lab):
        cdef int n = self.n, m = self.m
        cdef int r, e, i, v, c_first, c_best
        cdef u64 bit
        cdef int cols[64]
        for r in range(m):
            self.order[r] = lab[n + r] - n
            cols[r] = self.colors[self.order[r]]
        memset(self.masks, 0, n * sizeof(u64))
        for r in range(m):
            e = self.order[r]
            bit = (<u64>1) << r
            for i in range(self.adj_start[n + e], self.adj_start[n + e + 1]):
                self.masks[self.adj[i]] |= bit
        if n > 1:
            qsort(self.masks, n, sizeof(u64), _cmp_u64)
        if not self.have_first:
            self.have_first = 1
            memcpy(self.first_order, self.order, m * sizeof(int))
            memcpy(self.first_colors, cols, m * sizeof(int))
            memcpy(self.first_masks, self.masks, n * sizeof(u64))
            memcpy(self.best_order, self.order, m * sizeof(int))
            memcpy(self.best_colors, cols, m * sizeof(int))
            memcpy(self.best_masks, self.masks, n * sizeof(u64))
            return
        c_first = self.cmp_cert(cols, self.masks, self.first_colors, self.first_masks)
        if c_first == 0:
            self.add_gen(self.first_order, self.order)
        c_best = self.cmp_cert(cols, self.masks, self.best_colors, self.best_masks)
        if c_best < 0:
            memcpy(self.best_order, self.order, m * sizeof(int))
            memcpy(self.best_colors, cols, m * sizeof(int))
            memcpy(self.best_masks, self.masks, n * sizeof(u64))
        elif c_best == 0 and c_first != 0:
            self.add_gen(self.best_order, self.order)

    cdef void visit(self, int* lab, int* start_of, int* size_at, int depth):
        cdef int n = self.n, m = self.m, N = self.N
        cdef int target = -1, pos, sz, idx, x, i, p, g, ok, rx, nexp, t
        cdef int* g_ptr
        pos = n
        while pos < N:
            if size_at[pos] > 1:
                target = pos
                break
            pos += size_at[pos]
        if target < 0:
            self.leaf(lab)
            return
        sz = size_at[target]
        cdef int* cell = <int*>malloc(sz * sizeof(int))
        cdef int* explored = <int*>malloc(sz * sizeof(int))
        cdef int* lab2 = <int*>malloc(N * sizeof(int))
        cdef int* so2 = <int*>malloc(N * sizeof(int))
        cdef int* sa2 = <int*>malloc(N * sizeof(int))
        for i in range(sz):
            cell[i] = lab[target + i]
        # ascending node order, like sorted() in the Python kernel
        for i in range(1, sz):
            x = cell[i]
            p = i - 1
            while p >= 0 and cell[p] > x:
                cell[p + 1] = cell[p]
                p -= 1
            cell[p + 1] = x
        nexp = 0
        for idx in range(sz):
            x = cell[idx]
            if nexp > 0:
                ok = 0
                for i in range(m):
                    self.parent[i] = i
                for g in range(self.ngens):
                    g_ptr = self.gens + g * m
                    t = 1
                    for i in range(depth):
                        if g_ptr[self.prefix[i]] != self.prefix[i]:
                            t = 0
                            break
                    if not t:
                        continue
                    ok = 1
                    for i in range(m):
                        p = self.find(i)
                        t = self.find(g_ptr[i])
                        if p != t:
                            if p < t:
                                self.parent[t] = p
                            else:
                                self.parent[p] = t
                if ok:
                    rx = self.find(x - n)
                    t = 0
                    for i in range(nexp):
                        if self.find(explored[i] - n) == rx:
                            t = 1
                            break
                    if t:
                        continue
            memcpy(lab2, lab, N * sizeof(int))
            memcpy(so2, start_of, N * sizeof(int))
            memcpy(sa2, size_at, N * sizeof(int))
            for i in range(target, target + sz):
                if lab2[i] == x:
                    lab2[i] = lab2[target]
                    lab2[target] = x
                    break
            sa2[target] = 1
            sa2[target + 1] = sz - 1
            for p in range(target + 1, target + sz):
                so2[lab2[p]] = target + 1
            so2[x] = target
            self.refine(lab2, so2, sa2, target)
            self.prefix[depth] = x - n
            self.visit(lab2, so2, sa2, depth + 1)
            explored[nexp] = x
            nexp += 1
        free(cell); free(explored); free(lab2); free(so2); free(sa2)

    cdef run(self):
        cdef int n = self.n, m = self.m, N = self.N
        cdef int i, pos, j, c
        cdef int* lab = <int*>malloc((N + 1) * sizeof(int))
        cdef int* start_of = <int*>malloc((N + 1) * sizeof(int))
        cdef int* size_at = <int*>malloc((N + 1) * sizeof(int))
        memset(start_of, 0, (N + 1) * sizeof(int))
        memset(size_at, 0, (N + 1) * sizeof(int))
        order = sorted(range(m), key=lambda e: self.colors[e])
        for i in range(n):
            lab[i] = i
        for i in range(m):
            lab[n + i] = n + order[i]
        if n:
            size_at[0] = n
        pos = n
        while pos < N:
            c = self.colors[lab[pos] - n]
            j = pos
            while j < N and self.colors[lab[j] - n] == c:
                start_of[lab[j]] = pos
                j += 1
            size_at[pos] = j - pos
            pos = j
        self.refine(lab, start_of, size_at, -1)
        self.visit(lab, start_of, size_at, 0)
        free(lab); free(start_of); free(size_at)

        cert = (
            tuple(self.best_colors[i] for i in range(m)),
            tuple(self.best_masks[i] for i in range(n)),
        )
        best = [self.best_order[i] for i in range(m)]
        gens = [tuple(self.gens[g * m + i] for i in range(m)) for g in range(self.ngens)]
        return cert, best, gens


def canonical_label(n, edges, colors=None):
    """Drop-in replacement for :func:`_canon_py.canonical_label`."""
    m = len(edges)
    if m > 63:
        return _canon_py.canonical_label(n, edges, colors)
    if colors is None:
        colors = [0] * m
    return _Search(n, list(edges), list(colors)).run()
