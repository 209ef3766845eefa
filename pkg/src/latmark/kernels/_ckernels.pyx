# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled versions of the kernels in ``_pykernels``.

All arithmetic is on int64; the dispatcher in ``latmark.kernels`` only routes
inputs here when their magnitudes leave ample headroom, and the completion
loop raises ``OverflowError`` if an intermediate sum ever gets close to the
limit.
"""

import heapq

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport malloc, realloc, free
from libc.stdint cimport int64_t

cdef int64_t LIMIT = (<int64_t>1) << 61


cdef inline bint conformal_le(int64_t* g, int64_t* s, int n) noexcept nogil:
    cdef int k
    cdef int64_t a, b
    for k in range(n):
        a = g[k]
        if a > 0:
            if s[k] < a:
                return False
        elif a < 0:
            if s[k] > a:
                return False
    return True


cdef inline bint compatible(int64_t* f, int64_t* g, int n) noexcept nogil:
    cdef int k
    for k in range(n):
        if (f[k] > 0 and g[k] < 0) or (f[k] < 0 and g[k] > 0):
            return False
    return True


cdef tuple as_tuple(int64_t* v, int n):
    return tuple([v[k] for k in range(n)])


cdef class _Store:
    cdef int64_t* G
    cdef Py_ssize_t m, cap
    cdef int n
    cdef object seen, heap

    def __cinit__(self, int n):
        self.n = n
        self.m = 0
        self.cap = 64
        self.G = <int64_t*>malloc(self.cap * n * sizeof(int64_t))
        if self.G == NULL:
            raise MemoryError()
        self.seen = set()
        self.heap = []

    def __dealloc__(self):
        free(self.G)

    cdef void add(self, tuple vec) except *:
        cdef int64_t* tmp
        cdef int k
        if self.m == self.cap:
            tmp = <int64_t*>realloc(self.G, 2 * self.cap * self.n * sizeof(int64_t))
            if tmp == NULL:
                raise MemoryError()
            self.G = tmp
            self.cap *= 2
        for k in range(self.n):
            self.G[self.m * self.n + k] = vec[k]
        self.m += 1
        self.seen.add(vec)

    cdef void push_pairs(self, Py_ssize_t i) except *:
        cdef Py_ssize_t j
        cdef int k, n = self.n
        cdef int64_t x, nrm
        cdef int64_t* G = self.G
        for j in range(i):
            if compatible(&G[i * n], &G[j * n], n):
                continue
            nrm = 0
            for k in range(n):
                x = G[i * n + k] + G[j * n + k]
                nrm += x if x >= 0 else -x
            heapq.heappush(self.heap, (nrm, j, i))


def graver_completion(generators, int n):
    cdef _Store st
    cdef int64_t* s
    cdef Py_ssize_t i, j, t
    cdef int k
    cdef int64_t x
    cdef bint changed, nonzero
    if n == 0:
        return []
    st = _Store(n)
    s = <int64_t*>malloc(n * sizeof(int64_t))
    if s == NULL:
        raise MemoryError()
    try:
        for g in generators:
            g = tuple(g)
            for h in (g, tuple([-y for y in g])):
                if any(h) and h not in st.seen:
                    st.add(h)
        for i in range(st.m):
            st.push_pairs(i)
        while st.heap:
            _, j, i = heapq.heappop(st.heap)
            for k in range(n):
                x = st.G[i * n + k] + st.G[j * n + k]
                if x > LIMIT or x < -LIMIT:
                    raise OverflowError("intermediate value exceeds int64 headroom")
                s[k] = x
            changed = True
            while changed:
                changed = False
                nonzero = False
                for k in range(n):
                    if s[k] != 0:
                        nonzero = True
                        break
                if not nonzero:
                    break
                for t in range(st.m):
                    if conformal_le(&st.G[t * n], s, n):
                        for k in range(n):
                            s[k] -= st.G[t * n + k]
                        changed = True
                        break
            nonzero = False
            for k in range(n):
                if s[k] != 0:
                    nonzero = True
                    break
            if nonzero:
                r = as_tuple(s, n)
                if r not in st.seen:
                    st.add(r)
                    st.push_pairs(st.m - 1)
        elems = [as_tuple(&st.G[t * n], n) for t in range(st.m)]
    finally:
        free(s)
    elems.sort(key=lambda v: (sum([abs(y) for y in v]), v))
    out = []
    for g in elems:
        minimal = True
        for h in out:
            le = True
            for a, b in zip(h, g):
                if (a > 0 and b < a) or (a < 0 and b > a):
                    le = False
                    break
            if le:
                minimal = False
                break
        if minimal:
            out.append(g)
    return out


def enumerate_points(u, basis, coeffs, rhs, Py_ssize_t cap):
    cdef int r = len(basis)
    cdef int n = len(u)
    cdef int k, i, j, R
    cdef int64_t sacc, b, ak, li
    cdef bint ok, lo_set, hi_set
    if r == 0:
        return [tuple(u)]
    # flatten every level into C arrays
    cdef int* nrows = <int*>malloc(r * sizeof(int))
    cdef int* offs = <int*>malloc(r * sizeof(int))
    cdef int total = 0
    for k in range(r):
        nrows[k] = len(coeffs[k])
        offs[k] = total
        total += nrows[k]
    cdef int64_t* A = <int64_t*>malloc((total * r + 1) * sizeof(int64_t))
    cdef int64_t* C = <int64_t*>malloc((total + 1) * sizeof(int64_t))
    cdef int64_t* B = <int64_t*>malloc((r * n + 1) * sizeof(int64_t))
    cdef int64_t* U = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    cdef int64_t* v = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    cdef int64_t* lam = <int64_t*>malloc(r * sizeof(int64_t))
    cdef int64_t* lo = <int64_t*>malloc(r * sizeof(int64_t))
    cdef int64_t* hi = <int64_t*>malloc(r * sizeof(int64_t))
    out = []
    try:
        for k in range(r):
            for i in range(nrows[k]):
                row = coeffs[k][i]
                for j in range(k + 1):
                    A[(offs[k] + i) * r + j] = row[j]
                C[offs[k] + i] = rhs[k][i]
        for i in range(r):
            for j in range(n):
                B[i * n + j] = basis[i][j]
        for j in range(n):
            U[j] = u[j]

        k = 0
        while True:
            # bounds for level k given lam[0..k-1]
            lo_set = False
            hi_set = False
            for i in range(nrows[k]):
                ak = A[(offs[k] + i) * r + k]
                if ak == 0:
                    continue
                sacc = C[offs[k] + i]
                for j in range(k):
                    sacc += A[(offs[k] + i) * r + j] * lam[j]
                if ak > 0:
                    b = -(sacc // ak)
                    if not lo_set or b > lo[k]:
                        lo[k] = b
                        lo_set = True
                else:
                    b = sacc // (-ak)
                    if not hi_set or b < hi[k]:
                        hi[k] = b
                        hi_set = True
            if not (lo_set and hi_set):
                raise ValueError("unbounded fiber: lattice is not positively graded")
            lam[k] = lo[k]
            while True:
                if lam[k] > hi[k]:
                    k -= 1
                    if k < 0:
                        break
                    lam[k] += 1
                    continue
                if k == r - 1:
                    for j in range(n):
                        v[j] = U[j]
                    for i in range(r):
                        li = lam[i]
                        if li != 0:
                            for j in range(n):
                                v[j] += li * B[i * n + j]
                    ok = True
                    for j in range(n):
                        if v[j] < 0:
                            ok = False
                            break
                    if ok:
                        out.append(as_tuple(v, n))
                        if len(out) > cap:
                            return None
                    lam[k] += 1
                    continue
                break
            if k < 0:
                break
            k += 1
    finally:
        free(nrows); free(offs); free(A); free(C); free(B); free(U); free(v)
        free(lam); free(lo); free(hi)
    return out


def component_labels(elements, moves):
    cdef Py_ssize_t N = len(elements)
    cdef Py_ssize_t M = len(moves)
    cdef int n = len(elements[0]) if N else 0
    cdef Py_ssize_t i, q, a, bb, root
    cdef int j
    cdef bint ok
    if N == 0:
        return []
    cdef int64_t* E = <int64_t*>malloc((N * n + 1) * sizeof(int64_t))
    cdef int64_t* P = <int64_t*>malloc((M * n + 1) * sizeof(int64_t))
    cdef int64_t* D = <int64_t*>malloc((M * n + 1) * sizeof(int64_t))
    cdef int64_t* w = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    cdef Py_ssize_t* parent = <Py_ssize_t*>malloc(N * sizeof(Py_ssize_t))
    try:
        index = {}
        for i in range(N):
            e = elements[i]
            for j in range(n):
                E[i * n + j] = e[j]
            parent[i] = i
            index[PyBytes_FromStringAndSize(<char*>&E[i * n], n * sizeof(int64_t))] = i
        for q in range(M):
            plus, minus = moves[q]
            for j in range(n):
                P[q * n + j] = plus[j]
                D[q * n + j] = minus[j] - plus[j]
        for i in range(N):
            for q in range(M):
                ok = True
                for j in range(n):
                    if E[i * n + j] < P[q * n + j]:
                        ok = False
                        break
                if not ok:
                    continue
                for j in range(n):
                    w[j] = E[i * n + j] + D[q * n + j]
                hit = index.get(PyBytes_FromStringAndSize(<char*>w, n * sizeof(int64_t)))
                if hit is None:
                    continue
                a = i
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                bb = hit
                while parent[bb] != bb:
                    parent[bb] = parent[parent[bb]]
                    bb = parent[bb]
                if a != bb:
                    if a < bb:
                        parent[bb] = a
                    else:
                        parent[a] = bb
        labels = []
        remap = {}
        for i in range(N):
            root = i
            while parent[root] != root:
                root = parent[root]
            labels.append(remap.setdefault(root, len(remap)))
    finally:
        free(E); free(P); free(D); free(w); free(parent)
    return labels
