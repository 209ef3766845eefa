"""Pure-Python reference implementations of the hot loops.

The Cython module ``_ckernels`` exposes the same three functions with the same
signatures and results; this module is the fallback and the oracle the
compiled code is tested against.
"""

from __future__ import annotations

import heapq


def _conformal_le(g, s) -> bool:
    for a, b in zip(g, s):
        if a:
            if a > 0:
                if b < a:
                    return False
            elif b > a:
                return False
    return True


def _normal_form(s, G):
    changed = True
    while changed:
        changed = False
        if not any(s):
            return s
        for g in G:
            if _conformal_le(g, s):
                s = tuple(x - y for x, y in zip(s, g))
                changed = True
                break
    return s


def _compatible(f, g) -> bool:
    return all(a * b >= 0 for a, b in zip(f, g))


def graver_completion(generators, n):
    """Conformally minimal nonzero vectors of the lattice spanned by ``generators``.

    Pottier-style completion: start from the generators and their negatives,
    add normal forms of pairwise sums until every sum reduces to zero, then
    keep the minimal elements.  Both signs of every element are returned.
    """
    G = []
    seen = set()
    for g in generators:
        g = tuple(g)
        for h in (g, tuple(-x for x in g)):
            if any(h) and h not in seen:
                seen.add(h)
                G.append(h)
    heap = []

    def push_pairs(i):
        f = G[i]
        for j in range(i):
            g = G[j]
            if _compatible(f, g):
                continue
            s = tuple(x + y for x, y in zip(f, g))
            heapq.heappush(heap, (sum(abs(x) for x in s), j, i))

    for i in range(len(G)):
        push_pairs(i)
    while heap:
        _, j, i = heapq.heappop(heap)
        s = tuple(x + y for x, y in zip(G[i], G[j]))
        r = _normal_form(s, G)
        if any(r) and r not in seen:
            seen.add(r)
            G.append(r)
            push_pairs(len(G) - 1)
    G.sort(key=lambda v: (sum(abs(x) for x in v), v))
    out = []
    for g in G:
        if not any(_conformal_le(h, g) for h in out):
            out.append(g)
    return out


def enumerate_points(u, basis, coeffs, rhs, cap):
    """Integer points ``v = u + lam @ basis >= 0`` of a bounded region.

    ``coeffs[k]`` / ``rhs[k]`` describe the projection of the region onto
    ``lam_0..lam_k`` as rows ``a . lam[:k+1] + c >= 0``.  Returns the list of
    points ``v`` (as tuples), or ``None`` once more than ``cap`` are found.
    """
    r = len(basis)
    n = len(u)
    if r == 0:
        return [tuple(u)]
    out = []
    lam = [0] * r

    def bounds(k):
        lo = hi = None
        for a, c in zip(coeffs[k], rhs[k]):
            ak = a[k]
            if not ak:
                continue
            s = c
            for i in range(k):
                s += a[i] * lam[i]
            if ak > 0:
                b = -(s // ak)  # ceil(-s / ak)
                if lo is None or b > lo:
                    lo = b
            else:
                b = s // (-ak)
                if hi is None or b < hi:
                    hi = b
        return lo, hi

    def rec(k):
        lo, hi = bounds(k)
        if lo is None or hi is None:
            raise ValueError("unbounded fiber: lattice is not positively graded")
        for x in range(lo, hi + 1):
            lam[k] = x
            if k + 1 < r:
                if not rec(k + 1):
                    return False
            else:
                v = list(u)
                for i in range(r):
                    li = lam[i]
                    if li:
                        row = basis[i]
                        for j in range(n):
                            v[j] += li * row[j]
                if min(v) >= 0:
                    out.append(tuple(v))
                    if len(out) > cap:
                        return False
        return True

    if not rec(0):
        return None
    return out


def component_labels(elements, moves):
    """Connected-component labels of the fiber graph.

    ``elements`` is a list of exponent tuples; ``moves`` a list of
    ``(plus, minus)`` pairs.  ``v`` and ``v - plus + minus`` are adjacent
    whenever both are elements.  Labels are ``0..c-1`` in order of first
    appearance.
    """
    index = {v: i for i, v in enumerate(elements)}
    parent = list(range(len(elements)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    n = len(elements[0]) if elements else 0
    for i, v in enumerate(elements):
        for plus, minus in moves:
            ok = True
            for j in range(n):
                if v[j] < plus[j]:
                    ok = False
                    break
            if not ok:
                continue
            w = tuple(v[j] - plus[j] + minus[j] for j in range(n))
            k = index.get(w)
            if k is not None:
                a, b = find(i), find(k)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    labels = []
    remap = {}
    for i in range(len(elements)):
        root = find(i)
        labels.append(remap.setdefault(root, len(remap)))
    return labels
