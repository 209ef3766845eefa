"""Exact Fourier-Motzkin elimination.

Two flavours are provided.  :func:`solve` decides feasibility of
``A x >= b`` over the rationals and returns a point.  :func:`projection_chain`
eliminates variables from ``A x + T y >= 0`` while keeping ``y`` symbolic, so
that one elimination can be reused for every right-hand side ``y``; this is
how fibers of a fixed lattice are enumerated.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, gcd
from typing import Sequence

Row = tuple[tuple[int, ...], tuple]


def _normalize(a: Sequence[int], tail: Sequence) -> Row:
    g = 0
    for x in a:
        g = gcd(g, x)
    for x in tail:
        if isinstance(x, int):
            g = gcd(g, x)
        else:
            g = 1
            break
    if g > 1:
        a = tuple(x // g for x in a)
        tail = tuple(x // g for x in tail)
    return tuple(a), tuple(tail)


def _eliminate_last(rows: list[Row]) -> list[Row]:
    """Remove the last variable from every row by pairwise combination."""
    pos, neg, out = [], [], []
    for a, t in rows:
        c = a[-1]
        if c > 0:
            pos.append((a, t))
        elif c < 0:
            neg.append((a, t))
        else:
            out.append((a[:-1], t))
    for ap, tp in pos:
        for an, tn in neg:
            p, q = ap[-1], -an[-1]
            a = tuple(q * x + p * y for x, y in zip(ap[:-1], an[:-1]))
            t = tuple(q * x + p * y for x, y in zip(tp, tn))
            out.append((a, t))
    seen = set()
    uniq = []
    for a, t in out:
        row = _normalize(a, t)
        if row not in seen:
            seen.add(row)
            uniq.append(row)
    return uniq


def projection_chain(A: Sequence[Sequence[int]], T: Sequence[Sequence[int]]) -> list[list[Row]]:
    """Successive projections of ``{x : A x + T y >= 0}``.

    Entry ``k`` of the result is a system over ``x_0..x_k`` (rows ``(a, t)``
    with ``len(a) == k + 1``); entry ``-1`` is the original system.
    Rows that lose all ``x`` coefficients are dropped: they only constrain
    ``y``, which the caller guarantees to be feasible.
    """
    nvars = len(A[0]) if A else 0
    rows = [_normalize(tuple(a), tuple(t)) for a, t in zip(A, T)]
    rows = list(dict.fromkeys(rows))
    levels = [rows]
    for _ in range(nvars - 1):
        rows = [r for r in _eliminate_last(rows) if any(r[0])]
        levels.append(rows)
    levels.reverse()
    return levels


def solve(A: Sequence[Sequence[int]], b: Sequence) -> list[Fraction] | None:
    """A rational point with ``A x >= b``, or ``None`` when infeasible."""
    nvars = len(A[0]) if A else 0
    rows: list[Row] = [(tuple(a), (Fraction(bi),)) for a, bi in zip(A, b)]
    systems = [rows]
    for _ in range(nvars):
        rows = _eliminate_last(rows)
        systems.append(rows)
    if any(t[0] > 0 for a, t in rows):
        return None
    x: list[Fraction] = []
    for k in range(nvars):
        lo = hi = None
        for a, t in systems[nvars - 1 - k]:
            c = a[k]
            if not c:
                continue
            rest = t[0] - sum(ai * xi for ai, xi in zip(a, x))
            bound = Fraction(rest, 1) / c
            if c > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        if lo is None and hi is None:
            val = Fraction(0)
        elif lo is None:
            val = min(Fraction(floor(hi)), Fraction(0)) if hi >= 0 else hi
        elif hi is None:
            val = max(Fraction(ceil(lo)), Fraction(0))
        else:
            assert lo <= hi, "elimination is exact; bounds cannot cross"
            val = Fraction(ceil(lo)) if ceil(lo) <= hi else lo
        x.append(val)
    return x
