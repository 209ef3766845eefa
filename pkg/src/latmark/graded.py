"""Positively graded lattices: fibers, Graver bases, Markov bases.

Every fiber of a positively graded lattice is finite.  Markov bases are built
fiber by fiber in increasing degree: the fibers of Graver elements are the
only candidates, and each is completed with just enough binomials to connect
the components left by the moves chosen so far.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

from . import kernels
from .binomial import Binomial
from .errors import FiberTooLargeError, NotPositivelyGradedError
from .fourier_motzkin import projection_chain, solve
from .lattice import IntVector, Lattice, dot, integer_kernel, reduce_mod, vec
from .pure import decompose

DEFAULT_MAX_FIBER = 100_000


def max_fiber_size() -> int:
    raw = os.environ.get("LATMARK_MAX_FIBER", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_FIBER
    except ValueError:
        return DEFAULT_MAX_FIBER


@dataclass(frozen=True)
class Fiber:
    representative: IntVector
    elements: tuple[IntVector, ...]  # sorted lexicographically

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.elements


@dataclass(frozen=True)
class FiberGraph:
    vertices: tuple[IntVector, ...]
    edges: tuple[tuple[int, int, Binomial], ...]
    labels: tuple[int, ...]

    @property
    def n_components(self) -> int:
        return len(set(self.labels))


@dataclass(frozen=True)
class GraverBasis:
    moves: tuple[IntVector, ...]  # one representative of each +-pair

    def __len__(self) -> int:
        return len(self.moves)

    def __contains__(self, v) -> bool:
        v = tuple(v)
        return v in self._all

    @property
    def _all(self) -> frozenset:
        return frozenset(self.moves) | frozenset(tuple(-x for x in g) for g in self.moves)


@dataclass(frozen=True)
class MarkovFiber:
    """A fiber that needs new binomials, with the components it had before them."""

    fiber: Fiber
    degree: int
    labels: tuple[int, ...]
    binomials: tuple[Binomial, ...]

    @property
    def t(self) -> int:
        return len(set(self.labels))


@dataclass(frozen=True)
class GradedMarkov:
    lattice: Lattice
    grading: IntVector
    basis: tuple[Binomial, ...]
    markov_fibers: tuple[MarkovFiber, ...]
    _by_key: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def mu(self) -> int:
        return len(self.basis)

    def fiber_of(self, v: Sequence[int]) -> MarkovFiber | None:
        """The Markov fiber containing ``v``, or ``None``."""
        return self._by_key.get(reduce_mod(self.lattice, v))


def require_positively_graded(L: Lattice) -> None:
    if decompose(L).sigma:
        raise NotPositivelyGradedError("the lattice contains a nonzero nonnegative vector")


def _first_positive(v: Sequence[int]) -> IntVector:
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


@lru_cache(maxsize=256)
def grading_vector(L: Lattice) -> IntVector:
    """A strictly positive integer vector orthogonal to ``L``."""
    require_positively_graded(L)
    n = L.ambient_dim
    if L.rank == 0:
        return (1,) * n
    K = integer_kernel(L.basis_rows, n)
    A = [tuple(k[j] for k in K) for j in range(n)]
    mu = solve(A, [1] * n)
    assert mu is not None, "positively graded lattices admit a positive grading"
    den = lcm(*(Fraction(x).denominator for x in mu))
    w = [0] * n
    for c, k in zip(mu, K):
        c = int(c * den)
        for j in range(n):
            w[j] += c * k[j]
    g = 0
    for x in w:
        g = gcd(g, x)
    return tuple(x // g for x in w)


class _FiberEngine:
    """Projection chain of ``{lam : u + lam @ B >= 0}``, reused for every ``u``."""

    def __init__(self, L: Lattice):
        self.L = L
        self.basis = [list(b) for b in L.basis_rows]
        r, n = L.rank, L.ambient_dim
        if r:
            A = [tuple(L.basis_rows[k][j] for k in range(r)) for j in range(n)]
            T = [tuple(int(i == j) for i in range(n)) for j in range(n)]
            levels = projection_chain(A, T)
            self.coeffs = [[list(a) for a, _ in lv] for lv in levels]
            self.tails = [[t for _, t in lv] for lv in levels]
        else:
            self.coeffs, self.tails = [], []

    def points(self, u: Sequence[int], cap: int) -> list[IntVector]:
        u = vec(u)
        rhs = [[dot(t, u) for t in lv] for lv in self.tails]
        pts = kernels.enumerate_points(u, self.basis, self.coeffs, rhs, cap)
        if pts is None:
            raise FiberTooLargeError(f"fiber of {u} has more than {cap} elements (LATMARK_MAX_FIBER)")
        return sorted(pts)


@lru_cache(maxsize=64)
def _engine(L: Lattice) -> _FiberEngine:
    require_positively_graded(L)
    return _FiberEngine(L)


def enumerate_fiber(L: Lattice, u: Sequence[int], cap: int | None = None) -> Fiber:
    """All ``v >= 0`` with ``v - u`` in ``L``."""
    u = vec(u)
    if min(u, default=0) < 0:
        raise ValueError("fiber representative must be nonnegative")
    pts = _engine(L).points(u, max_fiber_size() if cap is None else cap)
    return Fiber(u, tuple(pts))


def fiber_graph(F: Fiber, S: Iterable[Binomial]) -> FiberGraph:
    S = list(S)
    moves = [(B.plus, B.minus) for B in S]
    labels = kernels.component_labels(list(F.elements), moves) if F.elements else []
    index = {v: i for i, v in enumerate(F.elements)}
    edges = []
    for i, v in enumerate(F.elements):
        for B in S:
            if all(a >= b for a, b in zip(v, B.plus)):
                w = tuple(a - b + c for a, b, c in zip(v, B.plus, B.minus))
                j = index.get(w)
                if j is not None and j != i:
                    edges.append((i, j, B))
    return FiberGraph(F.elements, tuple(edges), tuple(labels))


def spath_connected(F: Fiber, S: Iterable[Binomial]) -> bool:
    """True iff the moves of ``S`` connect every pair of elements of ``F``."""
    if len(F.elements) <= 1:
        return True
    moves = [(B.plus, B.minus) for B in S]
    labels = kernels.component_labels(list(F.elements), moves)
    return max(labels) == 0


@lru_cache(maxsize=256)
def graver_basis(L: Lattice) -> GraverBasis:
    require_positively_graded(L)
    if L.rank == 0:
        return GraverBasis(())
    full = kernels.graver_completion(L.basis_rows, L.ambient_dim)
    reps = sorted({_first_positive(g) for g in full}, key=lambda v: (sum(abs(x) for x in v), v))
    return GraverBasis(tuple(reps))


def _spanning_binomials(F: Fiber, labels: Sequence[int], rng: random.Random | None) -> list[Binomial]:
    groups: dict[int, list[IntVector]] = {}
    for v, c in zip(F.elements, labels):
        groups.setdefault(c, []).append(v)
    comps = sorted(groups)
    if rng is None:
        root = groups[comps[0]][0]
        return [Binomial(groups[c][0], root) for c in comps[1:]]
    order = comps[:]
    rng.shuffle(order)
    reps = {c: rng.choice(groups[c]) for c in comps}
    out = []
    for i in range(1, len(order)):
        parent = order[rng.randrange(i)]
        a, b = reps[order[i]], reps[parent]
        if rng.random() < 0.5:
            a, b = b, a
        out.append(Binomial(a, b))
    return out


@lru_cache(maxsize=256)
def graded_markov(L: Lattice, seed: int | None = None) -> GradedMarkov:
    """Markov basis of a positively graded lattice together with its Markov fibers.

    ``seed`` randomises the tie-breaking (representatives, tree shapes, order of
    fibers of equal degree); ``None`` gives the canonical lexicographic choice.
    """
    omega = grading_vector(L)
    rng = random.Random(seed) if seed is not None else None
    candidates: dict[IntVector, IntVector] = {}
    for g in graver_basis(L).moves:
        plus = tuple(x if x > 0 else 0 for x in g)
        candidates.setdefault(reduce_mod(L, plus), plus)
    keyed = sorted(candidates.items(), key=lambda kv: (dot(omega, kv[1]), kv[1]))
    if rng is not None:
        # shuffle within blocks of equal degree
        blocks: dict[int, list] = {}
        for kv in keyed:
            blocks.setdefault(dot(omega, kv[1]), []).append(kv)
        keyed = []
        for d in sorted(blocks):
            rng.shuffle(blocks[d])
            keyed.extend(blocks[d])
    basis: list[Binomial] = []
    fibers: list[MarkovFiber] = []
    by_key: dict = {}
    for key, rep in keyed:
        F = enumerate_fiber(L, rep)
        labels = kernels.component_labels(list(F.elements), [(B.plus, B.minus) for B in basis])
        if max(labels) == 0:
            continue
        new = _spanning_binomials(F, labels, rng)
        basis.extend(new)
        mf = MarkovFiber(F, dot(omega, rep), tuple(labels), tuple(new))
        fibers.append(mf)
        by_key[key] = mf
    return GradedMarkov(L, omega, tuple(basis), tuple(fibers), by_key)


def markov_basis_graded(L: Lattice, seed: int | None = None) -> tuple[list[Binomial], list[Fiber]]:
    """A Markov basis of ``I_L`` and the list of Markov fibers, in processing order."""
    G = graded_markov(L, seed)
    return list(G.basis), [mf.fiber for mf in G.markov_fibers]


def indispensables_graded(L: Lattice) -> tuple[list[Binomial], list[IntVector]]:
    """Indispensable binomials and monomials of a positively graded lattice ideal.

    A binomial is indispensable when its Markov fiber has exactly two elements
    (necessarily in different components).  A monomial is indispensable when it
    forms a component on its own in some Markov fiber.
    """
    G = graded_markov(L)
    binomials = []
    monomials = []
    for mf in G.markov_fibers:
        els = mf.fiber.elements
        if len(els) == 2:
            binomials.append(Binomial(els[1], els[0]))
        counts: dict[int, int] = {}
        for c in mf.labels:
            counts[c] = counts.get(c, 0) + 1
        monomials.extend(v for v, c in zip(els, mf.labels) if counts[c] == 1)
    return sorted(binomials), sorted(set(monomials))
