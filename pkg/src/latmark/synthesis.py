"""Markov bases of arbitrary lattice ideals.

Fibers of ``L`` fall into equivalence classes, and each class is keyed by the
corresponding fiber of the projected lattice ``L^sigma``.  A Markov basis of
``I_L`` is a Markov basis of the pure part plus lifts of a Markov basis of
``I_{L^sigma}``; verification reduces user sets to the same two pieces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .binomial import Binomial
from .errors import DimensionError, NotInLatticeError
from .graded import Fiber, GradedMarkov, enumerate_fiber, graded_markov, indispensables_graded
from .lattice import (
    IntVector,
    Lattice,
    canonicalize,
    combine,
    coordinates,
    embed,
    is_member,
    reduce_mod,
    restrict,
    span_equals,
    sub,
    vec,
)
from . import kernels
from .pure import decompose, pure_markov_basis, support_chain, verify_pure_markov

INFINITE = math.inf


@dataclass(frozen=True)
class FiberDescriptor:
    representative: IntVector
    projected_fiber: Fiber
    min_generators: tuple[IntVector, ...]
    # sim_classes[i] holds the minimal generators projecting to projected_fiber.elements[i]
    sim_classes: tuple[tuple[IntVector, ...], ...]
    gamma_labels: tuple[int, ...]

    @property
    def gamma_components(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(self.gamma_labels):
            groups.setdefault(c, []).append(i)
        return tuple(tuple(groups[c]) for c in sorted(groups))

    @property
    def t_value(self) -> int:
        return len(set(self.gamma_labels))


@dataclass(frozen=True, order=True)
class ClassDescriptor:
    projected_fiber: tuple[IntVector, ...]
    class_cardinality: float | int
    t_value: int


@dataclass(frozen=True)
class MarkovReport:
    basis: tuple[Binomial, ...]
    mu: int
    class_multiset: tuple[ClassDescriptor, ...]
    pure_part: tuple[Binomial, ...]
    indispensable_binomials: tuple[Binomial, ...]
    indispensable_monomials: tuple[IntVector, ...]
    universal_markov_finite: bool
    is_ci: bool
    rank_pure: int


def _projected_coords(L: Lattice):
    d = decompose(L)
    return d, d.complement


def _lift(L: Lattice, w: Sequence[int]) -> IntVector:
    """An element of ``L`` projecting onto ``w`` in ``L^sigma``."""
    d = decompose(L)
    c = coordinates(d.projected, w)
    if c is None:
        raise NotInLatticeError(f"{tuple(w)} is not in the projected lattice")
    return combine(c, d.lifts, L.ambient_dim)


@lru_cache(maxsize=256)
def _sigma_lattice(L: Lattice) -> Lattice:
    """The pure sublattice restricted to its support coordinates."""
    d = decompose(L)
    return canonicalize([restrict(b, d.sigma) for b in d.pure_basis], len(d.sigma))


def class_cardinality(L: Lattice) -> float | int:
    """Number of fibers in each equivalence class (``INFINITE`` when unbounded)."""
    q = decompose(L).quotient.cardinality
    return INFINITE if q is None else q


@lru_cache(maxsize=4096)
def _coset_minima(Lam: Lattice, a: IntVector) -> tuple[IntVector, ...]:
    """Minimal points of ``(a + Lam) ∩ N^s`` via the homogenized lattice."""
    s = Lam.ambient_dim
    if s == 0:
        return ((),)
    gens = [tuple(b) + (0,) for b in Lam.basis_rows] + [tuple(a) + (1,)]
    out = [g[:-1] for g in kernels.graver_completion(gens, s + 1) if g[-1] == 1 and min(g) >= 0]
    return tuple(sorted(out))


def minimal_coset_points(Lam: Lattice, a: Sequence[int]) -> list[IntVector]:
    a = vec(a)
    return list(_coset_minima(Lam, reduce_mod(Lam, a)))


def _gamma_moves(G: GradedMarkov, degree: int) -> list[tuple[IntVector, IntVector]]:
    return [(B.plus, B.minus) for mf in G.markov_fibers if mf.degree < degree for B in mf.binomials]


def fiber_descriptor(L: Lattice, u: Sequence[int]) -> FiberDescriptor:
    u = vec(u)
    if len(u) != L.ambient_dim:
        raise DimensionError(f"monomial of length {len(u)} in Z^{L.ambient_dim}")
    if min(u, default=0) < 0:
        raise ValueError("exponent vector must be nonnegative")
    d, comp = _projected_coords(L)
    sigma = d.sigma
    P = d.projected
    up = restrict(u, comp)
    F = enumerate_fiber(P, up)
    Lam = _sigma_lattice(L)
    sims = []
    for p in F.elements:
        v0 = tuple(x + y for x, y in zip(u, _lift(L, sub(p, up))))
        pts = minimal_coset_points(Lam, restrict(v0, sigma))
        sims.append(tuple(sorted(embed(x, sigma, L.ambient_dim, base=v0) for x in pts)))
    G = graded_markov(P)
    degree = sum(a * b for a, b in zip(G.grading, up))
    labels = kernels.component_labels(list(F.elements), _gamma_moves(G, degree)) if F.elements else []
    mins = tuple(sorted(v for cls in sims for v in cls))
    return FiberDescriptor(u, F, mins, tuple(sims), tuple(labels))


def class_leq(L: Lattice, F, G) -> bool:
    """Whether the class of ``F`` precedes the class of ``G``.

    Accepts fiber or class descriptors; compares projected fibers.
    """
    def elements(X):
        pf = X.projected_fiber
        return pf.elements if isinstance(pf, Fiber) else pf

    return any(all(a <= b for a, b in zip(p, q)) for p in elements(F) for q in elements(G))


def lift_binomial(L: Lattice, sigma, w: Sequence[int]) -> Binomial:
    """A binomial of ``I_L`` whose terms project to ``x^{w+}`` and ``x^{w-}``."""
    d = decompose(L)
    u = list(_lift(L, w))
    if d.sigma:
        red = reduce_mod(_sigma_lattice(L), restrict(u, d.sigma))
        u = list(embed(red, d.sigma, L.ambient_dim, base=u))
    return Binomial.from_vector(u)


def indispensables_general(L: Lattice) -> tuple[list[Binomial], list[IntVector]]:
    d = decompose(L)
    n = L.ambient_dim
    zero = (0,) * n
    if d.rank_pure > 1:
        return [], [zero]
    if d.rank_pure == 1:
        u = d.pure_basis[0]
        if min(u) < 0:
            u = tuple(-x for x in u)
        return [Binomial(u, zero)], [u, zero]
    if L.rank == 0:
        return [], []
    return indispensables_graded(L)


def universal_markov_finite(L: Lattice) -> bool:
    d = decompose(L)
    if d.rank_pure > 1:
        return False
    if d.rank_pure == 1 and d.rank_projected > 0:
        return False
    return True


@lru_cache(maxsize=256)
def markov_basis_general(L: Lattice, seed: int | None = None) -> MarkovReport:
    d = decompose(L)
    pure_part = tuple(pure_markov_basis(d.pure_lattice, d.sigma))
    G = graded_markov(d.projected, seed)
    lifted = tuple(lift_binomial(L, d.sigma, B.vector) for B in G.basis)
    card = class_cardinality(L)
    classes = tuple(sorted(ClassDescriptor(mf.fiber.elements, card, mf.t) for mf in G.markov_fibers))
    ib, im = indispensables_general(L)
    basis = pure_part + lifted
    return MarkovReport(
        basis=basis,
        mu=len(basis),
        class_multiset=classes,
        pure_part=pure_part,
        indispensable_binomials=tuple(ib),
        indispensable_monomials=tuple(im),
        universal_markov_finite=universal_markov_finite(L),
        is_ci=G.mu == d.rank_projected,
        rank_pure=d.rank_pure,
    )


def _check_members(L: Lattice, S: Sequence[Binomial]) -> None:
    for B in S:
        if B.n != L.ambient_dim:
            raise DimensionError(f"binomial {B} has {B.n} variables, lattice has {L.ambient_dim}")
        if not is_member(L, B.vector):
            raise NotInLatticeError(f"{B}: difference {B.vector} is not a lattice element")


def _split_set(L: Lattice, S: Sequence[Binomial]):
    d, comp = _projected_coords(L)
    pure, rest = [], []
    for B in S:
        (pure if not any(restrict(B.plus, comp)) else rest).append(B)
    return d, comp, pure, rest


def generating_set_failures(L: Lattice, S: Sequence[Binomial]) -> list[str]:
    S = list(S)
    _check_members(L, S)
    d, comp, pure, rest = _split_set(L, S)
    out = []
    if d.rank_pure:
        if not pure or not span_equals(d.pure_lattice, [B.vector for B in pure]):
            out.append("pure part: differences do not span the pure sublattice")
        else:
            reached, _ = support_chain(pure)
            if not set(d.sigma) <= reached:
                out.append("pure part: no chain of supports reaches every coordinate of sigma")
    G = graded_markov(d.projected)
    moves = [Binomial(restrict(B.plus, comp), restrict(B.minus, comp)) for B in rest]
    pairs = [(B.plus, B.minus) for B in moves]
    for mf in G.markov_fibers:
        labels = kernels.component_labels(list(mf.fiber.elements), pairs)
        if max(labels) != 0:
            out.append(f"class of {_fmt(mf.fiber.elements[0])} (projected) is not connected")
    return out


def verify_generating_set(L: Lattice, S: Sequence[Binomial]) -> bool:
    return not generating_set_failures(L, S)


def markov_failures(L: Lattice, S: Sequence[Binomial]) -> list[str]:
    S = list(S)
    _check_members(L, S)
    d, comp, pure, rest = _split_set(L, S)
    mu = markov_basis_general(L).mu
    out = []
    if len(S) > mu:
        out.append(f"cardinality exceeds mu: {len(S)} > {mu}")
    elif len(S) < mu:
        out.append(f"cardinality below mu: {len(S)} < {mu}")
    if len(pure) != d.rank_pure:
        out.append(f"pure class: {len(pure)} binomials, rank of the pure sublattice is {d.rank_pure}")
    elif not verify_pure_markov(d.pure_lattice, pure, d.sigma):
        out.append("pure class: binomials do not form a Markov basis of the pure sublattice")
    G = graded_markov(d.projected)
    edges: dict[int, list[tuple[int, int]]] = {}
    index = {id(mf): i for i, mf in enumerate(G.markov_fibers)}
    for B in rest:
        p, m = restrict(B.plus, comp), restrict(B.minus, comp)
        mf = G.fiber_of(p)
        if mf is None:
            out.append(f"{B}: not in the class of a Markov fiber")
            continue
        pos = {v: k for k, v in enumerate(mf.fiber.elements)}
        a, b = mf.labels[pos[p]], mf.labels[pos[m]]
        if a == b:
            out.append(f"{B}: joins two vertices of the same component")
            continue
        edges.setdefault(index[id(mf)], []).append((a, b))
    for i, mf in enumerate(G.markov_fibers):
        es = edges.get(i, [])
        parent = list(range(mf.t))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        joined = 0
        for a, b in es:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                joined += 1
        if len(es) != mf.t - 1 or joined != mf.t - 1:
            out.append(
                f"class of {_fmt(mf.fiber.elements[0])} (projected): {len(es)} edges do not form "
                f"a spanning tree on {mf.t} components"
            )
    return out


def verify_markov_general(L: Lattice, S: Sequence[Binomial]) -> bool:
    return not markov_failures(L, S)


def _fmt(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)
