"""Pure decomposition of a lattice and Markov bases of pure lattices.

A lattice ``L`` splits into the part spanned by its nonnegative vectors
(``L_pure``, supported on ``sigma``) and the projection ``L^sigma`` onto the
remaining coordinates, which contains no nonzero nonnegative vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from . import kernels
from .binomial import Binomial
from .errors import NoPureElementsError
from .fourier_motzkin import solve
from .lattice import (
    IntVector,
    Lattice,
    SmithInvariants,
    canonicalize,
    combine,
    content,
    embed,
    extend_to_basis,
    hnf_with_transform,
    is_member,
    primitive_scale,
    restrict,
    smith_invariants,
    span_equals,
    support,
)

Support = tuple[int, ...]


@dataclass(frozen=True)
class DecompositionReport:
    ambient_dim: int
    sigma: Support
    witness: IntVector | None
    pure_basis: tuple[IntVector, ...]
    projected_basis: tuple[IntVector, ...]
    quotient: SmithInvariants
    hilbert: tuple[IntVector, ...]
    # lifts[i] is an element of L projecting onto projected_basis[i]
    lifts: tuple[IntVector, ...]

    @property
    def complement(self) -> Support:
        s = set(self.sigma)
        return tuple(i for i in range(self.ambient_dim) if i not in s)

    @property
    def rank_pure(self) -> int:
        return len(self.pure_basis)

    @property
    def rank_projected(self) -> int:
        return len(self.projected_basis)

    @property
    def pure_lattice(self) -> Lattice:
        return Lattice(self.ambient_dim, self.pure_basis)

    @property
    def projected(self) -> Lattice:
        return Lattice(self.ambient_dim - len(self.sigma), self.projected_basis)


def _nonnegative_direction(L: Lattice, i: int) -> IntVector | None:
    """An element ``v >= 0`` of ``L`` with ``v[i] > 0``, if one exists."""
    r, n = L.rank, L.ambient_dim
    if r == 0:
        return None
    A = [tuple(L.basis_rows[k][j] for k in range(r)) for j in range(n)]
    b = [1 if j == i else 0 for j in range(n)]
    lam = solve(A, b)
    if lam is None:
        return None
    den = lcm(*(Fraction(x).denominator for x in lam))
    coeffs = [int(x * den) for x in lam]
    g = content(coeffs)
    return combine([c // g for c in coeffs], L.basis_rows, n)


def _sigma_and_witness(L: Lattice) -> tuple[Support, IntVector | None]:
    covered: set[int] = set()
    total = [0] * L.ambient_dim
    for i in range(L.ambient_dim):
        if i in covered:
            continue
        v = _nonnegative_direction(L, i)
        if v is None:
            continue
        covered |= support(v)
        total = [a + b for a, b in zip(total, v)]
    if not covered:
        return (), None
    return tuple(sorted(covered)), primitive_scale(L, total)


def support_sigma(L: Lattice) -> Support:
    """Coordinates on which some nonnegative lattice vector is positive (0-based)."""
    return decompose(L).sigma


def pure_witness(L: Lattice) -> IntVector:
    w = decompose(L).witness
    if w is None:
        raise NoPureElementsError("the lattice has no nonzero nonnegative element")
    return w


def orthant_hilbert(generators: Sequence[Sequence[int]], s: int) -> list[IntVector]:
    """Hilbert basis of ``M ∩ N^s`` for the lattice ``M`` spanned by ``generators``.

    These are exactly the nonnegative elements of the Graver basis of ``M``.
    """
    gens = [tuple(g) for g in generators if any(g)]
    if not gens or s == 0:
        return []
    out = [g for g in kernels.graver_completion(gens, s) if min(g) >= 0]
    return sorted(out, key=lambda v: (sum(v), tuple(-x for x in v)))


def _split(L: Lattice, sigma: Support):
    n = L.ambient_dim
    comp = [i for i in range(n) if i not in set(sigma)]
    rows = L.basis_rows
    P = [restrict(b, comp) for b in rows]
    H, U, pivots = hnf_with_transform(P, len(comp))
    k = len(pivots)
    UB = [combine(u, rows, n) for u in U]
    projected = tuple(H[:k])
    lifts = tuple(UB[:k])
    pure = canonicalize(UB[k:], n)
    return pure, projected, lifts


@lru_cache(maxsize=256)
def decompose(L: Lattice) -> DecompositionReport:
    sigma, witness = _sigma_and_witness(L)
    pure, projected, lifts = _split(L, sigma)
    lam = [restrict(b, sigma) for b in pure.basis_rows]
    s = len(sigma)
    hilbert = tuple(embed(h, sigma, L.ambient_dim) for h in orthant_hilbert(lam, s))
    return DecompositionReport(
        ambient_dim=L.ambient_dim,
        sigma=sigma,
        witness=witness,
        pure_basis=pure.basis_rows,
        projected_basis=projected,
        quotient=smith_invariants(lam, s),
        hilbert=hilbert,
        lifts=lifts,
    )


def hilbert_basis_positive(L: Lattice) -> list[IntVector]:
    return list(decompose(L).hilbert)


def pure_sublattice(L: Lattice, sigma: Support | None = None) -> Lattice:
    return decompose(L).pure_lattice


def projected_lattice(L: Lattice, sigma: Support | None = None) -> Lattice:
    """``L^sigma``, living in ``Z^(n - |sigma|)`` over the coordinates outside sigma."""
    return decompose(L).projected


def _first_vector(L_pure: Lattice, sigma: Support) -> IntVector:
    full = set(sigma)
    cands = [h for h in decompose(L_pure).hilbert if support(h) == full]
    if cands:
        return min(cands, key=lambda h: (sum(h), tuple(-x for x in h)))
    return pure_witness(L_pure)


def _positive_completion(L_pure: Lattice, sigma: Support, strict: bool) -> list[IntVector]:
    if L_pure.rank == 0:
        raise NoPureElementsError("a pure lattice of rank 0 has no positive basis")
    if not sigma:
        sigma = decompose(L_pure).sigma
    u1 = _first_vector(L_pure, sigma)
    basis = extend_to_basis(L_pure, u1)
    floor_value = 1 if strict else 0
    out = [u1]
    for b in basis[1:]:
        best = None
        for sgn in (1, -1):
            l = 0
            for j in sigma:
                need = floor_value - sgn * b[j]
                if need > 0:
                    l = max(l, -(-need // u1[j]))
            v = tuple(sgn * x + l * y for x, y in zip(b, u1))
            key = (sum(v), tuple(-x for x in v))
            if best is None or key < best[0]:
                best = (key, v)
        out.append(best[1])
    return out


def pure_positive_basis(L_pure: Lattice, sigma: Support | None = None) -> list[IntVector]:
    """A basis of a pure lattice whose members are all positive on sigma."""
    return _positive_completion(L_pure, sigma or (), strict=True)


def pure_markov_basis(L_pure: Lattice, sigma: Support | None = None) -> list[Binomial]:
    """``rank`` binomials ``x^u - 1`` generating the ideal of a pure lattice."""
    if L_pure.rank == 0:
        return []
    zero = (0,) * L_pure.ambient_dim
    return [Binomial(u, zero) for u in _positive_completion(L_pure, sigma or (), strict=False)]


def support_chain(S: Sequence[Binomial]) -> tuple[frozenset[int], int]:
    """Greedy ordering of pure binomials as in the pure-lattice criterion.

    Start from a binomial with a constant term, then repeatedly take a binomial
    one of whose terms is supported on the coordinates reached so far.  Returns
    the reached coordinates and how many binomials were ordered.
    """
    remaining = list(S)
    reached: frozenset[int] = frozenset()
    used = 0
    start = next((B for B in remaining if not any(B.plus) or not any(B.minus)), None)
    if start is None:
        return reached, 0
    remaining.remove(start)
    reached = support(start.plus) | support(start.minus)
    used = 1
    progress = True
    while progress and remaining:
        progress = False
        for B in list(remaining):
            sp, sm = support(B.plus), support(B.minus)
            if sm <= reached or sp <= reached:
                reached = reached | sp | sm
                remaining.remove(B)
                used += 1
                progress = True
    return reached, used


def verify_pure_markov(L_pure: Lattice, S: Sequence[Binomial], sigma: Support | None = None) -> bool:
    """Decide whether ``S`` is a Markov basis of the ideal of the pure lattice ``L_pure``."""
    S = list(S)
    if len(S) != L_pure.rank:
        return False
    if not S:
        return True
    if sigma is None:
        sigma = decompose(L_pure).sigma
    allowed = frozenset(sigma)
    for B in S:
        if B.n != L_pure.ambient_dim or not is_member(L_pure, B.vector):
            return False
        if not (support(B.plus) | support(B.minus)) <= allowed:
            return False
    if not span_equals(L_pure, [B.vector for B in S]):
        return False
    _, used = support_chain(S)
    return used == len(S)
