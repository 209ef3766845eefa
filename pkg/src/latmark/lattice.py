"""Exact integer linear algebra on lattices in Z^n.

Vectors are plain tuples of Python ints, so every computation is exact no
matter how large the entries get.  A :class:`Lattice` always stores its basis
in row Hermite normal form (nonnegative pivots, entries above a pivot reduced
into ``[0, pivot)``), which makes equality a tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError, NotInLatticeError, NotPrimitiveError

IntVector = tuple[int, ...]


def vec(v: Iterable[int]) -> IntVector:
    return tuple(int(x) for x in v)


def add(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Sequence[int]) -> IntVector:
    return tuple(k * x for x in a)


def neg(a: Sequence[int]) -> IntVector:
    return tuple(-x for x in a)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def content(a: Iterable[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    return reduce(gcd, a, 0)


def combine(coeffs: Sequence[int], rows: Sequence[Sequence[int]], n: int) -> IntVector:
    out = [0] * n
    for c, row in zip(coeffs, rows):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return tuple(out)


def support(a: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(a) if x)


def positive_part(a: Sequence[int]) -> IntVector:
    return tuple(x if x > 0 else 0 for x in a)


def negative_part(a: Sequence[int]) -> IntVector:
    return tuple(-x if x < 0 else 0 for x in a)


def is_nonnegative(a: Sequence[int]) -> bool:
    return all(x >= 0 for x in a)


def is_pure(a: Sequence[int]) -> bool:
    return all(x >= 0 for x in a) or all(x <= 0 for x in a)


def _check_dims(rows: Iterable[Sequence[int]], n: int) -> list[list[int]]:
    out = []
    for row in rows:
        if len(row) != n:
            raise DimensionError(f"expected length {n}, got {len(row)}: {tuple(row)}")
        out.append([int(x) for x in row])
    return out


def hnf_with_transform(rows: Sequence[Sequence[int]], n: int):
    """Row Hermite normal form with a unimodular transform.

    Returns ``(H, U, pivots)`` where ``U`` is an ``m x m`` unimodular matrix
    with ``U @ rows == H`` (all ``m`` rows of ``H``, zero rows last) and
    ``pivots`` lists the pivot column of each nonzero row.
    """
    A = _check_dims(rows, n)
    m = len(A)
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def axpy(i: int, q: int, k: int) -> None:
        # row_i -= q * row_k
        Ai, Ak, Ui, Uk = A[i], A[k], U[i], U[k]
        for j in range(n):
            Ai[j] -= q * Ak[j]
        for j in range(m):
            Ui[j] -= q * Uk[j]

    def swap(i: int, k: int) -> None:
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    pivots: list[int] = []
    p = 0
    for j in range(n):
        if p == m:
            break
        while True:
            nonzero = [i for i in range(p, m) if A[i][j]]
            if not nonzero:
                break
            k = min(nonzero, key=lambda i: abs(A[i][j]))
            swap(p, k)
            clean = True
            for i in range(p + 1, m):
                if A[i][j]:
                    axpy(i, A[i][j] // A[p][j], p)
                    clean = clean and A[i][j] == 0
            if clean:
                break
        if A[p][j] == 0:
            continue
        if A[p][j] < 0:
            A[p] = [-x for x in A[p]]
            U[p] = [-x for x in U[p]]
        piv = A[p][j]
        for i in range(p):
            q = A[i][j] // piv
            if q:
                axpy(i, q, p)
        pivots.append(j)
        p += 1
    return [tuple(r) for r in A], [tuple(r) for r in U], pivots


def hnf(rows: Sequence[Sequence[int]], n: int) -> list[IntVector]:
    H, _, pivots = hnf_with_transform(rows, n)
    return H[: len(pivots)]


def integer_left_kernel(rows: Sequence[Sequence[int]], n: int) -> list[IntVector]:
    """Basis of ``{c in Z^m : sum_i c_i rows[i] = 0}``."""
    _, U, pivots = hnf_with_transform(rows, n)
    return U[len(pivots):]


def integer_kernel(matrix: Sequence[Sequence[int]], n: int) -> list[IntVector]:
    """Basis of the integer kernel ``{x in Z^n : matrix @ x = 0}``."""
    cols = [tuple(row[j] for row in matrix) for j in range(n)]
    return integer_left_kernel(cols, len(matrix))


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^n given by its canonical (HNF) basis."""

    ambient_dim: int
    basis_rows: tuple[IntVector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis_rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis_rows)

    def __contains__(self, v: Sequence[int]) -> bool:
        return is_member(self, v)

    def __repr__(self) -> str:
        rows = ", ".join(str(r) for r in self.basis_rows)
        return f"Lattice(n={self.ambient_dim}, rank={self.rank}, basis=[{rows}])"


@dataclass(frozen=True)
class SmithInvariants:
    factors: tuple[int, ...]
    free_rank: int

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def cardinality(self) -> int | None:
        """Order of the quotient group, or ``None`` when it is infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.factors:
            out *= d
        return out


def canonicalize(generators: Iterable[Sequence[int]], n: int) -> Lattice:
    if n < 0:
        raise DimensionError("ambient dimension must be nonnegative")
    gens = _check_dims(generators, n)
    return Lattice(n, tuple(hnf(gens, n)))


def zero_lattice(n: int) -> Lattice:
    return Lattice(n, ())


def full_lattice(n: int) -> Lattice:
    return Lattice(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def coordinates(L: Lattice, v: Sequence[int]) -> IntVector | None:
    """Coefficients of ``v`` in ``L.basis_rows``, or ``None`` if ``v`` is not in ``L``."""
    if len(v) != L.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in Z^{L.ambient_dim}")
    r = [int(x) for x in v]
    coeffs = []
    for row, j in zip(L.basis_rows, L.pivots):
        q, rem = divmod(r[j], row[j])
        if rem:
            return None
        coeffs.append(q)
        if q:
            for k in range(j, L.ambient_dim):
                r[k] -= q * row[k]
    if any(r):
        return None
    return tuple(coeffs)


def reduce_mod(L: Lattice, v: Sequence[int]) -> IntVector:
    """Canonical representative of the coset ``v + L``.

    Pivot coordinates end up in ``[0, pivot)``; two vectors are congruent
    modulo ``L`` iff their reductions agree.
    """
    r = [int(x) for x in v]
    for row, j in zip(L.basis_rows, L.pivots):
        q = r[j] // row[j]
        if q:
            for k in range(j, L.ambient_dim):
                r[k] -= q * row[k]
    return tuple(r)


def is_member(L: Lattice, v: Sequence[int]) -> bool:
    return coordinates(L, v) is not None


def lattices_equal(A: Lattice, B: Lattice) -> bool:
    if A.ambient_dim != B.ambient_dim:
        raise DimensionError("lattices live in different ambient spaces")
    return A.basis_rows == B.basis_rows


def span_equals(L: Lattice, vectors: Iterable[Sequence[int]]) -> bool:
    return lattices_equal(L, canonicalize(vectors, L.ambient_dim))


def primitive_scale(L: Lattice, v: Sequence[int]) -> IntVector:
    """The L-primitive vector ``u`` with ``v = k*u`` for a positive integer ``k``."""
    c = coordinates(L, v)
    if c is None:
        raise NotInLatticeError(f"{tuple(v)} is not in the lattice")
    g = content(c)
    if g == 0:
        raise ValueError("the zero vector has no primitive direction")
    return tuple(int(x) // g for x in v)


def is_primitive(L: Lattice, v: Sequence[int]) -> bool:
    c = coordinates(L, v)
    return c is not None and content(c) == 1


def extend_to_basis(L: Lattice, u: Sequence[int]) -> list[IntVector]:
    """A basis of ``L`` whose first element is the L-primitive vector ``u``.

    Runs Euclid's algorithm on the coordinates of ``u`` while applying the
    matching unimodular operations to the basis itself, so the coordinate
    vector collapses to a single ``+-1``.
    """
    c = coordinates(L, u)
    if c is None:
        raise NotInLatticeError(f"{tuple(u)} is not in the lattice")
    if content(c) != 1:
        raise NotPrimitiveError(f"{tuple(u)} is not L-primitive")
    n = L.ambient_dim
    basis = [list(b) for b in L.basis_rows]
    coef = list(c)
    while True:
        live = [i for i, x in enumerate(coef) if x]
        i = min(live, key=lambda k: abs(coef[k]))
        if len(live) == 1:
            break
        for j in live:
            if j == i:
                continue
            q = coef[j] // coef[i]
            # u = ... + c_i b_i + c_j b_j = ... + c_i (b_i + q b_j) + (c_j - q c_i) b_j
            coef[j] -= q * coef[i]
            basis[i] = [x + q * y for x, y in zip(basis[i], basis[j])]
    u = vec(u)
    out = [u] + [tuple(b) for k, b in enumerate(basis) if k != i]
    assert len(out) == L.rank and all(len(b) == n for b in out)
    return out


def smith_invariants(rows: Sequence[Sequence[int]], s: int) -> SmithInvariants:
    """Invariant factors of ``Z^s`` modulo the row span of ``rows``."""
    A = hnf(_check_dims(rows, s), s)
    k = len(A)

    def transpose(M):
        return [tuple(M[i][j] for i in range(len(M))) for j in range(len(M[0]))] if M else []

    def diagonal(M):
        return all(M[i][j] == 0 for i in range(k) for j in range(k) if i != j)

    # column reduction leaves a full-rank k x k block plus s - k zero columns
    M = transpose(hnf(transpose(A), k)) if k else []
    while k and not diagonal(M):
        M = hnf(M, k)
        if diagonal(M):
            break
        M = transpose(hnf(transpose(M), k))
    d = [abs(M[i][i]) for i in range(k)]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return SmithInvariants(tuple(d), s - k)


def restrict(v: Sequence[int], coords: Sequence[int]) -> IntVector:
    return tuple(v[i] for i in coords)


def embed(values: Sequence[int], coords: Sequence[int], n: int, base: Sequence[int] | None = None) -> IntVector:
    out = list(base) if base is not None else [0] * n
    for i, x in zip(coords, values):
        out[i] = x
    return tuple(out)
