"""Binomial complete intersections and mixed dominating matrices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import DimensionError
from .graded import graded_markov
from .lattice import IntVector, Lattice, canonicalize, lattices_equal, restrict
from .pure import decompose, pure_positive_basis
from .synthesis import lift_binomial


@dataclass(frozen=True)
class CIReport:
    is_ci: bool
    method: str  # "mu-rank" or "certificate"
    certificate_matrix: tuple[IntVector, ...] | None = None
    # blocks of [[A, M], [C, 0]] with columns ordered sigma first
    block_A: tuple[IntVector, ...] | None = None
    block_M: tuple[IntVector, ...] | None = None
    block_C: tuple[IntVector, ...] | None = None


def is_mixed_row(v: Sequence[int]) -> bool:
    return any(x > 0 for x in v) and any(x < 0 for x in v)


def is_mixed_dominating(M: Sequence[Sequence[int]]) -> bool:
    """Every row is mixed and no square submatrix has only mixed rows."""
    rows = [tuple(r) for r in M]
    if not rows or not all(is_mixed_row(r) for r in rows):
        return False
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DimensionError("matrix rows have different lengths")
    # a k x k submatrix needs k rows each with a positive and a negative entry inside the column set
    for k in range(2, min(len(rows), ncols) + 1):
        for cols in combinations(range(ncols), k):
            mixed = [r for r in rows if is_mixed_row([r[j] for j in cols])]
            if len(mixed) >= k:
                return False
    return True


def _canon_rows(rows) -> tuple[IntVector, ...]:
    out = []
    for r in rows:
        first = next((x for x in r if x), 0)
        out.append(tuple(-x for x in r) if first < 0 else tuple(r))
    return tuple(sorted(out))


def find_certificate(L_sigma: Lattice, depth: int = 4) -> tuple[IntVector, ...] | None:
    """Breadth-first search for a mixed dominating basis of ``L_sigma``.

    States are bases reachable from the HNF by adding or subtracting one row to
    another.  Row order and signs are irrelevant to the property, so states are
    normalised before deduplication.
    """
    start = tuple(L_sigma.basis_rows)
    if not start:
        return None
    if is_mixed_dominating(start):
        return start
    seen = {_canon_rows(start)}
    queue = deque([(start, 0)])
    while queue:
        rows, d = queue.popleft()
        if d == depth:
            continue
        for i in range(len(rows)):
            for j in range(len(rows)):
                if i == j:
                    continue
                for sgn in (1, -1):
                    new = list(rows)
                    new[i] = tuple(a + sgn * b for a, b in zip(rows[i], rows[j]))
                    key = _canon_rows(new)
                    if key in seen:
                        continue
                    seen.add(key)
                    if is_mixed_dominating(new):
                        return tuple(new)
                    queue.append((tuple(new), d + 1))
    return None


def is_binomial_ci(L: Lattice, depth: int = 4) -> CIReport:
    d = decompose(L)
    P = d.projected
    mu = graded_markov(P).mu
    if mu != d.rank_projected:
        return CIReport(False, "mu-rank")
    if P.rank == 0:
        return CIReport(True, "mu-rank")
    cert = find_certificate(P, depth)
    if cert is None:
        return CIReport(True, "mu-rank")
    A = tuple(restrict(lift_binomial(L, d.sigma, m).vector, d.sigma) for m in cert)
    C = tuple(restrict(u, d.sigma) for u in pure_positive_basis(d.pure_lattice, d.sigma)) if d.rank_pure else ()
    return CIReport(True, "certificate", cert, A, cert, C)


def ci_certificate_check(L: Lattice, M: Sequence[Sequence[int]]) -> bool:
    d = decompose(L)
    m = L.ambient_dim - len(d.sigma)
    rows = [tuple(r) for r in M]
    if any(len(r) != m for r in rows):
        raise DimensionError(f"certificate rows must have length {m}")
    if len(rows) != d.rank_projected:
        return False
    if not lattices_equal(canonicalize(rows, m), d.projected):
        return False
    return is_mixed_dominating(rows)


def block_matrix(report: CIReport) -> list[IntVector] | None:
    """The full ``[[A, M], [C, 0]]`` matrix (columns: sigma first, then the rest)."""
    if report.block_M is None:
        return None
    m = len(report.block_M[0])
    top = [a + mm for a, mm in zip(report.block_A, report.block_M)]
    bottom = [c + (0,) * m for c in report.block_C]
    return top + bottom


__all__ = [
    "CIReport",
    "is_mixed_row",
    "is_mixed_dominating",
    "find_certificate",
    "is_binomial_ci",
    "ci_certificate_check",
    "block_matrix",
]
