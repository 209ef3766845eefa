"""Binomials ``x^plus - x^minus`` with nonnegative exponent vectors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lattice import IntVector, negative_part, positive_part, sub, vec


def monomial_str(u: Sequence[int], names: Sequence[str] | None = None) -> str:
    if not any(u):
        return "1"
    if names is None:
        names = [f"x{i + 1}" for i in range(len(u))]
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


@dataclass(frozen=True, order=True)
class Binomial:
    plus: IntVector
    minus: IntVector

    def __post_init__(self):
        p, m = vec(self.plus), vec(self.minus)
        if len(p) != len(m):
            raise ValueError("terms of a binomial must have the same length")
        if min(p + m, default=0) < 0:
            raise ValueError("exponent vectors must be nonnegative")
        object.__setattr__(self, "plus", p)
        object.__setattr__(self, "minus", m)

    @classmethod
    def from_vector(cls, u: Sequence[int]) -> "Binomial":
        """The binomial with coprime terms whose difference is ``u``."""
        return cls(positive_part(u), negative_part(u))

    @property
    def n(self) -> int:
        return len(self.plus)

    @property
    def vector(self) -> IntVector:
        return sub(self.plus, self.minus)

    def swapped(self) -> "Binomial":
        return Binomial(self.minus, self.plus)

    def is_coprime(self) -> bool:
        return not any(a and b for a, b in zip(self.plus, self.minus))

    def reduced(self) -> "Binomial":
        """Strip the common monomial factor of the two terms."""
        return Binomial.from_vector(self.vector)

    def __str__(self) -> str:
        return f"{monomial_str(self.plus)} - {monomial_str(self.minus)}"
