"""Splitting of the semigroup algebra off the triple algebra.

The semigroup algebra decomposes as (triple algebra) + (one-dimensional
part): restriction to the triples paired with the total mass, inverted by
the balanced embedding plus a multiple of the null point mass.  All three
maps are algebra homomorphisms, and the round trip is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .brandt import NULL, BrandtNull
from .l1 import Basis, L1Vector, as_coeff, convolve


def balanced_embed(b: L1Vector) -> L1Vector:
    """Embed a triple-basis vector into the semigroup basis with total mass 0.

    Agrees with ``b`` on triples; the null coefficient is minus the total
    mass of ``b``.  An algebra homomorphism and a section of
    `restrict_to_triples`; its image is exactly the kernel of `total_mass`.
    """
    if b.basis is not Basis.TRIPLES:
        raise ValueError(f"expected a triple-basis vector, got {b.basis.value}")
    acc = dict(b.items())
    mass = sum(acc.values(), Fraction(0))
    if mass:
        acc[NULL] = -mass
    return L1Vector._make(b.group, Basis.SEMIGROUP, acc)


def total_mass(a: L1Vector) -> Fraction:
    """Sum of all coefficients; multiplicative for the semigroup product."""
    if a.basis is not Basis.SEMIGROUP:
        raise ValueError(f"expected a semigroup-basis vector, got {a.basis.value}")
    return sum((q for _p, q in a.items()), Fraction(0))


def restrict_to_triples(a: L1Vector) -> L1Vector:
    """Drop the null coefficient; an algebra homomorphism onto the triple basis."""
    if a.basis is not Basis.SEMIGROUP:
        raise ValueError(f"expected a semigroup-basis vector, got {a.basis.value}")
    acc = {p: q for p, q in a.items() if not isinstance(p, BrandtNull)}
    return L1Vector._make(a.group, Basis.TRIPLES, acc)


@dataclass(frozen=True)
class PairElement:
    """Element of (triple algebra) + scalars, with coordinatewise product
    and the sum norm."""

    t_part: L1Vector
    scalar: Fraction

    def __post_init__(self):
        if self.t_part.basis is not Basis.TRIPLES:
            raise ValueError(f"t_part must be a triple-basis vector, got {self.t_part.basis.value}")
        object.__setattr__(self, "scalar", as_coeff(self.scalar))

    def __mul__(self, other: "PairElement") -> "PairElement":
        return PairElement(convolve(self.t_part, other.t_part), self.scalar * other.scalar)

    def __add__(self, other: "PairElement") -> "PairElement":
        return PairElement(self.t_part + other.t_part, self.scalar + other.scalar)

    def norm(self) -> Fraction:
        return self.t_part.norm() + abs(self.scalar)


def to_pair(a: L1Vector) -> PairElement:
    """Split a semigroup-basis vector as (restriction, total mass).

    Multiplicative for the coordinatewise pair product, with norm at most
    twice the norm of ``a``; inverse of `from_pair`.
    """
    return PairElement(restrict_to_triples(a), total_mass(a))


def from_pair(p: PairElement) -> L1Vector:
    """Rebuild the semigroup-basis vector: balanced embedding plus
    ``scalar`` times the null point mass."""
    out = balanced_embed(p.t_part)
    if p.scalar:
        out = out + L1Vector.delta(out.group, Basis.SEMIGROUP, NULL).scale(p.scalar)
    return out
