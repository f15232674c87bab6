"""The Brandt semigroup over a group: triples (i, g, j) plus an absorbing null.

The index set is the naturals with no stored bound; since every vector in
this package is finitely supported, nothing ever enumerates it.
"""

from __future__ import annotations

from typing import NamedTuple, Union

from .groups import Group


class BrandtTriple(NamedTuple):
    i: int
    g: int
    j: int


class BrandtNull:
    """The absorbing null element; use the module-level singleton NULL."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "NULL"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BrandtNull)

    def __hash__(self) -> int:
        return hash(BrandtNull)


NULL = BrandtNull()

BrandtElement = Union[BrandtTriple, BrandtNull]


def check_triple(group: Group, t: BrandtTriple) -> None:
    if not isinstance(t, BrandtTriple):
        raise ValueError(f"not a Brandt triple: {t!r}")
    for idx in (t.i, t.j):
        if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
            raise ValueError(f"triple indices must be naturals: {t!r}")
    group.check_element(t.g)


def brandt_mul(group: Group, s: BrandtElement, t: BrandtElement) -> BrandtElement:
    """(i,g,j)(i',g',j') is (i,gg',j') when j = i', null otherwise; null absorbs."""
    if isinstance(s, BrandtNull) or isinstance(t, BrandtNull):
        return NULL
    if s.j != t.i:
        return NULL
    return BrandtTriple(s.i, group.mul(s.g, t.g), t.j)


class BrandtSemigroup:
    """B(I, G) for a fixed group G and I the naturals."""

    def __init__(self, group: Group):
        self.group = group

    def mul(self, s: BrandtElement, t: BrandtElement) -> BrandtElement:
        return brandt_mul(self.group, s, t)

    def check_element(self, s: BrandtElement) -> None:
        if isinstance(s, BrandtNull):
            return
        check_triple(self.group, s)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BrandtSemigroup) and self.group == other.group

    def __repr__(self) -> str:
        return f"B(N, {self.group!r})"
