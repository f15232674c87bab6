"""Groups with explicit arithmetic and Folner schedules.

Group elements are opaque integer ids: an index into the multiplication
table for a finite group, or the integer itself for the additive group of
integers.  Every scalar in this package is an exact rational
(`fractions.Fraction`); nothing here ever rounds.

Supported groups are finite groups given by a multiplication table (with
constructors for cyclic and symmetric groups) and the integers.  Each group
carries a Folner schedule ``lam -> finite set``: the whole group at every
stage for finite groups, the symmetric interval ``[-lam, lam]`` for the
integers.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence


class GroupAxiomError(ValueError):
    """A multiplication table fails one of the group axioms."""

    def __init__(self, axiom: str, detail: str):
        super().__init__(f"{axiom}: {detail}")
        self.axiom = axiom


class Group:
    """Shared interface: ``mul``, ``inv``, ``identity``, ``folner_set``."""

    is_finite: bool = False
    name: str = "group"
    identity: int = 0

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def check_element(self, a: int) -> None:
        raise NotImplementedError

    def folner_set(self, lam: int) -> frozenset[int]:
        raise NotImplementedError

    def elements(self) -> Sequence[int]:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name


def _validate_table(rows: Sequence[Sequence[int]], identity: int | None):
    """Check the group axioms on a multiplication table.

    Returns ``(identity, inverse_table)``.  Structural problems (non-square
    table, entries out of range) raise plain ``ValueError``; axiom failures
    raise ``GroupAxiomError`` naming the axiom.  O(n^3) in the order.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("multiplication table must be nonempty")
    table = []
    for r, row in enumerate(rows):
        row = list(row)
        if len(row) != n:
            raise ValueError(f"table row {r} has length {len(row)}, expected {n}")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise ValueError(f"table entry {x!r} in row {r} is not an index in [0,{n - 1}]")
        table.append(tuple(row))

    if identity is None:
        identity = next(
            (e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))),
            None,
        )
        if identity is None:
            raise GroupAxiomError("identity", "no two-sided identity element in table")
    else:
        if not isinstance(identity, int) or not 0 <= identity < n:
            raise ValueError(f"identity index {identity!r} out of range")
        bad = next((x for x in range(n) if table[identity][x] != x or table[x][identity] != x), None)
        if bad is not None:
            raise GroupAxiomError("identity", f"element {identity} is not an identity (fails at {bad})")

    inverse = []
    for a in range(n):
        b = next((b for b in range(n) if table[a][b] == identity == table[b][a]), None)
        if b is None:
            raise GroupAxiomError("inverse", f"element {a} has no two-sided inverse")
        inverse.append(b)

    for a in range(n):
        ta = table[a]
        for b in range(n):
            tab = table[ta[b]]
            tb = table[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise GroupAxiomError(
                        "associativity", f"({a}*{b})*{c} = {tab[c]} but {a}*({b}*{c}) = {ta[tb[c]]}"
                    )

    return identity, tuple(inverse)


class FiniteGroup(Group):
    """Finite group given by a multiplication table on 0..n-1.

    The table is validated on construction (identity, inverses,
    associativity); invalid tables raise `GroupAxiomError`.
    """

    is_finite = True

    def __init__(self, table: Sequence[Sequence[int]], identity: int | None = None,
                 name: str | None = None):
        e, inverse = _validate_table(table, identity)
        self._table = tuple(tuple(row) for row in table)
        self._inverse = inverse
        self.identity = e
        self.name = name or f"table-group({len(self._table)})"

    @property
    def order(self) -> int:
        return len(self._table)

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        return self._table

    def mul(self, a: int, b: int) -> int:
        self.check_element(a)
        self.check_element(b)
        return self._table[a][b]

    def inv(self, a: int) -> int:
        self.check_element(a)
        return self._inverse[a]

    def check_element(self, a: int) -> None:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < len(self._table):
            raise ValueError(f"{a!r} is not an element id of {self.name}")

    def elements(self) -> range:
        return range(len(self._table))

    def folner_set(self, lam: int) -> frozenset[int]:
        _check_stage(lam)
        return frozenset(range(len(self._table)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self._table == other._table \
            and self.identity == other.identity

    def __hash__(self) -> int:
        return hash((self._table, self.identity))


class IntegerGroup(Group):
    """The additive group of integers, with interval Folner sets."""

    is_finite = False
    name = "Z"
    identity = 0

    def mul(self, a: int, b: int) -> int:
        self.check_element(a)
        self.check_element(b)
        return a + b

    def inv(self, a: int) -> int:
        self.check_element(a)
        return -a

    def check_element(self, a: int) -> None:
        if not isinstance(a, int) or isinstance(a, bool):
            raise ValueError(f"{a!r} is not an integer")

    def folner_set(self, lam: int) -> frozenset[int]:
        _check_stage(lam)
        return frozenset(range(-lam, lam + 1))

    def elements(self):
        raise ValueError("the integers cannot be enumerated")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerGroup)

    def __hash__(self) -> int:
        return hash(IntegerGroup)


def _check_stage(lam: int) -> None:
    if not isinstance(lam, int) or isinstance(lam, bool) or lam < 0:
        raise ValueError(f"Folner stage must be a natural number, got {lam!r}")


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n, additive notation mod n."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclic group order must be a positive integer, got {n!r}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, identity=0, name=f"Z/{n}")


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters; elements indexed by permutations in
    lexicographic order, so id 0 is the identity permutation."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"symmetric group degree must be a positive integer, got {n!r}")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table, identity=0, name=f"S{n}")


def folner_defect(group: Group, f: Iterable[int], gens: Iterable[int]) -> Fraction:
    """Worst relative displacement ``|gF symm-diff F| / |F|`` over the generators.

    Exactly 0 iff every generator maps F onto itself; 0 by convention when
    ``gens`` is empty.
    """
    fs = frozenset(f)
    if not fs:
        raise ValueError("Folner defect needs a nonempty set")
    for x in fs:
        group.check_element(x)
    worst = Fraction(0)
    for g in gens:
        shifted = frozenset(group.mul(g, x) for x in fs)
        worst = max(worst, Fraction(len(shifted ^ fs), len(fs)))
    return worst
