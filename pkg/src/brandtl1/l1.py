"""Finitely supported l1 vectors and their convolution algebras.

A vector is a finite map from basis points to nonzero exact rationals.  The
bases are a group G, the non-null Brandt triples T, the full semigroup
S = T + null, and the corresponding pair bases G x G, T x T, S x S (a pair
basis realizes the projective tensor square, so the tensor norm is the plain
l1 norm and every norm here is exact).

Products: on G the group convolution, on T the Brandt product with
null-valued terms dropped, on S the Brandt product with null kept as a basis
point.  Pair bases carry the two-sided module action over their factor
algebra (leg-wise convolution) and the diagonal map ``pi``.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .brandt import NULL, BrandtNull, BrandtTriple, brandt_mul, check_triple
from .groups import Group

Point = Union[int, BrandtTriple, BrandtNull, Tuple]


class Basis(Enum):
    GROUP = "G"
    TRIPLES = "T"
    SEMIGROUP = "S"
    GROUP_PAIR = "GxG"
    TRIPLES_PAIR = "TxT"
    SEMIGROUP_PAIR = "SxS"

    @property
    def is_pair(self) -> bool:
        return self in _FACTOR_OF

    @property
    def factor(self) -> "Basis":
        if not self.is_pair:
            raise ValueError(f"{self.value} is not a pair basis")
        return _FACTOR_OF[self]

    @property
    def pair(self) -> "Basis":
        if self.is_pair:
            raise ValueError(f"{self.value} is already a pair basis")
        return _PAIR_OF[self]


_PAIR_OF = {
    Basis.GROUP: Basis.GROUP_PAIR,
    Basis.TRIPLES: Basis.TRIPLES_PAIR,
    Basis.SEMIGROUP: Basis.SEMIGROUP_PAIR,
}
_FACTOR_OF = {pair: single for single, pair in _PAIR_OF.items()}


def as_coeff(value) -> Fraction:
    """Coerce to an exact rational; floats are rejected, nothing rounds."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


def check_point(group: Group, basis: Basis, point: Point) -> None:
    """Validate that ``point`` is a basis point of ``basis`` over ``group``."""
    if basis is Basis.GROUP:
        group.check_element(point)
    elif basis is Basis.TRIPLES:
        if isinstance(point, BrandtNull):
            raise ValueError("null is not a point of the triple basis")
        check_triple(group, point)
    elif basis is Basis.SEMIGROUP:
        if not isinstance(point, BrandtNull):
            check_triple(group, point)
    else:
        if not isinstance(point, tuple) or isinstance(point, BrandtTriple) or len(point) != 2:
            raise ValueError(f"pair basis point must be a 2-tuple, got {point!r}")
        factor = basis.factor
        check_point(group, factor, point[0])
        check_point(group, factor, point[1])


def point_sort_key(basis: Basis, point: Point):
    """Total order on basis points, for canonical output."""
    if basis is Basis.GROUP:
        return point
    if basis in (Basis.TRIPLES, Basis.SEMIGROUP):
        if isinstance(point, BrandtNull):
            return (0, 0, 0, 0)
        return (1, point.i, point.j, point.g)
    factor = basis.factor
    return (point_sort_key(factor, point[0]), point_sort_key(factor, point[1]))


class L1Vector:
    """Finitely supported map from basis points to nonzero exact rationals.

    Immutable by convention: every operation returns a new vector and zero
    coefficients are pruned, so ``==`` is plain structural equality.
    """

    __slots__ = ("group", "basis", "_coeffs")

    def __init__(self, group: Group, basis: Basis,
                 coeffs: Mapping[Point, Fraction] | Iterable[tuple[Point, Fraction]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict = {}
        for point, value in items:
            check_point(group, basis, point)
            q = as_coeff(value)
            prev = acc.get(point)
            acc[point] = q if prev is None else prev + q
        self.group = group
        self.basis = basis
        self._coeffs = {p: q for p, q in acc.items() if q}

    @classmethod
    def _make(cls, group: Group, basis: Basis, acc: dict) -> "L1Vector":
        # fast path for internally produced, already-valid points
        v = object.__new__(cls)
        v.group = group
        v.basis = basis
        v._coeffs = {p: q for p, q in acc.items() if q}
        return v

    @classmethod
    def zero(cls, group: Group, basis: Basis) -> "L1Vector":
        return cls(group, basis)

    @classmethod
    def delta(cls, group: Group, basis: Basis, point: Point) -> "L1Vector":
        """Point mass: 1 at ``point``."""
        return cls(group, basis, [(point, Fraction(1))])

    def coeff(self, point: Point) -> Fraction:
        return self._coeffs.get(point, _ZERO)

    def items(self):
        return self._coeffs.items()

    def support(self):
        return self._coeffs.keys()

    def sorted_terms(self) -> list[tuple[Point, Fraction]]:
        key = self.basis
        return sorted(self._coeffs.items(), key=lambda item: point_sort_key(key, item[0]))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def norm(self) -> Fraction:
        """Sum of absolute coefficient values; 0 iff the vector is 0."""
        total = _ZERO
        for q in self._coeffs.values():
            total += q if q > 0 else -q
        return total

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, L1Vector)
            and self.basis is other.basis
            and self.group == other.group
            and self._coeffs == other._coeffs
        )

    def __add__(self, other: "L1Vector") -> "L1Vector":
        _require_same_space(self, other)
        acc = dict(self._coeffs)
        for p, q in other._coeffs.items():
            prev = acc.get(p)
            acc[p] = q if prev is None else prev + q
        return L1Vector._make(self.group, self.basis, acc)

    def __neg__(self) -> "L1Vector":
        return L1Vector._make(self.group, self.basis, {p: -q for p, q in self._coeffs.items()})

    def __sub__(self, other: "L1Vector") -> "L1Vector":
        _require_same_space(self, other)
        acc = dict(self._coeffs)
        for p, q in other._coeffs.items():
            prev = acc.get(p)
            acc[p] = -q if prev is None else prev - q
        return L1Vector._make(self.group, self.basis, acc)

    def scale(self, value) -> "L1Vector":
        q = as_coeff(value)
        if not q:
            return L1Vector._make(self.group, self.basis, {})
        return L1Vector._make(self.group, self.basis,
                              {p: c * q for p, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, L1Vector):
            return convolve(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self) -> str:
        terms = ", ".join(f"{p!r}: {q}" for p, q in self.sorted_terms()[:6])
        more = "" if len(self._coeffs) <= 6 else f", ... ({len(self._coeffs)} terms)"
        return f"L1Vector[{self.basis.value} over {self.group!r}]({{{terms}{more}}})"


_ZERO = Fraction(0)


def _require_same_space(a: L1Vector, b: L1Vector) -> None:
    if a.basis is not b.basis:
        raise ValueError(f"basis mismatch: {a.basis.value} vs {b.basis.value}")
    if a.group != b.group:
        raise ValueError(f"group mismatch: {a.group!r} vs {b.group!r}")


def _point_product(group: Group, basis: Basis, x: Point, y: Point):
    """Product of two basis points; None when it falls out of the basis."""
    if basis is Basis.GROUP:
        return group.mul(x, y)
    p = brandt_mul(group, x, y)
    if basis is Basis.TRIPLES and isinstance(p, BrandtNull):
        return None
    return p


def convolve(a: L1Vector, b: L1Vector) -> L1Vector:
    """Bilinear extension of the basis product, for the G, T and S bases.

    On T, products that hit the null element are dropped; on S they land on
    the null point mass.
    """
    _require_same_space(a, b)
    if a.basis.is_pair:
        raise ValueError(f"no convolution on pair basis {a.basis.value}")
    group, basis = a.group, a.basis
    acc: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            p = _point_product(group, basis, x, y)
            if p is None:
                continue
            prev = acc.get(p)
            acc[p] = cx * cy if prev is None else prev + cx * cy
    return L1Vector._make(group, basis, acc)


def convolve_t_sum(a: L1Vector, b: L1Vector) -> L1Vector:
    """Triple-basis convolution as the explicit double sum over the middle
    index and group variable, with inverse bookkeeping.

    Differential twin of `convolve` on the T basis: same result through a
    different index-juggling path (each output coefficient is looked up as
    a(i, g*h^-1, k) * b(k, h, j) rather than formed from a semigroup
    product), which the tests compare against the direct route.
    """
    _require_same_space(a, b)
    if a.basis is not Basis.TRIPLES:
        raise ValueError(f"expected the triple basis, got {a.basis.value}")
    group = a.group
    acc: dict = {}
    for t, cb in b.items():  # t = (k, h, j)
        hinv = group.inv(t.g)
        for s, _cs in a.items():  # s = (i, x, k')
            if s.j != t.i:
                continue
            g = group.mul(s.g, t.g)
            val = a.coeff(BrandtTriple(s.i, group.mul(g, hinv), t.i)) * cb
            out = BrandtTriple(s.i, g, t.j)
            prev = acc.get(out)
            acc[out] = val if prev is None else prev + val
    return L1Vector._make(group, Basis.TRIPLES, acc)


def tensor(a: L1Vector, b: L1Vector) -> L1Vector:
    """Elementary tensor a (x) b as a pair-basis vector."""
    _require_same_space(a, b)
    if a.basis.is_pair:
        raise ValueError("tensor factors must live on a non-pair basis")
    acc = {}
    for x, cx in a.items():
        for y, cy in b.items():
            acc[(x, y)] = cx * cy
    return L1Vector._make(a.group, a.basis.pair, acc)


def _require_action(a: L1Vector, t: L1Vector) -> None:
    if not t.basis.is_pair or t.basis.factor is not a.basis:
        raise ValueError(f"basis mismatch for module action: {a.basis.value} on {t.basis.value}")
    if a.group != t.group:
        raise ValueError(f"group mismatch: {a.group!r} vs {t.group!r}")


def act_left(a: L1Vector, t: L1Vector) -> L1Vector:
    """Left module action on a pair basis: a . (x (x) y) = (a x) (x) y."""
    _require_action(a, t)
    group, factor = a.group, a.basis
    acc: dict = {}
    for x, cx in a.items():
        for (l, r), ct in t.items():
            p = _point_product(group, factor, x, l)
            if p is None:
                continue
            key = (p, r)
            prev = acc.get(key)
            acc[key] = cx * ct if prev is None else prev + cx * ct
    return L1Vector._make(group, t.basis, acc)


def act_right(t: L1Vector, a: L1Vector) -> L1Vector:
    """Right module action on a pair basis: (x (x) y) . a = x (x) (y a)."""
    _require_action(a, t)
    group, factor = a.group, a.basis
    acc: dict = {}
    for x, cx in a.items():
        for (l, r), ct in t.items():
            p = _point_product(group, factor, r, x)
            if p is None:
                continue
            key = (l, p)
            prev = acc.get(key)
            acc[key] = ct * cx if prev is None else prev + ct * cx
    return L1Vector._make(group, t.basis, acc)


def pi(t: L1Vector) -> L1Vector:
    """Diagonal map: x (x) y -> x*y, linearly extended to the pair basis."""
    if not t.basis.is_pair:
        raise ValueError(f"diagonal map needs a pair basis, got {t.basis.value}")
    group, factor = t.group, t.basis.factor
    acc: dict = {}
    for (l, r), c in t.items():
        p = _point_product(group, factor, l, r)
        if p is None:
            continue
        prev = acc.get(p)
        acc[p] = c if prev is None else prev + c
    return L1Vector._make(group, factor, acc)


def _check_index(idx: int) -> None:
    if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
        raise ValueError(f"index must be a natural number, got {idx!r}")


def block(a: L1Vector, u: int, v: int) -> L1Vector:
    """The (u, v) group-algebra block of a triple-basis vector."""
    if a.basis is not Basis.TRIPLES:
        raise ValueError(f"blocks are taken on the triple basis, got {a.basis.value}")
    _check_index(u)
    _check_index(v)
    acc = {t.g: c for t, c in a.items() if t.i == u and t.j == v}
    return L1Vector._make(a.group, Basis.GROUP, acc)


def blocks(a: L1Vector) -> dict[tuple[int, int], L1Vector]:
    """All nonzero blocks, keyed by (row, column).  The block norms sum to
    the norm of ``a`` (the supports partition)."""
    if a.basis is not Basis.TRIPLES:
        raise ValueError(f"blocks are taken on the triple basis, got {a.basis.value}")
    grouped: dict[tuple[int, int], dict] = {}
    for t, c in a.items():
        grouped.setdefault((t.i, t.j), {})[t.g] = c
    return {
        uv: L1Vector._make(a.group, Basis.GROUP, acc)
        for uv, acc in sorted(grouped.items(), key=lambda kv: kv[0])
    }


def embed_block(c: L1Vector, i: int, j: int) -> L1Vector:
    """Plant a group-basis vector in block (i, j) of the triple basis.

    Norm-preserving; a one-sided inverse of `block`.
    """
    if c.basis is not Basis.GROUP:
        raise ValueError(f"expected a group-basis vector, got {c.basis.value}")
    _check_index(i)
    _check_index(j)
    acc = {BrandtTriple(i, g, j): q for g, q in c.items()}
    return L1Vector._make(c.group, Basis.TRIPLES, acc)


def embed_tensor_block(b: L1Vector, i: int, j: int, i2: int, j2: int) -> L1Vector:
    """Plant a G x G vector at the triple-pair block ((i,.,j), (i2,.,j2)).

    Norm-preserving.
    """
    if b.basis is not Basis.GROUP_PAIR:
        raise ValueError(f"expected a group-pair vector, got {b.basis.value}")
    for idx in (i, j, i2, j2):
        _check_index(idx)
    acc = {
        (BrandtTriple(i, g, j), BrandtTriple(i2, g2, j2)): q
        for (g, g2), q in b.items()
    }
    return L1Vector._make(b.group, Basis.TRIPLES_PAIR, acc)
