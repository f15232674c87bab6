"""Approximate diagonals and their defect measurements.

For a finite group the exact diagonal averages g (x) g^-1 over the whole
group and commutes with everything.  For a group with a Folner schedule the
stage-lam diagonal averages over the Folner set; it has norm exactly 1 and
maps to the identity point mass under the diagonal map, while its
commutator defects shrink as the stage grows.

`spread_diagonal` transports a group diagonal to the triple algebra by
averaging matrix-unit embeddings over a finite index prefix; `defect_sweep`
walks a chain of (prefix, stage) net indices and records, per index, the
exact commutator and diagonal-map defects together with the blockwise upper
bound and the constructive truncation/threshold data that certify the
defects eventually fall below any positive tolerance.  `lift_diagonal`
carries a triple-algebra diagonal through the splitting to the full
semigroup algebra.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .brandt import NULL, BrandtTriple
from .groups import Group
from .l1 import (
    Basis,
    L1Vector,
    act_left,
    act_right,
    as_coeff,
    blocks,
    convolve,
    pi,
)


def exact_diagonal(group: Group) -> L1Vector:
    """Average of g (x) g^-1 over a finite group.

    Commutes exactly with every group-basis vector, and its image under the
    diagonal map is the identity point mass.
    """
    if not group.is_finite:
        raise ValueError(f"exact diagonal needs a finite group, got {group!r}")
    weight = Fraction(1, group.order)
    acc = {(g, group.inv(g)): weight for g in group.elements()}
    return L1Vector._make(group, Basis.GROUP_PAIR, acc)


def folner_diagonal(group: Group, lam: int) -> L1Vector:
    """Average of g (x) g^-1 over the stage-lam Folner set.

    Norm exactly 1; image under the diagonal map exactly the identity point
    mass.  For a finite group this is the exact diagonal at every stage.
    """
    f = group.folner_set(lam)
    weight = Fraction(1, len(f))
    acc = {(g, group.inv(g)): weight for g in f}
    return L1Vector._make(group, Basis.GROUP_PAIR, acc)


def spread_diagonal(f: Iterable[int], m: L1Vector) -> L1Vector:
    """Average of matrix-unit embeddings of a group diagonal over the index
    set ``f``: (1/#f) times the sum over i, j in f of ``m`` planted at the
    triple-pair blocks ((i,.,j), (j,.,i)).

    The planted blocks are disjoint, so the norm is #f times the norm of
    ``m``; the net over growing (f, stage) indices is an approximate
    diagonal for the triple algebra, unbounded when the index universe is
    infinite.
    """
    if m.basis is not Basis.GROUP_PAIR:
        raise ValueError(f"expected a group-pair diagonal, got {m.basis.value}")
    fs = sorted(set(f))
    if not fs:
        raise ValueError("index set must be nonempty")
    for idx in fs:
        if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
            raise ValueError(f"index set must consist of naturals, got {idx!r}")
    weight = Fraction(1, len(fs))
    acc = {}
    for (g, g2), c in m.items():
        cw = c * weight
        for i in fs:
            for j in fs:
                acc[(BrandtTriple(i, g, j), BrandtTriple(j, g2, i))] = cw
    return L1Vector._make(m.group, Basis.TRIPLES_PAIR, acc)


def commutator_defect(a: L1Vector, w: L1Vector) -> Fraction:
    """Exact norm of a.w - w.a for ``a`` over a basis and ``w`` over its pair."""
    return (act_left(a, w) - act_right(w, a)).norm()


def pi_defect(a: L1Vector, w: L1Vector) -> Fraction:
    """Exact norm of pi(w)*a - a."""
    return (convolve(pi(w), a) - a).norm()


def blockwise_bound(a: L1Vector, f: Iterable[int], m: L1Vector) -> Fraction:
    """Blockwise upper bound for the commutator defect of ``a`` against the
    spread diagonal built from ``f`` and ``m``.

    Sums, over the nonzero blocks of ``a``: the group-level commutator norm
    when both block indices lie in ``f``, the one-sided action norm when
    exactly one does, and nothing when neither does.  Always at least the
    exact defect, with equality for a single block inside f x f.
    """
    fs = frozenset(f)
    if not fs:
        raise ValueError("index set must be nonempty")
    if m.basis is not Basis.GROUP_PAIR:
        raise ValueError(f"expected a group-pair diagonal, got {m.basis.value}")
    total = Fraction(0)
    for (u, v), c in blocks(a).items():
        u_in = u in fs
        v_in = v in fs
        if u_in and v_in:
            total += (act_left(c, m) - act_right(m, c)).norm()
        elif v_in:
            total += act_left(c, m).norm()
        elif u_in:
            total += act_right(m, c).norm()
    return total


def tail_truncation(a: L1Vector, epsilon) -> frozenset[int]:
    """Smallest prefix {0..k} of the index universe such that the blocks of
    ``a`` with a row or column outside the prefix have total norm below
    ``epsilon``.

    For a finitely supported vector the prefix covering the whole support
    always suffices (the outside mass is then 0), so this terminates.
    """
    eps = as_coeff(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    if a.basis is not Basis.TRIPLES:
        raise ValueError(f"expected a triple-basis vector, got {a.basis.value}")
    block_norms = [(u, v, c.norm()) for (u, v), c in blocks(a).items()]
    k = 0
    while True:
        outside = sum((n for u, v, n in block_norms if u > k or v > k), Fraction(0))
        if outside < eps:
            return frozenset(range(k + 1))
        k += 1


def commutator_stage_threshold(a: L1Vector, f0: Iterable[int], epsilon) -> int:
    """Smallest Folner stage at which the blocks of ``a`` inside f0 x f0 have
    total group-level commutator defect below ``epsilon``.

    Terminates for the built-in schedules: the sum is identically 0 for a
    finite group and shrinks to 0 along the interval schedule.
    """
    eps = as_coeff(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    fs = frozenset(f0)
    inner = [c for (u, v), c in blocks(a).items() if u in fs and v in fs]
    lam = 0
    while True:
        m = folner_diagonal(a.group, lam)
        total = sum(
            ((act_left(c, m) - act_right(m, c)).norm() for c in inner), Fraction(0)
        )
        if total < eps:
            return lam
        lam += 1


def pi_stage_threshold(a: L1Vector, f0: Iterable[int], epsilon) -> int:
    """Smallest Folner stage at which pi of the stage diagonal reproduces the
    blocks of ``a`` inside f0 x f0 up to total error ``epsilon``.

    Immediate here: pi of every Folner diagonal is exactly the identity
    point mass, so stage 0 already works; kept as a real search so a
    different diagonal family would still be handled.
    """
    eps = as_coeff(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    fs = frozenset(f0)
    inner = [c for (u, v), c in blocks(a).items() if u in fs and v in fs]
    lam = 0
    while True:
        ident = pi(folner_diagonal(a.group, lam))
        total = sum(((convolve(ident, c) - c).norm() for c in inner), Fraction(0))
        if total < eps:
            return lam
        lam += 1


@dataclass(frozen=True)
class NetIndex:
    """Net index (f, lam): a finite nonempty index set and a Folner stage."""

    f: frozenset[int]
    lam: int

    def __post_init__(self):
        fs = frozenset(self.f)
        if not fs:
            raise ValueError("net index needs a nonempty index set")
        for idx in fs:
            if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
                raise ValueError(f"index set must consist of naturals, got {idx!r}")
        if not isinstance(self.lam, int) or isinstance(self.lam, bool) or self.lam < 0:
            raise ValueError(f"stage must be a natural number, got {self.lam!r}")
        object.__setattr__(self, "f", fs)


@dataclass(frozen=True)
class DefectReport:
    """Per-net-index defect measurements plus the certifying data.

    ``block_bound`` dominates ``commutator_defect`` at every index.  For
    indices whose set contains ``truncation`` and whose stage is at least
    ``stage_threshold``, the commutator defect is below
    epsilon*(1 + 4*diagonal_bound) and the diagonal-map defect below
    epsilon*(3 + diagonal_bound).
    """

    index: NetIndex
    commutator_defect: Fraction
    pi_defect: Fraction
    block_bound: Fraction
    diagonal_bound: Fraction
    epsilon: Fraction
    truncation: frozenset[int]
    stage_threshold: int


def prefix_chain(length: int) -> list[NetIndex]:
    """The chain ({0..k}, k) for k = 1..length; cofinal among prefix indices."""
    if not isinstance(length, int) or isinstance(length, bool) or length < 1:
        raise ValueError(f"chain length must be >= 1, got {length!r}")
    return [NetIndex(frozenset(range(k + 1)), k) for k in range(1, length + 1)]


def _one_report(a, index, epsilon, f0, stage0, m_bound) -> DefectReport:
    m = folner_diagonal(a.group, index.lam)
    w = spread_diagonal(index.f, m)
    return DefectReport(
        index=index,
        commutator_defect=commutator_defect(a, w),
        pi_defect=pi_defect(a, w),
        block_bound=blockwise_bound(a, index.f, m),
        diagonal_bound=m_bound,
        epsilon=epsilon,
        truncation=f0,
        stage_threshold=stage0,
    )


def defect_sweep(a: L1Vector, schedule: Sequence[NetIndex], epsilon,
                 jobs: int = 1) -> list[DefectReport]:
    """Measure defects of ``a`` against spread diagonals along a schedule.

    The truncation prefix and stage threshold are computed once from ``a``
    and ``epsilon``; each report then records the exact defects at its net
    index.  The per-index work is pure, so ``jobs`` > 1 may compute reports
    in a thread pool; the output is identical either way.
    """
    eps = as_coeff(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    if a.basis is not Basis.TRIPLES:
        raise ValueError(f"expected a triple-basis vector, got {a.basis.value}")
    schedule = list(schedule)
    if not schedule:
        raise ValueError("sweep schedule must be nonempty")
    f0 = tail_truncation(a, eps)
    stage0 = max(
        commutator_stage_threshold(a, f0, eps),
        pi_stage_threshold(a, f0, eps),
    )
    m_bound = Fraction(1)  # every Folner diagonal has norm exactly 1
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(
                pool.map(lambda ix: _one_report(a, ix, eps, f0, stage0, m_bound), schedule)
            )
    return [_one_report(a, ix, eps, f0, stage0, m_bound) for ix in schedule]


def lift_diagonal(w: L1Vector) -> L1Vector:
    """Lift a triple-algebra diagonal to the full semigroup algebra.

    Applies the balanced embedding to both tensor legs and adds
    null (x) null, the diagonal of the complemented one-dimensional part.
    When ``w`` has zero defects against a triple-basis vector, the lift has
    zero defects against the corresponding semigroup-basis vectors and
    against the null point mass.
    """
    if w.basis is not Basis.TRIPLES_PAIR:
        raise ValueError(f"expected a triple-pair vector, got {w.basis.value}")
    acc: dict = {}

    def add(key, val):
        prev = acc.get(key)
        acc[key] = val if prev is None else prev + val

    for (s, t), c in w.items():
        # (delta_s - delta_null) (x) (delta_t - delta_null), scaled by c
        add((s, t), c)
        add((s, NULL), -c)
        add((NULL, t), -c)
        add((NULL, NULL), c)
    add((NULL, NULL), Fraction(1))
    return L1Vector._make(w.group, Basis.SEMIGROUP_PAIR, acc)
