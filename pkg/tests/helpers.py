"""Shared generators and independent brute-force oracles for the tests.

The oracle functions work on raw sets and dicts only, so the values they
produce are independent of the library code paths they are used to check.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

import hypothesis.strategies as st

from brandtl1 import NULL, Basis, BrandtTriple, IntegerGroup, L1Vector, cyclic, symmetric

Z = IntegerGroup()
Z2 = cyclic(2)
Z3 = cyclic(3)
Z4 = cyclic(4)
S3 = symmetric(3)

COEFFS = (Fraction(1, 4), Fraction(-1, 4), Fraction(1, 2), Fraction(-1, 2), Fraction(1))


def rand_element(rng, group, window=3):
    if group.is_finite:
        return rng.randrange(group.order)
    return rng.randint(-window, window)


def rand_point(rng, group, basis, index_bound=5, window=3, null_rate=0.2):
    if basis is Basis.GROUP:
        return rand_element(rng, group, window)
    if basis in (Basis.TRIPLES, Basis.SEMIGROUP):
        if basis is Basis.SEMIGROUP and rng.random() < null_rate:
            return NULL
        return BrandtTriple(rng.randint(0, index_bound), rand_element(rng, group, window),
                            rng.randint(0, index_bound))
    factor = basis.factor
    return (rand_point(rng, group, factor, index_bound, window, null_rate),
            rand_point(rng, group, factor, index_bound, window, null_rate))


def rand_vector(rng, group, basis, *, points=4, index_bound=5, window=3, coeffs=COEFFS):
    terms = [(rand_point(rng, group, basis, index_bound, window), rng.choice(coeffs))
             for _ in range(rng.randint(0, points))]
    return L1Vector(group, basis, terms)


# hypothesis strategies

def coeff_st():
    return st.fractions(min_value=-3, max_value=3, max_denominator=8)


def point_st(group, basis, index_bound=3):
    if basis is Basis.GROUP:
        if group.is_finite:
            return st.integers(0, group.order - 1)
        return st.integers(-4, 4)
    if basis in (Basis.TRIPLES, Basis.SEMIGROUP):
        triple = st.builds(
            BrandtTriple,
            st.integers(0, index_bound),
            point_st(group, Basis.GROUP),
            st.integers(0, index_bound),
        )
        if basis is Basis.SEMIGROUP:
            return st.one_of(st.just(NULL), triple)
        return triple
    factor = basis.factor
    return st.tuples(point_st(group, factor, index_bound), point_st(group, factor, index_bound))


def vector_st(group, basis, max_points=4):
    return st.lists(
        st.tuples(point_st(group, basis), coeff_st()), max_size=max_points
    ).map(lambda terms: L1Vector(group, basis, terms))


# independent oracles

def oracle_interval_defect(shift: int, lam: int) -> Fraction:
    """|gF symm-diff F| / |F| for F = [-lam, lam] in the integers, by raw
    set operations."""
    f = set(range(-lam, lam + 1))
    return Fraction(len({shift + x for x in f} ^ f), len(f))


def oracle_interval_commutator(shift: int, lam: int) -> Fraction:
    """Norm of delta_shift . m - m . delta_shift for the interval diagonal,
    by raw dict expansion over the supports."""
    weight = Fraction(1, 2 * lam + 1)
    acc: dict = {}
    for g in range(-lam, lam + 1):
        left = (shift + g, -g)
        acc[left] = acc.get(left, Fraction(0)) + weight
        right = (g, -g + shift)
        acc[right] = acc.get(right, Fraction(0)) - weight
    return sum((abs(v) for v in acc.values()), Fraction(0))


@contextmanager
def criterion(number: int, name: str):
    """Print one pass/fail line per acceptance criterion."""
    try:
        yield
    except BaseException:
        print(f"acceptance {number:02d} {name}: FAIL")
        raise
    print(f"acceptance {number:02d} {name}: PASS")
