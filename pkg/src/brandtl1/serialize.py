"""JSON wire formats: group specs, basis points, l1 elements, exact scalars.

Scalars travel as strings "p/q" (always with the denominator, e.g. "0/1").
Group elements are plain integers.  Brandt elements are {"null": true} or
{"i": .., "g": .., "j": ..}.  An l1 element is a list of terms
{"basis": <point>, "coeff": "p/q"}, where a pair-basis point carries the two
legs as {"left": <point>, "right": <point>}.  Output terms are sorted by a
fixed total order on points, so serialization is canonical.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .brandt import NULL, BrandtNull, BrandtTriple
from .groups import FiniteGroup, Group, IntegerGroup, cyclic, symmetric
from .l1 import Basis, L1Vector

_SCALAR_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def parse_scalar(text) -> Fraction:
    if not isinstance(text, str) or not _SCALAR_RE.match(text):
        raise ValueError(f"expected an exact rational 'p/q', got {text!r}")
    return Fraction(text)


def format_scalar(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _require_int(obj: dict, key: str, minimum: int) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ValueError(f"group spec field {key!r} must be an integer >= {minimum}, got {value!r}")
    return value


def group_from_json(obj) -> Group:
    """Build a group from its spec object.

    Kinds: {"kind":"cyclic","order":n}, {"kind":"symmetric","degree":n},
    {"kind":"integers"}, {"kind":"cayley","table":[[..]],"identity":e}
    (identity optional: it is searched for when absent).  A structurally
    valid cayley table that fails a group axiom raises `GroupAxiomError`.
    """
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("group spec must be an object with a 'kind' field")
    kind = obj["kind"]
    if kind == "cyclic":
        return cyclic(_require_int(obj, "order", 1))
    if kind == "symmetric":
        return symmetric(_require_int(obj, "degree", 1))
    if kind == "integers":
        return IntegerGroup()
    if kind == "cayley":
        table = obj.get("table")
        if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
            raise ValueError("cayley group spec needs a 'table' list of rows")
        identity = obj.get("identity")
        if identity is not None and (not isinstance(identity, int) or isinstance(identity, bool)):
            raise ValueError(f"cayley 'identity' must be an integer, got {identity!r}")
        return FiniteGroup(table, identity=identity, name="cayley")
    raise ValueError(f"unknown group kind {kind!r}")


def point_to_json(basis: Basis, point):
    if basis is Basis.GROUP:
        return point
    if basis in (Basis.TRIPLES, Basis.SEMIGROUP):
        if isinstance(point, BrandtNull):
            return {"null": True}
        return {"i": point.i, "g": point.g, "j": point.j}
    return {
        "left": point_to_json(basis.factor, point[0]),
        "right": point_to_json(basis.factor, point[1]),
    }


def _group_element_from_json(group: Group, obj) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise ValueError(f"group element must be an integer id, got {obj!r}")
    group.check_element(obj)
    return obj


def point_from_json(group: Group, basis: Basis, obj):
    if basis is Basis.GROUP:
        return _group_element_from_json(group, obj)
    if basis in (Basis.TRIPLES, Basis.SEMIGROUP):
        if not isinstance(obj, dict):
            raise ValueError(f"Brandt element must be an object, got {obj!r}")
        if obj.get("null"):
            if basis is Basis.TRIPLES:
                raise ValueError("null element not allowed in the triple basis")
            return NULL
        missing = [key for key in ("i", "g", "j") if key not in obj]
        if missing:
            raise ValueError(f"Brandt element missing fields {missing}: {obj!r}")
        for key in ("i", "j"):
            if not isinstance(obj[key], int) or isinstance(obj[key], bool) or obj[key] < 0:
                raise ValueError(f"Brandt index {key!r} must be a natural number, got {obj[key]!r}")
        g = _group_element_from_json(group, obj["g"])
        return BrandtTriple(obj["i"], g, obj["j"])
    if not isinstance(obj, dict) or "left" not in obj or "right" not in obj:
        raise ValueError(f"pair-basis point must carry 'left' and 'right' fields, got {obj!r}")
    factor = basis.factor
    return (point_from_json(group, factor, obj["left"]),
            point_from_json(group, factor, obj["right"]))


def element_to_json(a: L1Vector) -> list:
    return [
        {"basis": point_to_json(a.basis, point), "coeff": format_scalar(q)}
        for point, q in a.sorted_terms()
    ]


def element_from_json(group: Group, basis: Basis, data) -> L1Vector:
    """Parse an element list; duplicate points are summed, zeros pruned."""
    if not isinstance(data, list):
        raise ValueError(f"l1 element must be a list of terms, got {type(data).__name__}")
    terms = []
    for k, term in enumerate(data):
        if not isinstance(term, dict) or "basis" not in term or "coeff" not in term:
            raise ValueError(f"term {k} must be an object with 'basis' and 'coeff' fields")
        terms.append((point_from_json(group, basis, term["basis"]),
                      parse_scalar(term["coeff"])))
    return L1Vector(group, basis, terms)
