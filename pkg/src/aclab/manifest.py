"""Which witness, dialects and bound each verified item uses.

Each family maps to a list of items.  ``dialects`` holds one positional
dialect string per operand (``None`` keeps the canonical alphabet).  Binary
items list their boolean operations under ``ops``.  The proper prefix-convex
items are additionally swept over every k (and j for the first operand).
"""
from __future__ import annotations

OPS4 = ("union", "symmetric-difference", "difference", "intersection")


def _item(measure, witness, dialects=(None,), ops=None, mode="restricted", note=None):
    return {"measure": measure, "witness": witness, "dialects": tuple(dialects),
            "ops": ops, "mode": mode, "note": note}


def _unary(witness, dialect=None, measures=("semigroup", "quotient_profile", "reversal",
                                            "atom_count", "atom_complexity", "star")):
    return [_item(m, witness, (dialect,)) for m in measures]


def _binary(witness, prod_r, bool_r, prod_u=None, bool_u=None):
    items = [_item("product_restricted", witness, prod_r),
             _item("boolean", witness, bool_r, ops=OPS4)]
    if prod_u:
        items.append(_item("product_unrestricted", witness, prod_u, mode="unrestricted"))
    if bool_u:
        items.append(_item("boolean", witness, bool_u, ops=OPS4, mode="unrestricted"))
    return items


MANIFEST = {
    "regular": [
        _item("semigroup", "regular4", ("a,b,c",)),
        _item("quotient_profile", "regular4", ("a",)),
        _item("reversal", "regular4", ("a,b,c",)),
        _item("atom_count", "regular4", ("a,b,c",)),
        _item("atom_complexity", "regular4", ("a,b,c",)),
        _item("star", "regular4", ("a,b",)),
        _item("product_restricted", "regular4", ("a,b,c", "a,b,c")),
        _item("product_unrestricted", "regular4", ("a,b,-,c", "b,a,-,d"), mode="unrestricted"),
        _item("boolean", "regular4", ("a,b", "b,a"), ops=OPS4),
        _item("boolean", "regular4", ("a,b,-,c", "b,a,-,d"),
              ops=("union", "symmetric-difference"), mode="unrestricted"),
        _item("boolean", "regular4", ("a,b,-,c", "b,a"), ops=("difference",), mode="unrestricted"),
        _item("boolean", "regular4", ("a,b", "b,a"), ops=("intersection",), mode="unrestricted"),
    ],
    "regular3": [
        _item("semigroup", "regular3", ("a,b,c",)),
        _item("quotient_profile", "regular3", ("a",)),
        _item("reversal", "regular3", ("a,b,c",)),
        _item("atom_count", "regular3", ("a,b,c",)),
        _item("atom_complexity", "regular3", ("a,b,c",)),
        _item("star", "regular3", ("a,b",)),
        _item("product_restricted", "regular3", ("a,b", "a,-,b")),
        _item("product_unrestricted", "regular3", ("a,b", "a,c,b"), mode="unrestricted"),
        _item("boolean", "regular3", ("a,b", "b,a"), ops=OPS4),
        _item("boolean", "regular3", ("a,b,c", "b,a,d"),
              ops=("union", "symmetric-difference"), mode="unrestricted"),
        _item("boolean", "regular3", ("a,b,c", "b,a"), ops=("difference",), mode="unrestricted"),
        _item("boolean", "regular3", ("a,b", "b,a"), ops=("intersection",), mode="unrestricted"),
    ],
    "right_ideal": _unary("right_ideal") + _binary(
        "right_ideal", (None, None), (None, "a,b,d,c"),
        (None, "a,e,b,c"), (None, "a,c,e,d")),
    "prefix_closed": _unary("prefix_closed") + _binary(
        "prefix_closed", (None, "a,d,b,c"), (None, "a,b,d,c")),
    "prefix_free": _unary("prefix_free") + _binary(
        "prefix_free", ("a,b,c,d,e0,e1", "a,b,c,d,e0,e1"), ("a,b,c,d,e0,e1", "a,c,b,d,e0,e1")),
    "proper_prefix_convex": [
        _item("semigroup", "proper_prefix_convex"),
        _item("quotient_profile", "proper_prefix_convex", ("a,b,-,-,-,d2,e",)),
        _item("reversal", "proper_prefix_convex", ("a,b,-,-,-,d2,e",)),
        _item("atom_count", "proper_prefix_convex", ("a,b,-,-,-,d2,e",)),
        _item("atom_complexity", "proper_prefix_convex"),
        _item("star", "proper_prefix_convex", ("a,b,-,-,d1,d2,e",)),
        _item("product_restricted", "proper_prefix_convex",
              ("a,b,c1,-,d1,d2,e", "a,d2,c1,-,d1,b,e")),
        _item("boolean", "proper_prefix_convex", ("a,b,c1,-,d1,d2,e", "a,b,e,-,d2,d1,c1"),
              ops=OPS4),
    ],
    "left_ideal": _unary("left_ideal") + _binary(
        "left_ideal", (None, None), (None, "a,b,c,e,d"),
        (None, "a,c,d,f,e"), (None, "a,b,e,f,c")),
    "suffix_closed": _unary("suffix_closed") + _binary(
        "suffix_closed", (None, "a,b,c,e,d"), (None, "a,b,e,d,c"),
        (None, "a,b,e,f,c"), (None, "a,c,f,d,e")),
    # two witnesses: the five-letter one for the semigroup, quotients, reversal,
    # atoms and booleans, the three-letter one for star and product
    "suffix_free": _unary("suffix_free_semigroup", measures=(
        "semigroup", "quotient_profile", "reversal", "atom_count", "atom_complexity")) + [
        _item("boolean", "suffix_free_semigroup", (None, "a,b,d,c,e"), ops=OPS4),
        _item("star", "suffix_free_ops"),
        _item("product_restricted", "suffix_free_ops", (None, "a,c,b")),
    ],
    "bifix_free": [
        _item("quotient_profile", "bifix_free_ops"),
        _item("reversal", "bifix_free_ops"),
        _item("star", "bifix_free_ops"),
        _item("product_restricted", "bifix_free_ops", (None, None)),
        _item("boolean", "bifix_free_ops", (None, "a,c,b"), ops=OPS4),
    ],
    "two_sided_ideal": _unary("two_sided_ideal") + _binary(
        "two_sided_ideal", (None, None), (None, "a,b,c,d,f,e"),
        (None, "a,b,c,g,d,e"), (None, "a,b,e,g,c,f")),
    # the operations are met by dialects over {a, b, c, d}; the semigroup and
    # atoms need the full alphabet
    "non_returning": _unary("non_returning") + _binary(
        "non_returning", ("a,b,c,d", "a,b,c,d"), ("a,b,c,d", "a,b,d,c"),
        ("a,b,c,d", "a,b,c,e"), ("a,b,c,d", "a,b,d,e")),
}

FAMILY_OF = {"regular3": "regular"}
