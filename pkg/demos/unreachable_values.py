"""Three stated values that no witness can reach, and what is reached instead.

Each case prints the originally stated value, the value the library treats
as the bound, and what the witness measures.
"""
from __future__ import annotations

from aclab.bounds import STATED_ERRATA, bound, stated_value
from aclab.operations import product, reverse
from aclab.verify import verify
from aclab.witnesses import make_witness


def show(cls, key, n, m, measured):
    measure, _, rest = key.partition(":")
    op, _, mode = rest.partition(":")
    kw = {"m": m} if m is not None else {}
    if op:
        kw.update(op=op, mode=mode)
    used = bound(cls, measure, n, **kw)
    stated = stated_value(cls, key, n, m)
    size = f"n={n}" + (f", m={m}" if m is not None else "")
    print(f"{cls:16} {key:42} {size:10} stated {stated:4} bound {used:4} measured {measured}")


def main() -> None:
    d5 = make_witness("two_sided_ideal", 5)
    show("two_sided_ideal", "reversal", 5, None, reverse(d5).n)
    left = make_witness("left_ideal", 4)
    show("left_ideal", "product_restricted", 5, 4, product(left, make_witness("left_ideal", 5)).n)
    for r in verify("non_returning", [4], [4], ["boolean"]):
        if r.params["mode"] == "unrestricted":
            show("non_returning", f"boolean:{r.params['op']}:unrestricted", 4, 4, r.measured)
    print(f"\n{len(STATED_ERRATA)} entries in bounds.STATED_ERRATA")


if __name__ == "__main__":
    main()
