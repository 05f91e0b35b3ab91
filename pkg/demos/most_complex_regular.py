"""Walk through the four-letter regular stream at a small size.

Run with ``python3 demos/most_complex_regular.py [n]``.
"""
from __future__ import annotations

import argparse

from aclab.atoms import atom_complexity, atom_ids
from aclab.bounds import bound
from aclab.operations import boolean, product, reverse, star
from aclab.semigroup import count_by_rank, transition_semigroup
from aclab.witnesses import apply_dialect, make_witness, parse_dialect


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n", type=int, nargs="?", default=4)
    n = parser.parse_args().n

    d = make_witness("regular4", n)
    print(f"witness with {d.n} states over {', '.join(d.alphabet)}")
    for a in d.alphabet:
        print(f"  {a}: {d.transform(a)}")

    sg = transition_semigroup(d)
    print(f"\nsemigroup size {len(sg)} (bound {bound('regular', 'semigroup', n)})")
    for r, count in sorted(count_by_rank(sg).items(), reverse=True):
        print(f"  rank {r}: {count} transformations")

    print(f"\nreversal {reverse(d).n} (bound {bound('regular', 'reversal', n)})")
    ids = atom_ids(d)
    print(f"{len(ids)} atoms; by size of S:")
    by_size = {}
    for S in ids:
        by_size.setdefault(len(S), set()).add(atom_complexity(d, S))
    for size, values in sorted(by_size.items()):
        print(f"  |S| = {size}: complexity {sorted(values)}")

    ab = apply_dialect(d, parse_dialect("a,b"))
    print(f"\nstar on the a,b dialect: {star(ab).n} (bound {bound('regular', 'star', n)})")
    left = apply_dialect(make_witness("regular4", n), parse_dialect("a,b,c"))
    print(f"product with itself: {product(left, left).n} "
          f"(bound {bound('regular', 'product_restricted', n, m=n)})")
    swapped = apply_dialect(d, parse_dialect("b,a"))
    for op in ("union", "symmetric-difference", "difference", "intersection"):
        print(f"  {op} with the b,a dialect: {boolean(ab, swapped, op).n}")


if __name__ == "__main__":
    main()
