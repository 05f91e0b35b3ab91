"""Boolean operations on two symmetric-group DFAs whose bases are conjugate.

Relabelling the states while keeping the initial state keeps every proper
boolean operation at n states or fewer.  Moving the initial state breaks that.
"""
from __future__ import annotations

from aclab.automata import Dfa
from aclab.operations import PROPER_OPS, boolean
from aclab.semigroup import conjugate, conjugate_bases


def largest(d1, d2):
    return max(boolean(d1, d2, op).n for op in PROPER_OPS)


def main() -> None:
    s, t = (1, 2, 3, 4, 0), (1, 0, 2, 3, 4)
    d1 = Dfa(5, ("a", "b"), (s, t), 0, frozenset([4]))
    for r in ((0, 2, 1, 4, 3), (1, 0, 2, 3, 4)):
        s2, t2 = conjugate(r, s), conjugate(r, t)
        d2 = Dfa(5, ("a", "b"), (s2, t2), 0, frozenset([4]))
        print(f"r = {r}: conjugating permutation found {conjugate_bases(s, t, s2, t2)}, "
              f"largest boolean result {largest(d1, d2)}")
    other = Dfa(5, ("a", "b"), ((1, 2, 3, 4, 0), (0, 2, 1, 3, 4)), 0, frozenset([4]))
    print(f"a non-conjugate basis reaches {largest(d1, other)} = 5 * 5")


if __name__ == "__main__":
    main()
