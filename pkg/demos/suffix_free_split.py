"""Why suffix-free languages need two witness streams.

The five-letter stream reaches the semigroup bound but not the star bound,
and the three-letter stream does the opposite.
"""
from __future__ import annotations

from aclab.bounds import bound
from aclab.operations import reverse, star
from aclab.semigroup import transition_semigroup
from aclab.witnesses import make_witness


def main() -> None:
    n = 6
    print(f"{'':24}{'semigroup':>10}{'reversal':>10}{'star':>6}")
    print(f"{'bound':24}{bound('suffix_free', 'semigroup', n):>10}"
          f"{bound('suffix_free', 'reversal', n):>10}{bound('suffix_free', 'star', n):>6}")
    for witness in ("suffix_free_semigroup", "suffix_free_ops"):
        d = make_witness(witness, n)
        print(f"{witness:24}{len(transition_semigroup(d)):>10}{reverse(d).n:>10}"
              f"{star(d).n:>6}")


if __name__ == "__main__":
    main()
