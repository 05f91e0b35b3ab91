"""Reversal, star, product and boolean operations, restricted or unrestricted.

Every operation returns the minimal DFA of its result.  In unrestricted mode
the operands are first completed over the union of their alphabets.
"""
from __future__ import annotations

from dataclasses import dataclass

from .automata import (EPS, Dfa, Nfa, determinize, minimize, restrict_alphabet,
                       reverse_nfa)

RESTRICTED = "restricted"
UNRESTRICTED = "unrestricted"
MODES = (RESTRICTED, UNRESTRICTED)


@dataclass(frozen=True)
class BooleanOp:
    """A binary boolean function given by its values on (in L', in L).

    ``mask`` lists the outputs for the inputs (0,0), (0,1), (1,0), (1,1),
    so ``"0110"`` is symmetric difference and ``"0010"`` is L' minus L.
    """

    mask: str

    def __post_init__(self):
        if len(self.mask) != 4 or set(self.mask) - {"0", "1"}:
            raise ValueError(f"boolean mask must be 4 binary digits, got {self.mask!r}")

    def __call__(self, left: bool, right: bool) -> bool:
        return self.mask[2 * int(left) + int(right)] == "1"

    @property
    def proper(self) -> bool:
        f = self.__call__
        on_left = any(f(False, r) != f(True, r) for r in (False, True))
        on_right = any(f(l, False) != f(l, True) for l in (False, True))
        return on_left and on_right

    @property
    def name(self) -> str:
        return MASK_NAMES.get(self.mask, self.mask)


NAMED_OPS = {
    "false": "0000",
    "intersection": "0001",
    "difference": "0010",
    "left": "0011",
    "reverse-difference": "0100",
    "right": "0101",
    "symmetric-difference": "0110",
    "union": "0111",
    "nor": "1000",
    "equivalence": "1001",
    "not-right": "1010",
    "right-implies-left": "1011",
    "not-left": "1100",
    "left-implies-right": "1101",
    "nand": "1110",
    "true": "1111",
}
MASK_NAMES = {mask: name for name, mask in NAMED_OPS.items()}

UNION = BooleanOp("0111")
INTERSECTION = BooleanOp("0001")
DIFFERENCE = BooleanOp("0010")
SYMMETRIC_DIFFERENCE = BooleanOp("0110")
PROPER_OPS = tuple(BooleanOp(m) for m in sorted(MASK_NAMES) if BooleanOp(m).proper)


def boolean_op(name_or_mask: str) -> BooleanOp:
    if name_or_mask in NAMED_OPS:
        return BooleanOp(NAMED_OPS[name_or_mask])
    return BooleanOp(name_or_mask)


# ---------------------------------------------------------------------------
# unary


def complement(dfa: Dfa) -> Dfa:
    return Dfa(dfa.n, dfa.alphabet, dfa.delta, dfa.initial,
               frozenset(range(dfa.n)) - dfa.finals)


def reverse(dfa: Dfa) -> Dfa:
    return minimize(determinize(reverse_nfa(dfa)))


def star_nfa(dfa: Dfa) -> Nfa:
    """Empty-word NFA for L*: finals jump back to the start of L's automaton.

    When the empty word is not in L a fresh accepting initial state is added.
    """
    trans = {(q, a, t[q]) for a, t in zip(dfa.alphabet, dfa.delta) for q in range(dfa.n)}
    trans |= {(f, EPS, dfa.initial) for f in dfa.finals}
    if dfa.initial in dfa.finals:
        return Nfa(dfa.n, dfa.alphabet, frozenset(trans), frozenset([dfa.initial]), dfa.finals)
    fresh = dfa.n
    trans.add((fresh, EPS, dfa.initial))
    return Nfa(dfa.n + 1, dfa.alphabet, frozenset(trans), frozenset([fresh]),
               dfa.finals | {fresh})


def star(dfa: Dfa) -> Dfa:
    return minimize(determinize(star_nfa(dfa)))


# ---------------------------------------------------------------------------
# binary


def _empty_state(dfa: Dfa):
    empties = dfa.empty_states()
    return min(empties) if empties else None


def complete_over(dfa: Dfa, alphabet) -> Dfa:
    """Extend a DFA to a larger alphabet; new letters lead to an empty state."""
    extra = [a for a in alphabet if a not in dfa.alphabet]
    if not extra:
        return dfa
    sink = _empty_state(dfa)
    n = dfa.n
    delta = list(dfa.delta)
    if sink is None:
        sink = n
        n += 1
        delta = [t + (sink,) for t in delta]
    delta += [(sink,) * n for _ in extra]
    return Dfa(n, dfa.alphabet + tuple(extra), tuple(delta), dfa.initial, dfa.finals)


def unify_alphabets(d1: Dfa, d2: Dfa) -> tuple:
    union = d1.alphabet + tuple(a for a in d2.alphabet if a not in d1.alphabet)
    return complete_over(d1, union), complete_over(d2, union)


def _check_mode(d1: Dfa, d2: Dfa, mode: str) -> tuple:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == RESTRICTED:
        if set(d1.alphabet) != set(d2.alphabet):
            raise ValueError(f"restricted mode needs equal alphabets: "
                             f"{d1.alphabet} vs {d2.alphabet}")
        return d1, d2
    return unify_alphabets(d1, d2)


def product_nfa(d1: Dfa, d2: Dfa) -> Nfa:
    """Empty-word NFA for L1 L2 over a shared alphabet.

    Finals of the first automaton lose finality and get an empty-word move to
    the initial state of the second, whose states are shifted by ``d1.n``.
    """
    m = d1.n
    m2 = d2.letter_map
    trans = {(q, a, t[q]) for a, t in zip(d1.alphabet, d1.delta) for q in range(m)}
    trans |= {(m + q, a, m + m2[a][q]) for a in d1.alphabet for q in range(d2.n)}
    trans |= {(f, EPS, m + d2.initial) for f in d1.finals}
    return Nfa(m + d2.n, d1.alphabet, frozenset(trans), frozenset([d1.initial]),
               frozenset(m + f for f in d2.finals))


def product(d1: Dfa, d2: Dfa, mode: str = RESTRICTED) -> Dfa:
    d1, d2 = _check_mode(d1, d2, mode)
    return minimize(determinize(product_nfa(d1, d2)))


def direct_product(d1: Dfa, d2: Dfa, op: BooleanOp) -> Dfa:
    """Reachable part of the direct product with finals assigned by ``op``."""
    m2 = d2.letter_map
    cols = [(t, m2[a]) for a, t in zip(d1.alphabet, d1.delta)]
    start = (d1.initial, d2.initial)
    index = {start: 0}
    order = [start]
    rows = [[] for _ in cols]
    for p, q in order:
        for i, (t1, t2) in enumerate(cols):
            nxt = (t1[p], t2[q])
            j = index.get(nxt)
            if j is None:
                j = index[nxt] = len(order)
                order.append(nxt)
            rows[i].append(j)
    finals = frozenset(i for i, (p, q) in enumerate(order)
                       if op(p in d1.finals, q in d2.finals))
    return Dfa(len(order), d1.alphabet, tuple(tuple(r) for r in rows), 0, finals)


def result_alphabet(a1, a2, op: BooleanOp) -> tuple:
    """Alphabet of L' op L in unrestricted mode."""
    union = tuple(a1) + tuple(a for a in a2 if a not in a1)
    if op.mask == "0001":
        return tuple(a for a in a1 if a in a2)
    if op.mask == "0010":
        return tuple(a1)
    if op.mask == "0100":
        return tuple(a2)
    return union


def boolean(d1: Dfa, d2: Dfa, op: BooleanOp | str, mode: str = RESTRICTED) -> Dfa:
    if isinstance(op, str):
        op = boolean_op(op)
    u1, u2 = _check_mode(d1, d2, mode)
    result = direct_product(u1, u2, op)
    if mode == UNRESTRICTED:
        result = restrict_alphabet(result, result_alphabet(d1.alphabet, d2.alphabet, op))
    return minimize(result)
