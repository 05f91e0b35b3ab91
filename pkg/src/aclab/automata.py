"""Complete DFAs, NFAs and the basic algorithms on them.

States are the integers ``0..n-1``.  A DFA stores one transformation (a tuple
of images) per letter, so ``dfa.delta[i][q]`` is the successor of ``q`` under
``dfa.alphabet[i]``.  Subsets of states are encoded as int bit masks.
"""
from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .config import MAX_SUBSET_WIDTH, BudgetExceeded, subset_limit

Transformation = tuple  # tuple[int, ...]; images[q] is the image of q
EPS = None  # letter slot used for empty-word moves in NFA transitions


def _check_alphabet(alphabet: Sequence[str]) -> tuple[str, ...]:
    alphabet = tuple(alphabet)
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f"duplicate letters in alphabet {alphabet}")
    for a in alphabet:
        if not isinstance(a, str) or not a:
            raise ValueError(f"letters must be non-empty strings, got {a!r}")
    return alphabet


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic automaton over an explicit, ordered alphabet."""

    n: int
    alphabet: tuple
    delta: tuple
    initial: int = 0
    finals: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        alphabet = _check_alphabet(self.alphabet)
        delta = tuple(tuple(int(x) for x in t) for t in self.delta)
        finals = frozenset(int(q) for q in self.finals)
        if self.n < 1:
            raise ValueError("a DFA needs at least one state")
        if len(delta) != len(alphabet):
            raise ValueError("one transformation per letter is required")
        for a, t in zip(alphabet, delta):
            if len(t) != self.n or any(not 0 <= x < self.n for x in t):
                raise ValueError(f"bad transformation for letter {a!r}: {t}")
        if not 0 <= self.initial < self.n:
            raise ValueError(f"initial state {self.initial} out of range")
        if any(not 0 <= q < self.n for q in finals):
            raise ValueError(f"final states {sorted(finals)} out of range")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "finals", finals)

    @classmethod
    def from_map(cls, n: int, delta: Mapping[str, Sequence[int]], initial: int = 0,
                 finals: Iterable[int] = ()) -> "Dfa":
        return cls(n, tuple(delta), tuple(tuple(v) for v in delta.values()),
                   initial, frozenset(finals))

    @property
    def letter_map(self) -> dict:
        return dict(zip(self.alphabet, self.delta))

    def transform(self, letter: str) -> Transformation:
        return self.delta[self.alphabet.index(letter)]

    def run(self, word: Iterable[str], start: int | None = None) -> int:
        lm = self.letter_map
        q = self.initial if start is None else start
        for a in word:
            q = lm[a][q]
        return q

    def accepts(self, word: Iterable[str]) -> bool:
        return self.run(word) in self.finals

    def with_initial(self, q: int) -> "Dfa":
        return Dfa(self.n, self.alphabet, self.delta, q, self.finals)

    def with_finals(self, finals: Iterable[int]) -> "Dfa":
        return Dfa(self.n, self.alphabet, self.delta, self.initial, frozenset(finals))

    def reachable(self) -> list:
        """States reachable from the initial state, in breadth-first order."""
        seen = {self.initial}
        order = [self.initial]
        for q in order:
            for t in self.delta:
                r = t[q]
                if r not in seen:
                    seen.add(r)
                    order.append(r)
        return order

    def coreachable(self) -> set:
        """States from which some final state can be reached."""
        preds = [[] for _ in range(self.n)]
        for t in self.delta:
            for q, r in enumerate(t):
                preds[r].append(q)
        seen = set(self.finals)
        stack = list(seen)
        while stack:
            r = stack.pop()
            for q in preds[r]:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return seen

    def empty_states(self) -> set:
        return set(range(self.n)) - self.coreachable()

    def to_json(self) -> dict:
        return {
            "type": "dfa",
            "states": self.n,
            "alphabet": list(self.alphabet),
            "delta": {a: list(t) for a, t in zip(self.alphabet, self.delta)},
            "initial": self.initial,
            "finals": sorted(self.finals),
        }


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton; a transition letter of ``None`` is an empty-word move."""

    n: int
    alphabet: tuple
    transitions: frozenset
    initials: frozenset
    finals: frozenset

    def __post_init__(self):
        alphabet = _check_alphabet(self.alphabet)
        letters = set(alphabet)
        trans = frozenset((int(p), a, int(q)) for p, a, q in self.transitions)
        for p, a, q in trans:
            if not (0 <= p < self.n and 0 <= q < self.n):
                raise ValueError(f"transition {(p, a, q)} out of range")
            if a is not EPS and a not in letters:
                raise ValueError(f"unknown letter {a!r} in transition")
        initials = frozenset(int(q) for q in self.initials)
        finals = frozenset(int(q) for q in self.finals)
        if any(not 0 <= q < self.n for q in initials | finals):
            raise ValueError("initial/final states out of range")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", trans)
        object.__setattr__(self, "initials", initials)
        object.__setattr__(self, "finals", finals)

    @property
    def has_eps(self) -> bool:
        return any(a is EPS for _, a, _ in self.transitions)

    def successor_masks(self) -> tuple:
        """Per-letter successor masks plus the empty-word closure of each state."""
        idx = {a: i for i, a in enumerate(self.alphabet)}
        succ = [[0] * self.n for _ in self.alphabet]
        eps = [0] * self.n
        for p, a, q in self.transitions:
            if a is EPS:
                eps[p] |= 1 << q
            else:
                succ[idx[a]][p] |= 1 << q
        closure = [0] * self.n
        for q in range(self.n):
            mask = 1 << q
            stack = [q]
            while stack:
                p = stack.pop()
                new = eps[p] & ~mask
                mask |= eps[p]
                while new:
                    low = new & -new
                    stack.append(low.bit_length() - 1)
                    new ^= low
            closure[q] = mask
        return succ, closure

    def accepts(self, word: Iterable[str]) -> bool:
        succ, closure = self.successor_masks()
        idx = {a: i for i, a in enumerate(self.alphabet)}
        current = _close(to_mask(self.initials), closure)
        for a in word:
            current = _close(_image(current, succ[idx[a]]), closure)
        return bool(current & to_mask(self.finals))

    def reversed(self) -> "Nfa":
        return Nfa(self.n, self.alphabet,
                   frozenset((q, a, p) for p, a, q in self.transitions),
                   self.finals, self.initials)

    def to_json(self) -> dict:
        trans = sorted(self.transitions, key=lambda t: (t[0], "" if t[1] is EPS else t[1], t[2]))
        return {
            "type": "nfa",
            "states": self.n,
            "alphabet": list(self.alphabet),
            "transitions": [[p, "eps" if a is EPS else a, q] for p, a, q in trans],
            "initials": sorted(self.initials),
            "finals": sorted(self.finals),
        }


def to_mask(states: Iterable[int]) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def from_mask(mask: int) -> frozenset:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _image(mask: int, succ: Sequence[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= succ[low.bit_length() - 1]
        mask ^= low
    return out


def _close(mask: int, closure: Sequence[int]) -> int:
    return _image(mask, closure)


def nfa_from_dfa(dfa: Dfa) -> Nfa:
    trans = frozenset((q, a, t[q]) for a, t in zip(dfa.alphabet, dfa.delta) for q in range(dfa.n))
    return Nfa(dfa.n, dfa.alphabet, trans, frozenset([dfa.initial]), dfa.finals)


def determinize(nfa: Nfa, limit: int | None = None, with_subsets: bool = False):
    """Subset construction restricted to subsets reachable from the initial set.

    States are numbered in breadth-first order (letters in alphabet order).
    With ``with_subsets=True`` the list of state masks is returned as well.
    """
    if nfa.n > MAX_SUBSET_WIDTH:
        raise BudgetExceeded("subset width", MAX_SUBSET_WIDTH, nfa.n)
    limit = subset_limit() if limit is None else limit
    succ, closure = nfa.successor_masks()
    use_eps = nfa.has_eps
    start = to_mask(nfa.initials)
    if use_eps:
        start = _close(start, closure)
    index = {start: 0}
    order = [start]
    rows = [[] for _ in nfa.alphabet]
    k = len(nfa.alphabet)
    for S in order:
        for i in range(k):
            T = _image(S, succ[i])
            if use_eps:
                T = _close(T, closure)
            j = index.get(T)
            if j is None:
                j = len(order)
                if j >= limit:
                    raise BudgetExceeded("subset construction", limit, j + 1)
                index[T] = j
                order.append(T)
            rows[i].append(j)
    fmask = to_mask(nfa.finals)
    finals = frozenset(i for i, S in enumerate(order) if S & fmask)
    dfa = Dfa(len(order), nfa.alphabet, tuple(tuple(r) for r in rows), 0, finals)
    if with_subsets:
        return dfa, order
    return dfa


def canonical(dfa: Dfa) -> Dfa:
    """Drop unreachable states and renumber breadth-first from the initial state."""
    order = dfa.reachable()
    pos = {q: i for i, q in enumerate(order)}
    delta = tuple(tuple(pos[t[q]] for q in order) for t in dfa.delta)
    finals = frozenset(pos[q] for q in order if q in dfa.finals)
    return Dfa(len(order), dfa.alphabet, delta, 0, finals)


def _refine(dfa: Dfa) -> list:
    """Moore partition refinement; returns the class index of each state."""
    n = dfa.n
    cls = [1 if q in dfa.finals else 0 for q in range(n)]
    count = len(set(cls))
    while True:
        sigs = {}
        new = [0] * n
        for q in range(n):
            sig = (cls[q],) + tuple(cls[t[q]] for t in dfa.delta)
            c = sigs.get(sig)
            if c is None:
                c = sigs[sig] = len(sigs)
            new[q] = c
        cls = new
        if len(sigs) == count:
            return cls
        count = len(sigs)


def minimize(dfa: Dfa) -> Dfa:
    """Minimal complete DFA of the same language, canonically numbered.

    The empty quotient is kept as a state whenever it is reachable.
    """
    d = canonical(dfa)
    cls = _refine(d)
    k = max(cls) + 1
    rep = [None] * k
    for q in range(d.n):
        if rep[cls[q]] is None:
            rep[cls[q]] = q
    delta = tuple(tuple(cls[t[rep[c]]] for c in range(k)) for t in d.delta)
    finals = frozenset(c for c in range(k) if rep[c] in d.finals)
    return canonical(Dfa(k, d.alphabet, delta, cls[d.initial], finals))


def is_minimal(dfa: Dfa) -> bool:
    return minimize(dfa).n == dfa.n


def quotient_complexity(dfa: Dfa) -> int:
    return minimize(dfa).n


def quotient_complexities(dfa: Dfa) -> dict:
    """Complexity of the right language of every state of a minimal DFA."""
    if not is_minimal(dfa):
        raise ValueError("quotient complexities are defined on minimal DFAs")
    return {q: minimize(dfa.with_initial(q)).n for q in range(dfa.n)}


def _same_letters(d1, d2) -> None:
    if set(d1.alphabet) != set(d2.alphabet):
        raise ValueError(f"alphabets differ: {d1.alphabet} vs {d2.alphabet}")


def isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """Bijection of states preserving initial state, finals and every transition.

    Both DFAs must have all states reachable (minimal DFAs qualify).
    """
    _same_letters(d1, d2)
    if d1.n != d2.n or len(d1.finals) != len(d2.finals):
        return False
    m2 = d2.letter_map
    pairs = [(d1.alphabet.index(a), m2[a]) for a in d1.alphabet]
    fwd = {d1.initial: d2.initial}
    bwd = {d2.initial: d1.initial}
    queue = deque([d1.initial])
    while queue:
        p = queue.popleft()
        q = fwd[p]
        if (p in d1.finals) != (q in d2.finals):
            return False
        for i, t2 in pairs:
            p2, q2 = d1.delta[i][p], t2[q]
            if p2 in fwd:
                if fwd[p2] != q2:
                    return False
            elif q2 in bwd:
                return False
            else:
                fwd[p2] = q2
                bwd[q2] = p2
                queue.append(p2)
    return len(fwd) == d1.n


def reverse_nfa(dfa: Dfa) -> Nfa:
    trans = frozenset((t[q], a, q) for a, t in zip(dfa.alphabet, dfa.delta) for q in range(dfa.n))
    return Nfa(dfa.n, dfa.alphabet, trans, dfa.finals, frozenset([dfa.initial]))


def distinguishing_word(d1: Dfa, d2: Dfa):
    """A shortest word accepted by exactly one of the DFAs, or None."""
    _same_letters(d1, d2)
    m1, m2 = d1.letter_map, d2.letter_map
    letters = d1.alphabet
    start = (d1.initial, d2.initial)
    parent = {start: None}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in d1.finals) != (q in d2.finals):
            word = []
            node = (p, q)
            while parent[node] is not None:
                node, a = parent[node]
                word.append(a)
            return tuple(reversed(word))
        for a in letters:
            nxt = (m1[a][p], m2[a][q])
            if nxt not in parent:
                parent[nxt] = ((p, q), a)
                queue.append(nxt)
    return None


def language_equal(d1: Dfa, d2: Dfa) -> bool:
    return distinguishing_word(d1, d2) is None


def shortest_accepted(dfa: Dfa, start: int | None = None):
    """A shortest word leading from ``start`` to a final state, or None."""
    start = dfa.initial if start is None else start
    parent = {start: None}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        if q in dfa.finals:
            word = []
            while parent[q] is not None:
                q, a = parent[q]
                word.append(a)
            return tuple(reversed(word))
        for a, t in zip(dfa.alphabet, dfa.delta):
            r = t[q]
            if r not in parent:
                parent[r] = (q, a)
                queue.append(r)
    return None


def restrict_alphabet(dfa: Dfa, letters: Iterable[str]) -> Dfa:
    """Keep only the given letters (in the DFA's order); the state set is untouched."""
    keep = set(letters)
    pairs = [(a, t) for a, t in zip(dfa.alphabet, dfa.delta) if a in keep]
    return Dfa(dfa.n, tuple(a for a, _ in pairs), tuple(t for _, t in pairs),
               dfa.initial, dfa.finals)


def words(alphabet: Sequence[str], max_len: int) -> Iterator[tuple]:
    """All words of length <= max_len in length-lexicographic order."""
    layer = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (a,) for w in layer for a in alphabet]


def random_dfa(rng: random.Random, n: int, alphabet: Sequence[str] = ("a", "b"),
               final_prob: float = 0.5) -> Dfa:
    delta = tuple(tuple(rng.randrange(n) for _ in range(n)) for _ in alphabet)
    finals = frozenset(q for q in range(n) if rng.random() < final_prob)
    return Dfa(n, tuple(alphabet), delta, 0, finals)


def random_nfa(rng: random.Random, n: int, alphabet: Sequence[str] = ("a", "b"),
               density: float = 0.3, eps_density: float = 0.0) -> Nfa:
    trans = set()
    for p in range(n):
        for q in range(n):
            for a in alphabet:
                if rng.random() < density:
                    trans.add((p, a, q))
            if p != q and rng.random() < eps_density:
                trans.add((p, EPS, q))
    initials = {q for q in range(n) if rng.random() < 0.3} or {0}
    finals = {q for q in range(n) if rng.random() < 0.4}
    return Nfa(n, tuple(alphabet), frozenset(trans), frozenset(initials), frozenset(finals))


def from_json(data: Mapping):
    """Build a Dfa or Nfa from the JSON interchange dictionary."""
    kind = data.get("type", "dfa")
    n = int(data["states"])
    alphabet = tuple(data["alphabet"])
    if kind == "dfa":
        delta = data["delta"]
        missing = set(alphabet) - set(delta)
        if missing:
            raise ValueError(f"delta lacks letters {sorted(missing)}")
        return Dfa(n, alphabet, tuple(tuple(delta[a]) for a in alphabet),
                   int(data.get("initial", 0)), frozenset(data.get("finals", ())))
    if kind == "nfa":
        trans = frozenset((p, EPS if a == "eps" else a, q) for p, a, q in data["transitions"])
        return Nfa(n, alphabet, trans, frozenset(data["initials"]), frozenset(data["finals"]))
    raise ValueError(f"unknown automaton type {kind!r}")


def load(path) -> Dfa | Nfa:
    with open(path) as fh:
        return from_json(json.load(fh))


def dumps(automaton: Dfa | Nfa) -> str:
    return json.dumps(automaton.to_json())
