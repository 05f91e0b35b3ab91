"""Deciders for the ideal, free, closed and convex classes and a few others.

Every order relation (prefix, suffix, factor, subword) contributes two NFA
constructions: the upward closure of a language (L Σ*, Σ* L, Σ* L Σ*, L ⧢ Σ*)
and its downward closure (prefixes, suffixes, factors, subwords).  Each
property is then an emptiness question about a few automata read in
parallel, and the shortest word found doubles as a counterexample.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .automata import EPS, Dfa, Nfa, determinize, minimize, nfa_from_dfa
from .operations import complement
from .semigroup import is_aperiodic, transition_semigroup

RELATIONS = ("prefix", "suffix", "factor", "subword")
IDEAL_OF = {"prefix": "right_ideal", "suffix": "left_ideal",
            "factor": "two_sided_ideal", "subword": "all_sided_ideal"}
PROPERTIES = ("free", "closed", "converse_closed", "convex", "proper_convex")


# ---------------------------------------------------------------------------
# NFA plumbing


def _as_nfa(x) -> Nfa:
    return nfa_from_dfa(x) if isinstance(x, Dfa) else x


def _shifted(nfa: Nfa, offset: int) -> set:
    return {(p + offset, a, q + offset) for p, a, q in nfa.transitions}


def _word_nfa(word, alphabet) -> Nfa:
    trans = frozenset((i, a, i + 1) for i, a in enumerate(word))
    return Nfa(len(word) + 1, alphabet, trans, frozenset([0]), frozenset([len(word)]))


def _right_extension(nfa: Nfa, proper: bool) -> Nfa:
    """L Σ* (or L Σ⁺): finals move by the empty word into an all-letter loop."""
    n = nfa.n
    loop, gate = n, n + 1
    trans = set(nfa.transitions) | {(loop, a, loop) for a in nfa.alphabet}
    if proper:
        trans |= {(f, EPS, gate) for f in nfa.finals}
        trans |= {(gate, a, loop) for a in nfa.alphabet}
    else:
        trans |= {(f, EPS, loop) for f in nfa.finals}
    return Nfa(n + 2, nfa.alphabet, frozenset(trans), nfa.initials, frozenset([loop]))


def _left_extension(nfa: Nfa, proper: bool) -> Nfa:
    """Σ* L (or Σ⁺ L): a looping prefix state in front of the initial states."""
    n = nfa.n
    loop, gate = n, n + 1
    trans = set(nfa.transitions) | {(loop, a, loop) for a in nfa.alphabet}
    trans |= {(loop, EPS, i) for i in nfa.initials}
    start = loop
    if proper:
        trans |= {(gate, a, loop) for a in nfa.alphabet}
        start = gate
    return Nfa(n + 2, nfa.alphabet, frozenset(trans), frozenset([start]), nfa.finals)


def _union(x: Nfa, y: Nfa) -> Nfa:
    trans = set(x.transitions) | _shifted(y, x.n)
    return Nfa(x.n + y.n, x.alphabet, frozenset(trans),
               x.initials | {q + x.n for q in y.initials},
               x.finals | {q + x.n for q in y.finals})


def _shuffle_extension(nfa: Nfa, proper: bool) -> Nfa:
    """L ⧢ Σ*: a self-loop on every letter at every state.

    The proper version keeps two copies and crosses from the first to the
    second on the first inserted letter.
    """
    n = nfa.n
    loops = {(q, a, q) for q in range(n) for a in nfa.alphabet}
    if not proper:
        return Nfa(n, nfa.alphabet, nfa.transitions | frozenset(loops), nfa.initials, nfa.finals)
    trans = set(nfa.transitions) | _shifted(nfa, n)
    trans |= {(q + n, a, q + n) for q, a, _ in loops}
    trans |= {(q, a, q + n) for q, a, _ in loops}
    return Nfa(2 * n, nfa.alphabet, frozenset(trans), nfa.initials,
               frozenset(q + n for q in nfa.finals))


def extension(x, rel: str, proper: bool = False) -> Nfa:
    """Words having some member of L strictly (or not) below them in ``rel``."""
    nfa = _as_nfa(x)
    if rel == "prefix":
        return _right_extension(nfa, proper)
    if rel == "suffix":
        return _left_extension(nfa, proper)
    if rel == "factor":
        if proper:
            return _union(_left_extension(_right_extension(nfa, False), True),
                          _left_extension(_right_extension(nfa, True), False))
        return _left_extension(_right_extension(nfa, False), False)
    if rel == "subword":
        return _shuffle_extension(nfa, proper)
    raise ValueError(f"unknown relation {rel!r}")


def _forward(nfa: Nfa, starts) -> set:
    seen = set(starts)
    stack = list(seen)
    out: dict = {}
    for p, _, q in nfa.transitions:
        out.setdefault(p, []).append(q)
    while stack:
        p = stack.pop()
        for q in out.get(p, ()):
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def _backward(nfa: Nfa) -> set:
    return _forward(nfa.reversed(), nfa.finals)


def downward(x, rel: str) -> Nfa:
    """Words lying below some member of L in ``rel``."""
    nfa = _as_nfa(x)
    useful = _forward(nfa, nfa.initials) & _backward(nfa)
    if rel == "prefix":
        return Nfa(nfa.n, nfa.alphabet, nfa.transitions, nfa.initials, frozenset(useful))
    if rel == "suffix":
        return Nfa(nfa.n, nfa.alphabet, nfa.transitions, frozenset(useful), nfa.finals)
    if rel == "factor":
        return Nfa(nfa.n, nfa.alphabet, nfa.transitions, frozenset(useful), frozenset(useful))
    if rel == "subword":
        skips = {(p, EPS, q) for p, a, q in nfa.transitions if a is not EPS}
        return Nfa(nfa.n, nfa.alphabet, nfa.transitions | frozenset(skips),
                   nfa.initials, nfa.finals)
    raise ValueError(f"unknown relation {rel!r}")


def _search(dfas, accept):
    """Shortest word driving the DFAs (read in parallel) into an accepted tuple."""
    maps = [d.letter_map for d in dfas]
    alphabet = dfas[0].alphabet
    start = tuple(d.initial for d in dfas)
    parent = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if accept(tuple(q in d.finals for q, d in zip(cur, dfas))):
            word = []
            node = cur
            while parent[node] is not None:
                node, a = parent[node]
                word.append(a)
            return tuple(reversed(word))
        for a in alphabet:
            nxt = tuple(m[a][q] for m, q in zip(maps, cur))
            if nxt not in parent:
                parent[nxt] = (cur, a)
                queue.append(nxt)
    return None


def _find(dfa: Dfa, *nfas, accept):
    return _search([dfa] + [determinize(x) for x in nfas], accept)


def _above(dfa: Dfa, word, rel: str, proper: bool):
    """A shortest member of L lying above ``word`` in ``rel``."""
    return _find(dfa, extension(_word_nfa(word, dfa.alphabet), rel, proper),
                 accept=lambda f: f[0] and f[1])


def _below(dfa: Dfa, word, rel: str, proper: bool):
    """A shortest member of L lying below ``word`` in ``rel``."""
    below = downward(_word_nfa(word, dfa.alphabet), rel)
    if not proper:
        return _find(dfa, below, accept=lambda f: f[0] and f[1])
    exact = _word_nfa(word, dfa.alphabet)
    return _find(dfa, below, exact, accept=lambda f: f[0] and f[1] and not f[2])


# ---------------------------------------------------------------------------
# counterexamples
#
# Each *_counterexample returns None when the property holds, otherwise a
# dict of words (tuples of letters) showing why it fails.


def ideal_counterexample(d: Dfa, rel: str):
    """v in L and v ⊴ w but w not in L."""
    w = _find(d, extension(d, rel), accept=lambda f: f[1] and not f[0])
    if w is None:
        return None
    return {"v": _below(d, w, rel, proper=True), "w": w}


def free_counterexample(d: Dfa, rel: str):
    """v ◁ w with both in L."""
    w = _find(d, extension(d, rel, proper=True), accept=lambda f: f[0] and f[1])
    if w is None:
        return None
    return {"v": _below(d, w, rel, proper=True), "w": w}


def closed_counterexample(d: Dfa, rel: str):
    """v ⊴ w with w in L but v not in L."""
    witness = ideal_counterexample(complement(d), rel)
    if witness is None:
        return None
    return {"v": witness["v"], "w": witness["w"]}


def convex_counterexample(d: Dfa, rel: str):
    """u ⊴ v ⊴ w with u, w in L and v not in L."""
    v = _find(d, extension(d, rel), downward(d, rel),
              accept=lambda f: f[1] and f[2] and not f[0])
    if v is None:
        return None
    return {"u": _below(d, v, rel, proper=False), "v": v,
            "w": _above(d, v, rel, proper=False)}


# ---------------------------------------------------------------------------
# deciders


def _is_ideal(d: Dfa, rel: str) -> bool:
    return ideal_counterexample(d, rel) is None


def is_right_ideal(d: Dfa) -> bool:
    return _is_ideal(d, "prefix")


def is_left_ideal(d: Dfa) -> bool:
    return _is_ideal(d, "suffix")


def is_two_sided_ideal(d: Dfa) -> bool:
    return _is_ideal(d, "factor")


def is_all_sided_ideal(d: Dfa) -> bool:
    return _is_ideal(d, "subword")


def is_free(d: Dfa, rel: str) -> bool:
    return free_counterexample(d, rel) is None


def is_prefix_free(d: Dfa) -> bool:
    return is_free(d, "prefix")


def is_suffix_free(d: Dfa) -> bool:
    return is_free(d, "suffix")


def is_factor_free(d: Dfa) -> bool:
    return is_free(d, "factor")


def is_subword_free(d: Dfa) -> bool:
    return is_free(d, "subword")


def is_closed(d: Dfa, rel: str) -> bool:
    """L is closed downward exactly when its complement is the matching ideal."""
    return _is_ideal(complement(d), rel)


def is_prefix_closed(d: Dfa) -> bool:
    return is_closed(d, "prefix")


def is_suffix_closed(d: Dfa) -> bool:
    return is_closed(d, "suffix")


def is_factor_closed(d: Dfa) -> bool:
    return is_closed(d, "factor")


def is_subword_closed(d: Dfa) -> bool:
    return is_closed(d, "subword")


def is_convex(d: Dfa, rel: str) -> bool:
    return convex_counterexample(d, rel) is None


def is_proper_convex(d: Dfa, rel: str) -> bool:
    return (is_convex(d, rel) and not _is_ideal(d, rel)
            and not is_closed(d, rel) and not is_free(d, rel))


def is_prefix_convex(d: Dfa) -> bool:
    return is_convex(d, "prefix")


def is_suffix_convex(d: Dfa) -> bool:
    return is_convex(d, "suffix")


def is_factor_convex(d: Dfa) -> bool:
    return is_convex(d, "factor")


def is_subword_convex(d: Dfa) -> bool:
    return is_convex(d, "subword")


def is_proper_prefix_convex(d: Dfa) -> bool:
    return is_proper_convex(d, "prefix")


def is_proper_suffix_convex(d: Dfa) -> bool:
    return is_proper_convex(d, "suffix")


def is_proper_factor_convex(d: Dfa) -> bool:
    return is_proper_convex(d, "factor")


def is_proper_subword_convex(d: Dfa) -> bool:
    return is_proper_convex(d, "subword")


def is_non_returning(d: Dfa) -> bool:
    """No transition of the minimal DFA enters its initial state."""
    m = minimize(d)
    return all(t[q] != m.initial for t in m.delta for q in range(m.n))


def is_bideterministic(d: Dfa) -> bool:
    """The minimal complete DFA has one final state and every letter acts injectively."""
    m = minimize(d)
    return len(m.finals) == 1 and all(len(set(t)) == m.n for t in m.delta)


def is_star_free(d: Dfa, limit: int | None = None) -> bool:
    """Aperiodicity of the transition semigroup of the minimal DFA."""
    return is_aperiodic(transition_semigroup(minimize(d), limit))


# ---------------------------------------------------------------------------
# reports


def word_text(word) -> str:
    """Letters joined directly when all are single characters, else by spaces."""
    if word is None:
        return None
    if all(len(a) == 1 for a in word):
        return "".join(word)
    return " ".join(word)


@dataclass
class ClassReport:
    flags: dict
    explanations: dict = field(default_factory=dict)

    def __getitem__(self, key: str) -> bool:
        return self.flags[key]

    def to_json(self) -> dict:
        out = {"flags": dict(self.flags)}
        if self.explanations:
            out["explanations"] = {k: {r: word_text(w) for r, w in v.items()}
                                   for k, v in self.explanations.items()}
        return out


def classify(d: Dfa, explain: bool = False, limit: int | None = None) -> ClassReport:
    """Every flag for the language of ``d``; with ``explain``, witnesses for failures."""
    d = minimize(d)
    flags = {}
    explanations = {}
    for rel in RELATIONS:
        found = {
            "converse_closed": ideal_counterexample(d, rel),
            "free": free_counterexample(d, rel),
            "closed": closed_counterexample(d, rel),
            "convex": convex_counterexample(d, rel),
        }
        for prop, cx in found.items():
            flags[f"{rel}_{prop}"] = cx is None
            if cx is not None and explain:
                explanations[f"{rel}_{prop}"] = cx
        flags[IDEAL_OF[rel]] = flags[f"{rel}_converse_closed"]
        flags[f"{rel}_proper_convex"] = (flags[f"{rel}_convex"]
                                        and not flags[f"{rel}_converse_closed"]
                                        and not flags[f"{rel}_closed"]
                                        and not flags[f"{rel}_free"])
    flags["non_returning"] = is_non_returning(d)
    flags["bideterministic"] = is_bideterministic(d)
    flags["star_free"] = is_star_free(d, limit)
    return ClassReport(dict(sorted(flags.items())), explanations)


# The memberships each witness stream is built to have.  Every flag of
# ``classify`` not listed is claimed false, so the sets are exact.
_SUFFIX_FREE = frozenset({"suffix_free", "suffix_convex", "non_returning"})
CLAIMS = {
    "regular4": frozenset(),
    "regular3": frozenset(),
    "right_ideal": frozenset({"right_ideal", "prefix_converse_closed", "prefix_convex"}),
    "prefix_closed": frozenset({"prefix_closed", "prefix_convex"}),
    "prefix_free": frozenset({"prefix_free", "prefix_convex"}),
    "proper_prefix_convex": frozenset({"prefix_convex", "prefix_proper_convex"}),
    "left_ideal": frozenset({"left_ideal", "suffix_converse_closed", "suffix_convex"}),
    "suffix_closed": frozenset({"suffix_closed", "suffix_convex"}),
    # a suffix-free language cannot re-enter its initial state
    "suffix_free_semigroup": _SUFFIX_FREE,
    "suffix_free_ops": _SUFFIX_FREE,
    # no word of this stream is a factor of another one
    "bifix_free_ops": _SUFFIX_FREE | {"prefix_free", "prefix_convex", "factor_free",
                                      "factor_convex"},
    "two_sided_ideal": frozenset({"two_sided_ideal", "right_ideal", "left_ideal",
                                  "prefix_converse_closed", "suffix_converse_closed",
                                  "factor_converse_closed", "prefix_convex",
                                  "suffix_convex", "factor_convex"}),
    "non_returning": frozenset({"non_returning"}),
}


def claim_mismatches(cls: str, report: ClassReport) -> dict:
    """Flags where the report disagrees with the claim, as {flag: (claimed, found)}."""
    claimed = CLAIMS[cls]
    return {k: (k in claimed, v) for k, v in report.flags.items() if v != (k in claimed)}
