"""Atoms of a regular language, computed directly from its minimal DFA.

An atom is keyed by the subset ``S`` of states whose quotients it lies in.
Its quotients are represented by pairs ``(X, Y)`` of disjoint state sets,
standing for the intersection of the quotients in X with the complements of
the quotients in Y.  Reading a letter maps the pair to ``(Xa, Ya)``; when the
two images meet, the intersection is empty.
"""
from __future__ import annotations

from dataclasses import dataclass

from .automata import (Dfa, Nfa, determinize, from_mask, is_minimal, minimize,
                       reverse_nfa, to_mask, _image)
from .bounds import atom_bound
from .config import MAX_ATOM_STATES, BudgetExceeded, pair_limit
from .semigroup import (is_set_transitive, permutation_subgroup, rank,
                        transition_semigroup)

_SINK = None  # pair state for an empty intersection


def _require(dfa: Dfa) -> None:
    if dfa.n > MAX_ATOM_STATES:
        raise BudgetExceeded("atom enumeration (states)", MAX_ATOM_STATES, dfa.n)


def _letter_images(dfa: Dfa) -> list:
    """For each letter, the image mask of every single state."""
    return [[1 << t[q] for q in range(dfa.n)] for t in dfa.delta]


def _pair_step(pair, succ):
    if pair is _SINK:
        return _SINK
    x, y = _image(pair[0], succ), _image(pair[1], succ)
    if x & y:
        return _SINK
    return (x, y)


def _pair_accepts(pair, fmask: int) -> bool:
    if pair is _SINK:
        return False
    x, y = pair
    return (x & ~fmask) == 0 and (y & fmask) == 0


def _nonempty_pairs(dfa: Dfa, starts) -> set:
    """Subset of ``starts`` whose pair automata accept some word."""
    succs = _letter_images(dfa)
    fmask = to_mask(dfa.finals)
    limit = pair_limit()
    seen = set(starts)
    order = list(seen)
    edges = {}
    for p in order:
        out = []
        for succ in succs:
            r = _pair_step(p, succ)
            out.append(r)
            if r not in seen:
                seen.add(r)
                order.append(r)
                if len(seen) > limit:
                    raise BudgetExceeded("atom pair states", limit, len(seen))
        edges[p] = out
    preds: dict = {p: [] for p in order}
    for p, out in edges.items():
        for r in out:
            preds[r].append(p)
    alive = {p for p in order if _pair_accepts(p, fmask)}
    stack = list(alive)
    while stack:
        r = stack.pop()
        for p in preds[r]:
            if p not in alive:
                alive.add(p)
                stack.append(p)
    return alive


def atom_ids(dfa: Dfa) -> list:
    """All S (as frozensets) whose atomic intersection is non-empty, sorted."""
    _require(dfa)
    full = (1 << dfa.n) - 1
    starts = [(s, full ^ s) for s in range(1 << dfa.n)]
    alive = _nonempty_pairs(dfa, starts)
    found = [from_mask(p[0]) for p in starts if p in alive]
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def atom_count_equals_reverse(dfa: Dfa) -> tuple:
    """(number of atoms, complexity of the reverse), computed independently."""
    count = len(atom_ids(dfa))
    reverse_size = minimize(determinize(reverse_nfa(dfa))).n
    return count, reverse_size


def atom_dfa(dfa: Dfa, S) -> Dfa:
    """DFA of the atom A_S built from pairs of disjoint state sets."""
    _require(dfa)
    full = (1 << dfa.n) - 1
    s = to_mask(S)
    start = (s, full ^ s)
    succs = _letter_images(dfa)
    fmask = to_mask(dfa.finals)
    limit = pair_limit()
    index = {start: 0}
    order = [start]
    rows = [[] for _ in succs]
    for p in order:
        for i, succ in enumerate(succs):
            r = _pair_step(p, succ)
            j = index.get(r)
            if j is None:
                j = index[r] = len(order)
                order.append(r)
                if len(order) > limit:
                    raise BudgetExceeded("atom pair states", limit, len(order))
            rows[i].append(j)
    finals = frozenset(i for i, p in enumerate(order) if _pair_accepts(p, fmask))
    return Dfa(len(order), dfa.alphabet, tuple(tuple(r) for r in rows), 0, finals)


def atom_complexity(dfa: Dfa, S) -> int:
    d = minimize(atom_dfa(dfa, S))
    if not d.finals:
        raise ValueError(f"{sorted(S)} does not index an atom")
    return d.n


def atom_report(dfa: Dfa) -> dict:
    atoms = atom_ids(dfa)
    _, reverse_size = atom_count_equals_reverse(dfa)
    return {
        "atoms": [{"S": sorted(S), "complexity": atom_complexity(dfa, S)} for S in atoms],
        "count": len(atoms),
        "reverse_complexity": reverse_size,
    }


# ---------------------------------------------------------------------------
# átomaton


@dataclass(frozen=True)
class Atomaton:
    nfa: Nfa
    atoms: tuple  # atoms[i] is the S of NFA state i

    def atom_index(self, S) -> int:
        return self.atoms.index(frozenset(S))


def atomaton(dfa: Dfa) -> Atomaton:
    """NFA over the atoms: A_T is an a-successor of A_S when a·A_T is inside A_S.

    a·A_T lies in A_S exactly when the pair step of (S, complement S) under a
    lands inside the pair (T, complement T).
    """
    if not is_minimal(dfa):
        raise ValueError("the átomaton is defined from a minimal DFA")
    atoms = tuple(atom_ids(dfa))
    full = (1 << dfa.n) - 1
    masks = [to_mask(S) for S in atoms]
    succs = _letter_images(dfa)
    trans = set()
    for i, s in enumerate(masks):
        for a, succ in zip(dfa.alphabet, succs):
            step = _pair_step((s, full ^ s), succ)
            if step is _SINK:
                continue
            x, y = step
            for j, t in enumerate(masks):
                if x & ~t == 0 and y & t == 0:
                    trans.add((i, a, j))
    initials = frozenset(i for i, S in enumerate(atoms) if dfa.initial in S)
    finals = frozenset(i for i, S in enumerate(atoms) if S == dfa.finals)
    return Atomaton(Nfa(len(atoms), dfa.alphabet, frozenset(trans), initials, finals), atoms)


# ---------------------------------------------------------------------------
# atomicity classes


def atomicity_classes(dfa: Dfa, limit: int | None = None) -> dict:
    """Flags for FTS, STS, MAL, MNA and MCR of a minimal DFA with n >= 3."""
    if not is_minimal(dfa):
        raise ValueError("atomicity classes are defined on minimal DFAs")
    n = dfa.n
    if n < 3:
        raise ValueError("atomicity classes need n >= 3")
    sg = transition_semigroup(dfa, limit)
    fts = len(sg) == n ** n
    group = permutation_subgroup(sg)
    sts = is_set_transitive(group, n) and any(rank(t) == n - 1 for t in sg.elements)
    atoms = atom_ids(dfa)
    mna = len(atoms) == 2 ** n
    mal = mna and all(atom_complexity(dfa, S) == atom_bound("regular", n, S) for S in atoms)
    mcr = minimize(determinize(reverse_nfa(dfa))).n == 2 ** n
    return {"FTS": fts, "STS": sts, "MAL": mal, "MNA": mna, "MCR": mcr}
