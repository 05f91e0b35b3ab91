"""Transformations of ``{0..n-1}``, transition semigroups and permutation groups.

Composition follows the left-to-right action convention: ``compose(s, t)``
applies ``s`` first, then ``t``.
"""
from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from math import comb
from operator import itemgetter
from typing import Iterable, Sequence

from .automata import Dfa, minimize
from .config import BudgetExceeded, semigroup_limit

# ---------------------------------------------------------------------------
# symbolic notation


@dataclass(frozen=True)
class Cycle:
    states: tuple

    def __init__(self, *states):
        object.__setattr__(self, "states", tuple(states))

    def domain(self) -> tuple:
        return self.states

    def images(self, n: int) -> dict:
        s = self.states
        if len(set(s)) != len(s):
            raise ValueError(f"repeated state in cycle {s}")
        return {q: s[(i + 1) % len(s)] for i, q in enumerate(s)}


@dataclass(frozen=True)
class Collapse:
    """``(P -> q)``: every state of P goes to q."""

    sources: tuple
    target: int

    def __init__(self, sources, target):
        if isinstance(sources, int):
            sources = (sources,)
        object.__setattr__(self, "sources", tuple(sources))
        object.__setattr__(self, "target", target)

    def domain(self) -> tuple:
        return self.sources

    def images(self, n: int) -> dict:
        return {p: self.target for p in self.sources}


@dataclass(frozen=True)
class Shift:
    """``(_i^j q -> q+step)`` for i <= q <= j, optionally taken mod n."""

    start: int
    stop: int
    step: int = 1
    modular: bool = False

    def domain(self) -> tuple:
        # an empty range (stop < start) is the identity
        return tuple(range(self.start, self.stop + 1))

    def images(self, n: int) -> dict:
        out = {}
        for q in self.domain():
            r = q + self.step
            if self.modular:
                r %= n
            out[q] = r
        return out


@dataclass(frozen=True)
class Identity:
    def domain(self) -> tuple:
        return ()

    def images(self, n: int) -> dict:
        return {}


@dataclass(frozen=True)
class Combined:
    """Juxtaposed parts acting simultaneously on pairwise disjoint domains."""

    parts: tuple

    def __init__(self, *parts):
        object.__setattr__(self, "parts", tuple(parts))

    def domain(self) -> tuple:
        return tuple(q for p in self.parts for q in p.domain())

    def images(self, n: int) -> dict:
        out = {}
        for part in self.parts:
            for q, r in part.images(n).items():
                if q in out:
                    raise ValueError(f"state {q} appears in two juxtaposed parts")
                out[q] = r
        return out


def compile(spec, n: int) -> tuple:
    """Turn a symbolic transformation into its image tuple on ``Q_n``."""
    images = spec.images(n)
    for q, r in images.items():
        if not (0 <= q < n and 0 <= r < n):
            raise ValueError(f"state index out of range for n={n}: {q}->{r}")
    return tuple(images.get(q, q) for q in range(n))


# ---------------------------------------------------------------------------
# transformation algebra


def identity(n: int) -> tuple:
    return tuple(range(n))


def compose(s: Sequence[int], t: Sequence[int]) -> tuple:
    if len(s) != len(t):
        raise ValueError("cannot compose transformations of different degrees")
    return tuple(t[x] for x in s)


def _composer(n: int):
    if n == 1:
        return lambda s, t: (t[s[0]],)
    return lambda s, t: itemgetter(*s)(t)


def rank(t: Sequence[int]) -> int:
    return len(set(t))


def is_permutation(t: Sequence[int]) -> bool:
    return len(set(t)) == len(t)


def inverse(t: Sequence[int]) -> tuple:
    if not is_permutation(t):
        raise ValueError(f"{t} is not a permutation")
    out = [0] * len(t)
    for q, r in enumerate(t):
        out[r] = q
    return tuple(out)


def cycle_type(t: Sequence[int]) -> tuple:
    seen = set()
    lengths = []
    for q in range(len(t)):
        if q in seen:
            continue
        length = 0
        r = q
        while r not in seen:
            seen.add(r)
            r = t[r]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def power(t: Sequence[int], k: int) -> tuple:
    result = identity(len(t))
    for _ in range(k):
        result = compose(result, t)
    return result


# ---------------------------------------------------------------------------
# semigroups


@dataclass(frozen=True)
class TransitionSemigroup:
    n: int
    generators: dict
    elements: frozenset
    words: dict | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, t) -> bool:
        return tuple(t) in self.elements

    @property
    def has_identity(self) -> bool:
        return identity(self.n) in self.elements

    def report(self) -> dict:
        return {
            "size": len(self),
            "has_identity": self.has_identity,
            "perm_subgroup_size": len(permutation_subgroup(self)),
            "aperiodic": is_aperiodic(self),
        }


def generate(generators: dict, n: int, limit: int | None = None,
             keep_words: bool = False) -> TransitionSemigroup:
    """Breadth-first closure of the generators under composition.

    ``generators`` maps a letter to its transformation.  Only non-empty words
    are considered, so the identity is present only if some word induces it.
    """
    limit = semigroup_limit() if limit is None else limit
    mul = _composer(n)
    gens = [(a, tuple(t)) for a, t in generators.items()]
    words: dict = {}
    seen = set()
    queue = deque()
    for a, t in gens:
        if t not in seen:
            seen.add(t)
            queue.append(t)
            if keep_words:
                words[t] = (a,)
    if len(seen) > limit:
        raise BudgetExceeded("semigroup", limit, len(seen))
    while queue:
        s = queue.popleft()
        for a, g in gens:
            u = mul(s, g)
            if u not in seen:
                seen.add(u)
                if len(seen) > limit:
                    raise BudgetExceeded("semigroup", limit, len(seen))
                queue.append(u)
                if keep_words:
                    words[u] = words[s] + (a,)
    return TransitionSemigroup(n, dict(gens), frozenset(seen), words if keep_words else None)


def transition_semigroup(dfa: Dfa, limit: int | None = None,
                         keep_words: bool = False) -> TransitionSemigroup:
    return generate(dfa.letter_map, dfa.n, limit, keep_words)


def syntactic_complexity(dfa: Dfa, limit: int | None = None) -> int:
    return len(transition_semigroup(minimize(dfa), limit))


def is_closed(sg: TransitionSemigroup) -> bool:
    mul = _composer(sg.n)
    return all(mul(s, t) in sg.elements for s in sg.elements for t in sg.elements)


def is_aperiodic(sg: TransitionSemigroup) -> bool:
    """Every element satisfies t^(k+1) = t^k for some k."""
    mul = _composer(sg.n)
    cap = len(sg.elements) + 1
    for t in sg.elements:
        p = t
        seen = {p}
        for _ in range(cap):
            q = mul(p, t)
            if q == p:
                break
            if q in seen:
                return False
            seen.add(q)
            p = q
    return True


# ---------------------------------------------------------------------------
# permutation groups


@dataclass(frozen=True)
class PermutationGroup:
    n: int
    elements: frozenset

    def __len__(self) -> int:
        return len(self.elements)


def permutation_subgroup(sg: TransitionSemigroup) -> PermutationGroup:
    return PermutationGroup(sg.n, frozenset(t for t in sg.elements if is_permutation(t)))


def group_generated(generators: Iterable[Sequence[int]], n: int) -> PermutationGroup:
    gens = {str(i): tuple(g) for i, g in enumerate(generators)}
    if not gens:
        return PermutationGroup(n, frozenset([identity(n)]))
    elements = set(generate(gens, n).elements)
    elements.add(identity(n))
    return PermutationGroup(n, frozenset(elements))


def symmetric_group(n: int) -> PermutationGroup:
    return PermutationGroup(n, frozenset(itertools.permutations(range(n))))


def alternating_group(n: int) -> PermutationGroup:
    def even(p):
        return (len(p) - len(cycle_type(p))) % 2 == 0
    return PermutationGroup(n, frozenset(p for p in itertools.permutations(range(n)) if even(p)))


def is_k_set_transitive(g: PermutationGroup, n: int, k: int) -> bool:
    if k in (0, n):
        return True
    if not g.elements:
        return False
    base = frozenset(range(k))
    orbit = {frozenset(p[q] for q in base) for p in g.elements}
    return len(orbit) == comb(n, k)


def is_set_transitive(g: PermutationGroup, n: int) -> bool:
    return all(is_k_set_transitive(g, n, k) for k in range(1, n))


# ---------------------------------------------------------------------------
# bases and products


def conjugate_bases(s, t, s2, t2, max_n: int = 8):
    """Return a permutation r with r s r^-1 = s2 and r t r^-1 = t2, or None.

    Truthiness of the result answers whether the two bases are conjugate.
    """
    s, t, s2, t2 = map(tuple, (s, t, s2, t2))
    n = len(s)
    if any(len(x) != n for x in (t, s2, t2)):
        raise ValueError("all four transformations must have the same degree")
    if not all(map(is_permutation, (s, t, s2, t2))):
        raise ValueError("bases must consist of permutations")
    if n > max_n:
        raise ValueError(f"exhaustive conjugacy search is limited to n <= {max_n}")
    if cycle_type(s) != cycle_type(s2) or cycle_type(t) != cycle_type(t2):
        return None
    # r s r^-1 = s2  <=>  s2 . r = r . s under left-to-right composition,
    # i.e. r[s2[q]] == s[r[q]] for every q; extend r point by point.
    r = [None] * n
    used = [False] * n

    def consistent(q):
        for x, y in ((s2, s), (t2, t)):
            a = x[q]
            if r[a] is not None and r[a] != y[r[q]]:
                return False
            for p in range(n):
                if r[p] is not None and x[p] == q and r[q] != y[r[p]]:
                    return False
        return True

    def extend(q):
        if q == n:
            return True
        for v in range(n):
            if not used[v]:
                r[q] = v
                used[v] = True
                if consistent(q) and extend(q + 1):
                    return True
                used[v] = False
                r[q] = None
        return False

    if extend(0):
        return tuple(r)
    return None


def conjugate(r, s) -> tuple:
    """r s r^-1 in left-to-right composition."""
    return compose(compose(r, s), inverse(r))


def perm_reachable_states(d1: Dfa, d2: Dfa, limit: int | None = None) -> set:
    """Pairs of the direct product reachable by words acting as permutations on both."""
    if set(d1.alphabet) != set(d2.alphabet):
        raise ValueError("perm_reachable_states needs equal alphabets")
    m, n = d1.n, d2.n
    m2 = d2.letter_map
    gens = {a: t + tuple(m + x for x in m2[a]) for a, t in zip(d1.alphabet, d1.delta)}
    sg = generate(gens, m + n, limit)
    pairs = {(d1.initial, d2.initial)}
    for u in sg.elements:
        left, right = u[:m], u[m:]
        if is_permutation(left) and is_permutation(right):
            pairs.add((left[d1.initial], right[d2.initial] - m))
    return pairs


def count_by_rank(sg: TransitionSemigroup) -> Counter:
    return Counter(rank(t) for t in sg.elements)
