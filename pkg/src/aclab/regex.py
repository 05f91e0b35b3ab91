"""Regular expressions, their derivatives, and the quotient DFA they induce.

Expressions use only union, product and star over letters, the empty set and
the empty word.  Derivatives are taken literally by the classical rules and
then brought to a canonical similarity form, which is what identifies states
of the quotient DFA.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .automata import Dfa
from .config import DEFAULT_DERIVATIVE_LIMIT, BudgetExceeded


class Expr:
    __slots__ = ()

    def __add__(self, other: "Expr") -> "Expr":
        return Union(self, other)

    def __mul__(self, other: "Expr") -> "Expr":
        return Product(self, other)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, repr=False)
class Empty(Expr):
    def __repr__(self):
        return "Empty()"


@dataclass(frozen=True, repr=False)
class Epsilon(Expr):
    def __repr__(self):
        return "Epsilon()"


@dataclass(frozen=True)
class Letter(Expr):
    name: str


@dataclass(frozen=True)
class Union(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Product(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Star(Expr):
    child: Expr


EMPTY = Empty()
EPSILON = Epsilon()


def letters(e: Expr) -> frozenset:
    if isinstance(e, Letter):
        return frozenset([e.name])
    if isinstance(e, (Union, Product)):
        return letters(e.left) | letters(e.right)
    if isinstance(e, Star):
        return letters(e.child)
    return frozenset()


@lru_cache(maxsize=None)
def nullable(e: Expr) -> bool:
    """Whether the empty word belongs to the language of ``e``."""
    if isinstance(e, (Epsilon, Star)):
        return True
    if isinstance(e, Union):
        return nullable(e.left) or nullable(e.right)
    if isinstance(e, Product):
        return nullable(e.left) and nullable(e.right)
    return False


def derivative(e: Expr, a: str, alphabet=None) -> Expr:
    """The quotient a^-1 L(e), built by the textbook rules without simplification."""
    if alphabet is not None and a not in alphabet:
        raise ValueError(f"letter {a!r} is not in the alphabet {sorted(alphabet)}")
    return _d(e, a)


@lru_cache(maxsize=None)
def _d(e: Expr, a: str) -> Expr:
    if isinstance(e, (Empty, Epsilon)):
        return EMPTY
    if isinstance(e, Letter):
        return EPSILON if e.name == a else EMPTY
    if isinstance(e, Union):
        return Union(_d(e.left, a), _d(e.right, a))
    if isinstance(e, Product):
        first = Product(_d(e.left, a), e.right)
        if nullable(e.left):
            return Union(first, _d(e.right, a))
        return first
    if isinstance(e, Star):
        return Product(_d(e.child, a), e)
    raise TypeError(f"not an expression: {e!r}")


def word_derivative(e: Expr, word, alphabet=None, normalize: bool = True) -> Expr:
    """Fold ``derivative`` over ``word`` from the left; the empty word gives ``e``."""
    for a in word:
        e = derivative(e, a, alphabet)
        if normalize:
            e = similar_normalize(e)
    return e


# ---------------------------------------------------------------------------
# similarity


_RANK = {Empty: 0, Epsilon: 1, Letter: 2, Product: 3, Star: 4, Union: 5}


@lru_cache(maxsize=None)
def sort_key(e: Expr) -> tuple:
    """A total structural order used to sort union operands."""
    kind = _RANK[type(e)]
    if isinstance(e, Letter):
        return (kind, e.name)
    if isinstance(e, Product):
        return (kind, sort_key(e.left), sort_key(e.right))
    if isinstance(e, Star):
        return (kind, sort_key(e.child))
    if isinstance(e, Union):
        return (kind,) + tuple(sort_key(x) for x in union_operands(e))
    return (kind,)


def union_operands(e: Expr) -> list:
    if isinstance(e, Union):
        return union_operands(e.left) + union_operands(e.right)
    return [e]


def union_of(operands) -> Expr:
    """Canonical union: drop the empty set, deduplicate, sort, nest to the right."""
    ops = {x for x in operands if not isinstance(x, Empty)}
    if not ops:
        return EMPTY
    ordered = sorted(ops, key=sort_key)
    out = ordered[-1]
    for x in reversed(ordered[:-1]):
        out = Union(x, out)
    return out


@lru_cache(maxsize=None)
def similar_normalize(e: Expr) -> Expr:
    """Canonical representative under the similarity rules.

    Union is treated as associative, commutative and idempotent with the
    empty set as unit; the empty set annihilates products and the empty word
    is their unit.  Nothing else is simplified.
    """
    if isinstance(e, Union):
        parts = []
        for child in (e.left, e.right):
            parts.extend(union_operands(similar_normalize(child)))
        return union_of(parts)
    if isinstance(e, Product):
        left, right = similar_normalize(e.left), similar_normalize(e.right)
        if isinstance(left, Empty) or isinstance(right, Empty):
            return EMPTY
        if isinstance(left, Epsilon):
            return right
        if isinstance(right, Epsilon):
            return left
        return Product(left, right)
    if isinstance(e, Star):
        return Star(similar_normalize(e.child))
    return e


def derivative_dfa(e: Expr, alphabet=None, limit: int = DEFAULT_DERIVATIVE_LIMIT) -> Dfa:
    """Quotient DFA: states are the dissimilar derivatives, found breadth first.

    ``alphabet`` defaults to the letters of ``e`` in sorted order.
    """
    alphabet = tuple(sorted(letters(e))) if alphabet is None else tuple(alphabet)
    missing = letters(e) - set(alphabet)
    if missing:
        raise ValueError(f"letters {sorted(missing)} are not in the alphabet")
    start = similar_normalize(e)
    index = {start: 0}
    order = [start]
    rows = [[] for _ in alphabet]
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i, a in enumerate(alphabet):
            nxt = similar_normalize(_d(cur, a))
            j = index.get(nxt)
            if j is None:
                j = index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
                if len(order) > limit:
                    raise BudgetExceeded("derivative states", limit, len(order))
            rows[i].append(j)
    finals = frozenset(i for i, x in enumerate(order) if nullable(x))
    return Dfa(len(order), alphabet, tuple(tuple(r) for r in rows), 0, finals)


# ---------------------------------------------------------------------------
# text syntax


def to_text(e: Expr) -> str:
    if isinstance(e, Empty):
        return "%empty"
    if isinstance(e, Epsilon):
        return "%eps"
    if isinstance(e, Letter):
        return e.name
    if isinstance(e, Union):
        return "+".join(to_text(x) for x in union_operands(e))
    if isinstance(e, Product):
        return "".join(_wrap(x, Union) for x in (e.left, e.right))
    if isinstance(e, Star):
        return _wrap(e.child, (Union, Product)) + "*"
    raise TypeError(f"not an expression: {e!r}")


def _wrap(e: Expr, kinds) -> str:
    text = to_text(e)
    return f"({text})" if isinstance(e, kinds) else text


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ValueError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Expr:
        e = self.union()
        if self.peek() is not None:
            self.error("unexpected character")
        return e

    def union(self) -> Expr:
        e = self.concat()
        while self.peek() == "+":
            self.pos += 1
            e = Union(e, self.concat())
        return e

    def concat(self) -> Expr:
        e = self.starred()
        while self.peek() is not None and self.peek() not in "+)":
            e = Product(e, self.starred())
        return e

    def starred(self) -> Expr:
        e = self.atom()
        while self.peek() == "*":
            self.pos += 1
            e = Star(e)
        return e

    def atom(self) -> Expr:
        c = self.peek()
        if c is None:
            self.error("unexpected end of expression")
        if c == "(":
            self.pos += 1
            e = self.union()
            if self.peek() != ")":
                self.error("missing ')'")
            self.pos += 1
            return e
        for word, node in (("%empty", EMPTY), ("%eps", EPSILON)):
            if self.text.startswith(word, self.pos):
                self.pos += len(word)
                return node
        if c.isalnum():
            self.pos += 1
            return Letter(c)
        self.error(f"unexpected {c!r}")


def parse(text: str) -> Expr:
    """Parse ``%empty``, ``%eps``, single-character letters, juxtaposition, ``+`` and ``*``."""
    return _Parser(text).parse()


def random_expr(rng: random.Random, alphabet, depth: int) -> Expr:
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.08:
            return EMPTY
        if r < 0.16:
            return EPSILON
        return Letter(rng.choice(list(alphabet)))
    kind = rng.choice(("union", "product", "product", "star"))
    if kind == "star":
        return Star(random_expr(rng, alphabet, depth - 1))
    cls = Union if kind == "union" else Product
    return cls(random_expr(rng, alphabet, depth - 1), random_expr(rng, alphabet, depth - 1))
