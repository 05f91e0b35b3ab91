"""Witness DFA streams for each language class, and dialects of them.

Each generator returns the DFA over its canonical alphabet; ``apply_dialect``
renames or deletes letters positionally.
"""
from __future__ import annotations

from typing import Sequence

from .automata import Dfa
from .semigroup import Collapse, Combined, Cycle, Identity, Shift, compile

CLASS_MIN = {
    "regular4": 3,
    "regular3": 3,
    "right_ideal": 4,
    "prefix_closed": 4,
    "prefix_free": 4,
    "proper_prefix_convex": 3,
    "left_ideal": 4,
    "suffix_closed": 4,
    "suffix_free_semigroup": 4,
    "suffix_free_ops": 4,
    "bifix_free_ops": 7,
    "two_sided_ideal": 5,
    "non_returning": 4,
}
WITNESS_CLASSES = tuple(CLASS_MIN)


def _dfa(n: int, letters: Sequence[tuple], finals) -> Dfa:
    return Dfa(n, tuple(a for a, _ in letters),
               tuple(compile(spec, n) for _, spec in letters), 0, frozenset(finals))


def _span(lo: int, hi: int) -> tuple:
    return tuple(range(lo, hi + 1))


def regular4(n: int) -> Dfa:
    return _dfa(n, [("a", Cycle(*range(n))), ("b", Cycle(0, 1)),
                    ("c", Collapse(n - 1, 0)), ("d", Identity())], {n - 1})


def regular3(n: int) -> Dfa:
    return _dfa(n, [("a", Cycle(*range(n))), ("b", Cycle(0, 1)),
                    ("c", Collapse(1, 0))], {n - 1})


def right_ideal(n: int) -> Dfa:
    return _dfa(n, [("a", Cycle(*range(n - 1))), ("b", Cycle(0, 1)),
                    ("c", Collapse(1, 0)), ("d", Shift(0, n - 2, +1))], {n - 1})


def prefix_closed(n: int) -> Dfa:
    return _dfa(n, [("a", Cycle(*range(n - 1))), ("b", Cycle(0, 1)),
                    ("c", Collapse(1, 0)), ("d", Shift(0, n - 2, -1, modular=True))],
                set(range(n - 1)))


def prefix_free(n: int) -> Dfa:
    kill = Collapse(n - 2, n - 1)
    letters = [
        ("a", Combined(kill, Cycle(*range(n - 2)))),
        ("b", Combined(kill, Cycle(0, 1))),
        ("c", Combined(kill, Collapse(1, 0))),
        ("d", Combined(Collapse(0, n - 2), Collapse(_span(1, n - 1), n - 1))),
    ]
    letters += [(f"e{q}", Combined(kill, Collapse(q, n - 2))) for q in range(n - 2)]
    return _dfa(n, letters, {n - 2})


def proper_prefix_convex(n: int, k: int) -> Dfa:
    e_size = n - 1 - k  # |E| where E = {0..n-2-k}; F = {n-1-k..n-2}
    if k >= 2:
        swap = Cycle(n - 1 - k, n - k)
        a = Combined(Cycle(*_span(1 if e_size % 2 == 0 else 0, n - 2 - k)), swap)
    else:
        a = Cycle(*_span(1 if e_size % 2 == 0 else 0, n - 2 - k))
    f_cycle = Cycle(*_span(n - k if k % 2 == 0 else n - 1 - k, n - 2))
    b = Combined(f_cycle, Cycle(0, 1)) if e_size >= 2 else f_cycle
    c1 = Collapse(1, 0) if e_size >= 2 else Identity()
    c2 = Collapse(n - k, n - 1 - k) if k >= 2 else Identity()
    d1 = Combined(Collapse(n - 2 - k, n - 1), Shift(0, n - 3 - k, +1))
    d2 = Shift(n - 1 - k, n - 2, +1)
    e = Collapse(0, n - 1 - k)
    return _dfa(n, [("a", a), ("b", b), ("c1", c1), ("c2", c2), ("d1", d1), ("d2", d2),
                    ("e", e)], _span(n - 1 - k, n - 2))


def _left_ideal_letters(n: int) -> list:
    return [("a", Cycle(*range(1, n))), ("b", Cycle(1, 2)), ("c", Collapse(n - 1, 1)),
            ("d", Collapse(n - 1, 0)), ("e", Collapse(range(n), 1))]


def left_ideal(n: int) -> Dfa:
    return _dfa(n, _left_ideal_letters(n), {n - 1})


def suffix_closed(n: int) -> Dfa:
    return _dfa(n, _left_ideal_letters(n), {0})


def suffix_free_semigroup(n: int) -> Dfa:
    to_sink = Collapse(0, n - 1)
    letters = [
        ("a", Combined(to_sink, Cycle(*range(1, n - 1)))),
        ("b", Combined(to_sink, Cycle(1, 2))),
        ("c", Combined(to_sink, Collapse(n - 2, 1))),
        ("d", Collapse((0, 1), n - 1)),
        ("e", Combined(Collapse(_span(1, n - 1), n - 1), Collapse(0, 1))),
    ]
    if n == 4:
        letters = letters[1:]  # a and b coincide
    finals = {q for q in range(1, n - 1) if q % 2 == 1}
    return _dfa(n, letters, finals)


def suffix_free_ops(n: int) -> Dfa:
    to_sink = Collapse(0, n - 1)
    letters = [
        ("a", Combined(to_sink, Cycle(*range(1, n - 1)))),
        ("b", Combined(to_sink, Cycle(1, 2))),
        # c sends 1 to the empty state n-1; read as a swap (1, n-1) the
        # language would not be suffix-free
        ("c", Combined(Collapse(1, n - 1), Collapse(0, 1))),
    ]
    return _dfa(n, letters, {n - 2})


def bifix_free_ops(n: int) -> Dfa:
    h = (n - 1) // 2
    ends = Collapse((0, n - 2, n - 1), n - 1)
    down = tuple(range(n - 3, h, -1)) + tuple(range(h - 1, 1, -1))
    letters = [
        ("a", Combined(Collapse(0, 1), Collapse(_span(1, n - 3), n - 2),
                       Collapse((n - 2, n - 1), n - 1))),
        ("b", Combined(ends, Cycle(*_span(1, n - 3)))),
        ("c", Combined(ends, Collapse(1, h), Collapse(h, n - 2), Cycle(*down))),
    ]
    return _dfa(n, letters, {n - 2})


def two_sided_ideal(n: int) -> Dfa:
    return _dfa(n, [("a", Cycle(*range(1, n - 1))), ("b", Cycle(1, 2)),
                    ("c", Collapse(n - 2, 1)), ("d", Collapse(n - 2, 0)),
                    ("e", Collapse(range(n - 1), 1)), ("f", Collapse(1, n - 1))], {n - 1})


def type_letter(n: int, i: int, j: int) -> tuple:
    """A rank n-1 transformation identifying i and j that never maps to 0."""
    images = list(range(n))
    if i == 0:
        images[0] = j
    else:
        images[j] = i
        images[0] = j
    return tuple(images)


def non_returning_gamma(n: int) -> list:
    skip = {(0, n - 1), (0, 1), (1, n - 1), (0, 2)}
    return [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in skip]


def non_returning(n: int) -> Dfa:
    base = [
        ("a", compile(Combined(Cycle(*range(1, n)), Collapse(0, 1)), n)),
        ("b", compile(Combined(Cycle(1, 2), Collapse(0, 2)), n)),
        ("c", compile(Combined(Cycle(*range(2, n)), Collapse(1, 2), Collapse(0, 1)), n)),
        ("d", compile(Collapse(0, 2), n)),
    ]
    base += [(f"a_{i}_{j}", type_letter(n, i, j)) for i, j in non_returning_gamma(n)]
    return Dfa(n, tuple(a for a, _ in base), tuple(t for _, t in base), 0, {n - 1})


_BUILDERS = {
    "regular4": regular4,
    "regular3": regular3,
    "right_ideal": right_ideal,
    "prefix_closed": prefix_closed,
    "prefix_free": prefix_free,
    "left_ideal": left_ideal,
    "suffix_closed": suffix_closed,
    "suffix_free_semigroup": suffix_free_semigroup,
    "suffix_free_ops": suffix_free_ops,
    "bifix_free_ops": bifix_free_ops,
    "two_sided_ideal": two_sided_ideal,
    "non_returning": non_returning,
}


def make_witness(cls: str, n: int, k: int | None = None) -> Dfa:
    if cls not in CLASS_MIN:
        raise ValueError(f"unknown witness class {cls!r}")
    if n < CLASS_MIN[cls]:
        raise ValueError(f"{cls} needs n >= {CLASS_MIN[cls]}, got {n}")
    if cls == "proper_prefix_convex":
        if k is None or not 1 <= k <= n - 2:
            raise ValueError(f"proper_prefix_convex needs 1 <= k <= n-2, got k={k}")
        return proper_prefix_convex(n, k)
    if k is not None:
        raise ValueError(f"{cls} takes no k parameter")
    return _BUILDERS[cls](n)


# ---------------------------------------------------------------------------
# dialects


def parse_dialect(text: str) -> tuple:
    """``"a,b,-,c"`` -> ``("a", "b", None, "c")``."""
    if not text.strip():
        return ()
    return tuple(None if p.strip() in ("-", "") else p.strip() for p in text.split(","))


def format_dialect(dialect: Sequence) -> str:
    return ",".join("-" if x is None else x for x in dialect)


def apply_dialect(dfa: Dfa, dialect: Sequence) -> Dfa:
    """Rename letters positionally; ``None`` or ``"-"`` deletes a letter.

    Letters beyond the end of the dialect are deleted.  The result is not
    re-minimized.
    """
    dialect = tuple(None if x in (None, "-") else x for x in dialect)
    if len(dialect) > len(dfa.alphabet):
        raise ValueError(f"dialect {dialect} is longer than alphabet {dfa.alphabet}")
    targets = [x for x in dialect if x is not None]
    if len(set(targets)) != len(targets):
        raise ValueError(f"dialect {dialect} maps two letters to the same name")
    pairs = [(new, t) for new, t in zip(dialect, dfa.delta) if new is not None]
    return Dfa(dfa.n, tuple(a for a, _ in pairs), tuple(t for _, t in pairs),
               dfa.initial, dfa.finals)
