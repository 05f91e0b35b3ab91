"""Acceptance checks, one or more tests per numbered criterion.

Each criterion restates its closed forms here, independently of the bound
evaluator, and compares them with what the library measures on the witness
streams.  The smallest sizes of every stream are re-measured with the slow
constructions in ``oracles``.  A summary line per criterion is printed at the
end of the run (see conftest.py).
"""
from __future__ import annotations

import itertools
import math
import random
import time
from fractions import Fraction
from math import comb

import pytest

from aclab import bounds as B
from aclab import classify as C
from aclab.atoms import atom_ids, atomaton, atomicity_classes
from aclab.automata import (Dfa, Nfa, determinize, isomorphic, language_equal, minimize,
                            random_dfa, random_nfa, reverse_nfa)
from aclab.manifest import MANIFEST
from aclab.operations import PROPER_OPS, boolean, product_nfa, reverse, star
from aclab.regex import derivative_dfa, similar_normalize
from aclab.semigroup import (conjugate, conjugate_bases, group_generated,
                             perm_reachable_states, transition_semigroup)
from aclab.verify import FAIL, PASS, SKIP_BUDGET, SKIP_DOMAIN, verify
from aclab.witnesses import (CLASS_MIN, WITNESS_CLASSES, apply_dialect, make_witness,
                             parse_dialect)

from . import oracles as O
from .test_classify import WordOracle, distinct_minimal
from .test_regex import corpus as regex_corpus


def criterion(number, title):
    return pytest.mark.criterion(number, title)


# ---------------------------------------------------------------------------
# closed forms as written in the criteria


def regular_atom(n, S):
    s = len(S)
    if s in (0, n):
        return 2 ** n - 1
    return 1 + sum(comb(n, x) * comb(n - x, y)
                   for x in range(1, s + 1) for y in range(1, n - s + 1))


def _ops(union, sym, diff, inter, mode="restricted"):
    return {f"boolean:union:{mode}": union, f"boolean:symmetric-difference:{mode}": sym,
            f"boolean:difference:{mode}": diff, f"boolean:intersection:{mode}": inter}


def _same(f):
    return f, f, f, f


MN = lambda n, m, **_: m * n  # noqa: E731
REGULAR_UNRESTRICTED = _ops(lambda n, m, **_: (m + 1) * (n + 1),
                            lambda n, m, **_: (m + 1) * (n + 1),
                            lambda n, m, **_: m * n + m, MN, "unrestricted")

REGULAR = {
    "semigroup": lambda n, **_: n ** n,
    "quotient_profile": lambda n, **_: (n,) * n,
    "reversal": lambda n, **_: 2 ** n,
    "atom_count": lambda n, **_: 2 ** n,
    "atom_complexity": lambda n, S, **_: regular_atom(n, S),
    "star": lambda n, **_: 2 ** (n - 1) + 2 ** (n - 2),
    "product_restricted": lambda n, m, **_: m * 2 ** n - 2 ** (n - 1),
    "product_unrestricted": lambda n, m, **_: m * 2 ** n + 2 ** (n - 1),
    **_ops(*_same(MN)),
    **REGULAR_UNRESTRICTED,
}

RIGHT_IDEAL = {
    "semigroup": lambda n, **_: n ** (n - 1),
    "reversal": lambda n, **_: 2 ** (n - 1),
    "star": lambda n, **_: n + 1,
    "product_restricted": lambda n, m, **_: m + 2 ** (n - 2),
    "product_unrestricted": lambda n, m, **_: m + 2 ** (n - 1) + 2 ** (n - 2) + 1,
    **_ops(lambda n, m, **_: m * n - (m + n - 2), MN,
           lambda n, m, **_: m * n - (m - 1), MN),
}

PREFIX_CLOSED = {
    "semigroup": lambda n, **_: n ** (n - 1),
    "reversal": lambda n, **_: 2 ** (n - 1),
    "star": lambda n, **_: 2 ** (n - 2) + 1,
    "product_restricted": lambda n, m, **_: (m + 1) * 2 ** (n - 2),
    **_ops(MN, MN, lambda n, m, **_: m * n - (n - 1), lambda n, m, **_: m * n - (m + n - 2)),
}

PREFIX_FREE = {
    "semigroup": lambda n, **_: n ** (n - 2),
    "reversal": lambda n, **_: 2 ** (n - 2) + 1,
    "star": lambda n, **_: n,
    "product_restricted": lambda n, m, **_: m + n - 2,
    "quotient_profile": lambda n, **_: (n,) * (n - 2) + (2, 1),
    **_ops(lambda n, m, **_: m * n - 2, lambda n, m, **_: m * n - 2,
           lambda n, m, **_: m * n - (m + 2 * n - 4),
           lambda n, m, **_: m * n - 2 * (m + n - 3)),
}

PROPER_PREFIX_CONVEX = {
    "semigroup": lambda n, k, **_: n ** (n - 1 - k) * (k + 1) ** k,
    "star": lambda n, k, **_: 2 ** (n - 2) + 2 ** (n - 2 - k) + 1,
    "product_restricted": lambda n, m, j, **_: m - 1 - j + j * 2 ** (n - 2) + 2 ** (n - 1),
    **_ops(MN, MN, lambda n, m, **_: m * n - (n - 1), lambda n, m, **_: m * n - (m + n - 2)),
}

LEFT_IDEAL = {
    "semigroup": lambda n, **_: n ** (n - 1) + n - 1,
    "reversal": lambda n, **_: 2 ** (n - 1) + 1,
    "star": lambda n, **_: n + 1,
    "product_restricted": lambda n, m, **_: m + n + 1,
    "product_unrestricted": lambda n, m, **_: m * n + m + n,
    **_ops(*_same(MN)),
    **REGULAR_UNRESTRICTED,
}

SUFFIX_CLOSED = {
    "semigroup": lambda n, **_: n ** (n - 1) + n - 1,
    "reversal": lambda n, **_: 2 ** (n - 1) + 1,
    "star": lambda n, **_: n,
    "product_restricted": lambda n, m, **_: m * n - n + 1,
    "product_unrestricted": lambda n, m, **_: m * n + m + 1,
}

SUFFIX_FREE = {
    "semigroup": lambda n, **_: (n - 1) ** (n - 2) + n - 2,
    "reversal": lambda n, **_: 2 ** (n - 2) + 1,
    "star": lambda n, **_: 2 ** (n - 2) + 1,
    "product_restricted": lambda n, m, **_: (m - 1) * 2 ** (n - 2) + 1,
    **_ops(lambda n, m, **_: m * n - (m + n - 2), lambda n, m, **_: m * n - (m + n - 2),
           lambda n, m, **_: m * n - (m + 2 * n - 4),
           lambda n, m, **_: m * n - 2 * (m + n - 3)),
}

BIFIX_FREE = {
    "reversal": lambda n, **_: 2 ** (n - 3) + 2,
    "star": lambda n, **_: n - 1,
    "product_restricted": lambda n, m, **_: m + n - 2,
    **_ops(lambda n, m, **_: m * n - (m + n), lambda n, m, **_: m * n - (m + n),
           lambda n, m, **_: m * n - (2 * m + 3 * n - 9),
           lambda n, m, **_: m * n - 3 * (m + n - 4)),
}

TWO_SIDED_IDEAL = {
    "semigroup": lambda n, **_: n ** (n - 2) + (n - 2) * 2 ** (n - 2) + 1,
    "reversal": lambda n, **_: 2 ** (n - 1) + 1,
    # atoms are counted by the reversal
    "atom_count": lambda n, **_: 2 ** (n - 1) + 1,
    "star": lambda n, **_: n + 1,
    "product_restricted": lambda n, m, **_: m + n - 1,
    "product_unrestricted": lambda n, m, **_: m + 2 * n,
    **_ops(lambda n, m, **_: m * n - (m + n - 2), MN, lambda n, m, **_: m * n - (m - 1), MN),
    **REGULAR_UNRESTRICTED,
}

NON_RETURNING = {
    "semigroup": lambda n, **_: (n - 1) ** n,
    "reversal": lambda n, **_: 2 ** n,
    "star": lambda n, **_: 2 ** (n - 1),
    "product_restricted": lambda n, m, **_: (m - 1) * 2 ** (n - 1) + 1,
    "product_unrestricted": lambda n, m, **_: m * 2 ** (n - 1) + 1,
    **_ops(*_same(lambda n, m, **_: m * n - (m + n - 2))),
    **REGULAR_UNRESTRICTED,
}

# keys whose stated value the measured witnesses cannot reach
UNATTAINABLE = {
    "left_ideal": {"product_restricted"},
    "two_sided_ideal": {"reversal", "atom_count"},
    "non_returning": set(REGULAR_UNRESTRICTED),
}


# atom formulas exactly as stated, for the classes where they disagree with the
# measured witnesses


def _stated_prefix_free_atom(n, S):
    s = len(S)
    if S == {n - 2}:
        return 2
    if s == 0:
        return 2 ** (n - 1)
    if S == set(range(n - 2)):
        return 2 ** (n - 2) + 1
    return 2 + sum(comb(n - 2, x) * comb(n - 2 - x, y)
                   for x in range(1, s + 1) for y in range(1, n - 2 - s + 1))


def _stated_two_sided_atom(n, S):
    s = len(S)
    if s == n:
        return n
    if S == set(range(n)) - {1}:
        return 2 ** (n - 2) + n - 1
    return 1 + sum(comb(n - 2, x - 1) * comb(n - x - 1, y - 1)
                   for x in range(1, s + 1) for y in range(1, n - s + 1))


def _stated_non_returning_atom(n, S):
    s = len(S)
    if s in (0, n):
        return 2 ** (n - 1)
    return 2 + sum(comb(n - 1, x) * comb(n - 1 - x, y)
                   for x in range(1, s + 1) for y in range(1, s + 1))


def stated_atom_mismatches(family, n, formula):
    rows = verify(family, [n], (), ["atom_complexity"])
    assert rows and all(r.passed for r in rows)
    return [(r.params["S"], formula(n, set(r.params["S"])), r.measured)
            for r in rows if formula(n, set(r.params["S"])) != r.measured]


# ---------------------------------------------------------------------------
# helpers


def row_key(r):
    if r.measure == "boolean":
        return f"boolean:{r.params['op']}:{r.params['mode']}"
    return r.measure


def operand(witness, n, k, dialect):
    d = make_witness(witness, n, k)
    if dialect not in (None, "canonical"):
        d = apply_dialect(d, parse_dialect(dialect))
    return d


def operands(r):
    p = r.params
    dialects = p.get("dialects", [None, None])
    if "m" in p:
        return (operand(p["witness"], p["m"], p.get("j"), dialects[0]),
                operand(p["witness"], p["n"], p.get("k"), dialects[1]))
    return (operand(p["witness"], p["n"], p.get("k"), dialects[0]),)


BOOLEAN_FUNCTIONS = {
    "union": lambda x, y: x or y,
    "symmetric-difference": lambda x, y: x != y,
    "difference": lambda x, y: x and not y,
    "intersection": lambda x, y: x and y,
}


def reversed_nfa(d):
    trans = {(t[q], a, q) for a, t in zip(d.alphabet, d.delta) for q in range(d.n)}
    return Nfa(d.n, d.alphabet, frozenset(trans), d.finals, frozenset([d.initial]))


def oracle_value(r):
    """Re-measure a result row with the slow constructions, or None if not covered."""
    ds = operands(r)
    if r.measure == "semigroup":
        return len(O.word_transformations(ds[0]))
    if r.measure == "reversal":
        return O.minimal_size(reversed_nfa(ds[0]))
    if r.measure == "star":
        return O.minimal_size(O.star_nfa(ds[0]))
    if r.measure == "product_restricted":
        return O.minimal_size(O.product_nfa(*ds))
    if r.measure == "boolean" and r.params["mode"] == "restricted":
        return O.boolean_size(*ds, BOOLEAN_FUNCTIONS[r.params["op"]])
    if r.measure == "atom_complexity":
        return O.minimal_dfa_size(O.atom_intersection_dfa(ds[0], r.params["S"]))
    return None


def run_stream(family, ns, ms, formulas, allowed_skip=lambda r: False, skip_keys=()):
    """Verify a stream, then compare every row with the criterion's closed forms."""
    rows = verify(family, ns, ms)
    assert rows
    for r in rows:
        assert r.status != FAIL, (r.measure, r.params, r.expected, r.measured, r.notes)
        assert r.status != SKIP_BUDGET, (r.measure, r.params)
        if r.status == SKIP_DOMAIN:
            assert allowed_skip(r), (r.measure, r.params, r.notes)
    checked = 0
    for r in rows:
        key = row_key(r)
        if r.status != PASS or key not in formulas or key in skip_keys:
            continue
        p = r.params
        kw = {x: p[x] for x in ("m", "k", "j") if x in p}
        if key == "atom_complexity":
            kw["S"] = p["S"]
        assert formulas[key](p["n"], **kw) == r.measured, (key, p, r.measured)
        checked += 1
    assert checked
    # re-measure the smallest instances independently
    n0, m0 = min(ns), min(ms) if ms else None
    remeasured = 0
    for r in rows:
        if r.status != PASS or r.params["n"] != n0 or r.params.get("m", m0) != m0:
            continue
        value = oracle_value(r)
        if value is not None:
            assert value == r.measured, (r.measure, r.params, value, r.measured)
            remeasured += 1
    assert remeasured
    return rows


def stated_mismatches(rows, family, formulas):
    """Rows of unattainable keys whose measured value differs from the stated formula."""
    out = []
    for r in rows:
        key = row_key(r)
        if key in UNATTAINABLE[family] and r.status == PASS:
            p = r.params
            stated = formulas[key](p["n"], **{x: p[x] for x in ("m",) if x in p})
            if stated != r.measured:
                out.append((key, p["n"], p.get("m"), stated, r.measured))
    return out


def atoms_by_brute_force(family, rows, sizes):
    """Library atom complexities equal intersection-automaton sizes at the given sizes."""
    seen = 0
    for r in rows:
        if r.measure != "atom_complexity":
            continue
        if (r.params["n"], r.params.get("k")) not in sizes:
            continue
        (d,) = operands(r)
        assert O.minimal_dfa_size(O.atom_intersection_dfa(d, r.params["S"])) == r.measured
        seen += 1
    assert seen


def timed(fn, limit_s):
    t0 = time.perf_counter()
    out = fn()
    elapsed = time.perf_counter() - t0
    assert elapsed <= limit_s, f"took {elapsed:.1f}s, limit {limit_s}s"
    return out


# ---------------------------------------------------------------------------
# 1-2 regular languages


@criterion(1, "regular languages, four-letter stream, n,m in 3..5")
def test_criterion_01_regular_stream():
    rows = timed(lambda: run_stream("regular", range(3, 6), range(3, 6), REGULAR), 30)
    atoms_by_brute_force("regular", rows, {(3, None)})
    d = apply_dialect(make_witness("regular4", 3), ("a", "b", "c"))
    # the three shapes named in the criterion, by brute force
    for S, value in ((set(), 7), ({1}, 10), ({0, 1, 2}, 7)):
        assert O.minimal_dfa_size(O.atom_intersection_dfa(d, S)) == value


@criterion(2, "regular languages, three-letter stream with its dialects")
def test_criterion_02_regular3_stream():
    rows = timed(lambda: run_stream("regular3", range(3, 6), range(3, 6), REGULAR), 30)
    atoms_by_brute_force("regular3", rows, {(3, None)})
    (item,) = [i for i in MANIFEST["regular3"] if i["measure"] == "product_unrestricted"]
    assert item["dialects"] == ("a,b", "a,c,b")


# ---------------------------------------------------------------------------
# 3-6 prefix-related classes


@criterion(3, "right ideals, n,m in 4..6")
def test_criterion_03_right_ideals():
    rows = timed(lambda: run_stream("right_ideal", range(4, 7), range(4, 7), RIGHT_IDEAL), 60)
    atoms_by_brute_force("right_ideal", rows, {(4, None)})
    measures = {row_key(r) for r in rows}
    assert {"semigroup", "reversal", "star", "product_restricted", "product_unrestricted",
            "atom_complexity"} <= measures


@criterion(4, "prefix-closed languages, n,m in 4..6")
def test_criterion_04_prefix_closed():
    rows = run_stream("prefix_closed", range(4, 7), range(4, 7), PREFIX_CLOSED)
    atoms_by_brute_force("prefix_closed", rows, {(4, None)})


@criterion(5, "prefix-free languages, n,m in 4..6")
def test_criterion_05_prefix_free():
    rows = run_stream("prefix_free", range(4, 7), range(4, 7), PREFIX_FREE)
    atoms_by_brute_force("prefix_free", rows, {(4, None)})
    for n in range(4, 7):
        assert len(make_witness("prefix_free", n).alphabet) == n + 2


@criterion(5, "prefix-free languages, n,m in 4..6")
@pytest.mark.xfail(strict=True, raises=AssertionError,
                   reason="stated atom sum starts y at 1 and undercounts the witness atoms")
def test_criterion_05_stated_atom_formula():
    assert stated_atom_mismatches("prefix_free", 4, _stated_prefix_free_atom) == []


@criterion(6, "proper prefix-convex languages, (n,k) and (m,j) with m,n in 4..5")
def test_criterion_06_proper_prefix_convex():
    rows = run_stream("proper_prefix_convex", range(4, 6), range(4, 6), PROPER_PREFIX_CONVEX)
    sizes = {(r.params["n"], r.params["k"]) for r in rows if r.measure == "semigroup"}
    assert sizes == {(4, 1), (4, 2), (5, 1), (5, 2), (5, 3)}
    assert [r.measured for r in rows
            if r.measure == "semigroup" and (r.params["n"], r.params["k"]) == (5, 2)] == [225]
    pairs = {(r.params["m"], r.params["j"], r.params["n"], r.params["k"])
             for r in rows if r.measure == "product_restricted"}
    assert len(pairs) == 25
    atoms_by_brute_force("proper_prefix_convex", rows, {(4, 1), (4, 2)})


# ---------------------------------------------------------------------------
# 7-10 suffix-related classes


@criterion(7, "left ideals, n,m in 4..6")
def test_criterion_07_left_ideals():
    rows = run_stream("left_ideal", range(4, 7), range(4, 7), LEFT_IDEAL,
                      skip_keys=UNATTAINABLE["left_ideal"])
    atoms_by_brute_force("left_ideal", rows, {(4, None)})
    # the corrected restricted product m+n-1 is met exactly
    for r in rows:
        if r.measure == "product_restricted":
            assert r.measured == r.params["m"] + r.params["n"] - 1


@criterion(7, "left ideals, n,m in 4..6")
@pytest.mark.xfail(strict=True, raises=AssertionError,
                   reason="stated restricted product m+n+1 exceeds what left ideals reach")
def test_criterion_07_stated_restricted_product():
    rows = verify("left_ideal", range(4, 7), range(4, 7), ["product_restricted"])
    assert stated_mismatches(rows, "left_ideal", LEFT_IDEAL) == []


@criterion(8, "suffix-closed languages, n,m in 4..6")
def test_criterion_08_suffix_closed():
    rows = run_stream("suffix_closed", range(4, 7), range(4, 7), SUFFIX_CLOSED)
    atoms_by_brute_force("suffix_closed", rows, {(4, None)})


def _suffix_free_skip(r):
    # the criterion asks for booleans at m,n in 5..6 and the semigroup at n=6
    if r.measure == "boolean":
        return min(r.params["m"], r.params["n"]) < 5
    return r.measure == "semigroup" and r.params["n"] < 6


@criterion(9, "suffix-free languages, two witness streams")
def test_criterion_09_suffix_free():
    rows = run_stream("suffix_free", range(4, 7), range(4, 7), SUFFIX_FREE,
                      allowed_skip=_suffix_free_skip)
    assert [r.measured for r in rows if r.measure == "semigroup" and r.passed] == [629]
    booleans = {(r.params["m"], r.params["n"]) for r in rows
                if r.measure == "boolean" and r.passed}
    assert booleans == {(5, 5), (5, 6), (6, 5), (6, 6)}
    star_rows = {r.params["witness"] for r in rows if r.measure in ("star", "product_restricted")}
    assert star_rows == {"suffix_free_ops"}
    atoms_by_brute_force("suffix_free", rows, {(4, None)})


@criterion(9, "suffix-free languages, two witness streams")
def test_criterion_09_neither_witness_alone_suffices():
    """Each witness, in every positional relabelling, misses some item."""
    def misses(witness):
        missed = set()
        d6 = make_witness(witness, 6)
        if len(transition_semigroup(d6)) != SUFFIX_FREE["semigroup"](6):
            missed.add("semigroup")
        for n in range(4, 7):
            d = make_witness(witness, n)
            if reverse(d).n != SUFFIX_FREE["reversal"](n):
                missed.add("reversal")
            if star(d).n != SUFFIX_FREE["star"](n):
                missed.add("star")
        for m, n in itertools.product(range(4, 7), repeat=2):
            left = make_witness(witness, m)
            right = make_witness(witness, n)
            if set(left.alphabet) != set(right.alphabet):
                continue  # small members drop letters
            best = max(minimize(determinize(product_nfa(left, apply_dialect(right, perm)))).n
                       for perm in itertools.permutations(right.alphabet))
            if best != SUFFIX_FREE["product_restricted"](n, m=m):
                missed.add("product_restricted")
        return missed

    big, small = misses("suffix_free_semigroup"), misses("suffix_free_ops")
    assert {"star", "product_restricted"} <= big and "semigroup" not in big
    assert {"semigroup", "reversal"} <= small and "star" not in small


@criterion(10, "bifix-free operations stream, n,m in 9..10")
def test_criterion_10_bifix_free():
    rows = timed(lambda: run_stream("bifix_free", range(9, 11), range(9, 11), BIFIX_FREE), 120)
    assert [r.measured for r in rows if r.measure == "reversal" and r.params["n"] == 9] == [66]
    assert any(r.measure == "quotient_profile" and r.passed for r in rows)


# ---------------------------------------------------------------------------
# 11-12 two-sided ideals and non-returning languages


@criterion(11, "two-sided ideals, n,m in 5..6")
def test_criterion_11_two_sided_ideals():
    rows = run_stream("two_sided_ideal", range(5, 7), range(5, 7), TWO_SIDED_IDEAL,
                      skip_keys=UNATTAINABLE["two_sided_ideal"])
    assert [r.measured for r in rows if r.measure == "semigroup" and r.params["n"] == 5] == [150]
    atoms_by_brute_force("two_sided_ideal", rows, {(5, None)})
    for r in rows:
        if r.measure in ("reversal", "atom_count"):
            assert r.measured == 2 ** (r.params["n"] - 2) + 1


@criterion(11, "two-sided ideals, n,m in 5..6")
@pytest.mark.xfail(strict=True, raises=AssertionError,
                   reason="stated reversal 2^(n-1)+1 exceeds what two-sided ideals reach")
def test_criterion_11_stated_reversal():
    rows = verify("two_sided_ideal", range(5, 7), (), ["reversal", "atom_count"])
    assert stated_mismatches(rows, "two_sided_ideal", TWO_SIDED_IDEAL) == []


@criterion(11, "two-sided ideals, n,m in 5..6")
@pytest.mark.xfail(strict=True, raises=AssertionError,
                   reason="the stated large atom Q minus {1} is empty; Q minus {0} is the large one")
def test_criterion_11_stated_atom_formula():
    assert stated_atom_mismatches("two_sided_ideal", 5, _stated_two_sided_atom) == []


@criterion(12, "non-returning languages, n,m in 4..5")
def test_criterion_12_non_returning():
    rows = run_stream("non_returning", range(4, 6), range(4, 6), NON_RETURNING,
                      skip_keys=UNATTAINABLE["non_returning"])
    assert sorted(r.measured for r in rows if r.measure == "semigroup") == [81, 1024]
    atoms_by_brute_force("non_returning", rows, {(4, None)})
    corrected = _ops(lambda n, m: m * n + 1, lambda n, m: m * n + 1,
                     lambda n, m: m * n - n + 1, lambda n, m: m * n - (m + n - 2),
                     "unrestricted")
    seen = 0
    for r in rows:
        if row_key(r) in corrected:
            assert r.measured == corrected[row_key(r)](r.params["n"], r.params["m"])
            seen += 1
    assert seen == 16


@criterion(12, "non-returning languages, n,m in 4..5")
@pytest.mark.xfail(strict=True, raises=AssertionError,
                   reason="stated unrestricted booleans exceed what non-returning pairs reach")
def test_criterion_12_stated_unrestricted_booleans():
    rows = verify("non_returning", range(4, 6), range(4, 6), ["boolean"])
    assert stated_mismatches(rows, "non_returning", NON_RETURNING) == []


@criterion(12, "non-returning languages, n,m in 4..5")
@pytest.mark.xfail(strict=True, raises=AssertionError,
                   reason="stated atom sum bounds y by |S| instead of n-|S|")
def test_criterion_12_stated_atom_formula():
    assert stated_atom_mismatches("non_returning", 4, _stated_non_returning_atom) == []


@criterion(12, "non-returning languages, n,m in 4..5")
def test_criterion_12_unrestricted_cap_over_all_dialects():
    """No positional dialect pair beats the cap that forbids re-entering either start."""
    rng = random.Random(12)
    m = n = 4
    left, right = make_witness("non_returning", m), make_witness("non_returning", n)
    letters = list(left.alphabet)
    fresh = ["x", "y"]
    best = {op: 0 for op in BOOLEAN_FUNCTIONS}
    for _ in range(150):
        keep = rng.sample(letters, rng.randint(2, len(letters)))
        d1 = apply_dialect(left, tuple(a if a in keep else None for a in letters))
        names = rng.sample(keep + fresh, rng.randint(2, min(len(letters), len(keep) + 2)))
        slots = rng.sample(range(len(letters)), len(names))
        pattern = [None] * len(letters)
        for s, a in zip(slots, names):
            pattern[s] = a
        d2 = apply_dialect(right, tuple(pattern))
        for op in best:
            best[op] = max(best[op], boolean(d1, d2, op, "unrestricted").n)
    assert best["union"] <= m * n + 1 < (m + 1) * (n + 1)
    assert best["difference"] <= m * n - n + 1 < m * n + m
    assert best["intersection"] <= m * n - (m + n - 2) < m * n


# ---------------------------------------------------------------------------
# 13 atoms, átomaton and atomicity


def random_minimal_corpus(seed=13, count=300, max_n=7):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        alphabet = ("a", "b", "c")[:rng.choice((2, 2, 3))]
        while True:
            d = minimize(random_dfa(rng, n, alphabet))
            if d.n == n:
                break
        out.append(d)
    return out


def witness_corpus():
    for cls in WITNESS_CLASSES:
        lo = CLASS_MIN[cls]
        for n in (lo, lo + 1):
            yield make_witness(cls, n, 1 if cls == "proper_prefix_convex" else None)


@criterion(13, "atoms, átomaton and atomicity over random and witness DFAs")
def test_criterion_13_atom_count_is_reversal():
    corpus = random_minimal_corpus() + list(witness_corpus())
    full = 0
    for d in corpus:
        rev = O.minimal_size(reversed_nfa(d))
        assert len(atom_ids(d)) == rev == minimize(determinize(reverse_nfa(d))).n
        if 2 <= d.n <= 5 and len(transition_semigroup(d)) == d.n ** d.n:
            assert rev == 2 ** d.n
            full += 1
    for n in (3, 4, 5):
        d = make_witness("regular4", n)
        assert len(transition_semigroup(d)) == n ** n
        assert reverse(d).n == 2 ** n
    assert full


@criterion(13, "atoms, átomaton and atomicity over random and witness DFAs")
def test_criterion_13_atomaton_items():
    corpus = random_minimal_corpus()
    bideterministic = 0
    for d in corpus:
        a = atomaton(d)
        rd, subsets = determinize(reverse_nfa(d), with_subsets=True)
        index = {s: i for i, s in enumerate(subsets)}
        image = [index[sum(1 << q for q in S)] for S in a.atoms]
        # 1: atoms are the subsets of the determinized reverse, transitions reversed
        assert sorted(image) == list(range(rd.n))
        assert ({(image[p], x, image[q]) for p, x, q in a.nfa.transitions}
                == {(rd.delta[k][j], x, j) for k, x in enumerate(rd.alphabet)
                    for j in range(rd.n)})
        # 2: the reversed átomaton is the minimal DFA of the reverse
        ar = O.as_dfa(a.nfa.reversed())
        assert ar is not None and isomorphic(ar, minimize(rd))
        # 3: determinizing the átomaton gives the minimal DFA back
        assert isomorphic(O.nfa_to_dfa(a.nfa), d)
        # 5: the átomaton is the DFA itself exactly for bideterministic DFAs
        direct = O.as_dfa(a.nfa)
        same = direct is not None and direct.n == d.n and isomorphic(direct, d)
        assert same == C.is_bideterministic(d)
        bideterministic += same
    assert 0 < bideterministic < len(corpus)


@criterion(13, "atoms, átomaton and atomicity over random and witness DFAs")
def test_criterion_13_atomaton_item_4_random_nfas():
    rng = random.Random(4)
    for _ in range(100):
        nfa = random_nfa(rng, rng.randint(1, 6), ("a", "b"), density=0.3, eps_density=0.05)
        d = minimize(O.nfa_to_dfa(nfa))
        ar = O.as_dfa(atomaton(d).nfa.reversed())
        assert isomorphic(ar, minimize(O.nfa_to_dfa(nfa.reversed())))


@criterion(13, "atoms, átomaton and atomicity over random and witness DFAs")
def test_criterion_13_atomicity_chain():
    random_part = [d for d in random_minimal_corpus() if d.n >= 3]
    witnesses = [d for d in witness_corpus() if d.n <= 6]
    separations = {"STS not FTS": 0, "MNA not MAL": 0}
    for d in random_part + witnesses:
        f = atomicity_classes(d)
        assert not f["FTS"] or f["STS"]
        assert f["STS"] == f["MAL"]
        assert not f["MAL"] or f["MNA"]
        assert f["MNA"] == f["MCR"]
        if d in random_part:
            separations["STS not FTS"] += f["STS"] and not f["FTS"]
            separations["MNA not MAL"] += f["MNA"] and not f["MAL"]
    assert all(separations.values()), separations


# ---------------------------------------------------------------------------
# 14 permutation groups


def random_group_dfa(rng, n, letters=("a", "b")):
    while True:
        delta = []
        for _ in letters:
            p = list(range(n))
            rng.shuffle(p)
            delta.append(tuple(p))
        d = Dfa(n, letters, tuple(delta), 0, frozenset([rng.randrange(n)]))
        if minimize(d).n == n:
            return d


def relabel(d, r, final):
    """The DFA whose letters act by r-conjugates; r fixes the initial state."""
    return Dfa(d.n, d.alphabet, tuple(conjugate(r, t) for t in d.delta), d.initial,
               frozenset([final]))


def reachable_pairs(d1, d2):
    start = (d1.initial, d2.initial)
    seen, todo = {start}, [start]
    while todo:
        p, q = todo.pop()
        for a in d1.alphabet:
            nxt = (d1.transform(a)[p], d2.transform(a)[q])
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


@criterion(14, "permutation groups and boolean operations")
def test_criterion_14_four_conditions_agree():
    rng = random.Random(14)
    outcomes = []
    while len(outcomes) < 50:
        m, n = rng.randint(2, 5), rng.randint(2, 5)
        if (m, n) == (2, 2):
            continue
        d1 = random_group_dfa(rng, m)
        kind = len(outcomes) % 3
        if kind == 0 and m == n:
            r = [0] + rng.sample(range(1, n), n - 1)
            d2 = relabel(d1, tuple(r), rng.randrange(n))
            if minimize(d2).n != n:
                continue
        elif kind == 1:
            cycle = tuple(list(range(1, n)) + [0])
            d1 = Dfa(m, ("a", "b"), (tuple(list(range(1, m)) + [0]),) * 2, 0,
                     frozenset([rng.randrange(m)]))
            d2 = Dfa(n, ("a", "b"), (cycle, cycle), 0, frozenset([rng.randrange(n)]))
        else:
            d2 = random_group_dfa(rng, n)
        reach = perm_reachable_states(d1, d2)
        assert reach == reachable_pairs(d1, d2)
        c1 = len(reach) == m * n
        c2 = any(all((p, q) in reach for q in range(n)) for p in range(m))
        c3 = any(all((p, q) in reach for p in range(m)) for q in range(n))
        c4 = all(boolean(d1, d2, op).n == m * n for op in PROPER_OPS)
        assert c1 == c2 == c3 == c4, (d1, d2, c1, c2, c3, c4)
        outcomes.append(c1)
    assert any(outcomes) and not all(outcomes)


def symmetric_basis(rng, n):
    while True:
        s, t = list(range(n)), list(range(n))
        rng.shuffle(s)
        rng.shuffle(t)
        if s != t and len(group_generated([s, t], n)) == math.factorial(n):
            return tuple(s), tuple(t)


@criterion(14, "permutation groups and boolean operations")
def test_criterion_14_conjugate_bases():
    rng = random.Random(41)
    for n in (3, 4, 5, 6):
        for _ in range(6):
            s, t = symmetric_basis(rng, n)
            r = tuple([0] + rng.sample(range(1, n), n - 1))
            s2, t2 = conjugate(r, s), conjugate(r, t)
            assert conjugate_bases(s, t, s2, t2) == r
            f1 = frozenset(rng.sample(range(n), rng.randint(1, n - 1)))
            f2 = frozenset(rng.sample(range(n), rng.randint(1, n - 1)))
            d1 = Dfa(n, ("a", "b"), (s, t), 0, f1)
            d2 = Dfa(n, ("a", "b"), (s2, t2), 0, f2)
            assert minimize(d1).n == minimize(d2).n == n
            assert all(boolean(d1, d2, op).n <= n for op in PROPER_OPS)


@criterion(14, "permutation groups and boolean operations")
def test_criterion_14_non_conjugate_bases_reach_mn():
    rng = random.Random(43)
    checked = 0
    for m, n in ((3, 3), (3, 5), (5, 5), (5, 6), (2, 3)):
        for _ in range(4):
            s1, t1 = symmetric_basis(rng, m)
            s2, t2 = symmetric_basis(rng, n)
            if m == n and conjugate_bases(s1, t1, s2, t2) is not None:
                continue
            d1 = Dfa(m, ("a", "b"), (s1, t1), 0, frozenset(rng.sample(range(m), 1)))
            d2 = Dfa(n, ("a", "b"), (s2, t2), 0, frozenset(rng.sample(range(n), 1)))
            assert all(boolean(d1, d2, op).n == m * n for op in PROPER_OPS)
            checked += 1
    assert checked >= 12


@criterion(14, "permutation groups and boolean operations")
def test_criterion_14_conjugation_must_fix_the_initial_state():
    """When the conjugating permutation moves state 0 the product is not small."""
    s, t = (1, 2, 3, 4, 0), (1, 0, 2, 3, 4)
    r = (1, 0, 2, 3, 4)
    d1 = Dfa(5, ("a", "b"), (s, t), 0, frozenset([4]))
    d2 = Dfa(5, ("a", "b"), (conjugate(r, s), conjugate(r, t)), 0, frozenset([4]))
    assert conjugate_bases(s, t, *d2.delta) == r
    assert max(boolean(d1, d2, op).n for op in PROPER_OPS) > 5


def product_subsets(d1, d2):
    _, subsets = determinize(product_nfa(d1, d2), with_subsets=True)
    return set(subsets)


@criterion(14, "permutation groups and boolean operations")
def test_criterion_14_product_reachability_lemma():
    rng = random.Random(144)
    pairs = hypothesis_held = 0
    while pairs < 20:
        m, n = rng.randint(2, 4), rng.randint(2, 4)
        d1 = random_group_dfa(rng, m)
        if d1.finals == frozenset([0]):
            continue
        d2 = random_group_dfa(rng, n)
        (f,) = d1.finals
        reached = product_subsets(d1, d2)
        hypothesis = ({1 << p for p in range(m) if p != f}
                      | {1 | 1 << (m + q) for q in range(n)})
        conclusion = {1 << p | S << m for p in range(m) if p != f for S in range(1 << n)}
        conclusion |= {1 << f | 1 << m | S << m for S in range(0, 1 << n, 2)}
        if hypothesis <= reached:
            assert conclusion <= reached
            hypothesis_held += 1
        pairs += 1
    assert hypothesis_held >= 5


# ---------------------------------------------------------------------------
# 15-17


@criterion(15, "derivative engine against Thompson construction")
def test_criterion_15_derivatives():
    def check():
        exprs = regex_corpus()
        assert len(exprs) == 50
        for e in exprs:
            d = derivative_dfa(e, ("a", "b"))
            assert language_equal(d, O.nfa_to_dfa(O.thompson(e, ("a", "b"))))
            once = similar_normalize(e)
            assert similar_normalize(once) == once
            assert language_equal(d, derivative_dfa(once, ("a", "b")))
    timed(check, 10)


@criterion(16, "classifier matrix and exhaustive small DFAs")
def test_criterion_16_classifier():
    for cls in WITNESS_CLASSES:
        lo = max(4, CLASS_MIN[cls])
        for n in range(lo, max(7, lo + 1)):
            for k in (range(1, n - 1) if cls == "proper_prefix_convex" else [None]):
                report = C.classify(make_witness(cls, n, k))
                assert C.claim_mismatches(cls, report) == {}, (cls, n, k)
    corpus = distinct_minimal()
    word_oracles = {k: WordOracle(tuple("ab"[:k])) for k in (1, 2)}
    for d in corpus:
        report = C.classify(d)
        for key, value in word_oracles[len(d.alphabet)].flags(d).items():
            assert report[key] == value, (d, key)


@criterion(17, "star-free subclass formulas in exact arithmetic")
def test_criterion_17_star_free_subclasses():
    e = sum(Fraction(1, math.factorial(i)) for i in range(60))
    for n in range(1, 11):
        assert B.bound("j_trivial", "semigroup", n) == math.floor(e * math.factorial(n - 1))
        assert B.bound("r_trivial", "semigroup", n) == math.factorial(n)
        assert B.bound("finite_cofinite", "semigroup", n) == math.factorial(n - 1)
    assert [B.bound(c, "semigroup", 4)
            for c in ("j_trivial", "r_trivial", "finite_cofinite")] == [16, 24, 6]
    # beyond double precision the series must still be exact
    for k in (20, 25, 30):
        value = B.e_factorial_floor(k)
        assert isinstance(value, int) and value == math.floor(e * math.factorial(k))
