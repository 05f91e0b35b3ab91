"""Measure witnesses and compare them with the closed-form bounds.

``verify`` expands a family's manifest entries over the requested sizes,
rebuilds every witness, measures it from scratch and evaluates the bound
alongside.  Budget overruns are reported as skipped, never as failures.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import bounds as B
from .atoms import atom_complexity, atom_ids
from .automata import Dfa, minimize, quotient_complexities
from .config import BudgetExceeded
from .manifest import FAMILY_OF, MANIFEST
from .operations import boolean, boolean_op, product, reverse, star
from .semigroup import transition_semigroup
from .witnesses import apply_dialect, make_witness, parse_dialect

PASS, FAIL, SKIP_BUDGET, SKIP_DOMAIN = "pass", "fail", "skipped: budget", "skipped: domain"

MEASURE_GROUPS = {
    "product": ("product_restricted", "product_unrestricted"),
    "atoms": ("atom_count", "atom_complexity"),
}


@dataclass
class VerificationResult:
    family: str
    measure: str
    params: dict
    expected: object = None
    measured: object = None
    status: str = PASS
    runtime_ms: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def key(self) -> tuple:
        return (self.family, self.measure, json.dumps(self.params, sort_keys=True))

    def to_dict(self, timings: bool = False) -> dict:
        out = {"class": self.family, "measure": self.measure, "params": self.params,
               "expected": _jsonable(self.expected), "measured": _jsonable(self.measured),
               "pass": self.passed, "status": self.status}
        if self.notes:
            out["notes"] = list(self.notes)
        if timings:
            out["runtime_ms"] = round(self.runtime_ms, 1)
        return out


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


# ---------------------------------------------------------------------------
# measurement


def measure(dfa: Dfa, which=("all",), limit: int | None = None) -> dict:
    """Complexity measures of the minimized input, keyed by name."""
    which = set(which)
    every = "all" in which
    d = minimize(dfa)
    out = {"kappa": d.n}
    if every or "quotient_profile" in which:
        out["quotient_profile"] = sorted(quotient_complexities(d).values(), reverse=True)
    if every or "semigroup" in which:
        out["semigroup"] = len(transition_semigroup(d, limit))
    if every or "reversal" in which:
        out["reversal"] = reverse(d).n
    if every or "atoms" in which:
        ids = atom_ids(d)
        out["atoms"] = len(ids)
        out["atom_complexities"] = [{"S": sorted(S), "complexity": atom_complexity(d, S)}
                                    for S in ids]
    if every or "star" in which:
        out["star"] = star(d).n
    return out


# ---------------------------------------------------------------------------
# task expansion


def _operand(witness: str, n: int, k, dialect) -> Dfa:
    d = make_witness(witness, n, k)
    if dialect is not None:
        d = apply_dialect(d, parse_dialect(dialect))
    return d


def _sizes(witness: str, ns, ks_for):
    for n in ns:
        if witness == "proper_prefix_convex":
            for k in ks_for(n):
                yield n, k
        else:
            yield n, None


def _ppc_ks(n):
    return range(1, n - 1)


def _tasks(family: str, n_range, m_range, measures):
    items = MANIFEST[family]
    bound_family = FAMILY_OF.get(family, family)
    wanted = None
    if measures:
        wanted = set()
        for m in measures:
            wanted.update(MEASURE_GROUPS.get(m, (m,)))
    for item in items:
        meas = item["measure"]
        if wanted is not None and meas not in wanted:
            continue
        witness = item["witness"]
        if meas in ("product_restricted", "product_unrestricted", "boolean"):
            for n, k in _sizes(witness, n_range, _ppc_ks):
                for m, j in _sizes(witness, m_range, _ppc_ks):
                    for op in item["ops"] or (None,):
                        params = {"m": m, "n": n}
                        if k is not None:
                            params.update(j=j, k=k)
                        if op is not None:
                            params.update(op=op, mode=item["mode"])
                        yield bound_family, family, meas, item, params
        else:
            for n, k in _sizes(witness, n_range, _ppc_ks):
                params = {"n": n}
                if k is not None:
                    params["k"] = k
                yield bound_family, family, meas, item, params


def _run_task(bound_family, family, meas, item, params, limit) -> list:
    n, k = params["n"], params.get("k")
    m, j = params.get("m"), params.get("j")
    op, mode = params.get("op"), params.get("mode", item["mode"])
    witness = item["witness"]
    dialects = item["dialects"]
    tag = {"witness": witness}
    if any(d is not None for d in dialects):
        tag["dialects"] = [d if d is not None else "canonical" for d in dialects]
    base = dict(params, **tag)

    def result(**kw):
        return VerificationResult(family, meas, dict(base), **kw)

    query = dict(n=n, m=m, k=k, j=j, op=op, mode=mode)
    try:
        if meas != "atom_complexity":
            expected = B.bound(bound_family, meas, **query)
    except B.UnknownBound as exc:
        return [result(status=SKIP_DOMAIN, notes=[str(exc)])]
    except ValueError as exc:
        return [result(status=SKIP_DOMAIN, notes=[str(exc)])]

    try:
        if meas in ("product_restricted", "product_unrestricted", "boolean"):
            try:
                left = _operand(witness, m, j, dialects[0])
                right = _operand(witness, n, k, dialects[1])
            except ValueError as exc:
                return [result(status=SKIP_DOMAIN, notes=[str(exc)])]
            if mode == "restricted" and set(left.alphabet) != set(right.alphabet):
                return [result(status=SKIP_DOMAIN, notes=[
                    f"operand alphabets differ: {left.alphabet} vs {right.alphabet}"])]
            notes = []
            for name, d, size in (("left", left, m), ("right", right, n)):
                if minimize(d).n != size:
                    notes.append(f"{name} operand has complexity {minimize(d).n}, not {size}")
            if meas == "boolean":
                measured = boolean(left, right, boolean_op(op), mode).n
            else:
                measured = product(left, right, mode).n
            status = PASS if measured == expected and not notes else FAIL
            return [result(expected=expected, measured=measured, status=status, notes=notes)]
        try:
            d = _operand(witness, n, k, dialects[0])
        except ValueError as exc:
            return [result(status=SKIP_DOMAIN, notes=[str(exc)])]
        if meas == "atom_complexity":
            return _atom_results(bound_family, family, base, d, n, k)
        if meas == "semigroup":
            measured = len(transition_semigroup(minimize(d), limit))
        elif meas == "quotient_profile":
            measured = tuple(sorted(quotient_complexities(minimize(d)).values(), reverse=True))
        elif meas == "reversal":
            measured = reverse(d).n
        elif meas == "atom_count":
            measured = len(atom_ids(minimize(d)))
        elif meas == "star":
            measured = star(d).n
        else:
            raise ValueError(f"unknown measure {meas!r}")
        return [result(expected=expected, measured=measured,
                       status=PASS if measured == expected else FAIL)]
    except BudgetExceeded as exc:
        return [result(status=SKIP_BUDGET, notes=[str(exc)])]


def _atom_results(bound_family, family, base, d, n, k) -> list:
    """One result per atom; the witness's own state numbering indexes S."""
    out = []
    if minimize(d).n != d.n:
        return [VerificationResult(family, "atom_complexity", dict(base), status=FAIL,
                                   notes=["witness dialect is not minimal"])]
    for S in atom_ids(d):
        params = dict(base, S=sorted(S))
        measured = atom_complexity(d, S)
        try:
            expected = B.bound(bound_family, "atom_complexity", n, k=k, S=S)
        except ValueError as exc:
            out.append(VerificationResult(family, "atom_complexity", params, measured=measured,
                                          status=FAIL, notes=[str(exc)]))
            continue
        out.append(VerificationResult(family, "atom_complexity", params, expected=expected,
                                      measured=measured,
                                      status=PASS if measured == expected else FAIL))
    return out


def _errata_notes(r: VerificationResult, bound_family: str) -> None:
    key = r.measure
    if r.measure == "boolean":
        key = f"boolean:{r.params['op']}:{r.params['mode']}"
    if (bound_family, key) in B.STATED_ERRATA and r.expected is not None:
        stated = B.stated_value(bound_family, key, r.params["n"], r.params.get("m"))
        r.notes.append(f"originally stated value {stated}; see bounds.STATED_ERRATA")


def verify(family: str, n_range, m_range=(), measures=None, limit: int | None = None) -> list:
    """Run every manifest item of ``family`` over the given sizes."""
    if family not in MANIFEST:
        raise ValueError(f"no verification manifest for {family!r}; "
                         f"known: {', '.join(sorted(MANIFEST))}")
    results = []
    for bound_family, fam, meas, item, params in _tasks(family, list(n_range),
                                                         list(m_range), measures):
        t0 = time.perf_counter()
        batch = _run_task(bound_family, fam, meas, item, params, limit)
        elapsed = (time.perf_counter() - t0) * 1000
        for r in batch:
            r.runtime_ms = elapsed / len(batch)
            _errata_notes(r, bound_family)
        results.extend(batch)
    results.sort(key=VerificationResult.key)
    return results


def any_failed(results) -> bool:
    return any(r.status == FAIL for r in results)


# ---------------------------------------------------------------------------
# reports

_MARK = {PASS: "✓", FAIL: "✗"}


def report(results, fmt: str = "markdown", timings: bool = False) -> str:
    if fmt == "json":
        return json.dumps({"results": [r.to_dict(timings) for r in results]},
                          indent=2, sort_keys=True) + "\n"
    if fmt != "markdown":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = ["| class | measure | params | expected | measured | pass |",
             "|---|---|---|---|---|---|"]
    for r in results:
        params = ", ".join(f"{k}={_fmt(v)}" for k, v in sorted(r.params.items()))
        lines.append(f"| {r.family} | {r.measure} | {params} | {_fmt(r.expected)} | "
                     f"{_fmt(r.measured)} | {_MARK.get(r.status, r.status)} |")
    return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return "[" + " ".join(map(str, v)) + "]"
    return str(v)


def results_from_json(text: str) -> list:
    out = []
    for row in json.loads(text)["results"]:
        exp, got = row["expected"], row["measured"]
        out.append(VerificationResult(
            row["class"], row["measure"], row["params"],
            tuple(exp) if isinstance(exp, list) else exp,
            tuple(got) if isinstance(got, list) else got,
            row["status"], row.get("runtime_ms", 0.0), list(row.get("notes", []))))
    return out
