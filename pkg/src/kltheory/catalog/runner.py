"""Recompute catalog entries and diff them against their expectations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from ..abelian import FGAbGroup, cokernel, kernel, render_group
from ..komodule import validate, wood_check
from ..ltheory import alt_l12, free_l_groups, l_groups
from .entries import DEFAULT_RUN, CatalogEntry, builtin
from .expectations import Expectation, parse_group


@dataclass(frozen=True)
class CheckResult:
    check: str
    passed: bool
    expected: Any = None
    actual: Any = None
    provenance: str = ""
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
            "provenance": self.provenance,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class EntryReport:
    key: str
    checks: tuple[CheckResult, ...]
    l_table: tuple[str, ...] | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_checks(self) -> list[str]:
        return [c.check for c in self.checks if not c.passed]


@dataclass(frozen=True)
class VerifyReport:
    entries: tuple[EntryReport, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "entries": [
                {
                    "entry": e.key,
                    "passed": e.passed,
                    "l_groups": list(e.l_table) if e.l_table else None,
                    "checks": [c.to_dict() for c in e.checks],
                }
                for e in self.entries
            ],
        }

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            status = "pass" if e.passed else "FAIL"
            table = f"  L = ({', '.join(e.l_table)})" if e.l_table else ""
            lines.append(f"{e.key}: {status}{table}")
            for c in e.checks:
                mark = "ok  " if c.passed else "FAIL"
                line = f"  {mark} {c.check}"
                if not c.passed:
                    line += f": expected {c.expected}, got {c.actual}"
                    if c.detail:
                        line += f" ({c.detail})"
                lines.append(line)
        lines.append("all checks passed" if self.passed else "verification FAILED")
        return "\n".join(lines)


def _types(groups: Iterable[FGAbGroup]) -> list[str]:
    return [render_group(g.iso_type) for g in groups]


def _expected_types(values: list[str], params) -> list[tuple[int, ...]]:
    return [parse_group(v, params) for v in values]


def _compare_groups(name: str, exp: Expectation, actual: list[FGAbGroup], params) -> CheckResult:
    want = _expected_types(exp.value, params)
    got = [g.iso_type for g in actual]
    return CheckResult(
        name, want == got, [render_group(t) for t in want], _types(actual), exp.provenance
    )


def _guard(name: str, fn: Callable[[], CheckResult]) -> CheckResult:
    try:
        return fn()
    except Exception as exc:  # a crash in one check is a failure of that check
        return CheckResult(name, False, detail=f"{type(exc).__name__}: {exc}")


def verify_entry(entry: CatalogEntry) -> EntryReport:
    checks: list[CheckResult] = []
    exp = entry.expected
    params = entry.params
    m = entry.module
    table = None

    if m is not None:
        rep = validate(m)
        checks.append(CheckResult("validate", rep.valid, "valid", rep.describe()))
    if m is not None and "l_groups" in exp:
        def _l():
            lg = l_groups(m)
            return _compare_groups("l_groups", exp["l_groups"], list(lg.slots), params)
        checks.append(_guard("l_groups", _l))
        if checks[-1].actual:
            table = tuple(checks[-1].actual)
    if m is not None and "k_groups" in exp:
        checks.append(_guard("k_groups", lambda: _compare_groups("k_groups", exp["k_groups"], list(m.groups), params)))
    if entry.complex is not None:
        d = entry.complex

        def _alt():
            lg = l_groups(d.real)
            a1, a2 = alt_l12(d)
            ok = a1.iso_type == lg.l1.iso_type and a2.iso_type == lg.l2.iso_type
            return CheckResult("alt_l12", ok, _types([lg.l1, lg.l2]), _types([a1, a2]))

        checks.append(_guard("alt_l12", _alt))
        wood = wood_check(d)
        checks.append(CheckResult("wood", wood.exact, "exact", wood.describe()))
    if "free_l" in exp:
        def _free():
            f = free_l_groups(m)
            want = {k: render_group(parse_group(v, params)) for k, v in exp["free_l"].value.items()}
            got_groups = {"C": f.C, "l1h": f.l1h, "l3h": f.l3h, "l2h": f.l2h_group}
            got = {
                k: (render_group(got_groups[k].iso_type) if got_groups[k] is not None else "undetermined")
                for k in want
            }
            return CheckResult("free_l", want == got, want, got, exp["free_l"].provenance)
        checks.append(_guard("free_l", _free))
    if entry.constraints is not None:
        cons = entry.constraints
        if "cofiber_groups" in exp:
            def _cof():
                want = _expected_types(exp["cofiber_groups"].value, params)
                ok = len(want) == len(cons)
                bad = []
                for w, c in zip(want, cons):
                    if w not in c.candidates:
                        ok = False
                        bad.append(c.degree)
                got = [
                    render_group(c.candidates[0]) if len(c.candidates) == 1
                    else " | ".join(render_group(t) for t in c.candidates)
                    for c in cons
                ]
                detail = f"degrees {bad} outside the allowed extensions" if bad else ""
                return CheckResult(
                    "cofiber_groups", ok, [render_group(t) for t in want], got,
                    exp["cofiber_groups"].provenance, detail,
                )
            checks.append(_guard("cofiber_groups", _cof))
        if "ambiguous_degrees" in exp:
            amb = [c.degree for c in cons if c.determined is None]
            want = list(exp["ambiguous_degrees"].value)
            checks.append(
                CheckResult("ambiguous_degrees", amb == want, want, amb, exp["ambiguous_degrees"].provenance)
            )
    if "l_groups_forced" in exp:
        def _forced():
            f = entry.forced
            if f is None:
                return CheckResult("l_groups_forced", False, detail="K-data needed for L is not forced")
            slots = [f.k0, cokernel(f.eta0)[0], kernel(f.eta6)[0], f.k7]
            return _compare_groups("l_groups_forced", exp["l_groups_forced"], slots, params)
        checks.append(_guard("l_groups_forced", _forced))
        if checks[-1].actual:
            table = tuple(checks[-1].actual)
    if not checks:
        checks.append(CheckResult("expectations", False, detail="entry has nothing to verify"))
    return EntryReport(entry.key, tuple(checks), table)


def verify(target: CatalogEntry | str | None = None, **params: int) -> VerifyReport:
    """Verify one entry (by object or name) or, with no target, the default set."""
    if target is None or target == "all":
        entries = [builtin(n, **p) for n, p in DEFAULT_RUN]
    elif isinstance(target, CatalogEntry):
        entries = [target]
    else:
        entries = [builtin(target, **params)]
    reports = sorted((verify_entry(e) for e in entries), key=lambda r: r.key)
    return VerifyReport(tuple(reports))
