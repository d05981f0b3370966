"""Loading tagged expectations from the catalog data file.

Every expected value carries a provenance string starting with one of the
tags in :data:`TAGS`; untagged values are rejected when loaded. Group values
are written as ``"Z^{2*g} ⊕ Z/2"``; expressions in braces are evaluated with
the entry parameters.
"""

from __future__ import annotations

import ast
import json
import operator
import re
from dataclasses import dataclass
from importlib import resources
from typing import Any, Mapping

from ..abelian import FGAbGroup, canonical_invariants

TAGS = ("PAPER", "DERIVED", "TRIVIAL")


class ProvenanceError(ValueError):
    """An expected value has no recognised provenance tag."""


@dataclass(frozen=True)
class Expectation:
    value: Any
    provenance: str

    @property
    def tag(self) -> str:
        return self.provenance.split(":", 1)[0].strip()


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Mod: operator.mod}
_CMPOPS = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
}


def evaluate(expr: str, params: Mapping[str, int]) -> int | bool:
    """Evaluate a small integer expression (``+ - * %``, comparisons, ``and``/``or``)."""

    def ev(node: ast.AST):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in params:
                raise ValueError(f"unknown parameter {node.id!r} in {expr!r}")
            return params[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Compare) and len(node.ops) == 1 and type(node.ops[0]) in _CMPOPS:
            return _CMPOPS[type(node.ops[0])](ev(node.left), ev(node.comparators[0]))
        if isinstance(node, ast.BoolOp):
            vals = [ev(v) for v in node.values]
            return all(vals) if isinstance(node.op, ast.And) else any(vals)
        raise ValueError(f"unsupported expression {expr!r}")

    return ev(ast.parse(expr, mode="eval"))


_TERM = re.compile(r"^Z(?:\^(\{[^}]*\}|\d+)|/(\{[^}]*\}|\d+))?$")


def parse_group(text: str, params: Mapping[str, int] | None = None) -> tuple[int, ...]:
    """Canonical invariants of a group written like ``Z^2 ⊕ Z/{4*n}``."""
    params = params or {}
    text = text.strip()
    if text == "0":
        return ()
    invs: list[int] = []
    for term in text.split("⊕"):
        term = term.strip()
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse group term {term!r}")
        power, order = m.groups()

        def num(s: str) -> int:
            return int(evaluate(s[1:-1], params)) if s.startswith("{") else int(s)

        if order is not None:
            d = num(order)
            if d < 1:
                raise ValueError(f"bad cyclic order in {term!r}")
            if d > 1:
                invs.append(d)
        else:
            invs.extend([0] * (num(power) if power is not None else 1))
    return canonical_invariants(invs)


def group_of(text: str, params: Mapping[str, int] | None = None) -> FGAbGroup:
    return FGAbGroup(parse_group(text, params))


def _checked(name: str, key: str, raw: Any) -> Expectation:
    if not isinstance(raw, dict) or "value" not in raw:
        raise ProvenanceError(f"{name}.{key}: expectation must have a value and a provenance")
    prov = raw.get("provenance", "")
    if not isinstance(prov, str) or prov.split(":", 1)[0].strip() not in TAGS:
        raise ProvenanceError(f"{name}.{key}: untagged expectation (need one of {', '.join(TAGS)})")
    return Expectation(raw["value"], prov)


def load_expectations(data: Mapping[str, Any] | None = None) -> dict[str, dict[str, Any]]:
    """The raw catalog table, keyed by entry name; tags are checked here."""
    if data is None:
        text = resources.files("kltheory.catalog").joinpath("data/expected.json").read_text("utf-8")
        data = json.loads(text)
    for name, entry in data.items():
        for key, raw in entry.get("expect", {}).items():
            _checked(name, key, raw)
        for case in entry.get("cases", []):
            for key, raw in case.get("expect", {}).items():
                _checked(name, key, raw)
    return dict(data)


def expectations_for(name: str, entry: Mapping[str, Any], params: Mapping[str, int]) -> dict[str, Expectation]:
    """Expectations applying to ``params``: the base table plus every matching case."""
    out = {k: _checked(name, k, v) for k, v in entry.get("expect", {}).items()}
    for case in entry.get("cases", []):
        if evaluate(case["when"], params):
            out.update({k: _checked(name, k, v) for k, v in case.get("expect", {}).items()})
    return out
