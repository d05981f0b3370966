"""JSON documents for modules, complexification data, pairings and sequences.

Degrees are string keys ``"0"``..``"7"``, groups are invariant-factor lists
(``0`` for Z, ``d >= 2`` for Z/d) and maps are integer matrices given as
lists of rows. Schema problems raise :class:`SchemaError` with a JSON path.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Any, Mapping, Sequence

from .abelian import AbHom, FGAbGroup, WellDefinednessError
from .komodule import (
    PERIOD,
    ComplexificationData,
    GradedKOModule,
    GradedKUModule,
    ko,
    require_valid,
)
from .ltheory import ProductDatum


class SchemaError(ValueError):
    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path


def _load(text: str | Mapping[str, Any]) -> Mapping[str, Any]:
    if isinstance(text, Mapping):
        return text
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(doc, dict):
        raise SchemaError("$", "document must be a JSON object")
    return doc


def _int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(path, f"expected an integer, got {json.dumps(value)}")
    return value


def _invariants(value: Any, path: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise SchemaError(path, "expected a list of invariant factors")
    out = []
    for i, v in enumerate(value):
        v = _int(v, f"{path}[{i}]")
        if v < 0 or v == 1:
            raise SchemaError(f"{path}[{i}]", f"invariant factor {v} not allowed (0 for Z, d >= 2 for Z/d)")
        out.append(v)
    return tuple(out)


def _matrix(value: Any, rows: int, cols: int, path: str) -> list[list[int]]:
    if not isinstance(value, list) or len(value) != rows:
        raise SchemaError(path, f"expected {rows} rows for a {rows}x{cols} matrix")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            raise SchemaError(f"{path}[{i}]", f"expected a row of length {cols}")
        out.append([_int(v, f"{path}[{i}][{j}]") for j, v in enumerate(row)])
    return out


def _hom(source: FGAbGroup, target: FGAbGroup, value: Any, path: str) -> AbHom:
    if value is None:
        return AbHom.zero(source, target)
    m = _matrix(value, target.ngens, source.ngens, path)
    try:
        return AbHom.from_matrix(source, target, m)
    except WellDefinednessError as exc:
        raise SchemaError(path, str(exc)) from None


def _degree_map(doc: Mapping[str, Any], path: str, period: int) -> dict[int, Any]:
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object keyed by degree")
    out = {}
    for key, v in doc.items():
        if key not in {str(n) for n in range(period)}:
            raise SchemaError(f"{path}.{key}", f"degree key must be one of 0..{period - 1}")
        out[int(key)] = v
    return out


def _groups(doc: Mapping[str, Any], period: int) -> list[FGAbGroup]:
    if "groups" not in doc:
        raise SchemaError("$", "missing 'groups'")
    raw = _degree_map(doc["groups"], "$.groups", period)
    missing = [n for n in range(period) if n not in raw]
    if missing:
        raise SchemaError("$.groups", f"missing degrees {missing}")
    return [FGAbGroup(_invariants(raw[n], f"$.groups.{n}")) for n in range(period)]


def _maps(doc: Mapping[str, Any], allowed: Sequence[str]) -> dict[str, dict[int, Any]]:
    maps = doc.get("maps", {})
    if not isinstance(maps, dict):
        raise SchemaError("$.maps", "expected an object of map families")
    for name in maps:
        if name not in allowed:
            raise SchemaError(f"$.maps.{name}", f"unknown map family (expected one of {', '.join(allowed)})")
    return {name: _degree_map(maps.get(name, {}), f"$.maps.{name}", PERIOD) for name in allowed}


def _check_period(doc: Mapping[str, Any], want: int) -> None:
    p = doc.get("periodicity", want)
    if p != want:
        raise SchemaError("$.periodicity", f"expected {want}, got {json.dumps(p)}")


def parse_module(text: str | Mapping[str, Any], validate: bool = True) -> GradedKOModule:
    """A KO-module document; relation failures raise ``RelationError`` unless ``validate`` is off."""
    doc = _load(text)
    _check_period(doc, PERIOD)
    gs = _groups(doc, PERIOD)
    maps = _maps(doc, ("eta", "x"))
    eta = tuple(_hom(gs[n], gs[(n + 1) % 8], maps["eta"].get(n), f"$.maps.eta.{n}") for n in range(8))
    x = tuple(_hom(gs[n], gs[(n + 4) % 8], maps["x"].get(n), f"$.maps.x.{n}") for n in range(8))
    unit = None
    if doc.get("unit") is not None:
        u = doc["unit"]
        if not isinstance(u, dict):
            raise SchemaError("$.unit", "expected an object with 'degree' and 'coords'")
        if _int(u.get("degree", 0), "$.unit.degree") != 0:
            raise SchemaError("$.unit.degree", "the unit class lives in degree 0")
        coords = u.get("coords")
        if not isinstance(coords, list) or len(coords) != gs[0].ngens:
            raise SchemaError("$.unit.coords", f"expected {gs[0].ngens} coordinates")
        unit = gs[0].element([_int(c, f"$.unit.coords[{i}]") for i, c in enumerate(coords)])
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("$.name", "expected a string")
    m = GradedKOModule(tuple(gs), eta, x, unit, name)
    if validate:
        require_valid(m)
    return m


def parse_complex(text: str | Mapping[str, Any], real: GradedKOModule) -> ComplexificationData:
    """Complex K-groups (periodicity 2) with maps ``c`` and ``u`` indexed by real degree."""
    doc = _load(text)
    _check_period(doc, 2)
    k0, k1 = _groups(doc, 2)
    cplx = GradedKUModule(k0, k1, doc.get("name", ""))
    maps = _maps(doc, ("c", "u"))
    c = tuple(_hom(real.groups[n], cplx.group(n), maps["c"].get(n), f"$.maps.c.{n}") for n in range(8))
    u = tuple(_hom(cplx.group(n), real.groups[n], maps["u"].get(n), f"$.maps.u.{n}") for n in range(8))
    return ComplexificationData(real, cplx, c, u)


def parse_pairing(
    text: str | Mapping[str, Any], left: GradedKOModule, right: GradedKOModule
) -> ProductDatum:
    """``{"target": <module document>, "pairing": {"i,j": [[coords of gen_p * gen_q]]}}``."""
    doc = _load(text)
    if "target" not in doc:
        raise SchemaError("$", "missing 'target' module")
    try:
        target = parse_module(doc["target"])
    except SchemaError as exc:
        raise SchemaError("$.target" + exc.path[1:], str(exc).split(": ", 1)[1]) from None
    raw = doc.get("pairing", {})
    if not isinstance(raw, dict):
        raise SchemaError("$.pairing", "expected an object keyed by 'i,j'")
    table = {}
    for key, v in raw.items():
        path = f"$.pairing.{key}"
        try:
            i, j = (int(s) for s in key.split(","))
        except ValueError:
            raise SchemaError(path, "key must look like 'i,j'") from None
        i, j = i % 8, j % 8
        a, b, t = left.group(i).ngens, right.group(j).ngens, target.group(i + j).ngens
        if not isinstance(v, list) or len(v) != a:
            raise SchemaError(path, f"expected {a} rows (generators of the left group)")
        for p, row in enumerate(v):
            if not isinstance(row, list) or len(row) != b:
                raise SchemaError(f"{path}[{p}]", f"expected {b} entries (generators of the right group)")
            for q, coords in enumerate(row):
                if not isinstance(coords, list) or len(coords) != t:
                    raise SchemaError(f"{path}[{p}][{q}]", f"expected {t} target coordinates")
                for r, c in enumerate(coords):
                    _int(c, f"{path}[{p}][{q}][{r}]")
        table[(i, j)] = v
    return ProductDatum(left, right, target, table)


def parse_sequence(text: str | Mapping[str, Any]) -> list[AbHom]:
    """``{"groups": [[...], ...], "maps": [matrix, ...]}`` with ``maps[i]: groups[i] -> groups[i+1]``."""
    doc = _load(text)
    groups = doc.get("groups")
    maps = doc.get("maps")
    if not isinstance(groups, list) or len(groups) < 2:
        raise SchemaError("$.groups", "expected a list of at least two groups")
    if not isinstance(maps, list) or len(maps) != len(groups) - 1:
        raise SchemaError("$.maps", f"expected {len(groups) - 1 if isinstance(groups, list) else '?'} maps")
    gs = [FGAbGroup(_invariants(g, f"$.groups[{i}]")) for i, g in enumerate(groups)]
    return [_hom(gs[i], gs[i + 1], m, f"$.maps[{i}]") for i, m in enumerate(maps)]


def serialize_module(m: GradedKOModule) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "name": m.name,
        "periodicity": PERIOD,
        "groups": {str(n): list(m.groups[n].invariants) for n in range(PERIOD)},
        "maps": {
            "eta": {str(n): [list(r) for r in m.eta[n].matrix] for n in range(PERIOD) if not m.eta[n].is_zero()},
            "x": {str(n): [list(r) for r in m.x[n].matrix] for n in range(PERIOD) if not m.x[n].is_zero()},
        },
    }
    if m.unit is not None:
        doc["unit"] = {"degree": 0, "coords": list(m.unit.coords)}
    return doc


def serialize_complex(d: ComplexificationData) -> dict[str, Any]:
    return {
        "name": d.complex.name,
        "periodicity": 2,
        "groups": {"0": list(d.complex.k0.invariants), "1": list(d.complex.k1.invariants)},
        "maps": {
            "c": {str(n): [list(r) for r in d.c[n].matrix] for n in range(PERIOD) if not d.c[n].is_zero()},
            "u": {str(n): [list(r) for r in d.u[n].matrix] for n in range(PERIOD) if not d.u[n].is_zero()},
        },
    }


def _format(value: Any, indent: int) -> str:
    if not isinstance(value, dict) or not value:
        return json.dumps(value, ensure_ascii=False)
    pad = "  " * (indent + 1)
    items = [f"{pad}{json.dumps(k)}: {_format(v, indent + 1)}" for k, v in value.items()]
    return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"


def serialize_pairing(p: ProductDatum) -> dict[str, Any]:
    return {
        "target": serialize_module(p.target),
        "pairing": {f"{i},{j}": [[list(c) for c in row] for row in v] for (i, j), v in sorted(p.pairing.items())},
    }


def serialize_sequence(homs: Sequence[AbHom]) -> dict[str, Any]:
    return {
        "groups": [list(homs[0].source.invariants)] + [list(h.target.invariants) for h in homs],
        "maps": [[list(r) for r in h.matrix] for h in homs],
    }


def dumps(doc: Mapping[str, Any]) -> str:
    """JSON with objects spread over lines and lists (matrices, invariants) kept inline."""
    return _format(dict(doc), 0) + "\n"


def shipped(name: str) -> str:
    """Text of a document shipped in the package data directory."""
    return resources.files("kltheory").joinpath(f"data/{name}").read_text("utf-8")


def shipped_ko() -> GradedKOModule:
    return parse_module(shipped("ko.json"))


__all__ = [
    "SchemaError",
    "dumps",
    "ko",
    "parse_complex",
    "parse_module",
    "parse_pairing",
    "parse_sequence",
    "serialize_complex",
    "serialize_module",
    "serialize_pairing",
    "serialize_sequence",
    "shipped",
    "shipped_ko",
]
