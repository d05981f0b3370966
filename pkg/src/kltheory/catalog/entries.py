"""Builtin catalog entries: K-data plus tagged expectations."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Mapping

from ..abelian import AbHom, FGAbGroup
from ..komodule import ComplexificationData, DegreeConstraint, GradedKOModule, ksp
from . import builders
from .expectations import Expectation, expectations_for, load_expectations


class CatalogError(ValueError):
    """Unknown entry or parameters out of range."""


@dataclass(frozen=True)
class ForcedData:
    """The parts of a module's K-data that are pinned even when other degrees are not."""

    k0: FGAbGroup
    eta0: AbHom
    k6: FGAbGroup
    eta6: AbHom
    k7: FGAbGroup


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: Mapping[str, int]
    description: str
    expected: Mapping[str, Expectation]
    module: GradedKOModule | None = None
    complex: ComplexificationData | None = None
    constraints: tuple[DegreeConstraint, ...] | None = None
    forced: ForcedData | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def key(self) -> str:
        if not self.params:
            return self.name
        if self.name == "R[n]":
            return f"R[{self.params['n']}]"
        args = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({args})"


# name -> (parameter name, default, minimum) for parameterised entries
PARAMETERS: dict[str, tuple[str, int, int]] = {
    "R[n]": ("n", 0, 0),
    "F": ("n", 3, 1),
    "Sigma": ("g", 2, 0),
    "W": ("r", 4, 1),
    "Cuntz": ("n", 3, 1),
    "E2n": ("n", 2, 1),
    "E2n-wood": ("n", 2, 1),
}

ALIASES = {
    "ℝ": "R",
    "ℂ": "C",
    "ℍ": "H",
    "C(𝕋)": "C(T)",
    "A_θ": "A_theta",
    "O^C_3": "O3C",
    "L(C)/2": "LC/2",
}

OUT_OF_SCOPE = {
    "O3xO5": "K-groups of tensor products of real Cuntz algebras depend on more than gcd(m, n) and are "
    "not derivable from ko-module data shipped here; supply them as a module document instead",
}

DEFAULT_RUN: list[tuple[str, dict[str, int]]] = (
    [("R", {}), ("C", {}), ("H", {})]
    + [("R[n]", {"n": k}) for k in range(8)]
    + [
        ("C(T)", {}),
        ("F", {"n": 3}),
        ("Sigma", {"g": 2}),
        ("W", {"r": 4}),
        ("A_theta", {}),
        ("Cuntz", {"n": 2}),
        ("Cuntz", {"n": 3}),
        ("Cuntz", {"n": 4}),
        ("E2n", {"n": 2}),
        ("E2n", {"n": 3}),
        ("E2n-wood", {"n": 2}),
        ("O3C", {}),
        ("stem", {}),
        ("ksp", {}),
        ("LC/2", {}),
    ]
)


def names() -> list[str]:
    return sorted(load_expectations())


def _normalize(name: str, params: Mapping[str, int]) -> tuple[str, dict[str, int]]:
    name = ALIASES.get(name, name)
    params = dict(params)
    m = re.fullmatch(r"R\[(-?\d+)\]", name)
    if m:
        name, params["n"] = "R[n]", int(m.group(1))
    if name in OUT_OF_SCOPE:
        raise CatalogError(f"{name}: {OUT_OF_SCOPE[name]}")
    if name not in load_expectations():
        raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(names())}")
    if name in PARAMETERS:
        pname, default, minimum = PARAMETERS[name]
        extra = set(params) - {pname}
        if extra:
            raise CatalogError(f"{name} takes only the parameter {pname}")
        value = int(params.get(pname, default))
        if value < minimum:
            raise CatalogError(f"{name}: {pname} must be at least {minimum}, got {value}")
        if name == "R[n]":
            value %= 8
        params = {pname: value}
    elif params:
        raise CatalogError(f"{name} takes no parameters")
    return name, params


def _even_cuntz_forced(n: int, constraints: list[DegreeConstraint]) -> ForcedData | None:
    groups = {c.degree: c.determined for c in constraints}
    k0, k1, k6, k7 = groups[0], groups[1], groups[6], groups[7]
    if k0 is None or k1 is None or k6 is None or k7 is None:
        return None
    # eta on the unit is the image of eta in pi_1(ko/n) = Z/2: reduction Z/n -> Z/2
    eta0 = AbHom.from_matrix(k0, k1, [[1]])
    return ForcedData(k0, eta0, k6, AbHom.zero(k6, k7), k7)


def builtin(name: str, **params: int) -> CatalogEntry:
    """Catalog entry by name (``"H"``, ``"R[6]"``, ``"Cuntz"`` with ``n=...``, ...)."""
    name, params = _normalize(name, params)
    table = load_expectations()[name]
    expected = expectations_for(name, table, params)
    desc = table.get("description", "")
    kw: dict[str, Any] = {}
    if name == "R":
        kw["complex"] = builders.real_complex()
    elif name == "C":
        kw["complex"] = builders.complex_complex()
    elif name == "H":
        kw["complex"] = builders.quaternion_complex()
    elif name == "R[n]":
        kw["complex"] = builders.shifted_real_complex(params["n"])
    elif name == "C(T)":
        kw["complex"] = builders.circle()
    elif name == "F":
        kw["complex"] = builders.free_group(params["n"])
    elif name == "Sigma":
        kw["complex"] = builders.surface_group(params["g"])
    elif name == "W":
        kw["complex"] = builders.coxeter(params["r"])
    elif name == "A_theta":
        kw["complex"] = builders.rotation_algebra()
    elif name == "Cuntz":
        n = params["n"]
        cons = builders.ko_mod_n_constraints(n)
        kw["constraints"] = tuple(cons)
        if n == 2:
            kw["module"] = builders.cuntz_two()
        elif n % 2:
            kw["complex"] = builders.cuntz_odd(n)
        else:
            kw["forced"] = _even_cuntz_forced(n, cons)
            kw["notes"] = ("degree-2 extension unresolved; L checked from forced K-data only",)
    elif name == "E2n":
        kw["module"] = builders.e_module(params["n"], 0)
        kw["constraints"] = tuple(builders.ko_mod_nx_constraints(params["n"]))
        kw["notes"] = ("x on degrees 2 and 6 is not pinned; recorded as zero",)
    elif name == "E2n-wood":
        kw["complex"] = builders.e_wood_complex(params["n"])
    elif name == "O3C":
        kw["complex"] = builders.complex_cuntz_three()
    elif name == "stem":
        kw["constraints"] = tuple(builders.stem_constraints())
    elif name == "ksp":
        kw["constraints"] = tuple(builders.ksp_constraints())
        kw["module"] = ksp()
    elif name == "LC/2":
        kw["constraints"] = tuple(builders.lc_mod_two_constraints())
    if "complex" in kw and "module" not in kw:
        kw["module"] = kw["complex"].real
    return CatalogEntry(name=name, params=params, description=desc, expected=expected, **kw)
