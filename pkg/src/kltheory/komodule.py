"""Graded modules over the homotopy rings of real and complex K-theory.

A :class:`GradedKOModule` stores eight groups ``K_0 .. K_7`` (indices taken
mod 8, so the real Bott class acts as the identity on indices), together with
multiplication by ``eta`` (degree 1) and ``x`` (degree 4) in every degree.
A :class:`GradedKUModule` is two groups ``K_0, K_1``. Complexification data
links a real module to the K-theory of the complexified algebra via ``c`` and
the realification ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Mapping, Sequence

from .abelian import (
    AbHom,
    FGAbGroup,
    GroupElement,
    StructureError,
    canonical_invariants,
    cokernel,
    exact_at,
    kernel,
    mod_n,
    n_torsion,
    zeros,
)

PERIOD = 8

ETA_CUBED = "η³ = 0"
TWO_ETA = "2η = 0"
ETA_X = "ηx = 0"
X_SQUARED = "x² = 4β_ℝ"


class RelationError(ValueError):
    """Module data violates a relation of the coefficient ring."""


class MissingDataError(ValueError):
    """An operation needs data (unit class, complexification) that is absent."""


def _hom(source: FGAbGroup, target: FGAbGroup, spec) -> AbHom:
    """Build a hom from a matrix, a scalar (on cyclic groups) or ``None`` (zero)."""
    if spec is None:
        return AbHom.zero(source, target)
    if isinstance(spec, AbHom):
        if spec.source != source or spec.target != target:
            raise StructureError(f"hom {spec.source} -> {spec.target} does not fit {source} -> {target}")
        return spec
    if isinstance(spec, int):
        if source.ngens == 0 or target.ngens == 0:
            return AbHom.zero(source, target)
        if source.ngens != 1 or target.ngens != 1:
            raise StructureError("scalar shorthand needs cyclic source and target")
        return AbHom.from_matrix(source, target, [[spec]])
    return AbHom.from_matrix(source, target, spec)


@dataclass(frozen=True)
class GradedKOModule:
    groups: tuple[FGAbGroup, ...]
    eta: tuple[AbHom, ...]
    x: tuple[AbHom, ...]
    unit: GroupElement | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if not (len(self.groups) == len(self.eta) == len(self.x) == PERIOD):
            raise StructureError("a KO-module needs eight groups and eight eta/x maps")
        for n in range(PERIOD):
            if self.eta[n].source != self.groups[n] or self.eta[n].target != self.groups[(n + 1) % PERIOD]:
                raise StructureError(f"eta in degree {n} has the wrong source or target")
            if self.x[n].source != self.groups[n] or self.x[n].target != self.groups[(n + 4) % PERIOD]:
                raise StructureError(f"x in degree {n} has the wrong source or target")
        if self.unit is not None and self.unit.group != self.groups[0]:
            raise StructureError("unit class must live in K_0")

    @classmethod
    def build(
        cls,
        groups: Sequence[FGAbGroup | Sequence[int]],
        eta: Mapping[int, object] | None = None,
        x: Mapping[int, object] | None = None,
        unit: Sequence[int] | None = None,
        name: str = "",
    ) -> GradedKOModule:
        """Convenience constructor; missing maps are zero.

        Maps may be given as matrices, as AbHoms, or as integers when both
        groups are cyclic.
        """
        gs = tuple(g if isinstance(g, FGAbGroup) else FGAbGroup(tuple(g)) for g in groups)
        eta = eta or {}
        x = x or {}
        etas = tuple(_hom(gs[n], gs[(n + 1) % 8], eta.get(n)) for n in range(8))
        xs = tuple(_hom(gs[n], gs[(n + 4) % 8], x.get(n)) for n in range(8))
        u = gs[0].element(unit) if unit is not None else None
        return cls(gs, etas, xs, u, name)

    @classmethod
    def zero(cls, name: str = "0") -> GradedKOModule:
        return cls.build([()] * 8, name=name)

    def group(self, n: int) -> FGAbGroup:
        return self.groups[n % PERIOD]

    def eta_at(self, n: int) -> AbHom:
        return self.eta[n % PERIOD]

    def x_at(self, n: int) -> AbHom:
        return self.x[n % PERIOD]

    def with_unit(self, coords: Sequence[int] | None) -> GradedKOModule:
        u = self.groups[0].element(coords) if coords is not None else None
        return GradedKOModule(self.groups, self.eta, self.x, u, self.name)

    def renamed(self, name: str) -> GradedKOModule:
        return GradedKOModule(self.groups, self.eta, self.x, self.unit, name)

    def iso_types(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.iso_type for g in self.groups)


@dataclass(frozen=True)
class GradedKUModule:
    k0: FGAbGroup
    k1: FGAbGroup
    name: str = ""

    def group(self, n: int) -> FGAbGroup:
        return self.k0 if n % 2 == 0 else self.k1

    def shift(self, n: int) -> GradedKUModule:
        return self if n % 2 == 0 else GradedKUModule(self.k1, self.k0, self.name)

    def direct_sum(self, other: GradedKUModule) -> GradedKUModule:
        return GradedKUModule(self.k0.direct_sum(other.k0), self.k1.direct_sum(other.k1))


@dataclass(frozen=True)
class ComplexificationData:
    """``c[n]: K_n(A) -> K_n(A_C)`` and ``u[n]: K_n(A_C) -> K_n(A)`` for n mod 8.

    Complex degrees are identified mod 2 through the complex Bott class, so
    ``u[n - 2]`` is also the map ``u∘β⁻¹`` out of ``K_n(A_C)``.
    """

    real: GradedKOModule
    complex: GradedKUModule
    c: tuple[AbHom, ...]
    u: tuple[AbHom, ...]

    def __post_init__(self) -> None:
        for n in range(PERIOD):
            if self.c[n].source != self.real.groups[n] or self.c[n].target != self.complex.group(n):
                raise StructureError(f"c in degree {n} has the wrong source or target")
            if self.u[n].source != self.complex.group(n) or self.u[n].target != self.real.groups[n]:
                raise StructureError(f"u in degree {n} has the wrong source or target")

    @classmethod
    def build(
        cls,
        real: GradedKOModule,
        complex_: GradedKUModule,
        c: Mapping[int, object] | None = None,
        u: Mapping[int, object] | None = None,
    ) -> ComplexificationData:
        c = c or {}
        u = u or {}
        cs = tuple(_hom(real.groups[n], complex_.group(n), c.get(n)) for n in range(8))
        us = tuple(_hom(complex_.group(n), real.groups[n], u.get(n)) for n in range(8))
        return cls(real, complex_, cs, us)

    def with_real(self, real: GradedKOModule) -> ComplexificationData:
        """Same maps over a module with identical groups (e.g. a new unit or name)."""
        return ComplexificationData(real, self.complex, self.c, self.u)


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    relation: str
    degree: int
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return "valid"
        return "; ".join(f"{v.relation} fails in degree {v.degree} ({v.detail})" for v in self.violations)


def validate(m: GradedKOModule) -> ValidationReport:
    """Check the relations of the real K-theory coefficient ring in every degree."""
    out: list[Violation] = []
    for n in range(PERIOD):
        e1, e2, e3 = m.eta_at(n), m.eta_at(n + 1), m.eta_at(n + 2)
        if not (e3 @ e2 @ e1).is_zero():
            out.append(Violation(ETA_CUBED, n, "η∘η∘η is nonzero"))
        if not (2 * m.eta_at(n)).is_zero():
            out.append(Violation(TWO_ETA, n, "2·η is nonzero"))
        if not (m.x_at(n + 1) @ m.eta_at(n)).is_zero():
            out.append(Violation(ETA_X, n, "x∘η is nonzero"))
        if not (m.eta_at(n + 4) @ m.x_at(n)).is_zero():
            out.append(Violation(ETA_X, n, "η∘x is nonzero"))
        xx = m.x_at(n + 4) @ m.x_at(n)
        if xx != AbHom.scalar(m.group(n), 4):
            out.append(Violation(X_SQUARED, n, "x∘x is not multiplication by 4"))
    return ValidationReport(tuple(out))


def require_valid(m: GradedKOModule) -> None:
    report = validate(m)
    if not report:
        raise RelationError(f"{m.name or 'module'}: {report.describe()}")


# ---------------------------------------------------------------------------
# constructions


def shift(m: GradedKOModule, n: int) -> GradedKOModule:
    """Degree shift: ``shift(M, n)_i = M_{i-n}``. The unit survives only for ``n ≡ 0``."""
    k = n % PERIOD
    groups = tuple(m.groups[(i - k) % 8] for i in range(8))
    eta = tuple(m.eta[(i - k) % 8] for i in range(8))
    x = tuple(m.x[(i - k) % 8] for i in range(8))
    unit = m.unit if k == 0 else None
    name = m.name if k == 0 else f"{m.name}[{n}]"
    return GradedKOModule(groups, eta, x, unit, name)


def direct_sum(a: GradedKOModule, b: GradedKOModule, name: str | None = None) -> GradedKOModule:
    """Degreewise sum. The unit is the sum of units when both exist."""
    groups = tuple(g.direct_sum(h) for g, h in zip(a.groups, b.groups))
    eta = tuple(f.direct_sum(g) for f, g in zip(a.eta, b.eta))
    x = tuple(f.direct_sum(g) for f, g in zip(a.x, b.x))
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = groups[0].element(a.unit.coords + b.unit.coords)
    return GradedKOModule(groups, eta, x, unit, name if name is not None else f"{a.name}⊕{b.name}")


def direct_sum_all(modules: Sequence[GradedKOModule], name: str = "") -> GradedKOModule:
    out = GradedKOModule.zero()
    for m in modules:
        out = direct_sum(out, m)
    return out.renamed(name)


def shift_complexification(d: ComplexificationData, n: int) -> ComplexificationData:
    k = n % PERIOD
    real = shift(d.real, n)
    cplx = d.complex.shift(n)
    c = tuple(d.c[(i - k) % 8] for i in range(8))
    u = tuple(d.u[(i - k) % 8] for i in range(8))
    return ComplexificationData(real, cplx, c, u)


def direct_sum_complexification(
    a: ComplexificationData, b: ComplexificationData, name: str | None = None
) -> ComplexificationData:
    real = direct_sum(a.real, b.real, name)
    cplx = a.complex.direct_sum(b.complex)
    c = tuple(f.direct_sum(g) for f, g in zip(a.c, b.c))
    u = tuple(f.direct_sum(g) for f, g in zip(a.u, b.u))
    return ComplexificationData(real, cplx, c, u)


# ---------------------------------------------------------------------------
# Wood sequence


@dataclass(frozen=True)
class WoodFailure:
    degree: int
    group: str
    reason: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class WoodReport:
    failures: tuple[WoodFailure, ...] = ()

    @property
    def exact(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.exact

    def describe(self) -> str:
        if self.exact:
            return "exact"
        return "; ".join(
            f"not exact at {f.group} (degree {f.degree}): {f.reason}, witness {list(f.witness)}"
            for f in self.failures
        )


def wood_sequence(d: ComplexificationData) -> list[tuple[str, int, AbHom]]:
    """The 24 maps of ``K_m -c-> K_m(A_C) -uβ⁻¹-> K_{m-2} -η-> K_{m-1} -> ...``.

    Each entry is ``(label of the source group, its degree, outgoing map)``;
    the list is cyclic, the last map lands in the first source.
    """
    seq = []
    for step in range(PERIOD):
        m = (7 - step) % 8
        seq.append((f"K_{m}(A)", m, d.c[m]))
        seq.append((f"K_{m}(A_C)", m, d.u[(m - 2) % 8]))
        seq.append((f"K_{(m - 2) % 8}(A)", (m - 2) % 8, d.real.eta_at(m - 2)))
    return seq


def wood_check(d: ComplexificationData) -> WoodReport:
    """Exactness of the periodic Wood sequence at all 24 positions."""
    seq = wood_sequence(d)
    failures = []
    for i in range(len(seq)):
        _, _, incoming = seq[i - 1]
        label, deg, outgoing = seq[i]
        ok, witness, reason = exact_at(incoming, outgoing)
        if not ok:
            failures.append(WoodFailure(deg, label, reason, witness.coords))
    return WoodReport(tuple(failures))


def realification_check(d: ComplexificationData) -> list[int]:
    """Degrees where ``u∘c`` differs from multiplication by 2."""
    return [n for n in range(PERIOD) if d.u[n] @ d.c[n] != AbHom.scalar(d.real.groups[n], 2)]


# ---------------------------------------------------------------------------
# cofibers


@dataclass(frozen=True)
class DegreeConstraint:
    """``0 -> coker_i -> π_i(cofiber) -> ker_{i-1} -> 0`` in one degree."""

    degree: int
    coker: FGAbGroup
    ker: FGAbGroup
    candidates: tuple[tuple[int, ...], ...]

    @property
    def determined(self) -> FGAbGroup | None:
        if len(self.candidates) == 1:
            return FGAbGroup(self.candidates[0])
        return None

    @property
    def order(self) -> int | None:
        if self.coker.is_finite and self.ker.is_finite:
            return self.coker.order * self.ker.order
        return None


def extensions(quotient: FGAbGroup, sub: FGAbGroup, limit: int = 1 << 14) -> tuple[tuple[int, ...], ...]:
    """Isomorphism types of all ``E`` with ``0 -> sub -> E -> quotient -> 0``.

    Free summands of the quotient split off; for each torsion generator of
    order ``k`` of the quotient, its lift ``f`` satisfies ``k f = Σ e_i s_i``
    where ``e_i`` runs over ``Z/gcd(q_i, k)`` (with ``q_i = 0`` meaning ``Z``).
    """
    qs = canonical_invariants(sub.invariants)
    ks = canonical_invariants(quotient.invariants)
    torsion_k = [k for k in ks if k]
    free_k = sum(1 for k in ks if k == 0)
    ranges = [range(gcd(q, k)) for k in torsion_k for q in qs]
    count = 1
    for r in ranges:
        count *= len(r)
    if count > limit:
        raise ValueError(f"too many extension classes to enumerate ({count})")
    a, b = len(qs), len(torsion_k)
    found = set()
    for choice in product(*ranges):
        rel = zeros(a + b, 0)
        for i, q in enumerate(qs):
            if q:
                for r in range(a + b):
                    rel[r].append(q if r == i else 0)
        for j, k in enumerate(torsion_k):
            col = [0] * (a + b)
            for i in range(a):
                col[i] = -choice[j * a + i]
            col[a + j] = k
            for r in range(a + b):
                rel[r].append(col[r])
        g = FGAbGroup.free(a + b)
        h = AbHom.from_matrix(FGAbGroup.free(len(rel[0]) if rel else 0), g, rel) if a + b else None
        inv = cokernel(h)[0].invariants if h is not None else ()
        found.add(canonical_invariants(inv + (0,) * free_k))
    return tuple(sorted(found, key=lambda t: (len(t), t)))


def cofiber_constraints(
    maps: Sequence[AbHom], start: int = 0, periodic: bool = True
) -> list[DegreeConstraint]:
    """Constraints on the homotopy of the cofiber of a degreewise map.

    ``maps[k]`` is the map in degree ``start + k``. Degree ``i`` of the
    cofiber sits between ``coker`` of the degree-``i`` map and ``ker`` of the
    degree ``i - 1`` map; every extension compatible with that is listed.
    Periodic data wraps around; otherwise the lowest degree is only used as
    input and the constraints start one degree higher.
    """
    p = len(maps)
    out = []
    for k in range(0 if periodic else 1, p):
        q, _ = cokernel(maps[k])
        kk, _ = kernel(maps[(k - 1) % p])
        out.append(DegreeConstraint(start + k, q, kk, extensions(kk, q)))
    return out


def multiplication_maps(m: GradedKOModule, n: int) -> list[AbHom]:
    return [AbHom.scalar(g, n) for g in m.groups]


def tate_c2_trivial(g: FGAbGroup) -> tuple[tuple[FGAbGroup, AbHom], tuple[FGAbGroup, AbHom]]:
    """Tate cohomology of C2 acting trivially: ``(G/2, projection), (G[2], inclusion)``."""
    return mod_n(g, 2), n_torsion(g, 2)


# ---------------------------------------------------------------------------
# builtins


def ko() -> GradedKOModule:
    """Homotopy of real K-theory: Z, Z/2, Z/2, 0, Z, 0, 0, 0."""
    return GradedKOModule.build(
        [(0,), (2,), (2,), (), (0,), (), (), ()],
        eta={0: 1, 1: 1},
        x={0: 1, 4: 4},
        unit=(1,),
        name="R",
    )


def ksp() -> GradedKOModule:
    """Homotopy of symplectic K-theory, i.e. ``ko`` shifted by four, with unit."""
    return shift(ko(), 4).with_unit((1,)).renamed("H")


def complex_numbers() -> GradedKOModule:
    """K-theory of C as a real algebra: Z in even degrees, eta = 0, x = 2β²."""
    return GradedKOModule.build(
        [(0,), (), (0,), (), (0,), (), (0,), ()],
        x={0: 2, 2: 2, 4: 2, 6: 2},
        unit=(1,),
        name="C",
    )
