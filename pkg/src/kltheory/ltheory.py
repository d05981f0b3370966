"""L-groups of real C*-algebras computed from graded K-theory data.

The four slots are read off the K-groups:

    L_0 = K_0,   L_1 = K_1 / eta K_0,   L_2 = ker(eta: K_6 -> K_7),   L_3 = K_7

and are 4-periodic. Elements of ``L_1`` and ``L_2`` live in the cokernel and
kernel presentations returned here, so products and boundary maps can be
evaluated on them directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .abelian import (
    AbHom,
    FGAbGroup,
    GroupElement,
    all_halves,
    cokernel,
    fiber_product,
    image,
    kernel,
    mod_n,
    n_torsion,
)
from .komodule import (
    ComplexificationData,
    GradedKOModule,
    MissingDataError,
    RelationError,
    extensions,
    require_valid,
)

# K-degree (mod 8) that carries each L-slot
K_DEGREE = (0, 1, 6, 7)


class HalvingError(ValueError):
    """The half needed by a product cell does not exist or is not unique."""


class WoodExactnessError(ValueError):
    """Complexification data is not exact where a lift is needed."""


@dataclass(frozen=True)
class LGroups:
    l0: FGAbGroup
    l1: FGAbGroup
    l2: FGAbGroup
    l3: FGAbGroup
    proj1: AbHom  # K_1 -> l1
    incl2: AbHom  # l2 -> K_6

    @property
    def slots(self) -> tuple[FGAbGroup, FGAbGroup, FGAbGroup, FGAbGroup]:
        return (self.l0, self.l1, self.l2, self.l3)

    def slot(self, i: int) -> FGAbGroup:
        return self.slots[i % 4]

    def iso_types(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.iso_type for g in self.slots)

    def to_k(self, i: int, a: GroupElement) -> GroupElement:
        """Representative in ``K_{K_DEGREE[i]}`` of an element of slot ``i``."""
        i %= 4
        if a.group != self.slot(i):
            raise ValueError(f"element does not live in L_{i}")
        if i == 1:
            lift = self.proj1.preimage(a)
            assert lift is not None
            return lift
        if i == 2:
            return self.incl2(a)
        return a

    def from_k(self, i: int, y: GroupElement) -> GroupElement:
        """Class in slot ``i`` of an element of the matching K-group."""
        i %= 4
        if i == 1:
            return self.proj1(y)
        if i == 2:
            pre = self.incl2.preimage(y)
            if pre is None:
                raise RelationError("element is not annihilated by eta, so it is not in L_2")
            return pre
        return y


def rotate(types: Sequence[tuple[int, ...]], k: int) -> tuple[tuple[int, ...], ...]:
    """Slot ``i`` of the result is slot ``i - k`` of the input."""
    return tuple(types[(i - k) % 4] for i in range(4))


def _slots(m: GradedKOModule) -> LGroups:
    l1, proj1 = cokernel(m.eta_at(0))
    l2, incl2 = kernel(m.eta_at(6))
    return LGroups(m.group(0), l1, l2, m.group(7), proj1, incl2)


def l_groups(m: GradedKOModule) -> LGroups:
    """The four L-groups of a valid KO-module."""
    require_valid(m)
    return _slots(m)


def alt_l12(d: ComplexificationData) -> tuple[FGAbGroup, FGAbGroup]:
    """``L_1 = ker(u: K_{-1}(A_C) -> K_{-1}(A))`` and ``L_2 = coker(c: K_0(A) -> K_0(A_C))``."""
    l1, _ = kernel(d.u[7])
    l2, _ = cokernel(d.c[0])
    return l1, l2


# ---------------------------------------------------------------------------
# tau


def _x_power(m: GradedKOModule, start: int, power: int) -> AbHom:
    out = AbHom.identity(m.group(start))
    for step in range(power):
        out = m.x_at(start + 4 * step) @ out
    return out


def tau_map(m: GradedKOModule, n: int) -> AbHom:
    """The map ``K_n -> L_n`` induced by comparing connective K-theory with L-theory.

    With ``n = 4q + r`` it is ``2^q x^q`` for ``r = 0, 1`` and ``2^q x^(q+1)``
    for ``r = 2, 3``, followed by the identification with the L-slot.
    """
    if n < 0:
        raise ValueError("tau is defined for n >= 0")
    require_valid(m)
    lg = _slots(m)
    q, r = divmod(n, 4)
    power = q if r < 2 else q + 1
    raw = (2**q) * _x_power(m, n, power)
    if r == 1:
        return lg.proj1 @ raw
    if r == 2:
        cols = []
        for g in raw.source.gens():
            y = raw(g)
            pre = lg.incl2.preimage(y)
            if pre is None:
                raise RelationError(f"x-image in degree 6 is not killed by eta (from degree {n})")
            cols.append(list(pre.coords))
        matrix = [[c[i] for c in cols] for i in range(lg.l2.ngens)]
        return AbHom.from_matrix(raw.source, lg.l2, matrix)
    return raw


# ---------------------------------------------------------------------------
# products


@dataclass(frozen=True)
class ProductDatum:
    """Exterior products ``K_i(A) ⊗ K_j(B) -> K_{i+j}(A⊗B)``.

    ``pairing[(i, j)][p][q]`` is the coordinate vector of the product of
    generator ``p`` of ``K_i(A)`` with generator ``q`` of ``K_j(B)``. Degrees
    are mod 8; pairs that are never used may be omitted.
    """

    left: GradedKOModule
    right: GradedKOModule
    target: GradedKOModule
    pairing: Mapping[tuple[int, int], Sequence[Sequence[Sequence[int]]]] = field(default_factory=dict)

    def multiply(self, i: int, j: int, a: GroupElement, b: GroupElement) -> GroupElement:
        i, j = i % 8, j % 8
        if (i, j) not in self.pairing:
            target = self.target.group(i + j)
            if self.left.group(i).is_trivial or self.right.group(j).is_trivial or target.is_trivial:
                return target.zero()
            raise MissingDataError(f"no pairing given for degrees ({i}, {j})")
        table = self.pairing[(i, j)]
        target = self.target.group(i + j)
        acc = [0] * target.ngens
        for p, ap in enumerate(a.coords):
            for q, bq in enumerate(b.coords):
                if ap and bq:
                    for t, v in enumerate(table[p][q]):
                        acc[t] += ap * bq * v
        return target.element(acc)


def bilinearity_failures(datum: ProductDatum) -> list[str]:
    """Spot-check that the pairing commutes with eta and x in either slot.

    Only degree pairs whose neighbours are also covered by the pairing can be
    checked; the rest are skipped.
    """
    out = []
    ops = (("eta", 1), ("x", 4))
    for (i, j) in datum.pairing:
        ga, gb = datum.left.group(i), datum.right.group(j)
        for name, step in ops:
            act_l = datum.left.eta_at(i) if step == 1 else datum.left.x_at(i)
            act_r = datum.right.eta_at(j) if step == 1 else datum.right.x_at(j)
            act_t = datum.target.eta_at(i + j) if step == 1 else datum.target.x_at(i + j)
            for a in ga.gens():
                for b in gb.gens():
                    try:
                        base = act_t(datum.multiply(i, j, a, b))
                        left = datum.multiply(i + step, j, act_l(a), b)
                        right = datum.multiply(i, j + step, a, act_r(b))
                    except MissingDataError:
                        continue
                    if left != base:
                        out.append(f"{name} on the left fails at degrees ({i}, {j})")
                    if right != base:
                        out.append(f"{name} on the right fails at degrees ({i}, {j})")
    return sorted(set(out))


@dataclass(frozen=True)
class ProductCell:
    """How the product of slots ``(i, j)`` is formed from the K-theory product."""

    slots: tuple[int, int]
    operation: str
    by_analogy: bool = False


_CELLS = {
    (0, 0): "a*b",
    (0, 1): "a*b",
    (0, 2): "a*b",
    (0, 3): "a*b",
    (1, 1): "x(a*b)",
    (1, 2): "a*b",
    (1, 3): "2(a*b)",
    (2, 2): "half of x(a*b)",
    (2, 3): "half of x(a*b)",
    (3, 3): "2(a*b)",
}


def product_cell(i: int, j: int) -> ProductCell:
    key = tuple(sorted((i % 4, j % 4)))
    return ProductCell(key, _CELLS[key], by_analogy=key == (2, 3))


def _unique_half(c: GroupElement) -> GroupElement:
    halves = all_halves(c)
    if not halves:
        raise HalvingError(f"no half exists for {list(c.coords)}")
    if len(halves) > 1:
        raise HalvingError(
            f"halving ambiguous for {list(c.coords)}: {sorted(list(h.coords) for h in halves)}"
        )
    return next(iter(halves))


def l_product(i: int, j: int, a: GroupElement, b: GroupElement, datum: ProductDatum) -> GroupElement:
    """Product of ``a`` in ``L_i(A)`` and ``b`` in ``L_j(B)``, landing in ``L_{i+j}(A⊗B)``."""
    i, j = i % 4, j % 4
    la, lb, lc = l_groups(datum.left), l_groups(datum.right), l_groups(datum.target)
    ka, kb = la.to_k(i, a), lb.to_k(j, b)
    di, dj = K_DEGREE[i], K_DEGREE[j]
    ab = datum.multiply(di, dj, ka, kb)
    deg = di + dj
    out_slot = (i + j) % 4
    cell = product_cell(i, j)
    if cell.operation == "x(a*b)":
        ab = datum.target.x_at(deg)(ab)
    elif cell.operation == "2(a*b)":
        ab = 2 * ab
    elif cell.operation == "half of x(a*b)":
        # x * beta^-1: degree goes up by 4 and down by 8, i.e. the same index shift as x
        lifted = lc.from_k(out_slot, datum.target.x_at(deg)(ab))
        return _unique_half(lifted)
    return lc.from_k(out_slot, ab)


# ---------------------------------------------------------------------------
# boundary maps into Tate cohomology


def boundary_to_tate(m: GradedKOModule, n: int, d: ComplexificationData | None = None) -> AbHom:
    """The boundary ``L_n(A) -> Ĥ^{n+1}(C_2; K_0(A))`` with trivial action.

    Even ``n`` lands in ``K_0/2``, odd ``n`` in ``K_0[2]``.
    """
    require_valid(m)
    lg = _slots(m)
    r = n % 4
    k0 = m.group(0)
    if r == 0:
        return mod_n(k0, 2)[1]
    if r == 1:
        return AbHom.zero(lg.l1, n_torsion(k0, 2)[0])
    if r == 3:
        tors, incl = n_torsion(k0, 2)
        eta = m.eta_at(7)
        cols = []
        for g in lg.l3.gens():
            pre = incl.preimage(eta(g))
            assert pre is not None  # 2 eta = 0
            cols.append(list(pre.coords))
        return AbHom.from_matrix(lg.l3, tors, [[c[t] for c in cols] for t in range(tors.ngens)])
    if d is None:
        raise MissingDataError("the degree-2 boundary needs complexification data")
    quotient, proj = mod_n(k0, 2)
    u_in, u_out = d.u[6], d.u[0]
    _, ker_u = kernel(u_in)
    if not (proj @ u_out @ ker_u).is_zero():
        raise WoodExactnessError("different lifts along u give different boundary values")
    cols = []
    for g in lg.l2.gens():
        lift = u_in.preimage(lg.incl2(g))
        if lift is None:
            raise WoodExactnessError("an eta-torsion class in K_6 has no lift along u")
        cols.append(list(proj(u_out(lift)).coords))
    return AbHom.from_matrix(lg.l2, quotient, [[c[t] for c in cols] for t in range(quotient.ngens)])


# ---------------------------------------------------------------------------
# free L-groups


@dataclass(frozen=True)
class L2hConstraint:
    """``C[2] -> K_2/eta -> L_2^h -> C/2 -eta-> K_1`` when it does not pin ``L_2^h``.

    ``candidates`` lists the possible isomorphism types; it is only filled in
    when ``C[2] = 0`` (otherwise the first map is not known).
    """

    c_two_torsion: FGAbGroup
    k2_mod_eta: FGAbGroup
    c_mod_two: FGAbGroup
    eta_on_c: AbHom
    candidates: tuple[tuple[int, ...], ...] | None

    @property
    def determined(self) -> FGAbGroup | None:
        if self.candidates is not None and len(self.candidates) == 1:
            return FGAbGroup(self.candidates[0])
        return None


@dataclass(frozen=True)
class FreeLGroups:
    C: FGAbGroup
    c_incl: AbHom
    l1h: FGAbGroup
    l3h: FGAbGroup
    l3h_to_k7: AbHom
    l2h: FGAbGroup | L2hConstraint

    @property
    def l2h_group(self) -> FGAbGroup | None:
        if isinstance(self.l2h, FGAbGroup):
            return self.l2h
        return self.l2h.determined


def free_l_groups(m: GradedKOModule) -> FreeLGroups:
    """L-groups of free modules, from K-data and the unit class."""
    require_valid(m)
    if m.unit is None:
        raise MissingDataError(f"{m.name or 'module'} has no unit class")
    k0, k1 = m.group(0), m.group(1)
    unit_map = AbHom.from_matrix(FGAbGroup.free(1), k0, [[c] for c in m.unit.coords])
    c_group, c_incl = image(unit_map)
    eta_unit = m.eta_at(0)(m.unit)
    l1h, _ = cokernel(AbHom.from_matrix(FGAbGroup.free(1), k1, [[v] for v in eta_unit.coords]))
    fp = fiber_product(m.eta_at(7), c_incl)
    k2_mod_eta, _ = cokernel(m.eta_at(1))
    order = c_group.order
    c2, c2_incl = n_torsion(c_group, 2)
    if (order is not None and order % 2) or (c2.is_trivial and not eta_unit.is_zero()):
        l2h: FGAbGroup | L2hConstraint = k2_mod_eta
    else:
        c_mod2, c_proj = mod_n(c_group, 2)
        # eta on C/2: lift a generator to C, include in K_0, multiply by eta
        eta_c = m.eta_at(0) @ c_incl
        cols = []
        for g in c_mod2.gens():
            pre = c_proj.preimage(g)
            cols.append(list(eta_c(pre).coords))
        eta_on_c = AbHom.from_matrix(c_mod2, k1, [[c[t] for c in cols] for t in range(k1.ngens)])
        candidates = None
        if c2.is_trivial:
            candidates = extensions(kernel(eta_on_c)[0], k2_mod_eta)
        l2h = L2hConstraint(c2, k2_mod_eta, c_mod2, eta_on_c, candidates)
    return FreeLGroups(c_group, c_incl, l1h, fp.group, fp.to_left, l2h)
