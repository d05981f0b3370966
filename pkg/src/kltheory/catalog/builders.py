"""K-theory data of the builtin algebras and the cofiber fixtures."""

from __future__ import annotations

from ..abelian import AbHom, FGAbGroup
from ..komodule import (
    ComplexificationData,
    DegreeConstraint,
    GradedKOModule,
    GradedKUModule,
    cofiber_constraints,
    complex_numbers,
    direct_sum,
    direct_sum_complexification,
    ko,
    ksp,
    multiplication_maps,
    shift,
    shift_complexification,
)
from ..ltheory import ProductDatum

Z = FGAbGroup((0,))


# ---------------------------------------------------------------------------
# complexification data


def real_complex() -> ComplexificationData:
    """R with R_C = C."""
    return ComplexificationData.build(
        ko(), GradedKUModule(Z, FGAbGroup(), "C"), c={0: 1, 4: 2}, u={0: 2, 2: 1, 4: 1}
    )


def complex_complex() -> ComplexificationData:
    """C as a real algebra; C ⊗ C = C × C, with c diagonal up to the conjugation sign."""
    z2 = FGAbGroup((0, 0))
    c, u = {}, {}
    for n in range(0, 8, 2):
        sign = (-1) ** (n // 2)
        c[n] = [[1], [sign]]
        u[n] = [[1, sign]]
    return ComplexificationData.build(complex_numbers(), GradedKUModule(z2, FGAbGroup(), "C×C"), c, u)


def quaternion_complex() -> ComplexificationData:
    d = shift_complexification(real_complex(), 4)
    return d.with_real(ksp())


def shifted_real_complex(n: int) -> ComplexificationData:
    d = shift_complexification(real_complex(), n)
    return d.with_real(d.real.renamed(f"R[{n % 8}]"))


def sum_complex(parts: list[ComplexificationData], unit: tuple[int, ...] | None, name: str) -> ComplexificationData:
    out = parts[0]
    for p in parts[1:]:
        out = direct_sum_complexification(out, p)
    return out.with_real(out.real.with_unit(unit).renamed(name))


def real_sum(shifts: list[int], name: str) -> ComplexificationData:
    """Direct sum of shifted copies of R; the unit sits in the unshifted summands' first copy."""
    parts = [shifted_real_complex(s) for s in shifts]
    d = sum_complex(parts, None, name)
    k0 = d.real.group(0)
    unit = [0] * k0.ngens
    if 0 in [s % 8 for s in shifts]:
        offset = 0
        for s in shifts:
            if s % 8 == 0:
                unit[offset] = 1
                break
            offset += shift(ko(), s).group(0).ngens
        return d.with_real(d.real.with_unit(unit))
    return d


# ---------------------------------------------------------------------------
# modules


def circle() -> ComplexificationData:
    return real_sum([0, -1], "C(T)")


def free_group(n: int) -> ComplexificationData:
    return real_sum([0] + [1] * n, f"C*F_{n}")


def surface_group(g: int) -> ComplexificationData:
    return real_sum([0] + [1] * (2 * g) + [2], f"C*π_1(Σ_{g})")


def coxeter(r: int) -> ComplexificationData:
    return real_sum([0] * r, f"C*W(r={r})")


def rotation_algebra() -> ComplexificationData:
    return real_sum([0, 0, -1, 1], "A_θ")


def cuntz_odd(n: int) -> ComplexificationData:
    """O_{n+1} for odd n: ko/n has Z/n in degrees 0 and 4."""
    zn = (n,) if n > 1 else ()
    m = GradedKOModule.build(
        [zn, (), (), (), zn, (), (), ()], x={0: 1, 4: 4}, unit=(1,) if n > 1 else (), name=f"O_{n + 1}"
    )
    ku = GradedKUModule(FGAbGroup(zn), FGAbGroup(), f"O^C_{n + 1}")
    return ComplexificationData.build(m, ku, c={0: 1, 4: 2}, u={0: 2, 4: 1})


def cuntz_two() -> GradedKOModule:
    """O_3: ko/2 with the degree-2 extension Z/4."""
    return GradedKOModule.build(
        [(2,), (2,), (4,), (2,), (2,), (), (), ()],
        eta={0: 1, 1: 2, 2: 1, 3: 1},
        x={0: 1},
        unit=(1,),
        name="O_3",
    )


def e_module(n: int, eta6: int) -> GradedKOModule:
    """ko/nx with the given eta on degree 6 (0 or 1)."""
    zn = (n,) if n > 1 else ()
    return GradedKOModule.build(
        [(4 * n,), (2,), (2,), (), zn, (), (2,), (2,)],
        eta={0: 1, 1: 1, 6: eta6, 7: 2 * n},
        x={0: 1, 4: 4},
        unit=(1,),
        name=f"E_{2 * n}" if eta6 == 0 else f"E_{2 * n}-wood",
    )


def e_wood_complex(n: int) -> ComplexificationData:
    m = e_module(n, 1)
    ku = GradedKUModule(FGAbGroup((2 * n,)), FGAbGroup(), f"O^C_{2 * n + 1}")
    return ComplexificationData.build(m, ku, c={0: 1, 4: 2, 6: n}, u={0: 2, 2: 1, 4: 1})


def complex_cuntz_three() -> ComplexificationData:
    """O^C_3 as a real algebra: Z/2 in even degrees, complexification O^C_3 × O^C_3."""
    m = GradedKOModule.build([(2,), (), (2,), (), (2,), (), (2,), ()], unit=(1,), name="O^C_3")
    ku = GradedKUModule(FGAbGroup((2, 2)), FGAbGroup(), "O^C_3×O^C_3")
    c = {n: [[1], [1]] for n in range(0, 8, 2)}
    u = {n: [[1, 1]] for n in range(0, 8, 2)}
    return ComplexificationData.build(m, ku, c, u)


# ---------------------------------------------------------------------------
# cofiber fixtures


def ko_mod_n_constraints(n: int) -> list[DegreeConstraint]:
    return cofiber_constraints(multiplication_maps(ko(), n))


def ko_mod_nx_constraints(n: int) -> list[DegreeConstraint]:
    """Cofiber of n·x: Σ⁴ko -> ko, degree by degree."""
    k = ko()
    return cofiber_constraints([n * k.x_at(i - 4) for i in range(8)])


def ksp_constraints() -> list[DegreeConstraint]:
    """Cofiber of an extension of eta over Σko/2, with ko/2 pinned to its known groups."""
    k = ko()
    mod2 = cuntz_two()
    maps = []
    for i in range(8):
        src = mod2.group(i - 1)
        if i in (1, 2):
            maps.append(AbHom.from_matrix(src, k.group(i), [[1]]))
        else:
            maps.append(AbHom.zero(src, k.group(i)))
    return cofiber_constraints(maps)


def stem_constraints() -> list[DegreeConstraint]:
    """ΣS/2 -> Σ^∞BC_2 in degrees -1..3: iso, iso, then Z/4 -> Z/8 injective."""
    src = [(), (), (2,), (2,), (4,)]
    tgt = [(), (), (2,), (2,), (8,)]
    mats = [None, None, [[1]], [[1]], [[2]]]
    maps = []
    for s, t, mat in zip(src, tgt, mats):
        gs, gt = FGAbGroup(s), FGAbGroup(t)
        maps.append(AbHom.zero(gs, gt) if mat is None else AbHom.from_matrix(gs, gt, mat))
    return cofiber_constraints(maps, start=-1, periodic=False)


def lc_mod_two_constraints() -> list[DegreeConstraint]:
    pattern = [FGAbGroup((0,)), FGAbGroup(), FGAbGroup((0,)), FGAbGroup()]
    return cofiber_constraints([AbHom.scalar(g, 2) for g in pattern])


# ---------------------------------------------------------------------------
# products


def ko_pairing_table(i: int, j: int) -> list[list[list[int]]] | None:
    """Products of the standard generators 1, η, η², x of π*(ko), degrees mod 8."""
    k = ko()
    a, b, t = k.group(i), k.group(j), k.group(i + j)
    if a.is_trivial or b.is_trivial:
        return None
    i, j = i % 8, j % 8
    if i > j:
        i, j = j, i
    if i == 0:
        value = [1] if not t.is_trivial else []
    elif (i, j) == (1, 1):
        value = [1]
    elif (i, j) == (4, 4):
        value = [4]
    else:
        value = [0] * t.ngens
    return [[value]]


def ko_self_pairing() -> ProductDatum:
    k = ko()
    table = {}
    for i in range(8):
        for j in range(8):
            t = ko_pairing_table(i, j)
            if t is not None:
                table[(i, j)] = t
    return ProductDatum(k, k, k, table)


def quaternion_pairing() -> ProductDatum:
    """K(H) ⊗ K(H) -> K(H ⊗ H) = K(M_4(R)), via K_i(H) = K_{i-4}(R)."""
    h = ksp()
    table = {}
    for i in range(8):
        for j in range(8):
            t = ko_pairing_table(i - 4, j - 4)
            if t is not None:
                table[(i, j)] = t
    return ProductDatum(h, h, ko(), table)


def complex_pairing() -> ProductDatum:
    """K(C) ⊗ K(C) -> K(C × C): β^a ⊗ β^b ↦ (1, (-1)^b)."""
    c = complex_numbers()
    target = direct_sum(c, c, "C×C")
    table = {}
    for i in range(0, 8, 2):
        for j in range(0, 8, 2):
            table[(i, j)] = [[[1, (-1) ** (j // 2)]]]
    return ProductDatum(c, c, target, table)
