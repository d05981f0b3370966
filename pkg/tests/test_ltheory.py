import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kltheory.abelian import AbHom, FGAbGroup, cokernel
from kltheory.catalog import builders
from kltheory.komodule import (
    ComplexificationData,
    GradedKOModule,
    GradedKUModule,
    MissingDataError,
    RelationError,
    direct_sum,
    ko,
    ksp,
    shift,
)
from kltheory.ltheory import (
    HalvingError,
    L2hConstraint,
    _unique_half,
    alt_l12,
    bilinearity_failures,
    boundary_to_tate,
    free_l_groups,
    l_groups,
    l_product,
    product_cell,
    tau_map,
)

from conftest import ko_modules


def lt(m):
    return [g.iso_type for g in l_groups(m).slots]


# --- l_groups ---------------------------------------------------------------

def test_l_of_reals():
    assert lt(ko()) == [(0,), (), (), ()]


def test_l_of_quaternions():
    assert lt(ksp()) == [(0,), (), (2,), ()]


def test_l_of_shifts_six_and_seven():
    assert lt(shift(ko(), 6)) == [(2,), (), (0,), (2,)]
    assert lt(shift(ko(), 7)) == [(2,), (), (), (0,)]


def test_l_of_zero_module():
    assert lt(GradedKOModule.zero()) == [(), (), (), ()]


def test_l_groups_rejects_invalid():
    bad = GradedKOModule.build([(0,), (), (), (), (0,), (), (), ()], x={0: 1, 4: 2})
    with pytest.raises(RelationError):
        l_groups(bad)


@settings(max_examples=60, deadline=None)
@given(ko_modules())
def test_l0_and_l3_are_k_groups(m):
    lg = l_groups(m)
    assert lg.l0.iso_type == m.groups[0].iso_type
    assert lg.l3.iso_type == m.groups[7].iso_type


@settings(max_examples=60, deadline=None)
@given(ko_modules(max_blocks=2), ko_modules(max_blocks=2))
def test_l_groups_additive(a, b):
    s = lt(direct_sum(a, b))
    for slot, x, y in zip(s, lt(a), lt(b)):
        assert slot == FGAbGroup(x + y).iso_type


@settings(max_examples=60, deadline=None)
@given(ko_modules())
def test_shift_by_eight_is_identity_on_l(m):
    assert lt(shift(m, 8)) == lt(m)


# --- alt_l12 ----------------------------------------------------------------

def test_alt_reals():
    a1, a2 = alt_l12(builders.real_complex())
    assert (a1.iso_type, a2.iso_type) == ((), ())


def test_alt_complex():
    a1, a2 = alt_l12(builders.complex_complex())
    assert (a1.iso_type, a2.iso_type) == ((), (0,))


def test_alt_zero():
    d = ComplexificationData.build(GradedKOModule.zero(), GradedKUModule(FGAbGroup(), FGAbGroup()))
    a1, a2 = alt_l12(d)
    assert a1.is_trivial and a2.is_trivial


# --- tau --------------------------------------------------------------------

@pytest.mark.parametrize("n,scalar", [(0, 1), (4, 8), (8, 16), (12, 128), (16, 256)])
def test_tau_on_ko(n, scalar):
    t = tau_map(ko(), n)
    assert t.matrix == ((scalar,),)


@settings(max_examples=40, deadline=None)
@given(ko_modules())
def test_tau_degree_one_is_projection(m):
    proj = cokernel(m.eta_at(0))[1]
    assert tau_map(m, 1) == proj


def test_tau_negative_degree():
    with pytest.raises(ValueError):
        tau_map(ko(), -1)


@settings(max_examples=40, deadline=None)
@given(ko_modules(), st.integers(0, 16))
def test_tau_defined_on_valid_modules(m, n):
    t = tau_map(m, n)
    assert t.source == m.group(n)
    assert t.target == l_groups(m).slot(n % 4)


def test_tau_multiplicative_on_reals():
    pairing = builders.ko_self_pairing()
    m = ko()
    checked = 0
    for p in range(9):
        for q in range(9):
            for a in m.group(p).gens():
                for b in m.group(q).gens():
                    lhs = l_product(p, q, tau_map(m, p)(a), tau_map(m, q)(b), pairing)
                    rhs = tau_map(m, p + q)(pairing.multiply(p, q, a, b))
                    assert lhs == rhs, (p, q)
                    checked += 1
    assert checked == 25


# --- products ---------------------------------------------------------------

def test_product_unit_law():
    p = builders.ko_self_pairing()
    one = l_groups(ko()).l0.element([1])
    assert l_product(0, 0, one, one, p).coords == (1,)


def test_product_in_trivial_slots():
    p = builders.ko_self_pairing()
    z = l_groups(ko()).l2.zero()
    assert l_product(2, 2, z, z, p).is_zero()


def test_quaternion_product_cell_two_two():
    p = builders.quaternion_pairing()
    lh = l_groups(ksp())
    a = b = lh.l2.gens()[0]
    got = l_product(2, 2, a, b, p)
    # oracle: x·(a*b) in K_4 of the target, read in L_0, then every half by search
    ka, kb = lh.to_k(2, a), lh.to_k(2, b)
    ab = p.multiply(6, 6, ka, kb)
    c = p.target.x_at(12)(ab)
    halves = [d for d in range(-50, 51) if 2 * d == c.coords[0]]
    assert len(halves) == 1
    assert got.coords == (halves[0],)


def test_pairings_are_bilinear():
    for p in (builders.ko_self_pairing(), builders.quaternion_pairing(), builders.complex_pairing()):
        assert bilinearity_failures(p) == []


def test_cell_two_three_flagged():
    assert product_cell(2, 3).by_analogy and product_cell(3, 2).by_analogy
    assert not product_cell(2, 2).by_analogy


def test_halving_ambiguity_reported():
    with pytest.raises(HalvingError, match="ambiguous"):
        _unique_half(FGAbGroup.cyclic(2).zero())
    with pytest.raises(HalvingError, match="no half"):
        _unique_half(FGAbGroup.free(1).element([1]))


def test_missing_pairing():
    p = builders.ko_self_pairing()
    one = ko().group(0).element([1])
    bare = type(p)(p.left, p.right, p.target, {})
    with pytest.raises(MissingDataError):
        bare.multiply(0, 0, one, one)


# --- boundary maps ----------------------------------------------------------

def test_boundary_even_zero_is_mod_two():
    b = boundary_to_tate(ko(), 0)
    assert b.target.iso_type == (2,) and b.matrix == ((1,),)


def test_boundary_odd_one_is_zero():
    for m in (ko(), ksp(), builders.cuntz_two()):
        assert boundary_to_tate(m, 1).is_zero()


def test_boundary_three_on_shifted_reals():
    m = shift(ko(), 7)
    b = boundary_to_tate(m, 3)
    assert not b.is_zero()
    assert b == m.eta_at(7)


def test_boundary_two_needs_complex_data():
    with pytest.raises(MissingDataError):
        boundary_to_tate(ksp(), 2)


def test_boundary_two_on_quaternions():
    # K_6(H) = Z/2 lifts to 1 in K_6(H_C) = Z, u in degree 0 sends it to 1, and 1 is odd
    d = builders.quaternion_complex()
    b = boundary_to_tate(d.real, 2, d)
    assert b.source.iso_type == (2,) and b.target.iso_type == (2,)
    assert b.matrix == ((1,),)


@pytest.mark.parametrize("data", [builders.real_complex, builders.circle, lambda: builders.e_wood_complex(2)])
def test_boundary_two_lift_independent(data):
    d = data()
    boundary_to_tate(d.real, 2, d)  # raises if two lifts disagree mod 2


# --- free L-groups ----------------------------------------------------------

def test_free_l_of_reals():
    f = free_l_groups(ko())
    assert f.C.iso_type == (0,)
    assert f.l1h.is_trivial and f.l3h.is_trivial
    assert f.l2h_group is not None and f.l2h_group.is_trivial


def test_free_l_of_complex_cuntz_three():
    f = free_l_groups(builders.complex_cuntz_three().real)
    assert f.C.iso_type == (2,)
    assert f.l1h.is_trivial and f.l3h.is_trivial


def test_free_l_with_zero_unit():
    m = ko().with_unit([0])
    f = free_l_groups(m)
    assert f.C.is_trivial
    assert f.l1h.iso_type == m.groups[1].iso_type
    assert f.l3h.is_trivial
    assert f.l2h_group.iso_type == cokernel(m.eta_at(1))[0].iso_type


def test_free_l_quaternions_constraint_record():
    f = free_l_groups(ksp())
    assert isinstance(f.l2h, L2hConstraint)
    assert f.l2h.candidates == ((2,),)
    assert f.l2h_group.iso_type == (2,)


def test_free_l_needs_unit():
    with pytest.raises(MissingDataError):
        free_l_groups(ko().with_unit(None))


@settings(max_examples=40, deadline=None)
@given(ko_modules(max_blocks=2), st.data())
def test_l3h_embeds_in_k7(m, data):
    k0 = m.groups[0]
    coords = [data.draw(st.integers(0, d - 1)) if d else data.draw(st.integers(-3, 3)) for d in k0.invariants]
    f = free_l_groups(m.with_unit(coords))
    assert f.l3h_to_k7.is_injective()
    assert f.C.ngens <= 1
