import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from kltheory.abelian import (
    AbHom,
    FGAbGroup,
    StructureError,
    WellDefinednessError,
    all_halves,
    canonical_invariants,
    check_exact,
    cokernel,
    determinant,
    fiber_product,
    image,
    kernel,
    matmul,
    mod_n,
    n_torsion,
    render_group,
    smith_normal_form,
)

from conftest import finite_groups, finite_homs, group_counts, homs, image_set, kernel_set

Z, Z2, Z3, Z4 = FGAbGroup.free(1), FGAbGroup.cyclic(2), FGAbGroup.cyclic(3), FGAbGroup.cyclic(4)


def hom(src, tgt, m):
    return AbHom.from_matrix(src, tgt, m)


# --- Smith normal form ------------------------------------------------------

def test_snf_diag_2_3():
    s = smith_normal_form([[2, 0], [0, 3]])
    assert s.diagonal == [1, 6]


def test_snf_zero_matrix():
    s = smith_normal_form([[0]])
    assert s.S == [[0]] and s.U == [[1]] and s.V == [[1]]


def test_snf_identity():
    for n in range(1, 5):
        eye = [[int(i == j) for j in range(n)] for i in range(n)]
        assert smith_normal_form(eye).S == eye


matrices = st.integers(1, 8).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.lists(st.lists(st.integers(-50, 50), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_round_trip(m):
    s = smith_normal_form(m)
    assert matmul(matmul(s.U, m), s.V) == s.S
    assert abs(determinant(s.U)) == 1 and abs(determinant(s.V)) == 1
    assert matmul(s.U, s.U_inv) == [[int(i == j) for j in range(len(m))] for i in range(len(m))]
    d = s.diagonal
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    for i, row in enumerate(s.S):
        for j, v in enumerate(row):
            if i != j:
                assert v == 0


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_sympy(m):
    ours = [x for x in smith_normal_form(m).diagonal if x]
    theirs = [abs(int(x)) for x in invariant_factors(Matrix(m), domain=ZZ) if x]
    assert ours == theirs


# --- groups -----------------------------------------------------------------

def test_value_one_forbidden():
    with pytest.raises(ValueError):
        FGAbGroup((1,))


def test_canonical_form_and_rendering():
    assert canonical_invariants((2, 3)) == (6,)
    assert canonical_invariants((0, 4, 2)) == (2, 4, 0)
    assert render_group((2, 4, 0, 0)) == "Z^2 ⊕ Z/2 ⊕ Z/4"
    assert render_group(()) == "0"


@given(st.lists(st.sampled_from([0, 2, 3, 4, 6, 8, 9, 12]), max_size=4))
def test_canonical_idempotent(invs):
    once = canonical_invariants(invs)
    assert canonical_invariants(once) == once


def test_element_coords_reduced():
    g = FGAbGroup((4, 0))
    assert g.element([7, -3]).coords == (3, -3)
    assert (3 * g.element([1, 1])).coords == (3, 3)


def test_ill_defined_hom_rejected():
    with pytest.raises(WellDefinednessError):
        hom(Z2, Z, [[1]])
    with pytest.raises(WellDefinednessError):
        hom(Z2, Z4, [[1]])
    hom(Z2, Z4, [[2]])


def test_compose_mismatch():
    with pytest.raises(StructureError):
        hom(Z, Z2, [[1]]) @ hom(Z, Z4, [[1]])


# --- kernel / cokernel examples ---------------------------------------------

def test_kernel_examples():
    k, _ = kernel(hom(Z, Z, [[2]]))
    assert k.iso_type == ()
    k, inc = kernel(hom(Z4, Z4, [[2]]))
    assert k.iso_type == (2,) and inc.matrix == ((2,),)
    k, inc = kernel(hom(Z, Z2, [[1]]))
    assert k.iso_type == (0,) and inc.matrix == ((2,),)


def test_cokernel_examples():
    assert cokernel(hom(Z, Z, [[2]]))[0].iso_type == (2,)
    assert cokernel(AbHom.zero(Z2, Z4))[0].iso_type == (4,)
    assert cokernel(hom(Z4, Z4, [[2]]))[0].iso_type == (2,)


def test_torsion_and_mod_examples():
    assert n_torsion(Z4, 2)[0].iso_type == (2,)
    assert n_torsion(Z, 2)[0].iso_type == ()
    assert n_torsion(FGAbGroup((2, 3)), 2)[0].iso_type == (2,)
    assert mod_n(Z, 2)[0].iso_type == (2,)
    assert mod_n(Z3, 2)[0].iso_type == ()
    assert mod_n(Z4, 2)[0].iso_type == (2,)


def test_fiber_product_examples():
    fp = fiber_product(AbHom.identity(Z), AbHom.identity(Z))
    assert fp.group.iso_type == (0,)
    assert fp.to_left.matrix == fp.to_right.matrix
    fp = fiber_product(hom(Z, Z, [[2]]), AbHom.zero(FGAbGroup(), Z))
    assert fp.group.iso_type == ()
    fp = fiber_product(hom(Z, Z2, [[1]]), hom(Z, Z2, [[1]]))
    assert fp.group.iso_type == (0, 0)


def test_check_exact_examples():
    z0 = FGAbGroup()
    seq = [AbHom.zero(z0, Z), hom(Z, Z, [[2]]), hom(Z, Z2, [[1]]), AbHom.zero(Z2, z0)]
    assert check_exact(seq).exact
    bad = [AbHom.zero(z0, Z), hom(Z, Z, [[2]]), AbHom.zero(Z, Z2), AbHom.zero(Z2, z0)]
    rep = check_exact(bad)
    assert not rep.exact
    assert rep.position == 2 and list(rep.witness.coords) == [1]


def test_check_exact_not_composable():
    with pytest.raises(StructureError):
        check_exact([hom(Z, Z, [[1]]), hom(Z2, Z2, [[1]])])


def test_all_halves_examples():
    assert {h.coords for h in all_halves(Z.element([2]))} == {(1,)}
    assert all_halves(Z.element([1])) == set()
    assert {h.coords for h in all_halves(Z2.zero())} == {(0,), (1,)}


# --- brute-force agreement on finite groups ---------------------------------

def _exp(*gs):
    e = 1
    for g in gs:
        for d in g.invariants:
            e = max(e, d)
    return max(e, 1) * 2


@settings(max_examples=120, deadline=None)
@given(finite_homs())
def test_kernel_matches_enumeration(f):
    k, inc = kernel(f)
    assert inc.is_injective()
    assert image_set(inc) == kernel_set(f)
    assert (f @ inc).is_zero()
    assert k.is_canonical


@settings(max_examples=120, deadline=None)
@given(finite_homs())
def test_cokernel_matches_enumeration(f):
    q, proj = cokernel(f)
    assert proj.is_surjective()
    im = image_set(f)
    assert kernel_set(proj) == im
    assert q.order * len(im) == f.target.order


@settings(max_examples=120, deadline=None)
@given(finite_homs())
def test_image_matches_enumeration(f):
    g, inc = image(f)
    assert inc.is_injective() and image_set(inc) == image_set(f)


@settings(max_examples=100, deadline=None)
@given(finite_groups(), st.integers(1, 12))
def test_torsion_and_mod_match_enumeration(g, n):
    t, inc = n_torsion(g, n)
    assert image_set(inc) == {e.coords for e in g.elements() if (n * e).is_zero()}
    q, proj = mod_n(g, n)
    assert kernel_set(proj) == {(n * e).coords for e in g.elements()}
    assert proj.is_surjective()


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_fiber_product_universal(data):
    a = data.draw(finite_groups(12))
    b = data.draw(finite_groups(12))
    c = data.draw(finite_groups(12))
    f = data.draw(homs(a, c))
    g = data.draw(homs(b, c))
    fp = fiber_product(f, g)
    pairs = {(fp.to_left(e).coords, fp.to_right(e).coords) for e in fp.group.elements()}
    want = {(x.coords, y.coords) for x in a.elements() for y in b.elements() if f(x) == g(y)}
    assert pairs == want
    assert len(want) == fp.group.order  # the pair of projections is injective


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_check_exact_matches_enumeration(data):
    a = data.draw(finite_groups(12))
    b = data.draw(finite_groups(12))
    c = data.draw(finite_groups(12))
    f = data.draw(homs(a, b))
    g = data.draw(homs(b, c))
    rep = check_exact([f, g])
    assert rep.exact == (image_set(f) == kernel_set(g))
    if not rep.exact:
        w = rep.witness.coords
        assert (w in image_set(f)) != (w in kernel_set(g))


@settings(max_examples=60, deadline=None)
@given(finite_homs(24))
def test_kernel_cokernel_sequence_exact(f):
    k, inc = kernel(f)
    q, proj = cokernel(f)
    assert check_exact([inc, f, proj]).exact


@settings(max_examples=60, deadline=None)
@given(finite_groups(36))
def test_iso_type_by_element_orders(g):
    assert group_counts(g, _exp(g)) == group_counts(FGAbGroup(g.iso_type), _exp(g))
