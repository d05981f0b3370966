from __future__ import annotations

from math import gcd, prod

from hypothesis import strategies as st

from kltheory.abelian import AbHom, FGAbGroup, GroupElement
from kltheory.catalog import builders
from kltheory.komodule import GradedKOModule, complex_numbers, direct_sum_all, ko, ksp, shift


# --- finite abelian groups and homs -----------------------------------------

@st.composite
def finite_invariants(draw, max_order: int = 36, max_factors: int = 3):
    """Invariant lists (not necessarily canonical) of a finite group of bounded order."""
    out: list[int] = []
    for _ in range(draw(st.integers(0, max_factors))):
        room = max_order // max(prod(out), 1)
        if room < 2:
            break
        out.append(draw(st.integers(2, room)))
    return tuple(out)


def finite_groups(max_order: int = 36):
    return finite_invariants(max_order).map(FGAbGroup)


@st.composite
def homs(draw, source: FGAbGroup, target: FGAbGroup):
    """A random well-defined hom: entry (i, j) is a multiple of t_i / gcd(s_j, t_i)."""
    matrix = []
    for t in target.invariants:
        row = []
        for s in source.invariants:
            if t == 0:
                step = 0 if s != 0 else 1
            else:
                step = t // gcd(s, t) if s != 0 else 1
            if step == 0:
                row.append(0)
            else:
                bound = (t if t else 7) // step + 1
                row.append(step * draw(st.integers(-bound, bound)))
        matrix.append(row)
    return AbHom.from_matrix(source, target, matrix)


@st.composite
def finite_homs(draw, max_order: int = 36):
    a = draw(finite_groups(max_order))
    b = draw(finite_groups(max_order))
    return draw(homs(a, b))


@st.composite
def elements(draw, g: FGAbGroup):
    coords = [draw(st.integers(0, d - 1)) if d else draw(st.integers(-9, 9)) for d in g.invariants]
    return g.element(coords)


# --- brute force ------------------------------------------------------------

def element_set(g: FGAbGroup) -> set[tuple[int, ...]]:
    return {e.coords for e in g.elements()}


def killed_counts(elements_: set, add, zero, exponent: int) -> list[int]:
    """``#{g : k g = 0}`` for ``k = 1..exponent``; pins down a finite abelian group."""
    counts = []
    for k in range(1, exponent + 1):
        n = 0
        for e in elements_:
            acc = zero
            for _ in range(k):
                acc = add(acc, e)
            n += acc == zero
        counts.append(n)
    return counts


def group_counts(g: FGAbGroup, exponent: int) -> list[int]:
    return killed_counts(
        element_set(g), lambda a, b: g.element([x + y for x, y in zip(a, b)]).coords, g.zero().coords, exponent
    )


def image_set(f: AbHom) -> set[tuple[int, ...]]:
    return {f(e).coords for e in f.source.elements()}


def kernel_set(f: AbHom) -> set[tuple[int, ...]]:
    return {e.coords for e in f.source.elements() if f(e).is_zero()}


# --- random valid KO-modules ------------------------------------------------

def _eta_chain(length: int) -> GradedKOModule:
    groups = [(2,) if i < length else () for i in range(8)]
    return GradedKOModule.build(groups, eta={i: 1 for i in range(length - 1)}, name=f"eta-chain{length}")


def _torsion_spot(d: int) -> GradedKOModule:
    return GradedKOModule.build([(d,)] + [()] * 7, name=f"Z/{d}")


BLOCKS: list[GradedKOModule] = [
    ko(),
    ksp(),
    complex_numbers(),
    builders.cuntz_odd(3).real,
    builders.cuntz_odd(5).real,
    builders.cuntz_two(),
    builders.e_module(1, 0),
    builders.e_module(2, 0),
    builders.e_wood_complex(1).real,
    builders.complex_cuntz_three().real,
    _eta_chain(2),
    _eta_chain(3),
    _torsion_spot(2),
    _torsion_spot(4),
]


def _torsion_order(g: FGAbGroup) -> int:
    return prod(g.torsion) if g.torsion else 1


@st.composite
def ko_modules(draw, max_torsion: int = 64, max_blocks: int = 3):
    """Direct sums of shifted building blocks; every result satisfies the ring relations."""
    parts = []
    for _ in range(draw(st.integers(1, max_blocks))):
        block = draw(st.sampled_from(BLOCKS))
        parts.append(shift(block, draw(st.integers(0, 7))).with_unit(None))
    m = direct_sum_all(parts, "random")
    if any(_torsion_order(g) > max_torsion for g in m.groups):
        # drop blocks until the size bound holds; a single block always fits
        m = parts[0]
    return m


def as_element(g: FGAbGroup, coords) -> GroupElement:
    return g.element(coords)


# --- acceptance summary -----------------------------------------------------

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
