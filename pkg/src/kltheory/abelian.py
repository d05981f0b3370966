"""Finitely generated abelian groups and homomorphisms between them.

A group is a direct sum of cyclic factors with a fixed generator list. The
factor ``0`` stands for an infinite cyclic summand, ``d >= 2`` for ``Z/d``.
A homomorphism is an integer matrix whose ``j``-th column is the image of
the ``j``-th source generator, written in target generators.

Subgroups and quotients are always returned together with the hom that
relates them to the ambient group, so that results can be composed further.
Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

Matrix = list[list[int]]


class WellDefinednessError(ValueError):
    """A matrix does not define a homomorphism between the given groups."""


class StructureError(ValueError):
    """Homs that should compose do not (mismatched source/target)."""


# ---------------------------------------------------------------------------
# matrix helpers


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Product of integer matrices; ``b`` must have at least one row."""
    n = len(b[0])
    k = len(b)
    out = zeros(len(a), n)
    for i, row in enumerate(a):
        out_row = out[i]
        for t in range(k):
            c = row[t]
            if c:
                brow = b[t]
                for j in range(n):
                    out_row[j] += c * brow[j]
    return out


def matvec(a: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(c * x for c, x in zip(row, v)) for row in a]


def transpose(a: Matrix, cols: int | None = None) -> Matrix:
    n = len(a[0]) if a else (cols or 0)
    return [[row[j] for row in a] for j in range(n)]


def column(a: Matrix, j: int) -> list[int]:
    return [row[j] for row in a]


def hstack(*blocks: Matrix, rows: int) -> Matrix:
    out = [[] for _ in range(rows)]
    for blk in blocks:
        for i in range(rows):
            out[i].extend(blk[i] if blk else [])
    return out


def determinant(a: Matrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal.

    ``U_inv`` is the inverse of ``U``; its columns are the generators a
    quotient ``Z^m / im(M)`` is expressed in.
    """

    U: Matrix
    S: Matrix
    V: Matrix
    U_inv: Matrix

    @property
    def diagonal(self) -> list[int]:
        rows = len(self.S)
        cols = len(self.S[0]) if self.S else 0
        return [self.S[i][i] for i in range(min(rows, cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(m: Matrix, cols: int | None = None) -> SmithForm:
    """Smith normal form with transforms.

    Pivoting always picks the nonzero entry of smallest absolute value in the
    remaining block, scanning rows then columns, so the result is
    deterministic. ``cols`` is only needed for matrices with zero rows.
    """
    rows = len(m)
    ncols = len(m[0]) if m else (cols or 0)
    a = [list(r) for r in m]
    U = identity_matrix(rows)
    U_inv = identity_matrix(rows)
    V = identity_matrix(ncols)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            a[i], a[j] = a[j], a[i]
            U[i], U[j] = U[j], U[i]
            for r in U_inv:
                r[i], r[j] = r[j], r[i]

    def add_row(dst: int, src: int, c: int) -> None:
        # row_dst += c * row_src
        if c:
            a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
            U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]
            for r in U_inv:
                r[src] -= c * r[dst]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]
        for r in U_inv:
            r[i] = -r[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_col(dst: int, src: int, c: int) -> None:
        if c:
            for r in a:
                r[dst] += c * r[src]
            for r in V:
                r[dst] += c * r[src]

    t = 0
    while t < min(rows, ncols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, ncols):
                v = a[i][j]
                if v and (pivot is None or abs(v) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a remainder survived: move the smallest one into the pivot slot
                best = (t, t)
                for i in range(t, rows):
                    if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t, ncols):
                    if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                        best = (t, j)
                swap_rows(t, best[0])
                swap_cols(t, best[1])
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    return SmithForm(U=U, S=a, V=V, U_inv=U_inv)


def integer_kernel(m: Matrix, cols: int) -> Matrix:
    """Basis (as columns) of ``{x in Z^cols : m x = 0}``."""
    snf = smith_normal_form(m, cols=cols)
    r = snf.rank
    return [row[r:] for row in snf.V]


def solve_integer(m: Matrix, b: Sequence[int], cols: int) -> list[int] | None:
    """Some integer ``x`` with ``m x = b``, or ``None`` if there is none."""
    snf = smith_normal_form(m, cols=cols)
    ub = matvec(snf.U, b)
    diag = snf.diagonal
    y = [0] * cols
    for i, v in enumerate(ub):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if v != 0:
                return None
        else:
            if v % d:
                return None
            y[i] = v // d
    return matvec(snf.V, y)


# ---------------------------------------------------------------------------
# groups and elements


@dataclass(frozen=True)
class FGAbGroup:
    """Direct sum of cyclic groups ``Z/d`` (``d = 0`` meaning ``Z``).

    Equality compares the generator lists; use :meth:`isomorphic` or
    :attr:`iso_type` to compare up to isomorphism.
    """

    invariants: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        inv = tuple(int(d) for d in self.invariants)
        for d in inv:
            if d < 0 or d == 1:
                raise ValueError(f"invalid cyclic factor {d}: use 0 for Z or d >= 2")
        object.__setattr__(self, "invariants", inv)

    @classmethod
    def free(cls, rank: int) -> FGAbGroup:
        return cls((0,) * rank)

    @classmethod
    def cyclic(cls, d: int) -> FGAbGroup:
        return cls(() if d == 1 else (d,))

    @classmethod
    def trivial(cls) -> FGAbGroup:
        return cls(())

    @property
    def ngens(self) -> int:
        return len(self.invariants)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariants if d == 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariants if d)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.invariants) if self.is_finite else None

    @property
    def is_trivial(self) -> bool:
        return not self.invariants

    @property
    def is_canonical(self) -> bool:
        return self.invariants == self.iso_type

    @property
    def iso_type(self) -> tuple[int, ...]:
        """Invariant factors ``d1 | d2 | ... | dk`` followed by the zeros."""
        return canonical_invariants(self.invariants)

    def isomorphic(self, other: FGAbGroup) -> bool:
        return self.iso_type == other.iso_type

    def canonical(self) -> tuple[FGAbGroup, AbHom]:
        """The canonical form together with an isomorphism ``self -> canonical``."""
        q, proj = cokernel(AbHom.zero(FGAbGroup(), self))
        return q, proj

    def element(self, coords: Iterable[int]) -> GroupElement:
        return GroupElement(self, tuple(coords))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.ngens)

    def gens(self) -> list[GroupElement]:
        return [self.element(int(i == j) for j in range(self.ngens)) for i in range(self.ngens)]

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.ngens:
            raise ValueError(f"expected {self.ngens} coordinates, got {len(coords)}")
        return tuple(c % d if d else c for c, d in zip(coords, self.invariants))

    def elements(self) -> Iterator[GroupElement]:
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        for coords in product(*(range(d) for d in self.invariants)):
            yield GroupElement(self, coords)

    def direct_sum(self, other: FGAbGroup) -> FGAbGroup:
        return FGAbGroup(self.invariants + other.invariants)

    def __str__(self) -> str:
        return render_group(self.iso_type)


def canonical_invariants(invariants: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors of ``⊕ Z/d`` in divisibility order, free part last."""
    invs = [d for d in invariants]
    free = sum(1 for d in invs if d == 0)
    torsion = [d for d in invs if d > 1]
    # merge cyclic factors pairwise: Z/a ⊕ Z/b = Z/gcd ⊕ Z/lcm
    factors: list[int] = []
    for d in torsion:
        factors.append(d)
        factors.sort()
        changed = True
        while changed:
            changed = False
            for i in range(len(factors)):
                for j in range(i + 1, len(factors)):
                    a, b = factors[i], factors[j]
                    if b % a:
                        g = gcd(a, b)
                        factors[i], factors[j] = g, a * b // g
                        changed = True
            factors = sorted(f for f in factors if f != 1)
    return tuple(factors) + (0,) * free


def render_group(invariants: Sequence[int]) -> str:
    """Human form ``Z^r ⊕ Z/d1 ⊕ ...``; the trivial group renders as ``0``."""
    free = sum(1 for d in invariants if d == 0)
    parts = []
    if free == 1:
        parts.append("Z")
    elif free > 1:
        parts.append(f"Z^{free}")
    parts.extend(f"Z/{d}" for d in sorted(d for d in invariants if d))
    return " ⊕ ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupElement:
    group: FGAbGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", self.group.reduce(tuple(self.coords)))

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> GroupElement:
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __rmul__(self, n: int) -> GroupElement:
        return GroupElement(self.group, tuple(n * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other: GroupElement) -> None:
        if other.group != self.group:
            raise StructureError("elements live in different groups")


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class AbHom:
    """Homomorphism ``source -> target``; ``matrix[i][j]`` is the ``i``-th
    target coordinate of the image of source generator ``j``."""

    source: FGAbGroup
    target: FGAbGroup
    matrix: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self) -> None:
        m = [list(r) for r in self.matrix]
        if not m and self.target.ngens:
            m = zeros(self.target.ngens, self.source.ngens)
        if len(m) != self.target.ngens or any(len(r) != self.source.ngens for r in m):
            raise WellDefinednessError(
                f"matrix shape does not match {self.target.ngens}x{self.source.ngens}"
            )
        for j, a in enumerate(self.source.invariants):
            for i, b in enumerate(self.target.invariants):
                v = m[i][j]
                if b == 0:
                    if a and v:
                        raise WellDefinednessError(
                            f"generator {j} has order {a} but maps to a free coordinate"
                        )
                elif (a * v) % b:
                    raise WellDefinednessError(
                        f"generator {j} has order {a} but {a}*{v} is nonzero mod {b}"
                    )
        reduced = tuple(
            tuple(v % b if b else v for v in row) for row, b in zip(m, self.target.invariants)
        )
        object.__setattr__(self, "matrix", reduced)

    @classmethod
    def from_matrix(cls, source: FGAbGroup, target: FGAbGroup, matrix: Sequence[Sequence[int]]) -> AbHom:
        return cls(source, target, tuple(tuple(r) for r in matrix))

    @classmethod
    def zero(cls, source: FGAbGroup, target: FGAbGroup) -> AbHom:
        return cls(source, target, tuple(tuple(r) for r in zeros(target.ngens, source.ngens)))

    @classmethod
    def identity(cls, group: FGAbGroup) -> AbHom:
        return cls.scalar(group, 1)

    @classmethod
    def scalar(cls, group: FGAbGroup, n: int) -> AbHom:
        m = [[n * int(i == j) for j in range(group.ngens)] for i in range(group.ngens)]
        return cls.from_matrix(group, group, m)

    @property
    def rows(self) -> Matrix:
        return [list(r) for r in self.matrix]

    def __call__(self, x: GroupElement | Sequence[int]) -> GroupElement:
        coords = x.coords if isinstance(x, GroupElement) else tuple(x)
        if isinstance(x, GroupElement) and x.group != self.source:
            raise StructureError("element is not in the source group")
        return self.target.element(matvec(self.rows, coords))

    def compose(self, first: AbHom) -> AbHom:
        """``self ∘ first``."""
        if first.target != self.source:
            raise StructureError(f"cannot compose: {first.target} -> / {self.source} ->")
        if self.source.ngens:
            m = matmul(self.rows, first.rows)
        else:
            m = zeros(self.target.ngens, first.source.ngens)
        return AbHom.from_matrix(first.source, self.target, m)

    def __matmul__(self, first: AbHom) -> AbHom:
        return self.compose(first)

    def __add__(self, other: AbHom) -> AbHom:
        self._same_shape(other)
        m = [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)]
        return AbHom.from_matrix(self.source, self.target, m)

    def __neg__(self) -> AbHom:
        return AbHom.from_matrix(self.source, self.target, [[-a for a in r] for r in self.matrix])

    def __sub__(self, other: AbHom) -> AbHom:
        return self + (-other)

    def __rmul__(self, n: int) -> AbHom:
        return AbHom.from_matrix(self.source, self.target, [[n * a for a in r] for r in self.matrix])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def direct_sum(self, other: AbHom) -> AbHom:
        """Block-diagonal ``self ⊕ other``."""
        m = zeros(self.target.ngens + other.target.ngens, self.source.ngens + other.source.ngens)
        for i, r in enumerate(self.matrix):
            m[i][: self.source.ngens] = list(r)
        for i, r in enumerate(other.matrix):
            m[self.target.ngens + i][self.source.ngens :] = list(r)
        return AbHom.from_matrix(
            self.source.direct_sum(other.source), self.target.direct_sum(other.target), m
        )

    def preimage(self, y: GroupElement | Sequence[int]) -> GroupElement | None:
        """Some ``x`` with ``self(x) == y``, or ``None``."""
        coords = y.coords if isinstance(y, GroupElement) else tuple(y)
        rel = _relation_block(self.target)
        a = hstack(self.rows, rel, rows=self.target.ngens)
        x = solve_integer(a, coords, cols=self.source.ngens + len(rel[0] if rel else []))
        if x is None:
            return None
        return self.source.element(x[: self.source.ngens])

    def is_injective(self) -> bool:
        return kernel(self)[0].is_trivial

    def is_surjective(self) -> bool:
        return cokernel(self)[0].is_trivial

    def _same_shape(self, other: AbHom) -> None:
        if (self.source, self.target) != (other.source, other.target):
            raise StructureError("homs have different source/target")


def _relation_block(g: FGAbGroup) -> Matrix:
    """Columns ``d_i e_i`` for the torsion generators of ``g``."""
    tors = [i for i, d in enumerate(g.invariants) if d]
    return [[g.invariants[i] if i == k else 0 for k in tors] for i in range(g.ngens)]


def _positive_columns(m: Matrix, target: FGAbGroup) -> Matrix:
    """Negate columns whose first nonzero (reduced) entry is negative.

    Negating a generator is an automorphism, so this only tidies output.
    """
    out = [row[:] for row in m]
    ncols = len(m[0]) if m else 0
    for j in range(ncols):
        for i, d in enumerate(target.invariants):
            v = out[i][j] % d if d else out[i][j]
            if v:
                if not d and v < 0:
                    for r in out:
                        r[j] = -r[j]
                break
    return out


def _quotient(rel: Matrix, nrows: int, ncols: int) -> tuple[FGAbGroup, Matrix, Matrix]:
    """``Z^nrows / colspan(rel)`` in canonical form.

    Returns the group, the projection matrix (canonical coords of ``e_i``) and
    the lift matrix (columns: a representative in ``Z^nrows`` of each
    canonical generator).
    """
    snf = smith_normal_form(rel, cols=ncols)
    diag = snf.diagonal + [0] * (nrows - len(snf.diagonal))
    keep = [i for i in range(nrows) if diag[i] != 1]
    group = FGAbGroup(tuple(diag[i] for i in keep))
    proj = [snf.U[i] for i in keep]
    lift = [[snf.U_inv[r][i] for i in keep] for r in range(nrows)]
    return group, proj, lift


# ---------------------------------------------------------------------------
# kernels, cokernels and friends


def cokernel(f: AbHom) -> tuple[FGAbGroup, AbHom]:
    """``coker(f)`` in canonical form with the (surjective) projection from ``f.target``."""
    rel = hstack(f.rows, _relation_block(f.target), rows=f.target.ngens)
    ncols = f.source.ngens + sum(1 for d in f.target.invariants if d)
    q, proj, _ = _quotient(rel, f.target.ngens, ncols)
    return q, AbHom.from_matrix(f.target, q, proj)


def kernel(f: AbHom) -> tuple[FGAbGroup, AbHom]:
    """``ker(f)`` in canonical form with its inclusion into ``f.source``."""
    n = f.source.ngens
    rel = _relation_block(f.target)
    a = hstack(f.rows, rel, rows=f.target.ngens)
    basis = integer_kernel(a, cols=n + (len(rel[0]) if rel else 0))
    lattice = [row[: len(basis[0]) if basis else 0] for row in basis[:n]]
    k = len(lattice[0]) if lattice else 0
    # relations of the source, rewritten in the lattice basis
    rels = []
    for j, d in enumerate(f.source.invariants):
        if d:
            target = [d * int(i == j) for i in range(n)]
            c = solve_integer(lattice, target, cols=k)
            if c is None:  # pragma: no cover - guaranteed by well-definedness
                raise WellDefinednessError("source relation escapes the kernel lattice")
            rels.append(c)
    rel_matrix = transpose(rels, cols=k) if rels else zeros(k, 0)
    group, _, lift = _quotient(rel_matrix, k, len(rels))
    incl = matmul(lattice, lift) if k else zeros(n, group.ngens)
    return group, AbHom.from_matrix(group, f.source, _positive_columns(incl, f.source))


def image(f: AbHom) -> tuple[FGAbGroup, AbHom]:
    """``im(f)`` in canonical form with its inclusion into ``f.target``."""
    _, incl = kernel(f)
    q, proj = cokernel(incl)
    cols = []
    for g in q.gens():
        x = proj.preimage(g)
        assert x is not None
        cols.append(list(f(x).coords))
    m = transpose(cols, cols=q.ngens) if cols else zeros(f.target.ngens, 0)
    return q, AbHom.from_matrix(q, f.target, m)


def n_torsion(g: FGAbGroup, n: int) -> tuple[FGAbGroup, AbHom]:
    """``G[n] = {x : n x = 0}`` with its inclusion."""
    if n <= 0:
        raise ValueError("n must be positive")
    return kernel(AbHom.scalar(g, n))


def mod_n(g: FGAbGroup, n: int) -> tuple[FGAbGroup, AbHom]:
    """``G / nG`` with the projection."""
    if n <= 0:
        raise ValueError("n must be positive")
    return cokernel(AbHom.scalar(g, n))


@dataclass(frozen=True)
class FiberProduct:
    group: FGAbGroup
    to_left: AbHom
    to_right: AbHom


def fiber_product(f: AbHom, g: AbHom) -> FiberProduct:
    """``{(a, b) in A ⊕ B : f(a) = g(b)}`` for ``f: A -> C`` and ``g: B -> C``."""
    if f.target != g.target:
        raise StructureError("fiber product needs a common target")
    a, b = f.source, g.source
    diff = AbHom.from_matrix(
        a.direct_sum(b), f.target, hstack(f.rows, (-g).rows, rows=f.target.ngens)
    )
    group, incl = kernel(diff)
    rows = incl.rows
    to_left = AbHom.from_matrix(group, a, rows[: a.ngens])
    to_right = AbHom.from_matrix(group, b, rows[a.ngens :])
    return FiberProduct(group, to_left, to_right)


def all_halves(c: GroupElement) -> set[GroupElement]:
    """Every ``d`` with ``2 d == c``.

    Coordinates are independent cyclic factors, so the halves are a product
    of per-factor solution sets.
    """
    options: list[list[int]] = []
    for v, m in zip(c.coords, c.group.invariants):
        if m == 0:
            options.append([v // 2] if v % 2 == 0 else [])
        elif m % 2:
            options.append([(v * (m + 1) // 2) % m])
        elif v % 2:
            options.append([])
        else:
            options.append([v // 2, v // 2 + m // 2])
    return {c.group.element(x) for x in product(*options)}


# ---------------------------------------------------------------------------
# exactness


@dataclass(frozen=True)
class ExactnessReport:
    exact: bool
    position: int | None = None
    witness: GroupElement | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.exact

    def describe(self) -> str:
        if self.exact:
            return "exact"
        return f"not exact at position {self.position}: {self.reason}, witness {list(self.witness.coords)}"


def exact_at(incoming: AbHom, outgoing: AbHom) -> tuple[bool, GroupElement | None, str]:
    """Decide ``im(incoming) == ker(outgoing)`` at the shared group."""
    if incoming.target != outgoing.source:
        raise StructureError("homs are not composable")
    comp = outgoing.compose(incoming)
    for j, x in enumerate(incoming.source.gens()):
        if not comp(x).is_zero():
            return False, incoming(x), "image not contained in kernel"
    _, incl = kernel(outgoing)
    for k in incl.source.gens():
        y = incl(k)
        if incoming.preimage(y) is None:
            return False, y, "kernel element outside the image"
    return True, None, ""


def check_exact(seq: Sequence[AbHom | tuple[FGAbGroup, AbHom]]) -> ExactnessReport:
    """Check exactness of ``G0 -> G1 -> ... -> Gn`` at every interior group.

    ``seq`` lists the homs, optionally paired with their source group. Positions
    are indices into the group list ``[G0, ..., Gn]``; the first failure is
    reported with a witness element of that group.
    """
    homs = []
    for item in seq:
        if isinstance(item, tuple):
            g, h = item
            if h.source != g:
                raise StructureError("listed group is not the source of its hom")
            item = h
        homs.append(item)
    for a, b in zip(homs, homs[1:]):
        if a.target != b.source:
            raise StructureError("sequence is not composable")
    for i in range(len(homs) - 1):
        ok, witness, reason = exact_at(homs[i], homs[i + 1])
        if not ok:
            return ExactnessReport(False, i + 1, witness, reason)
    return ExactnessReport(True)


def zero_hom_into(g: FGAbGroup) -> AbHom:
    return AbHom.zero(FGAbGroup(), g)


def zero_hom_from(g: FGAbGroup) -> AbHom:
    return AbHom.zero(g, FGAbGroup())
