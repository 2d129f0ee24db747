"""Structure-constant model of finite-dimensional unital associative algebras.

An algebra is a field, a basis, a unit vector and a full multiplication
table c[i][j] = coordinates of b_i * b_j.  Subalgebras are canonical
echelon subspaces that contain the unit and are closed under the product;
they always share the unit of the parent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DimensionError,
    FieldMismatchError,
    InvalidInputError,
    VerificationFailedError,
)
from .linalg import (
    Field,
    Subspace,
    Vec,
    echelonize,
    full_subspace,
    kernel,
    solve_one,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)


@dataclass(frozen=True)
class Presentation:
    """Optional combinatorial origin of an algebra.

    kind is one of "quiver", "incidence", "matrix", "product".
    radical_rows spans the known Jacobson radical (exact for these kinds).
    vertex_names/vertex_vectors give the vertex idempotents of a quiver or
    poset presentation, in basis coordinates.
    """

    kind: str
    radical_rows: tuple[Vec, ...] | None = None
    vertex_names: tuple[str, ...] = ()
    vertex_vectors: tuple[Vec, ...] = ()
    source: object = None


@dataclass(frozen=True)
class Algebra:
    field: Field
    dim: int
    basis_names: tuple[str, ...]
    unit: Vec
    table: tuple[tuple[Vec, ...], ...]
    presentation: Presentation | None = None

    def __post_init__(self):
        if len(self.basis_names) != self.dim or len(self.unit) != self.dim:
            raise DimensionError("basis/unit length != dim")
        if len(self.table) != self.dim or any(len(r) != self.dim for r in self.table):
            raise DimensionError("table is not dim x dim")

    # identity of an algebra is its data; hashing by id keeps caches cheap
    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    @cached_property
    def _nonzero_table(self) -> tuple[tuple[int, int, Vec], ...]:
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                row = self.table[i][j]
                if not vec_is_zero(row):
                    out.append((i, j, row))
        return tuple(out)

    def multiply(self, x: Sequence, y: Sequence) -> list:
        """Bilinear extension of the structure-constant table."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionError("vector length != algebra dimension")
        f = self.field
        out = zero_vec(self.dim, f)
        for i, j, row in self._nonzero_table:
            xi = x[i]
            if xi == 0:
                continue
            yj = y[j]
            if yj == 0:
                continue
            c = f.mul(xi, yj)
            out = [f.add(o, f.mul(c, r)) for o, r in zip(out, row)]
        return out

    def left_mult_matrix(self, x: Sequence) -> list:
        """Matrix of y -> x*y in the algebra basis (columns are images)."""
        cols = [self.multiply(x, unit_vec(self.dim, j, self.field))
                for j in range(self.dim)]
        return [list(c) for c in zip(*cols)]

    def right_mult_matrix(self, x: Sequence) -> list:
        cols = [self.multiply(unit_vec(self.dim, j, self.field), x)
                for j in range(self.dim)]
        return [list(c) for c in zip(*cols)]

    def basis_vector(self, i: int) -> list:
        return unit_vec(self.dim, i, self.field)


def multiply(a: Algebra, x: Sequence, y: Sequence) -> list:
    return a.multiply(x, y)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_algebra(a: Algebra) -> ValidationReport:
    """Check associativity on all basis triples and the unit laws."""
    bad = []
    f = a.field
    for i in range(a.dim):
        bi = a.basis_vector(i)
        if a.multiply(a.unit, bi) != bi:
            bad.append(f"unit * {a.basis_names[i]} != {a.basis_names[i]}")
        if a.multiply(bi, list(a.unit)) != bi:
            bad.append(f"{a.basis_names[i]} * unit != {a.basis_names[i]}")
    for i in range(a.dim):
        bi = a.basis_vector(i)
        for j in range(a.dim):
            bj = a.basis_vector(j)
            ij = a.table[i][j]
            for k in range(a.dim):
                bk = a.basis_vector(k)
                left = a.multiply(list(ij), bk)
                right = a.multiply(bi, list(a.table[j][k]))
                if left != right:
                    bad.append(
                        "associativity fails at "
                        f"({a.basis_names[i]}, {a.basis_names[j]}, {a.basis_names[k]})")
    return ValidationReport(tuple(bad))


def make_algebra(field: Field, basis_names: Sequence[str], unit: Sequence,
                 table: Sequence[Sequence[Sequence]],
                 presentation: Presentation | None = None,
                 check: bool = False) -> Algebra:
    dim = len(basis_names)
    coerced = tuple(
        tuple(tuple(field.coerce(v) for v in table[i][j]) for j in range(dim))
        for i in range(dim))
    a = Algebra(field, dim, tuple(basis_names),
                tuple(field.coerce(v) for v in unit), coerced, presentation)
    if check:
        rep = validate_algebra(a)
        if not rep.ok:
            raise VerificationFailedError("; ".join(rep.violations[:3]))
    return a


# ---------------------------------------------------------------------------
# subalgebras

@dataclass(frozen=True)
class Subalgebra:
    """A unital, multiplicatively closed subspace of a parent algebra."""

    parent: Algebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_rows(self) -> list[list]:
        return [list(r) for r in self.space.basis]

    @cached_property
    def _algebra_and_inclusion(self) -> tuple[Algebra, tuple[Vec, ...]]:
        par = self.parent
        rows = self.basis_rows()
        names = tuple(f"s{i+1}" for i in range(len(rows)))
        unit = self.space.coords(list(par.unit))
        table = []
        for x in rows:
            trow = []
            for y in rows:
                trow.append(tuple(self.space.coords(par.multiply(x, y))))
            table.append(tuple(trow))
        alg = Algebra(par.field, len(rows), names, tuple(unit), tuple(table))
        return alg, tuple(tuple(r) for r in rows)

    def as_algebra(self) -> Algebra:
        """The subalgebra as an abstract structure-constant algebra."""
        return self._algebra_and_inclusion[0]

    def inclusion_rows(self) -> tuple[Vec, ...]:
        """Images of the abstract basis inside the parent."""
        return self._algebra_and_inclusion[1]

    def embed(self, v: Sequence) -> list:
        """Coordinates in the subalgebra basis -> coordinates in the parent."""
        par = self.parent
        out = zero_vec(par.dim, par.field)
        for c, row in zip(v, self.space.basis):
            if c != 0:
                out = vec_add(out, vec_scale(c, list(row), par.field), par.field)
        return out

    def contains_vec(self, v: Sequence) -> bool:
        return self.space.contains_vec(v)


def subalgebra(parent: Algebra, space: Subspace, check: bool = True) -> Subalgebra:
    if space.field != parent.field or space.ambient_dim != parent.dim:
        raise FieldMismatchError("subspace does not match parent algebra")
    if check:
        if not space.contains_vec(list(parent.unit)):
            raise InvalidInputError("subalgebra must contain the unit")
        for x in space.basis:
            for y in space.basis:
                if not space.contains_vec(parent.multiply(list(x), list(y))):
                    raise InvalidInputError("subspace not closed under product")
    return Subalgebra(parent, space)


def subalgebra_from_rows(parent: Algebra, rows: Iterable[Sequence],
                         check: bool = True) -> Subalgebra:
    return subalgebra(parent,
                      echelonize(rows, parent.dim, parent.field), check)


def full_subalgebra(a: Algebra) -> Subalgebra:
    return Subalgebra(a, full_subspace(a.dim, a.field))


def is_closed_subspace(a: Algebra, space: Subspace) -> bool:
    """Unital and multiplicatively closed; the subalgebra predicate."""
    if not space.contains_vec(list(a.unit)):
        return False
    for x in space.basis:
        for y in space.basis:
            if not space.contains_vec(a.multiply(list(x), list(y))):
                return False
    return True


@dataclass(frozen=True)
class BimoduleSubspace:
    """A subspace stable under left/right multiplication by a subalgebra."""

    parent: Algebra
    acting: Subalgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


def bimodule_subspace(parent: Algebra, acting: Subalgebra, space: Subspace,
                      check: bool = True) -> BimoduleSubspace:
    if check:
        for arow in acting.space.basis:
            for v in space.basis:
                if not space.contains_vec(parent.multiply(list(arow), list(v))):
                    raise InvalidInputError("not stable under left action")
                if not space.contains_vec(parent.multiply(list(v), list(arow))):
                    raise InvalidInputError("not stable under right action")
    return BimoduleSubspace(parent, acting, space)


# ---------------------------------------------------------------------------
# generation, centralizers, units, conjugation

def subalgebra_generated(a: Algebra, seeds: Iterable[Sequence]) -> Subalgebra:
    """Smallest unital subalgebra containing the seeds.

    Iterates span + pairwise products to a fixed point; the dimension grows
    strictly each round, so at most dim(a) rounds run.
    """
    rows = [list(a.unit)] + [list(map(a.field.coerce, s)) for s in seeds]
    space = echelonize(rows, a.dim, a.field)
    while True:
        prods = [a.multiply(list(x), list(y))
                 for x in space.basis for y in space.basis]
        bigger = echelonize(list(space.basis) + prods, a.dim, a.field)
        if bigger.dim == space.dim:
            return Subalgebra(a, space)
        space = bigger


def centralizer(a: Algebra, s: Subspace) -> Subalgebra:
    """{x in a : xv = vx for all v in s}, as a unital subalgebra."""
    rows = []
    for v in s.basis:
        lm = a.left_mult_matrix(list(v))
        rm = a.right_mult_matrix(list(v))
        for i in range(a.dim):
            rows.append([a.field.sub(rm[i][j], lm[i][j]) for j in range(a.dim)])
    ker = kernel(rows, a.dim, a.field)
    return Subalgebra(a, ker)


def centralizer_in(sub: Subalgebra, elements: Iterable[Sequence]) -> Subalgebra:
    """Centralizer of the given parent-coordinate elements inside sub."""
    par = sub.parent
    f = par.field
    rows = []
    basis = sub.basis_rows()
    for v in elements:
        v = list(v)
        lv = par.left_mult_matrix(v)
        rv = par.right_mult_matrix(v)
        for i in range(par.dim):
            rows.append([
                f.sub(
                    sum_entry(rv[i], b, f),
                    sum_entry(lv[i], b, f),
                ) for b in basis])
    ker = kernel(rows, len(basis), f)
    out_rows = [sub.embed(list(k)) for k in ker.basis]
    return subalgebra_from_rows(par, out_rows, check=False)


def sum_entry(mat_row: Sequence, vec: Sequence, f: Field):
    s = f.zero()
    for m, v in zip(mat_row, vec):
        if m != 0 and v != 0:
            s = f.add(s, f.mul(m, v))
    return s


def invert_element(a: Algebra, x: Sequence) -> list | None:
    """Two-sided inverse of x, or None when none exists."""
    lm = a.left_mult_matrix(list(map(a.field.coerce, x)))
    y = solve_one(lm, list(a.unit), a.field)
    if y is None:
        return None
    # left-regular representation is faithful, so a right inverse with
    # invertible L_x is automatically two-sided; verify anyway
    if a.multiply(y, list(x)) != list(a.unit):
        return None
    return y


def conjugate_subalgebra(a: Algebra, u: Sequence, s: Subalgebra) -> Subalgebra:
    u = list(map(a.field.coerce, u))
    uinv = invert_element(a, u)
    if uinv is None:
        raise InvalidInputError("conjugating element is not invertible")
    rows = [a.multiply(a.multiply(u, list(x)), uinv) for x in s.space.basis]
    return subalgebra_from_rows(a, rows, check=False)


def conjugate_subspace(a: Algebra, u: Sequence, uinv: Sequence,
                       s: Subspace) -> Subspace:
    rows = [a.multiply(a.multiply(list(u), list(x)), list(uinv))
            for x in s.basis]
    return echelonize(rows, a.dim, a.field)


# ---------------------------------------------------------------------------
# standard constructors

def matrix_algebra(n: int, field: Field) -> Algebra:
    """M_n(K) on the matrix-unit basis e11, e12, ..., enn."""
    if n < 1:
        raise InvalidInputError("n >= 1 required")
    dim = n * n
    names = tuple(f"e{p+1}{q+1}" for p in range(n) for q in range(n))

    def idx(p, q):
        return p * n + q

    table = []
    for i in range(dim):
        p, q = divmod(i, n)
        row = []
        for j in range(dim):
            r, s = divmod(j, n)
            out = zero_vec(dim, field)
            if q == r:
                out[idx(p, s)] = field.one()
            row.append(tuple(out))
        table.append(tuple(row))
    unit = zero_vec(dim, field)
    for p in range(n):
        unit[idx(p, p)] = field.one()
    pres = Presentation(kind="matrix", radical_rows=(), source=n)
    return Algebra(field, dim, names, tuple(unit), tuple(table), pres)


def direct_product(factors: Sequence[Algebra]) -> Algebra:
    """Product algebra with block-diagonal table and concatenated bases."""
    if not factors:
        raise InvalidInputError("empty product")
    field = factors[0].field
    if any(f.field != field for f in factors):
        raise FieldMismatchError("factors over different fields")
    dim = sum(f.dim for f in factors)
    offsets = []
    off = 0
    for f in factors:
        offsets.append(off)
        off += f.dim
    names = []
    for k, f in enumerate(factors):
        names += [f"{k+1}.{nm}" for nm in f.basis_names]
    unit = zero_vec(dim, field)
    for f, off in zip(factors, offsets):
        for i, v in enumerate(f.unit):
            unit[off + i] = v
    z = tuple(zero_vec(dim, field))
    table = [[z] * dim for _ in range(dim)]
    for f, off in zip(factors, offsets):
        for i in range(f.dim):
            for j in range(f.dim):
                out = zero_vec(dim, field)
                for k, v in enumerate(f.table[i][j]):
                    out[off + k] = v
                table[off + i][off + j] = tuple(out)
    radical_rows = None
    if all(f.presentation is not None and f.presentation.radical_rows is not None
           for f in factors):
        radical_rows = []
        for f, off in zip(factors, offsets):
            for r in f.presentation.radical_rows:
                row = zero_vec(dim, field)
                for k, v in enumerate(r):
                    row[off + k] = v
                radical_rows.append(tuple(row))
        radical_rows = tuple(radical_rows)
    pres = Presentation(kind="product", radical_rows=radical_rows,
                        source=tuple(offsets))
    return Algebra(field, dim, tuple(names), tuple(unit),
                   tuple(tuple(r) for r in table), pres)


def block_triangular(n: int, composition: Sequence[int], field: Field,
                     ambient: Algebra | None = None) -> Subalgebra:
    """Block upper-triangular subalgebra of M_n for a composition of n."""
    comp = list(composition)
    if any(c <= 0 for c in comp) or sum(comp) != n:
        raise InvalidInputError("composition must be positive and sum to n")
    amb = ambient if ambient is not None else matrix_algebra(n, field)
    if amb.dim != n * n:
        raise DimensionError("ambient is not an n x n matrix algebra")
    block_of = []
    for bi, c in enumerate(comp):
        block_of += [bi] * c
    rows = []
    for p in range(n):
        for q in range(n):
            if block_of[p] <= block_of[q]:
                rows.append(unit_vec(n * n, p * n + q, field))
    return subalgebra_from_rows(amb, rows, check=False)


def diagonal_subalgebra(n: int, positions: Sequence[int],
                        ambient: Algebra) -> Subalgebra:
    """Image of X -> (X, ..., X) into the given M_n factors of a product.

    The remaining factors stay full.  For two positions this is the
    maximal diagonal subalgebra, of codimension n^2.
    """
    pres = ambient.presentation
    if pres is None or pres.kind != "product":
        raise InvalidInputError("ambient must be a direct product")
    offsets = list(pres.source)
    sizes = [b - a for a, b in zip(offsets, offsets[1:] + [ambient.dim])]
    positions = sorted(set(positions))
    for pos in positions:
        if pos < 0 or pos >= len(offsets) or sizes[pos] != n * n:
            raise InvalidInputError(f"factor {pos} does not carry M_{n}")
    field = ambient.field
    rows = []
    for t in range(n * n):
        row = zero_vec(ambient.dim, field)
        for pos in positions:
            row[offsets[pos] + t] = field.one()
        rows.append(row)
    for pos, (off, size) in enumerate(zip(offsets, sizes)):
        if pos in positions:
            continue
        for t in range(size):
            rows.append(unit_vec(ambient.dim, off + t, field))
    return subalgebra_from_rows(ambient, rows, check=False)
