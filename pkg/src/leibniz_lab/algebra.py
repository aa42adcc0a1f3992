"""Structure-constant algebras: Leibniz/Lie identity checks, the squares
ideal, liezation, Killing form, semisimplicity tests, direct sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import (
    Matrix,
    RowSpaceBuilder,
    Subspace,
    Vector,
    rref,
    unit_vec,
    vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_vec,
)

Cell = dict[int, Fraction]


class StructureTable:
    """Structure constants c_{ij}^k of a bilinear bracket: [e_i, e_j] = sum_k c_{ij}^k e_k.

    Stored sparsely; immutable after construction. Equality compares the
    constants (labels are display-only).
    """

    __slots__ = ("dim", "labels", "_c", "_right_support")

    def __init__(
        self,
        dim: int,
        cells: Mapping[tuple[int, int], Mapping[int, Fraction]],
        labels: Sequence[str] | None = None,
    ):
        if labels is None:
            labels = [f"e{i + 1}" for i in range(dim)]
        if len(labels) != dim:
            raise ValueError("label count != dim")
        self.dim = dim
        self.labels = tuple(labels)
        c: dict[tuple[int, int], Cell] = {}
        for (i, j), cell in cells.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index out of range: ({i}, {j})")
            clean = {}
            for k, v in cell.items():
                if not 0 <= k < dim:
                    raise ValueError(f"component index out of range: {k}")
                v = Fraction(v)
                if v:
                    clean[k] = v
            if clean:
                c[(i, j)] = clean
        self._c = c
        self._right_support = frozenset(j for (_, j) in c)

    @classmethod
    def from_triples(
        cls,
        dim: int,
        triples: Iterable[tuple[int, int, int, Fraction]],
        labels: Sequence[str] | None = None,
    ) -> "StructureTable":
        cells: dict[tuple[int, int], Cell] = {}
        for i, j, k, v in triples:
            cell = cells.setdefault((i, j), {})
            if k in cell:
                raise ValueError(f"duplicate structure triple ({i}, {j}, {k})")
            cell[k] = Fraction(v)
        return cls(dim, cells, labels)

    def _cell(self, i: int, j: int) -> Cell:
        # Internal accessor; callers must not mutate the result.
        return self._c.get((i, j), _EMPTY_CELL)

    def bracket_basis(self, i: int, j: int) -> Cell:
        return dict(self._cell(i, j))

    def bracket_basis_vec(self, i: int, j: int) -> Vector:
        out = [Fraction(0)] * self.dim
        for k, v in self._cell(i, j).items():
            out[k] = v
        return tuple(out)

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """Bilinear extension of the bracket to coordinate vectors."""
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cell = self._c.get((i, j))
                if cell:
                    w = xi * yj
                    for k, v in cell.items():
                        out[k] += w * v
        return tuple(out)

    def triples(self) -> list[tuple[int, int, int, Fraction]]:
        out = []
        for (i, j), cell in self._c.items():
            for k, v in cell.items():
                out.append((i, j, k, v))
        out.sort(key=lambda t: t[:3])
        return out

    def right_multiplication(self, j: int) -> Matrix:
        """Matrix of x -> [x, e_j] (columns are the basis brackets)."""
        cols = [self.bracket_basis_vec(i, j) for i in range(self.dim)]
        return Matrix.from_columns(cols) if self.dim else Matrix.zero(0, 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StructureTable)
            and self.dim == other.dim
            and self._c == other._c
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"StructureTable(dim={self.dim}, nnz={sum(len(c) for c in self._c.values())})"


_EMPTY_CELL: Cell = {}


class LeibnizIdentityError(ValueError):
    """Raised when a table expected to satisfy the Leibniz identity does not."""

    def __init__(self, violations):
        super().__init__(f"Leibniz identity fails on {len(violations)} basis triples")
        self.violations = violations


@dataclass(frozen=True)
class LeibnizAlgebra:
    """A structure table whose Leibniz identity has been checked.

    ``verified`` is only set by :meth:`from_table` after ``check_leibniz``
    returns no violations.
    """

    table: StructureTable
    verified: bool = False

    @classmethod
    def from_table(cls, table: StructureTable) -> "LeibnizAlgebra":
        violations = check_leibniz(table)
        if violations:
            raise LeibnizIdentityError(violations)
        return cls(table, verified=True)

    @property
    def dim(self) -> int:
        return self.table.dim


def check_leibniz(table: StructureTable) -> list[tuple[int, int, int]]:
    """Violations of [[x,y],z] = [[x,z],y] + [x,[y,z]] on basis triples.

    Works pairwise on right-multiplication operators so that sparse tables
    cost far less than dim^3 full evaluations; the returned triples (i, j, k)
    are exactly the basis triples where the identity fails, in lexicographic
    order.
    """
    dim = table.dim
    support = table._right_support
    cells = table._c
    violations = []
    for j in range(dim):
        j_active = j in support
        for k in range(dim):
            jk = cells.get((j, k))
            if not j_active and k not in support and not jk:
                continue
            for i in range(dim):
                defect = _triple_defect(cells, i, j, k, dim)
                if defect:
                    violations.append((i, j, k))
    violations.sort()
    return violations


def _triple_defect(cells, i: int, j: int, k: int, dim: int) -> Cell:
    out: Cell = {}

    def acc(base: Cell | None, right: int, sign: int):
        if not base:
            return
        for r, c in base.items():
            cell = cells.get((r, right))
            if cell:
                for m, v in cell.items():
                    nv = out.get(m, _ZERO) + sign * c * v
                    if nv:
                        out[m] = nv
                    else:
                        out.pop(m, None)

    acc(cells.get((i, j)), k, 1)  # [[e_i,e_j],e_k]
    acc(cells.get((i, k)), j, -1)  # -[[e_i,e_k],e_j]
    jk = cells.get((j, k))
    if jk:
        for l, c in jk.items():
            cell = cells.get((i, l))
            if cell:
                for m, v in cell.items():
                    nv = out.get(m, _ZERO) - c * v
                    if nv:
                        out[m] = nv
                    else:
                        out.pop(m, None)
    return out


_ZERO = Fraction(0)


def leibniz_defect(table: StructureTable, i: int, j: int, k: int) -> tuple[Vector, Vector]:
    """(lhs, rhs) of the Leibniz identity at a basis triple, as vectors."""
    ei, ej, ek = (unit_vec(table.dim, t) for t in (i, j, k))
    lhs = table.bracket(table.bracket(ei, ej), ek)
    rhs = vec_add(table.bracket(table.bracket(ei, ek), ej), table.bracket(ei, table.bracket(ej, ek)))
    return lhs, rhs


@dataclass(frozen=True)
class LieCheck:
    is_lie: bool
    violations: tuple[tuple, ...]


def check_lie(table: StructureTable) -> LieCheck:
    """Antisymmetry ([x,x]=0, [x,y]+[y,x]=0) and the Jacobi identity on basis elements."""
    dim = table.dim
    violations = []
    for i in range(dim):
        if table._cell(i, i):
            violations.append(("square", i))
    for i in range(dim):
        for j in range(i + 1, dim):
            s = dict(table._cell(i, j))
            for k, v in table._cell(j, i).items():
                nv = s.get(k, _ZERO) + v
                if nv:
                    s[k] = nv
                else:
                    s.pop(k, None)
            if s:
                violations.append(("antisymmetry", i, j))
    for i in range(dim):
        ei = unit_vec(dim, i)
        for j in range(i + 1, dim):
            ej = unit_vec(dim, j)
            for k in range(j + 1, dim):
                ek = unit_vec(dim, k)
                total = vec_add(
                    table.bracket(ei, table.bracket(ej, ek)),
                    vec_add(
                        table.bracket(ej, table.bracket(ek, ei)),
                        table.bracket(ek, table.bracket(ei, ej)),
                    ),
                )
                if not vec_is_zero(total):
                    violations.append(("jacobi", i, j, k))
    return LieCheck(not violations, tuple(violations))


@dataclass(frozen=True)
class IdealData:
    """A subspace of an algebra together with its ideal diagnostics."""

    space: Subspace
    is_ideal: bool
    left_annihilated: bool


def span_of_squares(alg: LeibnizAlgebra) -> IdealData:
    """The ideal I generated by squares, via the polarized generating set
    { [e_i,e_i] } + { [e_i,e_j]+[e_j,e_i] : i<j } (valid in characteristic 0)."""
    if not alg.verified:
        raise ValueError("algebra must be verified before computing the squares ideal")
    table = alg.table
    dim = table.dim
    builder = RowSpaceBuilder(dim)
    for i in range(dim):
        builder.add(table.bracket_basis_vec(i, i))
    for i in range(dim):
        for j in range(i + 1, dim):
            builder.add(
                vec_add(table.bracket_basis_vec(i, j), table.bracket_basis_vec(j, i))
            )
    space = builder.to_subspace()
    is_ideal = True
    left_annihilated = True
    for b in space.basis:
        for i in range(dim):
            ei = unit_vec(dim, i)
            left = table.bracket(ei, b)
            if not vec_is_zero(left):
                left_annihilated = False
                if not space.contains(left):
                    is_ideal = False
            if not space.contains(table.bracket(b, ei)):
                is_ideal = False
    return IdealData(space, is_ideal, left_annihilated)


@dataclass(frozen=True)
class Liezation:
    """Quotient Lie algebra L/I on the coordinate complement of I's pivots."""

    table: StructureTable
    projection: Matrix  # quotient coords of the complement part of a vector
    complement: Subspace
    complement_coords: tuple[int, ...]
    ideal: IdealData


def liezation(alg: LeibnizAlgebra) -> Liezation:
    ideal = span_of_squares(alg)
    table = alg.table
    dim = table.dim
    comp = ideal.space.complement_coords()
    q = len(comp)
    # projection: strip the I-part, then read off the complement coordinates
    proj_rows = []
    for t, c in enumerate(comp):
        row = [Fraction(0)] * dim
        row[c] = Fraction(1)
        for p, b in zip(ideal.space.pivots, ideal.space.basis):
            if b[c]:
                row[p] -= b[c]
        proj_rows.append(row)
    projection = Matrix(proj_rows, cols=dim)
    cells: dict[tuple[int, int], Cell] = {}
    for u, cu in enumerate(comp):
        for v, cv in enumerate(comp):
            w = table.bracket_basis_vec(cu, cv)
            if vec_is_zero(w):
                continue
            image = projection.apply(w)
            cell = {t: x for t, x in enumerate(image) if x}
            if cell:
                cells[(u, v)] = cell
    quotient = StructureTable(q, cells, [table.labels[c] for c in comp])
    complement = Subspace.from_vectors(dim, [unit_vec(dim, c) for c in comp])
    return Liezation(quotient, projection, complement, comp, ideal)


def killing_form(table: StructureTable) -> Matrix:
    """K[i][j] = trace(ad e_i . ad e_j); callers ensure the table is Lie."""
    dim = table.dim
    k = [[Fraction(0)] * dim for _ in range(dim)]
    cells = table._c
    for (i, b), cell_ib in cells.items():
        for a, c_ib_a in cell_ib.items():
            for j in range(dim):
                cell_ja = cells.get((j, a))
                if cell_ja:
                    v = cell_ja.get(b)
                    if v:
                        k[i][j] += c_ib_a * v
    return Matrix(k, cols=dim)


def killing_rank(table: StructureTable) -> int:
    return rref(killing_form(table))[2] if table.dim else 0


def subspace_bracket(table: StructureTable, a: Subspace, b: Subspace) -> Subspace:
    builder = RowSpaceBuilder(table.dim)
    for u in a.basis:
        for v in b.basis:
            builder.add(table.bracket(u, v))
    return builder.to_subspace()


def is_solvable(table: StructureTable, space: Subspace) -> bool:
    """Derived chain S <- [S,S] with a hard cap of dim steps."""
    current = space
    for _ in range(table.dim + 1):
        if current.dim == 0:
            return True
        nxt = subspace_bracket(table, current, current)
        if nxt.dim == current.dim:
            return False
        current = nxt
    return current.dim == 0


@dataclass(frozen=True)
class SemisimplicityReport:
    semisimple: bool
    liezation_killing_rank: int
    liezation: Liezation
    squares_solvable: bool


def is_semisimple_leibniz(alg: LeibnizAlgebra) -> SemisimplicityReport:
    """Cartan's criterion on the liezation: semisimple iff its Killing form
    is nondegenerate. Solvability of I is reported as a separate diagnostic
    (its derived chain dies immediately since [I,I] = 0)."""
    liez = liezation(alg)
    rank = killing_rank(liez.table)
    solvable = is_solvable(alg.table, liez.ideal.space)
    return SemisimplicityReport(rank == liez.table.dim, rank, liez, solvable)


def direct_sum(a: StructureTable, b: StructureTable) -> StructureTable:
    cells: dict[tuple[int, int], Cell] = {}
    for (i, j), cell in a._c.items():
        cells[(i, j)] = dict(cell)
    off = a.dim
    for (i, j), cell in b._c.items():
        cells[(i + off, j + off)] = {k + off: v for k, v in cell.items()}
    return StructureTable(a.dim + b.dim, cells, list(a.labels) + list(b.labels))


def direct_sum_many(tables: Sequence[StructureTable]) -> StructureTable:
    out = StructureTable(0, {})
    for t in tables:
        out = direct_sum(out, t)
    return out


def transport_table(table: StructureTable, basis: Matrix) -> StructureTable:
    """Structure constants in a new basis given by the rows of ``basis``."""
    if basis.rows != table.dim or basis.cols != table.dim:
        raise ValueError("basis must be square of the algebra dimension")
    inv = basis.inverse()
    dim = table.dim
    cells: dict[tuple[int, int], Cell] = {}
    for u in range(dim):
        for v in range(dim):
            w = table.bracket(basis.data[u], basis.data[v])
            if vec_is_zero(w):
                continue
            # coords x with x . basis = w  <=>  x = w . basis^{-1}
            coords = tuple(
                sum((w[t] * inv.data[t][s] for t in range(dim) if w[t]), Fraction(0))
                for s in range(dim)
            )
            cell = {s: x for s, x in enumerate(coords) if x}
            if cell:
                cells[(u, v)] = cell
    return StructureTable(dim, cells, table.labels)


def random_vector(rng, dim: int, span: int = 5) -> Vector:
    return vec([Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(dim)])


def leibniz_defect_on_elements(table: StructureTable, x, y, z) -> Vector:
    lhs = table.bracket(table.bracket(x, y), z)
    rhs = vec_add(table.bracket(table.bracket(x, z), y), table.bracket(x, table.bracket(y, z)))
    return vec_sub(lhs, rhs)
