"""Built-in split simple Lie algebras (sl_n) and their irreducible right
modules, plus external tensor products over direct sums.

Everything is split over Q with integer structure constants, which keeps
all downstream computations exact and the simplicity certificates decisive
(commutant dimension 1 = absolutely simple).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import StructureTable, Cell
from .linalg import Matrix


class InvalidSpec(ValueError):
    """The requested algebra or module does not exist in the catalog."""


class BlockMismatch(ValueError):
    """Tensor factor count does not match the algebra block count."""


@dataclass(frozen=True)
class SimpleLieSpec:
    n: int
    family: str = "sl"

    def __post_init__(self):
        if self.family != "sl":
            raise InvalidSpec(f"unknown family {self.family!r}")
        if self.n < 2:
            raise InvalidSpec("sl_n needs n >= 2")

    @property
    def dim(self) -> int:
        return self.n * self.n - 1


@dataclass(frozen=True)
class IrrepSpec:
    kind: str  # "sl2" | "natural" | "dual" | "trivial"
    attached_to: SimpleLieSpec
    m: int = 0  # highest weight, sl2 kind only

    KINDS = ("sl2", "natural", "dual", "trivial")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise InvalidSpec(f"unknown irrep kind {self.kind!r}")
        if self.kind == "sl2":
            if self.attached_to.n != 2:
                raise InvalidSpec("sl2 weight modules only exist for n = 2")
            if self.m < 1:
                raise InvalidSpec("sl2 weight must be >= 1 (weight 0 is the trivial module)")

    @property
    def dim(self) -> int:
        if self.kind == "sl2":
            return self.m + 1
        if self.kind == "trivial":
            return 1
        return self.attached_to.n


def sl_basis_matrices(n: int) -> list[Matrix]:
    """Basis of sl_n: E_ij (i<j), then H_i = E_ii - E_{i+1,i+1}, then E_ij (i>j).

    For n = 2 this is the Chevalley triple (e, h, f).
    """
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            m = [[Fraction(0)] * n for _ in range(n)]
            m[i][j] = Fraction(1)
            mats.append(Matrix(m))
    for i in range(n - 1):
        m = [[Fraction(0)] * n for _ in range(n)]
        m[i][i] = Fraction(1)
        m[i + 1][i + 1] = Fraction(-1)
        mats.append(Matrix(m))
    for j in range(n):
        for i in range(j + 1, n):
            m = [[Fraction(0)] * n for _ in range(n)]
            m[i][j] = Fraction(1)
            mats.append(Matrix(m))
    return mats


def sl_basis_labels(n: int) -> list[str]:
    if n == 2:
        return ["e", "h", "f"]
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(i + 1, n)]
    labels += [f"H{i + 1}" for i in range(n - 1)]
    labels += [f"E{i + 1}{j + 1}" for j in range(n) for i in range(j + 1, n)]
    return labels


def _traceless_coords(m: Matrix, n: int) -> list[Fraction]:
    """Coordinates of a traceless n x n matrix in the sl_basis_matrices order."""
    coords = []
    for i in range(n):
        for j in range(i + 1, n):
            coords.append(m.data[i][j])
    acc = Fraction(0)
    for i in range(n - 1):
        acc += m.data[i][i]
        coords.append(acc)
    for j in range(n):
        for i in range(j + 1, n):
            coords.append(m.data[i][j])
    return coords


def make_simple_lie(spec: SimpleLieSpec) -> StructureTable:
    """Structure table of sl_n from matrix commutators of the fixed basis."""
    n = spec.n
    basis = sl_basis_matrices(n)
    dim = spec.dim
    cells: dict[tuple[int, int], Cell] = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            comm = a.mul(b) - b.mul(a)
            coords = _traceless_coords(comm, n)
            cell = {k: v for k, v in enumerate(coords) if v}
            if cell:
                cells[(i, j)] = cell
    return StructureTable(dim, cells, sl_basis_labels(n))


def make_irrep(spec: IrrepSpec) -> list[Matrix]:
    """Left action matrices, aligned with make_simple_lie's basis order."""
    n = spec.attached_to.n
    if spec.kind == "trivial":
        return [Matrix.zero(1, 1) for _ in range(spec.attached_to.dim)]
    if spec.kind == "natural":
        return list(sl_basis_matrices(n))
    if spec.kind == "dual":
        return [(-m.transpose()) for m in sl_basis_matrices(n)]
    # sl2 highest-weight module V(m): basis v_0..v_m with
    #   h.v_j = (m-2j) v_j,  f.v_j = v_{j+1},  e.v_j = j(m-j+1) v_{j-1}
    m = spec.m
    d = m + 1
    e = [[Fraction(0)] * d for _ in range(d)]
    h = [[Fraction(0)] * d for _ in range(d)]
    f = [[Fraction(0)] * d for _ in range(d)]
    for j in range(d):
        h[j][j] = Fraction(m - 2 * j)
        if j + 1 < d:
            f[j + 1][j] = Fraction(1)
        if j >= 1:
            e[j - 1][j] = Fraction(j * (m - j + 1))
    return [Matrix(e), Matrix(h), Matrix(f)]


def check_left_axiom(table: StructureTable, mats: Sequence[Matrix]) -> list[tuple[int, int]]:
    """Pairs (i, j) where [x_i, x_j].v != x_i.(x_j.v) - x_j.(x_i.v) fails."""
    bad = []
    for i in range(table.dim):
        for j in range(table.dim):
            lhs = _action_of_cell(table._cell(i, j), mats)
            rhs = mats[i].mul(mats[j]) - mats[j].mul(mats[i])
            if lhs != rhs:
                bad.append((i, j))
    return bad


def _action_of_cell(cell: Cell, mats: Sequence[Matrix]) -> Matrix:
    d = mats[0].rows if mats else 0
    out = Matrix.zero(d, d)
    for k, v in cell.items():
        out = out + mats[k].scale(v)
    return out


@dataclass(frozen=True)
class RightModuleAction:
    """Right action matrices R(x): new_m = R(x) . m, one per algebra basis element."""

    algebra_dim: int
    module_dim: int
    mats: tuple[Matrix, ...] = field(default=())

    def __post_init__(self):
        if len(self.mats) != self.algebra_dim:
            raise ValueError("need one matrix per algebra basis element")
        for m in self.mats:
            if m.rows != self.module_dim or m.cols != self.module_dim:
                raise ValueError("action matrices must be module_dim square")

    def matrix_for(self, coeffs: Sequence[Fraction]) -> Matrix:
        out = Matrix.zero(self.module_dim, self.module_dim)
        for j, c in enumerate(coeffs):
            if c:
                out = out + self.mats[j].scale(c)
        return out

    def check_right_axiom(self, table: StructureTable) -> list[tuple[int, int]]:
        """Pairs (i, j) where m.[x_i,x_j] = (m.x_i).x_j - (m.x_j).x_i fails."""
        bad = []
        for i in range(self.algebra_dim):
            for j in range(self.algebra_dim):
                lhs = _action_of_cell(table._cell(i, j), self.mats)
                rhs = self.mats[j].mul(self.mats[i]) - self.mats[i].mul(self.mats[j])
                if lhs != rhs:
                    bad.append((i, j))
        return bad

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats)


def right_from_left(mats: Sequence[Matrix], algebra_dim: int | None = None) -> RightModuleAction:
    """Convert a left action to the right action m.x = -x.m."""
    mats = tuple(-m for m in mats)
    dim = mats[0].rows if mats else 0
    return RightModuleAction(algebra_dim if algebra_dim is not None else len(mats), dim, mats)


def make_irrep_right(spec: IrrepSpec) -> RightModuleAction:
    return right_from_left(make_irrep(spec))


def trivial_action(algebra_dim: int, module_dim: int = 1) -> RightModuleAction:
    return RightModuleAction(
        algebra_dim, module_dim, tuple(Matrix.zero(module_dim, module_dim) for _ in range(algebra_dim))
    )


def external_tensor(
    blocks: Sequence[StructureTable], factors: Sequence[RightModuleAction]
) -> RightModuleAction:
    """Tensor product module over the direct sum of the blocks.

    Factor t must be an action over block t; basis element x of block t acts
    as Id x ... x R_t(x) x ... x Id on the lexicographically ordered tensor
    basis (first factor most significant).
    """
    if len(blocks) != len(factors):
        raise BlockMismatch(f"{len(factors)} factors for {len(blocks)} blocks")
    for b, f in zip(blocks, factors):
        if f.algebra_dim != b.dim:
            raise BlockMismatch("factor action dimension does not match its block")
    dims = [f.module_dim for f in factors]
    total = 1
    for d in dims:
        total *= d
    strides = []
    acc = 1
    for d in reversed(dims):
        strides.append(acc)
        acc *= d
    strides.reverse()
    mats = []
    for t, factor in enumerate(factors):
        for local in range(factor.algebra_dim):
            r = factor.mats[local]
            big = [[Fraction(0)] * total for _ in range(total)]
            stride = strides[t]
            d_t = dims[t]
            block_sz = stride * d_t
            for base in range(0, total, block_sz):
                for inner in range(stride):
                    for a in range(d_t):
                        row = base + a * stride + inner
                        for b in range(d_t):
                            v = r.data[a][b]
                            if v:
                                big[row][base + b * stride + inner] = v
            mats.append(Matrix(big))
    return RightModuleAction(sum(b.dim for b in blocks), total, tuple(mats))


def direct_sum_actions(actions: Sequence[RightModuleAction]) -> RightModuleAction:
    """Block-diagonal sum of module actions over the same algebra."""
    if not actions:
        raise ValueError("need at least one action")
    algebra_dim = actions[0].algebra_dim
    for a in actions:
        if a.algebra_dim != algebra_dim:
            raise ValueError("actions live over different algebras")
    total = sum(a.module_dim for a in actions)
    mats = []
    for j in range(algebra_dim):
        big = [[Fraction(0)] * total for _ in range(total)]
        off = 0
        for a in actions:
            m = a.mats[j]
            for r in range(a.module_dim):
                row = m.data[r]
                for c in range(a.module_dim):
                    if row[c]:
                        big[off + r][off + c] = row[c]
            off += a.module_dim
        mats.append(Matrix(big))
    return RightModuleAction(algebra_dim, total, tuple(mats))
