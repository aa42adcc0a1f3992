"""Exact linear algebra over the rationals.

Matrices of `fractions.Fraction`, canonical subspaces (reduced row echelon
bases, so equal subspaces have identical representations), kernels, solving,
and rational spectral splitting. All row reduction funnels through the
integer kernels in ``leibniz_lab._kernel``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ._kernel import bareiss_det_int, rref_int

Vector = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(values: Iterable) -> Vector:
    return tuple(_frac(x) for x in values)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(a: Vector, s) -> Vector:
    s = _frac(s)
    return tuple(x * s for x in a)


def vec_is_zero(a: Vector) -> bool:
    return not any(a)


def _row_to_int(row: Sequence[Fraction]) -> list[int]:
    # Clear denominators; row scaling preserves row space / kernels / RREF.
    mult = 1
    for x in row:
        d = x.denominator
        mult = mult // gcd(mult, d) * d
    return [int(x * mult) for x in row]


def _rows_to_int(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    return [_row_to_int(r) for r in rows]


class Matrix:
    """Immutable dense rational matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(_frac(x) for x in r) for r in data)
        self.data = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else (cols or 0)
        for r in rows:
            if len(r) != self.cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return cls([[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        m = [[Fraction(0)] * n for _ in range(n)]
        for i, v in enumerate(values):
            m[i][i] = _frac(v)
        return cls(m)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        if not columns:
            return cls.zero(0, 0)
        n = len(columns[0])
        return cls([[_frac(col[i]) for col in columns] for i in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.data])

    def scale(self, s) -> "Matrix":
        s = _frac(s)
        return Matrix([[a * s for a in r] for r in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = Fraction(0)
        out = [[zero] * other.cols for _ in range(self.rows)]
        odata = other.data
        for i, row in enumerate(self.data):
            orow = out[i]
            for k, a in enumerate(row):
                if a:  # sparsity-aware inner loop
                    brow = odata[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return Matrix(out)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        out = []
        for row in self.data:
            s = Fraction(0)
            for a, x in zip(row, v):
                if a and x:
                    s += a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix.zero(self.cols, 0)
        return Matrix(list(zip(*self.data)), cols=self.rows)

    def trace(self) -> Fraction:
        return sum((self.data[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def is_diagonal(self) -> bool:
        return all(
            not x for i, r in enumerate(self.data) for j, x in enumerate(r) if i != j
        )

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def row(self, i: int) -> Vector:
        return self.data[i]

    def flatten(self) -> Vector:
        return tuple(x for r in self.data for x in r)

    def rank(self) -> int:
        return rref(self)[2]

    def inverse(self) -> "Matrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("not square")
        aug = [list(r) + [Fraction(1 if i == j else 0) for j in range(n)]
               for i, r in enumerate(self.data)]
        red, pivots, rank = rref(Matrix(aug))
        if rank < n or any(p >= n for p in pivots):
            raise ValueError("singular matrix")
        return Matrix([red.data[i][n:] for i in range(n)])


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Unique reduced row echelon form; returns (rref, pivot columns, rank)."""
    if m.rows == 0 or m.cols == 0:
        return m, (), 0
    pivots, out, denoms = rref_int(_rows_to_int(m.data), m.cols)
    rank = len(pivots)
    rows = [tuple(Fraction(x, d) for x in row) for row, d in zip(out, denoms)]
    rows.extend([zero_vec(m.cols)] * (m.rows - rank))
    return Matrix(rows), tuple(pivots), rank


class Subspace:
    """Subspace of Q^n in canonical form: basis rows are a (full) RREF."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Sequence[Vector], pivots: Sequence[int]):
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Sequence[Sequence]) -> "Subspace":
        vectors = [vec(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length != ambient dimension")
        if not vectors:
            return cls(ambient_dim, (), ())
        red, pivots, rank = rref(Matrix(vectors))
        return cls(ambient_dim, red.data[:rank], pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(
            ambient_dim,
            [unit_vec(ambient_dim, i) for i in range(ambient_dim)],
            range(ambient_dim),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Remainder of v after eliminating this subspace's pivot coordinates."""
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector length != ambient dimension")
        for p, b in zip(self.pivots, self.basis):
            c = v[p]
            if c:
                v = tuple(x - c * y for x, y in zip(v, b))
        return v

    def contains(self, v: Sequence[Fraction]) -> bool:
        return vec_is_zero(self.reduce(v))

    def coords(self, v: Sequence[Fraction]) -> Vector | None:
        """Coordinates of v in the canonical basis, or None if v is outside."""
        v = vec(v)
        cs = tuple(v[p] for p in self.pivots)
        rebuilt = zero_vec(self.ambient_dim)
        for c, b in zip(cs, self.basis):
            if c:
                rebuilt = vec_add(rebuilt, vec_scale(b, c))
        return cs if rebuilt == v else None

    def embed(self, coords: Sequence[Fraction]) -> Vector:
        out = zero_vec(self.ambient_dim)
        for c, b in zip(coords, self.basis):
            if c:
                out = vec_add(out, vec_scale(b, _frac(c)))
        return out

    def sum_with(self, other: "Subspace") -> "Subspace":
        return Subspace.from_vectors(self.ambient_dim, list(self.basis) + list(other.basis))

    def complement_coords(self) -> tuple[int, ...]:
        """Coordinates not used as pivots; they span a complement."""
        pset = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in pset)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.basis, cols=self.ambient_dim)


class RowSpaceBuilder:
    """Incremental row space, kept in full RREF at every step."""

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def residue(self, v: Sequence[Fraction]) -> list[Fraction]:
        w = [_frac(x) for x in v]
        for p, row in zip(self._pivots, self._rows):
            c = w[p]
            if c:
                for i, y in enumerate(row):
                    if y:
                        w[i] -= c * y
        return w

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self.residue(v))

    def add(self, v: Sequence[Fraction]) -> bool:
        """Insert v; returns True when the dimension grew."""
        w = self.residue(v)
        piv = next((i for i, x in enumerate(w) if x), None)
        if piv is None:
            return False
        inv = 1 / w[piv]
        w = [x * inv for x in w]
        for row in self._rows:
            c = row[piv]
            if c:
                for i, y in enumerate(w):
                    if y:
                        row[i] -= c * y
        at = next((t for t, p in enumerate(self._pivots) if p > piv), len(self._pivots))
        self._rows.insert(at, w)
        self._pivots.insert(at, piv)
        return True

    def to_subspace(self) -> Subspace:
        return Subspace(self.ambient_dim, [tuple(r) for r in self._rows], self._pivots)


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of {v : m v = 0}."""
    if m.cols == 0:
        return Subspace.zero(0)
    if m.rows == 0:
        return Subspace.full(m.cols)
    red, pivots, rank = rref(m)
    pset = set(pivots)
    free = [j for j in range(m.cols) if j not in pset]
    vectors = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red.data[i][f]
        vectors.append(tuple(v))
    return Subspace.from_vectors(m.cols, vectors)


def solve(m: Matrix, b: Sequence[Fraction]) -> Vector | None:
    """One exact solution of m x = b (free variables at 0), or None."""
    if len(b) != m.rows:
        raise ValueError("shape mismatch")
    aug = Matrix([list(r) + [_frac(x)] for r, x in zip(m.data, b)]) if m.rows else None
    if aug is None:
        return zero_vec(m.cols)
    red, pivots, rank = rref(aug)
    if any(p == m.cols for p in pivots):
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = red.data[i][m.cols]
    return tuple(x)


# ---------------------------------------------------------------------------
# Characteristic polynomial and rational spectral splitting
# ---------------------------------------------------------------------------


def _char_poly_int(int_rows: list[list[int]]) -> list[int]:
    """Coefficients [a0..an] of det(xI - B), monic, by interpolation.

    Evaluates the polynomial at x = 0..n with fraction-free determinants and
    runs exact Newton interpolation (forward differences on unit steps).
    """
    n = len(int_rows)
    if n == 0:
        return [1]
    values = []
    for x in range(n + 1):
        m = [list(r) for r in int_rows]
        for i in range(n):
            m[i][i] = x - m[i][i]
            for j in range(n):
                if j != i:
                    m[i][j] = -m[i][j]
        values.append(bareiss_det_int(m))
    # Forward differences: p(x) = sum_k diff_k(0) * C(x, k).
    diffs = [values[:]]
    for _ in range(n):
        prev = diffs[-1]
        diffs.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    coeffs = [Fraction(0)] * (n + 1)
    falling = [Fraction(1)]  # x(x-1)...(x-k+1) expanded, low degree first
    fact = 1
    for k in range(n + 1):
        d = diffs[k][0]
        if d:
            c = Fraction(d, fact)
            for i, a in enumerate(falling):
                coeffs[i] += c * a
        # falling <- falling * (x - k)
        falling = [Fraction(0)] + falling
        for i in range(len(falling) - 1):
            falling[i] -= k * falling[i + 1]
        fact *= k + 1
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("characteristic polynomial interpolation not integral")
        out.append(c.numerator)
    if out[-1] != 1:
        raise ArithmeticError("characteristic polynomial not monic")
    return out


def char_poly(m: Matrix) -> list[Fraction]:
    """Exact characteristic polynomial det(xI - m), low degree first, monic."""
    n = m.rows
    if n != m.cols:
        raise ValueError("not square")
    s = 1
    for r in m.data:
        for x in r:
            d = x.denominator
            s = s // gcd(s, d) * d
    int_rows = [[int(x * s) for x in r] for r in m.data]
    coeffs_scaled = _char_poly_int(int_rows)  # char poly of s*m
    # det(xI - m) = det((sx)I - s m) / s^n
    return [Fraction(c, s ** (n - i)) for i, c in enumerate(coeffs_scaled)]


class NonSplit:
    """Marker value: the rational eigenspaces found do not fill the space."""

    __slots__ = ("pairs", "dim", "note")

    def __init__(self, pairs, dim, note=""):
        self.pairs = pairs
        self.dim = dim
        self.note = note

    def __repr__(self) -> str:  # pragma: no cover
        found = sum(s.dim for _, s in self.pairs)
        return f"NonSplit({found}/{self.dim} split{'; ' + self.note if self.note else ''})"


def _factor_int(n: int) -> dict[int, int]:
    """Prime factorization of n > 0; lazy sympy fallback past trial division."""
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f < 10 ** 6:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        if n < 10 ** 12:  # no factor below 1e6, so prime
            out[n] = out.get(n, 0) + 1
        else:
            from sympy import factorint

            for p, e in factorint(n).items():
                out[int(p)] = out.get(int(p), 0) + int(e)
    return out


def _divisors(n: int) -> list[int]:
    if n == 0:
        raise ValueError("divisors of 0")
    divs = [1]
    for p, e in _factor_int(abs(n)).items():
        if len(divs) * (e + 1) > 500_000:
            raise RuntimeError("divisor search too large for exact root finding")
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return divs


def _poly_eval(coeffs: Sequence, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_primitive(coeffs: list[Fraction]) -> list[int]:
    mult = 1
    for c in coeffs:
        d = c.denominator
        mult = mult // gcd(mult, d) * d
    ints = [int(c * mult) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    db = len(b) - 1
    inv = 1 / b[-1]
    while len(a) - 1 >= db and a:
        q = a[-1] * inv
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] -= q * b[i]
        while a and not a[-1]:
            a.pop()
    return a


def _squarefree_part(coeffs: list[int]) -> list[int]:
    """Primitive integer polynomial with the same roots, multiplicity one."""
    deriv = [Fraction(i * c) for i, c in enumerate(coeffs)][1:]
    a = [Fraction(c) for c in coeffs]
    b = deriv
    while any(b):
        r = _poly_rem(a, b)
        a, b = b, [Fraction(c) for c in _poly_primitive(r)] if any(r) else []
    g = _poly_primitive(a)
    if len(g) <= 1:
        return _poly_primitive([Fraction(c) for c in coeffs])
    # exact division coeffs / g
    num = [Fraction(c) for c in coeffs]
    quo = [Fraction(0)] * (len(num) - len(g) + 1)
    inv = Fraction(1, g[-1])
    work = list(num)
    for i in range(len(quo) - 1, -1, -1):
        q = work[i + len(g) - 1] * inv
        quo[i] = q
        if q:
            for j, gc in enumerate(g):
                work[i + j] -= q * gc
    if any(work):
        raise ArithmeticError("inexact squarefree division")
    return _poly_primitive(quo)


def rational_roots(coeffs: list[int]) -> list[Fraction]:
    """All rational roots of an integer polynomial (each listed once)."""
    if not any(coeffs):
        raise ValueError("zero polynomial")
    k0 = next(i for i, c in enumerate(coeffs) if c)
    roots = [Fraction(0)] if k0 > 0 else []
    reduced = coeffs[k0:]
    if len(reduced) == 1:
        return roots
    sf = _squarefree_part(reduced)
    lead, trail = sf[-1], sf[0]
    if trail == 0:
        raise AssertionError("squarefree part lost its nonzero trailing coefficient")
    for p in _divisors(trail):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and _poly_eval(reduced, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def rational_eigensplit(m: Matrix):
    """Split Q^n by the rational eigenvalues of m.

    Returns a list of (eigenvalue, eigenspace) sorted by eigenvalue when the
    eigenspace dimensions fill the whole space, else a NonSplit marker
    carrying whatever was found.
    """
    n = m.rows
    if n != m.cols:
        raise ValueError("not square")
    if n == 0:
        return []
    s = 1
    for r in m.data:
        for x in r:
            d = x.denominator
            s = s // gcd(s, d) * d
    int_rows = [[int(x * s) for x in r] for r in m.data]
    coeffs = _char_poly_int(int_rows)
    pairs = []
    total = 0
    for root in rational_roots(coeffs):
        # Integer roots of det(xI - s*m); eigenvalue of m is root / s.
        if root.denominator != 1:
            continue
        r = root.numerator
        shifted = Matrix(
            [
                [Fraction(int_rows[i][j] - (r if i == j else 0)) for j in range(n)]
                for i in range(n)
            ]
        )
        space = kernel_basis(shifted)
        if space.dim:
            pairs.append((Fraction(r, s), space))
            total += space.dim
    pairs.sort(key=lambda t: t[0])
    if total < n:
        return NonSplit(pairs, n)
    return pairs


def minor_rank(m: Matrix) -> int:
    """Rank by exhaustive minor expansion; an independent oracle for tests."""
    best = 0
    for k in range(1, min(m.rows, m.cols) + 1):
        found = False
        for rows in itertools.combinations(range(m.rows), k):
            for cols in itertools.combinations(range(m.cols), k):
                sub = [[m.data[i][j] for j in cols] for i in rows]
                if _det_fraction(sub):
                    found = True
                    break
            if found:
                break
        if found:
            best = k
        else:
            break
    return best


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, x in enumerate(rows[0]):
        if x:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = x * _det_fraction(minor)
            total += term if j % 2 == 0 else -term
    return total
