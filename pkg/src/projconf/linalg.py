"""Exact rational linear algebra and projective point configurations.

All arithmetic is over :class:`fractions.Fraction`; nothing is ever rounded.
Point labels in the public API are 1-based, matching the index set
``[m] = {1, ..., m}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Integral, Rational
from typing import Iterable, Sequence

from .errors import (
    DecimalLiteralError,
    DependentBasisError,
    InvalidPointError,
    NotInSpanError,
    ShapeError,
)

Scalar = Fraction


def to_scalar(x) -> Fraction:
    """Coerce ``x`` to an exact Fraction. Floats and decimal strings are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidPointError(f"boolean is not a scalar: {x!r}")
    if isinstance(x, (Integral, Rational)):
        return Fraction(int(x.numerator), int(x.denominator))
    if isinstance(x, str):
        s = x.strip()
        if "." in s or "e" in s.lower():
            raise DecimalLiteralError(f"decimal literal {x!r} is not exact; write it as a/b", value=x)
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidPointError(f"cannot parse rational {x!r}", value=x) from exc
    raise InvalidPointError(f"unsupported scalar type {type(x).__name__}: {x!r}")


def _check_shape(matrix, shape):
    rows = [list(r) for r in matrix]
    if shape is not None:
        nrows, ncols = shape
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ShapeError(
                f"declared shape {nrows}x{ncols} does not match entries",
                declared=[nrows, ncols],
            )
    elif rows and any(len(r) != len(rows[0]) for r in rows):
        raise ShapeError("ragged matrix: rows have different lengths")
    return rows


def integer_rows(matrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators. Row scaling preserves rank."""
    out = []
    for row in matrix:
        row = [to_scalar(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def _bareiss(a: list[list[int]]) -> tuple[int, list[list[int]], int]:
    """Fraction-free echelon form in place. Returns (rank, a, swap_sign)."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    prev = 1
    sign = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for k in range(c + 1, ncols):
                row_i[k] = (p * row_i[k] - f * row_r[k]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r, a, sign


def rank(matrix: Sequence[Sequence], shape: tuple[int, int] | None = None) -> int:
    """Rank of a rational matrix given as a list of rows."""
    rows = _check_shape(matrix, shape)
    if not rows or not rows[0]:
        return 0
    r, _, _ = _bareiss(integer_rows(rows))
    return r


def rank_of_vectors(vectors: Iterable[Sequence]) -> int:
    """Dimension of the span of the given vectors."""
    vs = [list(v) for v in vectors]
    if not vs:
        return 0
    return rank(vs)


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    rows = _check_shape(matrix, None)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ShapeError("determinant needs a square matrix", shape=[n, len(rows[0])])
    scaled = [[to_scalar(x) for x in r] for r in rows]
    denom = 1
    ints = []
    for row in scaled:
        d = lcm(*(x.denominator for x in row))
        denom *= d
        ints.append([int(x * d) for x in row])
    r, a, sign = _bareiss(ints)
    if r < n:
        return Fraction(0)
    return Fraction(sign * a[n - 1][n - 1], denom)


def minor(matrix: Sequence[Sequence], row_indices: Sequence[int], col_indices: Sequence[int]) -> Fraction:
    """Determinant of the submatrix on the given (0-based) rows and columns.

    Column order matters: swapping two columns flips the sign.
    """
    if len(row_indices) != len(col_indices):
        raise ShapeError(
            "minor needs as many rows as columns",
            rows=list(row_indices),
            cols=list(col_indices),
        )
    rows = _check_shape(matrix, None)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    if any(not 0 <= i < nrows for i in row_indices) or any(not 0 <= j < ncols for j in col_indices):
        raise ShapeError("minor index out of range", shape=[nrows, ncols])
    return determinant([[rows[i][j] for j in col_indices] for i in row_indices])


def solve_in_basis(basis: Sequence[Sequence], target: Sequence) -> list[Fraction]:
    """Unique coefficients c with sum c_k basis_k == target.

    Raises DependentBasisError or NotInSpanError.
    """
    k = len(basis)
    n = len(target)
    aug = [[to_scalar(basis[j][i]) for j in range(k)] + [to_scalar(target[i])] for i in range(n)]
    r = 0
    pivots = []
    for c in range(k + 1):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            if c < k:
                raise DependentBasisError("basis vectors are linearly dependent", column=c)
            continue
        if c == k:
            raise NotInSpanError("target does not lie in the span of the basis")
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    return [aug[i][k] for i in range(k)]


def normalize_vector(v: Sequence) -> tuple[Fraction, ...]:
    """Scale so the first nonzero entry is 1."""
    v = tuple(to_scalar(x) for x in v)
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        raise InvalidPointError("the zero vector is not a projective point")
    return tuple(x / lead for x in v)


def primitive_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Integer vector on the same line as ``v`` with coprime entries and positive lead."""
    v = [to_scalar(x) for x in v]
    d = lcm(*(x.denominator for x in v))
    ints = [int(x * d) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise InvalidPointError("the zero vector is not a projective point")
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    return [
        [sum((to_scalar(a[i][k]) * to_scalar(b[k][j]) for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


@dataclass(frozen=True, eq=False)
class ProjConfig:
    """An ordered tuple of ``m`` points of ``P^{n-1}``, stored as representative columns.

    Equality is projective: two configurations are equal when each column
    agrees up to a nonzero scalar.
    """

    columns: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(to_scalar(x) for x in c) for c in self.columns)
        if not cols:
            raise ShapeError("a configuration needs at least one point")
        n = len(cols[0])
        if n == 0 or any(len(c) != n for c in cols):
            raise ShapeError("all points must have the same nonzero dimension")
        for i, c in enumerate(cols, start=1):
            if not any(c):
                raise InvalidPointError(f"point {i} is the zero vector", point=i)
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_points(cls, points: Iterable[Sequence]) -> "ProjConfig":
        return cls(tuple(tuple(p) for p in points))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "ProjConfig":
        """Build from an ``n x m`` matrix whose columns are the points."""
        return cls(tuple(tuple(c) for c in zip(*rows)))

    @property
    def n(self) -> int:
        return len(self.columns[0])

    @property
    def m(self) -> int:
        return len(self.columns)

    def rows(self) -> list[list[Fraction]]:
        return transpose(self.columns)

    def point(self, i: int) -> tuple[Fraction, ...]:
        """Column of the point labelled ``i`` (1-based)."""
        if not 1 <= i <= self.m:
            raise ShapeError(f"point label {i} outside 1..{self.m}")
        return self.columns[i - 1]

    def normalized(self) -> "ProjConfig":
        return ProjConfig(tuple(normalize_vector(c) for c in self.columns))

    def act(self, g: Sequence[Sequence]) -> "ProjConfig":
        """Apply the matrix ``g`` to every point."""
        if len(g) != self.n or any(len(r) != self.n for r in g):
            raise ShapeError(f"group element must be {self.n}x{self.n}")
        return ProjConfig.from_matrix(matmul(g, self.rows()))

    def permuted(self, order: Sequence[int]) -> "ProjConfig":
        """Configuration whose k-th point is point ``order[k]`` of this one."""
        if sorted(order) != list(range(1, self.m + 1)):
            raise ShapeError(f"{list(order)} is not a permutation of 1..{self.m}")
        return ProjConfig(tuple(self.columns[i - 1] for i in order))

    def span_rank(self, labels: Iterable[int] | None = None) -> int:
        labels = range(1, self.m + 1) if labels is None else labels
        return rank_of_vectors(self.point(i) for i in labels)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "points": [[_scalar_str(x) for x in c] for c in self.columns],
        }

    def __eq__(self, other):
        if not isinstance(other, ProjConfig):
            return NotImplemented
        return self.normalized().columns == other.normalized().columns

    def __hash__(self):
        return hash(self.normalized().columns)

    def __repr__(self):
        pts = ", ".join("(" + ",".join(_scalar_str(x) for x in c) + ")" for c in self.columns)
        return f"ProjConfig[{pts}]"


def _scalar_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_str(x) -> str:
    return _scalar_str(to_scalar(x))


def coordinates_in_span(config: ProjConfig, basis_indices: Sequence[int], target: int) -> list[Fraction]:
    """Coefficients of point ``target`` in the basis given by ``basis_indices`` (1-based)."""
    basis = [config.point(i) for i in basis_indices]
    try:
        return solve_in_basis(basis, config.point(target))
    except DependentBasisError as exc:
        raise DependentBasisError(
            f"points {list(basis_indices)} are linearly dependent", basis=list(basis_indices)
        ) from exc
    except NotInSpanError as exc:
        raise NotInSpanError(
            f"point {target} is not in the span of points {list(basis_indices)}",
            basis=list(basis_indices),
            target=target,
        ) from exc


def unit_vector(n: int, i: int) -> tuple[Fraction, ...]:
    """The standard basis vector e_i of K^n (1-based)."""
    return tuple(Fraction(int(k == i - 1)) for k in range(n))
