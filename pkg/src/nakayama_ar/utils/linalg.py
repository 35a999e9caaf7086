"""Exact rational linear algebra.

Matrices are tuples of rows of ``Fraction``; shapes are passed explicitly wherever a side may be
empty. Row reduction, inversion and characteristic polynomials run on sympy's ``DomainMatrix``
over ``QQ``.
"""

from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows: int, cols: int) -> Matrix:
    """Zero matrix of the given shape."""
    return tuple((ZERO,) * cols for _ in range(rows))


def identity(size: int) -> Matrix:
    """Identity matrix."""
    return tuple(tuple(ONE if r == c else ZERO for c in range(size)) for r in range(size))


def is_zero(matrix: Sequence[Sequence[Fraction]]) -> bool:
    """True when every entry vanishes."""
    return all(x == 0 for row in matrix for x in row)


def freeze(rows: Sequence[Sequence[Any]]) -> Matrix:
    """Convert nested sequences of numbers into an immutable ``Fraction`` matrix."""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def transpose(matrix: Matrix, cols: int) -> Matrix:
    """Transpose a matrix with ``cols`` columns."""
    return tuple(tuple(row[c] for row in matrix) for c in range(cols))


def matmul(left: Matrix, right: Matrix, cols: int) -> Matrix:
    """Plain product ``left @ right``; ``cols`` is the column count of ``right``."""
    return tuple(
        tuple(
            sum((row[m] * right[m][c] for m in range(len(right)) if row[m]), ZERO)
            for c in range(cols)
        )
        for row in left
    )


def _to_domain(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    return DomainMatrix(
        [[QQ(x.numerator, x.denominator) for x in row] for row in rows],
        (len(rows), ncols),
        QQ,
    )


def _from_domain(matrix: DomainMatrix) -> list[list[Fraction]]:
    return [[Fraction(int(x.p), int(x.q)) for x in row] for row in matrix.to_Matrix().tolist()]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    """Reduced row echelon form.

    Returns:
        The nonzero rows of the reduced matrix and the pivot column indices
    """
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = _to_domain(rows, ncols).rref()
    pivots = tuple(int(p) for p in pivots)
    return _from_domain(reduced)[: len(pivots)], pivots


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    """Rank of a matrix with ``ncols`` columns."""
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Basis of the right kernel, one vector per free column."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [ZERO] * ncols
        vector[free] = ONE
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r][free]
        basis.append(tuple(vector))
    return basis


def independent_columns(vectors: Sequence[Vector], dim: int) -> list[int]:
    """Indices of a maximal linearly independent subfamily, earliest vectors preferred."""
    if not vectors or dim == 0:
        return []
    rows = [[v[i] for v in vectors] for i in range(dim)]
    return list(rref(rows, len(vectors))[1])


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], ncols: int) -> Vector | None:
    """One solution of ``rows @ x = rhs`` (free variables zero), or None when inconsistent."""
    if not rows:
        return (ZERO,) * ncols
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    reduced, pivots = rref(augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    solution = [ZERO] * ncols
    for r, p in enumerate(pivots):
        solution[p] = reduced[r][ncols]
    return tuple(solution)


def inverse(matrix: Matrix) -> Matrix:
    """Inverse of a square invertible matrix."""
    if not matrix:
        return ()
    return freeze(_from_domain(_to_domain(matrix, len(matrix)).inv()))


def left_inverse(columns: Sequence[Vector], dim: int) -> tuple[tuple[int, ...], Matrix]:
    """Coordinates with respect to independent ``columns`` of length ``dim``.

    Returns ``(rows, K)`` such that any ``v`` in the span satisfies
    ``v = sum(x[j] * columns[j])`` with ``x = K @ v[rows]``.
    """
    if not columns:
        return (), ()
    _, pivots = rref([list(c) for c in columns], dim)
    if len(pivots) != len(columns):
        raise ValueError("columns are linearly dependent")
    square = tuple(tuple(columns[j][p] for j in range(len(columns))) for p in pivots)
    return pivots, inverse(square)


def coordinates(selector: tuple[tuple[int, ...], Matrix], vector: Sequence[Fraction]) -> Vector:
    """Apply a left inverse produced by :func:`left_inverse`."""
    rows, inv = selector
    picked = [vector[p] for p in rows]
    return tuple(sum((row[i] * picked[i] for i in range(len(picked)) if row[i]), ZERO) for row in inv)


def charpoly(matrix: Matrix) -> list[Fraction]:
    """Characteristic polynomial coefficients, leading coefficient first."""
    if not matrix:
        return [ONE]
    coefficients = _to_domain(matrix, len(matrix)).charpoly()
    return [Fraction(int(QQ.numer(c)), int(QQ.denom(c))) for c in coefficients]
