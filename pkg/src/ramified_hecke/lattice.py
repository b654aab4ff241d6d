"""Small exact integer/rational linear algebra used by the root datum code.

Matrices are plain tuples of row tuples of ints.  Everything here is sized for
rank <= 8 inputs, so clarity wins over speed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

IntMatrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(m: IntMatrix, v: Sequence[int]) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def vecmat(v: Sequence[int], m: IntMatrix) -> Vector:
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0])))


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def matpow(m: IntMatrix, k: int) -> IntMatrix:
    out = identity(len(m))
    for _ in range(k):
        out = matmul(out, m)
    return out


def _to_sympy(m: IntMatrix) -> Matrix:
    return Matrix([list(r) for r in m])


def _from_sympy(m: Matrix) -> IntMatrix:
    return tuple(tuple(int(m[i, j]) for j in range(m.cols)) for i in range(m.rows))


def det(m: IntMatrix) -> int:
    if not m:
        return 1
    return int(_to_sympy(m).det())


def inverse(m: IntMatrix) -> tuple[tuple[Fraction, ...], ...]:
    inv = _to_sympy(m).inv()
    return tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols))
        for i in range(inv.rows)
    )


def integer_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix; raises if the inverse is not integral."""
    inv = inverse(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in row) for row in inv)


def smith(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(D, U, V)`` with ``U * m * V == D`` diagonal and U, V unimodular."""
    d, u, v = smith_normal_decomp(_to_sympy(m))
    return _from_sympy(d), _from_sympy(u), _from_sympy(v)


def solve_rational(columns: Sequence[Sequence[int]], target: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Coefficients ``c`` with ``sum(c_i * columns[i]) == target``, or None.

    The columns must be linearly independent; the solution is then unique.
    """
    n = len(columns)
    if n == 0:
        return () if all(x == 0 for x in target) else None
    rows = len(target)
    # Gaussian elimination on the augmented system.
    aug = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][n] != 0 for i in range(r, rows)):
        return None
    if len(pivots) != n:
        raise ValueError("columns are linearly dependent")
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    return tuple(sol)


def rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return int(_to_sympy(as_matrix(rows)).rank())
