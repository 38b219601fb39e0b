"""Exact small-matrix helpers on nested lists of ints or Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def congruent(A: Sequence[Sequence], U: Sequence[Sequence]) -> Matrix:
    """U^T A U."""
    return matmul(matmul(transpose(U), A), U)


def det(A: Sequence[Sequence]):
    """Exact determinant by fraction-free Bareiss elimination.

    Integer input gives an int; Fraction input gives a Fraction.
    """
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    integral = all(isinstance(x, int) for row in M for x in row)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num // prev if integral else Fraction(num) / prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def leading_minors(A: Sequence[Sequence]) -> list:
    return [det([row[:k] for row in A[:k]]) for k in range(1, len(A) + 1)]


def is_positive_definite(A: Sequence[Sequence]) -> bool:
    return all(m > 0 for m in leading_minors(A))


def is_positive_semidefinite(A: Sequence[Sequence]) -> bool:
    """All principal minors nonnegative (fine for the k <= 4 sizes used here)."""
    from itertools import combinations

    n = len(A)
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            if det([[A[i][j] for j in idx] for i in idx]) < 0:
                return False
    return True


def is_symmetric(A: Sequence[Sequence]) -> bool:
    n = len(A)
    return all(len(row) == n for row in A) and all(
        A[i][j] == A[j][i] for i in range(n) for j in range(i)
    )
