"""Local intersection multiplicities alpha_p(Q).

For odd p the Gross-Keating invariants of a ternary form are read off a
diagonalization over Z_p, done here in exact rational arithmetic with
transformations whose entries have denominators prime to p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .arith import is_prime
from .clifford import TernaryForm
from .errors import InvalidInput
from .matrix import det, identity

_INF = float("inf")


def _val(x: Fraction, p: int) -> float:
    if x == 0:
        return _INF
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def diagonalize_padic(gram: Sequence[Sequence[int]], p: int) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Diagonalize a symmetric matrix over Z_p, p odd.

    Returns (diag, U) with U^T * gram * U = diag(diag) exactly; every entry of
    U has denominator prime to p and det U = +-1.
    """
    if p == 2 or not is_prime(p):
        raise InvalidInput(f"p-adic diagonalization needs an odd prime, got {p}")
    n = len(gram)
    A = [[Fraction(x) for x in row] for row in gram]
    U = [[Fraction(x) for x in row] for row in identity(n)]

    def add_col(dst: int, src: int, k: Fraction) -> None:
        # basis change e_dst <- e_dst + k e_src, applied as U <- U E, A <- E^T A E
        for r in range(n):
            U[r][dst] += k * U[r][src]
            A[r][dst] += k * A[r][src]
        for c in range(n):
            A[dst][c] += k * A[src][c]

    def swap(i: int, j: int) -> None:
        if i == j:
            return
        for row in U:
            row[i], row[j] = row[j], row[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        A[i], A[j] = A[j], A[i]

    for k in range(n):
        best = None
        for i in range(k, n):
            for j in range(i, n):
                v = _val(A[i][j], p)
                # prefer diagonal entries on ties
                key = (v, i != j)
                if best is None or key < best[0]:
                    best = (key, i, j)
        (v, offdiag), i, j = best
        if v == _INF:
            raise InvalidInput("degenerate form")
        if offdiag:
            # v(A_ij) < v(A_ii), v(A_jj) and p odd, so the new diagonal
            # entry A_ii + 2 A_ij + A_jj has valuation exactly v(A_ij)
            add_col(i, j, Fraction(1))
        swap(k, i)
        piv = A[k][k]
        for r in range(k + 1, n):
            if A[r][k] != 0:
                add_col(r, k, -A[r][k] / piv)
    diag = [A[i][i] for i in range(n)]
    assert all(A[i][j] == 0 for i in range(n) for j in range(n) if i != j)
    return diag, U


@dataclass(frozen=True)
class GKInvariants:
    p: int
    a: tuple[int, int, int]

    @property
    def a1(self) -> int:
        return self.a[0]

    @property
    def a2(self) -> int:
        return self.a[1]

    @property
    def a3(self) -> int:
        return self.a[2]


def gk_invariants(form: Union[TernaryForm, Sequence[Sequence[int]]], p: int) -> GKInvariants:
    """Sorted p-adic valuations of a Z_p-diagonalization of a ternary form (p odd)."""
    if p == 2:
        raise InvalidInput("Gross-Keating invariants at p = 2 are not supported")
    gram = form.gram if isinstance(form, TernaryForm) else [list(r) for r in form]
    if len(gram) != 3:
        raise InvalidInput("ternary form expected")
    if det(gram) == 0:
        raise InvalidInput("degenerate form")
    diag, _ = diagonalize_padic(gram, p)
    vals = sorted(int(_val(d, p)) for d in diag)
    return GKInvariants(p, (vals[0], vals[1], vals[2]))


def alpha_unram(inv: GKInvariants) -> Fraction:
    """Multiplicity at a prime unramified in the indefinite algebra, from (a1=0, a2, a3)."""
    a1, a2, a3 = inv.a
    p = inv.p
    if a1 != 0:
        raise InvalidInput(f"alpha_unram needs a1 = 0, got {inv.a}")
    if a2 % 2 == 0:
        total = Fraction(a3 - a2 + 1, 2) * p ** (a2 // 2)
        top = (a2 - 2) // 2
    else:
        total = Fraction(0)
        top = (a2 - 1) // 2
    for i in range(top + 1):
        total += (a2 + a3 - 4 * i) * p**i
    return total


def alpha_ram(v: int) -> int:
    """Multiplicity at a prime ramified in the indefinite algebra: v_p(delta)/2."""
    if v < 0 or v % 2:
        raise InvalidInput(f"alpha_ram needs a nonnegative even valuation, got {v}")
    return v // 2


def alpha_coprime(v_minus: int) -> Fraction:
    """(v_p(M-) + 1)/2, valid at every p when gcd(D1, D2) = 1."""
    if v_minus < 0:
        raise InvalidInput("valuation must be nonnegative")
    return Fraction(v_minus + 1, 2)
