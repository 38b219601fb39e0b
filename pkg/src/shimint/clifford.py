"""The order S_n = Z[g1, g2] inside the Clifford algebra of D1 x^2 + 2n xy + D2 y^2,
its ternary norm form Q_n, and the splitting of its reduced discriminant."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import factorize, kronecker
from .errors import ConsistencyError, InvalidInput
from .matrix import det
from .quaternion import Order, QuaternionAlgebra


def _check_parity(D1: int, D2: int, n: int) -> None:
    for D in (D1, D2):
        if D % 4 not in (0, 1):
            raise InvalidInput(f"{D} is not a discriminant (must be 0 or 1 mod 4)")
    if (n - D1 * D2) % 2:
        raise InvalidInput(f"n={n} must have the parity of D1*D2={D1 * D2}")


def delta_n(D1: int, D2: int, n: int) -> int:
    """Reduced discriminant (n^2 - D1*D2)/4 of S_n."""
    _check_parity(D1, D2, n)
    return (n * n - D1 * D2) // 4


@dataclass(frozen=True)
class TernaryForm:
    """a x^2 + b y^2 + c z^2 + d xy + e xz + f yz."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    @property
    def coefficients(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    @property
    def gram(self) -> list[list[int]]:
        """Gram matrix of B(u, v) = Q(u + v) - Q(u) - Q(v)."""
        return [
            [2 * self.a, self.d, self.e],
            [self.d, 2 * self.b, self.f],
            [self.e, self.f, 2 * self.c],
        ]

    def __call__(self, x: int, y: int, z: int) -> int:
        return (
            self.a * x * x + self.b * y * y + self.c * z * z
            + self.d * x * y + self.e * x * z + self.f * y * z
        )

    @classmethod
    def from_gram(cls, G: Sequence[Sequence[int]]) -> "TernaryForm":
        if any(G[i][i] % 2 for i in range(3)):
            raise ValueError("Gram matrix must have even diagonal")
        return cls(G[0][0] // 2, G[1][1] // 2, G[2][2] // 2, G[0][1], G[0][2], G[1][2])

    def determinant(self) -> int:
        return det(self.gram)


def qn_form(D1: int, D2: int, n: int) -> TernaryForm:
    """Q_n(x, y, z) = Nr(x + y g1 + z g2)."""
    _check_parity(D1, D2, n)
    return TernaryForm(
        1,
        (D1 * D1 - D1) // 4,
        (D2 * D2 - D2) // 4,
        D1,
        D2,
        (D1 * D2 - n) // 2,
    )


@dataclass(frozen=True)
class CliffordOrder:
    D1: int
    D2: int
    n: int
    order: Order
    table: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def algebra(self) -> QuaternionAlgebra:
        return self.order.algebra

    @property
    def g1(self):
        return self.order.basis[1]

    @property
    def g2(self):
        return self.order.basis[2]

    def element(self, coords: Sequence[int]):
        return self.order.element(coords)

    def norm(self, coords: Sequence[int]) -> Fraction:
        return self.algebra.norm(self.element(coords))

    def trace(self, coords: Sequence[int]) -> Fraction:
        return self.algebra.trace(self.element(coords))

    def multiply(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        """Product of two elements given by coordinates on (1, g1, g2, g1g2)."""
        out = [0, 0, 0, 0]
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                if xi and yj:
                    for k, c in enumerate(self.table[i][j]):
                        out[k] += xi * yj * c
        return out

    def is_associative(self) -> bool:
        basis = [[int(i == j) for j in range(4)] for i in range(4)]
        return all(
            self.multiply(self.multiply(x, y), z) == self.multiply(x, self.multiply(y, z))
            for x in basis
            for y in basis
            for z in basis
        )

    def reduced_discriminant(self) -> int:
        return self.order.reduced_discriminant()


def build_Sn(D1: int, D2: int, n: int) -> CliffordOrder:
    """Build S_n with basis (1, g1, g2, g1 g2), g_j = (D_j + e_j)/2."""
    _check_parity(D1, D2, n)
    B = QuaternionAlgebra(D1, D2, n)
    h = Fraction(1, 2)
    g1 = (D1 * h, h, 0, 0)
    g2 = (D2 * h, 0, h, 0)
    g12 = B.mul(g1, g2)
    order = Order.from_basis(B, [(1, 0, 0, 0), g1, g2, g12])
    table = order.structure_constants()
    return CliffordOrder(
        D1, D2, n, order, tuple(tuple(tuple(c) for c in row) for row in table)
    )


@dataclass(frozen=True)
class DeltaSplit:
    """-delta = plus * minus, separated by the splitting behaviour of each prime."""

    delta: int
    plus: int
    minus: int
    Nplus: int = 1
    Nminus: int = 1

    @property
    def Mplus(self) -> int:
        return self.plus // self.Nplus

    @property
    def Mminus(self) -> int:
        return self.minus // self.Nminus

    def ramified_primes(self) -> list[int]:
        """Finite primes where B_n ramifies: odd exponent in `minus`."""
        if self.minus == 1:
            return []
        return sorted(p for p, e in factorize(self.minus).factors.items() if e % 2)


def split_delta(D1: int, D2: int, n: int, Nplus: int = 1, Nminus: int = 1) -> DeltaSplit:
    """Factor -delta_n by Kronecker symbols of D1, D2 at each prime.

    Primes p with (D_j/p) = +1 for some j go to `plus`, those with -1 go to
    `minus`. Nplus/Nminus are carried along so that Mplus, Mminus are available;
    divisibility by them is checked.
    """
    if math.gcd(D1, D2) != 1:
        raise InvalidInput(f"gcd({D1}, {D2}) != 1")
    if n * n >= D1 * D2:
        raise InvalidInput(f"need n^2 < D1*D2, got n={n}")
    delta = delta_n(D1, D2, n)
    plus = minus = 1
    for p, e in factorize(-delta).factors.items():
        symbols = {kronecker(D1, p), kronecker(D2, p)}
        if 1 in symbols and -1 in symbols:
            raise ConsistencyError(f"prime {p} is both split and inert for n={n}")
        if 1 in symbols:
            plus *= p**e
        elif -1 in symbols:
            minus *= p**e
        else:
            raise ConsistencyError(f"prime {p} ramified in both fields for n={n}")
    if plus % Nplus or minus % Nminus:
        raise ConsistencyError(
            f"level ({Nplus}, {Nminus}) does not divide ({plus}, {minus}) at n={n}"
        )
    return DeltaSplit(delta, plus, minus, Nplus, Nminus)
