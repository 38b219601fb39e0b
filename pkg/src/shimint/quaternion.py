"""Rational quaternion algebras presented by two generators.

An algebra is given by generators u, v with u^2 = a, v^2 = b and
uv + vu = 2t. Elements are coordinate 4-tuples on the basis (1, u, v, uv).
t = 0 gives the usual Hamilton-style algebra (a, b); t != 0 gives the
Clifford algebra of the binary form a x^2 + 2t xy + b y^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrix import det

Elt = tuple[Fraction, Fraction, Fraction, Fraction]


def _elt(xs: Sequence) -> Elt:
    if len(xs) != 4:
        raise ValueError("quaternion elements have 4 coordinates")
    return tuple(Fraction(x) for x in xs)  # type: ignore[return-value]


@dataclass(frozen=True)
class QuaternionAlgebra:
    a: int
    b: int
    t: int = 0

    def __post_init__(self):
        if self.t * self.t == self.a * self.b:
            raise ValueError("degenerate generating form")

    def _table(self) -> list[list[tuple[int, int, int, int]]]:
        a, b, t = self.a, self.b, self.t
        # products of basis elements 1, u, v, w = uv
        one, u, v, w = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
        return [
            [one, u, v, w],
            [u, (a, 0, 0, 0), w, (0, 0, a, 0)],
            [v, (2 * t, 0, 0, -1), (b, 0, 0, 0), (0, -b, 2 * t, 0)],
            [w, (0, 2 * t, -a, 0), (0, b, 0, 0), (-a * b, 0, 0, 2 * t)],
        ]

    def mul(self, x: Sequence, y: Sequence) -> Elt:
        tab = self._table()
        out = [Fraction(0)] * 4
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, s in enumerate(tab[i][j]):
                    if s:
                        out[k] += c * s
        return tuple(out)  # type: ignore[return-value]

    def conj(self, x: Sequence) -> Elt:
        # conj(u) = -u, conj(v) = -v, conj(uv) = vu = 2t - uv
        x0, x1, x2, x3 = _elt(x)
        return (x0 + 2 * self.t * x3, -x1, -x2, -x3)

    def trace(self, x: Sequence) -> Fraction:
        x0, _, _, x3 = _elt(x)
        return 2 * x0 + 2 * self.t * x3

    def norm(self, x: Sequence) -> Fraction:
        prod = self.mul(_elt(x), self.conj(x))
        assert prod[1] == prod[2] == prod[3] == 0
        return prod[0]

    def pairing(self, x: Sequence, y: Sequence) -> Fraction:
        """Tr(x * conj(y)) = Nr(x + y) - Nr(x) - Nr(y)."""
        return self.trace(self.mul(_elt(x), self.conj(y)))


class NotAnOrder(ValueError):
    pass


@dataclass(frozen=True)
class Order:
    """Z-lattice with basis `basis` inside `algebra`, checked to be a ring."""

    algebra: QuaternionAlgebra
    basis: tuple[Elt, ...]

    @classmethod
    def from_basis(cls, algebra: QuaternionAlgebra, basis: Sequence[Sequence]) -> "Order":
        return cls(algebra, tuple(_elt(b) for b in basis))

    def coordinates(self, x: Sequence) -> list[Fraction]:
        """Coordinates of x in the order basis (rational in general)."""
        from .matrix import transpose

        M = transpose([list(b) for b in self.basis])
        aug = [list(row) + [xi] for row, xi in zip(M, _elt(x))]
        n = 4
        for c in range(n):
            piv = next(r for r in range(c, n) if aug[r][c] != 0)
            aug[c], aug[piv] = aug[piv], aug[c]
            pv = aug[c][c]
            aug[c] = [v / pv for v in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [vr - f * vc for vr, vc in zip(aug[r], aug[c])]
        return [aug[r][n] for r in range(n)]

    def structure_constants(self) -> list[list[list[int]]]:
        """table[i][j] = integer coordinates of basis[i] * basis[j].

        Raises NotAnOrder if some product leaves the lattice.
        """
        table = []
        for bi in self.basis:
            row = []
            for bj in self.basis:
                coords = self.coordinates(self.algebra.mul(bi, bj))
                if any(c.denominator != 1 for c in coords):
                    raise NotAnOrder(f"product {bi}*{bj} not integral: {coords}")
                row.append([int(c) for c in coords])
            table.append(row)
        return table

    def gram(self) -> list[list[int]]:
        """Trace pairing Tr(x * conj(y)) on the basis."""
        G = [[self.algebra.pairing(x, y) for y in self.basis] for x in self.basis]
        if any(g.denominator != 1 for row in G for g in row):
            raise NotAnOrder("trace pairing is not integral")
        return [[int(g) for g in row] for row in G]

    def reduced_discriminant(self) -> int:
        """|det| of the trace pairing is the square of the reduced discriminant."""
        from math import isqrt

        d = abs(det(self.gram()))
        r = isqrt(d)
        if r * r != d:
            raise NotAnOrder(f"trace-form determinant {d} is not a square")
        return r

    def element(self, coords: Sequence[int]) -> Elt:
        out = [Fraction(0)] * 4
        for c, b in zip(coords, self.basis):
            for k in range(4):
                out[k] += c * b[k]
        return tuple(out)  # type: ignore[return-value]
