"""Finite Dirichlet series L_{M+,M-}(s) at s = 0, and their derivatives at 0
as exact rational combinations of log p."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Mapping, Union

from .arith import factorize
from .errors import InvalidInput

Rational = Union[int, Fraction]
Kind = Literal["plus", "minus"]


class LogLinear:
    """An exact finite sum  sum_p c_p * log p  with rational c_p.

    Zero coefficients are never stored, so equality is equality of the
    coefficient maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for p, c in items:
            p = int(p)
            if p < 2:
                raise ValueError(f"log base must be an integer >= 2, got {p}")
            acc[p] = acc.get(p, Fraction(0)) + Fraction(c)
        self._terms = {p: c for p, c in sorted(acc.items()) if c != 0}

    @classmethod
    def log(cls, p: int, coeff: Rational = 1) -> "LogLinear":
        return cls({p: coeff})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, p: int) -> Fraction:
        return self._terms.get(p, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "LogLinear") -> "LogLinear":
        if not isinstance(other, LogLinear):
            return NotImplemented
        return LogLinear(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "LogLinear":
        return LogLinear({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "LogLinear") -> "LogLinear":
        return self + (-other)

    def __mul__(self, k: Rational) -> "LogLinear":
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return LogLinear({p: c * k for p, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LogLinear):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __float__(self) -> float:
        return math.fsum(float(c) * math.log(p) for p, c in self._terms.items())

    def is_nonnegative_termwise(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def __repr__(self) -> str:
        return f"LogLinear({ {p: str(c) for p, c in self._terms.items()} })"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for p, c in self._terms.items():
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{coef}log {p}"))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _check_kind(kind: str) -> None:
    if kind not in ("plus", "minus"):
        raise ValueError(f"kind must be 'plus' or 'minus', got {kind!r}")


def factor_value0(kind: Kind, p: int, e: int) -> int:
    """L_{p^e,1}(0) = e + 1;  L_{1,p^e}(0) = 1 if e even else 0."""
    _check_kind(kind)
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if kind == "plus":
        return e + 1
    return 1 if e % 2 == 0 else 0


def factor_deriv0(kind: Kind, p: int, e: int) -> LogLinear:
    """Derivative at s = 0 of the local factor, as a multiple of log p."""
    _check_kind(kind)
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if kind == "plus":
        coeff = Fraction(-e * (e + 1), 2)
    elif e % 2:
        coeff = Fraction(e + 1, 2)
    else:
        coeff = Fraction(-e, 2)
    return LogLinear.log(p, coeff)


@dataclass(frozen=True)
class DirichletFactored:
    plus_factors: dict[int, int] = field(default_factory=dict)
    minus_factors: dict[int, int] = field(default_factory=dict)

    @classmethod
    def of(cls, Mplus: int, Mminus: int) -> "DirichletFactored":
        if Mplus < 1 or Mminus < 1:
            raise InvalidInput("M+ and M- must be positive")
        if math.gcd(Mplus, Mminus) != 1:
            raise InvalidInput(f"gcd({Mplus}, {Mminus}) != 1")
        return cls(dict(factorize(Mplus).factors), dict(factorize(Mminus).factors))

    @property
    def Mplus(self) -> int:
        return math.prod(p**e for p, e in self.plus_factors.items())

    @property
    def Mminus(self) -> int:
        return math.prod(p**e for p, e in self.minus_factors.items())

    def local_factors(self) -> list[tuple[Kind, int, int]]:
        out: list[tuple[Kind, int, int]] = [("plus", p, e) for p, e in self.plus_factors.items()]
        out += [("minus", p, e) for p, e in self.minus_factors.items()]
        return sorted(out, key=lambda t: t[1])

    def local_value0(self, p: int) -> int:
        """L_{(p)}(0), the value at 0 of the factor at p (1 for p not dividing M+M-)."""
        if p in self.plus_factors:
            return factor_value0("plus", p, self.plus_factors[p])
        if p in self.minus_factors:
            return factor_value0("minus", p, self.minus_factors[p])
        return 1

    def value0_away_from(self, p: int) -> int:
        """prod over l != p of L_{(l)}(0)."""
        return math.prod(
            factor_value0(kind, q, e) for kind, q, e in self.local_factors() if q != p
        )

    def value0(self) -> int:
        return math.prod(factor_value0(kind, q, e) for kind, q, e in self.local_factors())

    def deriv0(self) -> LogLinear:
        """Product rule over the local factors."""
        total = LogLinear()
        for kind, q, e in self.local_factors():
            others = self.value0_away_from(q)
            if others:
                total = total + factor_deriv0(kind, q, e) * others
        return total


def L_value0(Mplus: int, Mminus: int) -> int:
    return DirichletFactored.of(Mplus, Mminus).value0()


def L_deriv0(Mplus: int, Mminus: int) -> LogLinear:
    return DirichletFactored.of(Mplus, Mminus).deriv0()
