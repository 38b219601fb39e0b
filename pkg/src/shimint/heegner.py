"""Problem setup for intersecting two Heegner divisors on X_{N+,N-,m}:
levels, admissibility screens, eta(m), h-classes and the range of n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .arith import factorize, is_discriminant, is_square, is_squarefree, kronecker, split_discriminant
from .clifford import delta_n, split_delta
from .errors import ConsistencyError, InvalidInput

Status = Literal["ok", "trivially-zero", "invalid"]


@dataclass(frozen=True)
class Level:
    Nplus: int = 1
    Nminus: int = 1

    @property
    def N(self) -> int:
        return self.Nplus * self.Nminus

    @property
    def primes(self) -> list[int]:
        return factorize(self.N).primes() if self.N > 1 else []

    @property
    def r(self) -> int:
        return len(self.primes)

    def problems(self) -> list[str]:
        out = []
        if self.Nplus < 1 or self.Nminus < 1:
            return ["levels must be positive"]
        if math.gcd(self.Nplus, self.Nminus) != 1:
            out.append(f"gcd(N+, N-) = gcd({self.Nplus}, {self.Nminus}) != 1")
        if self.Nminus > 1:
            if not is_squarefree(self.Nminus):
                out.append(f"N- = {self.Nminus} is not squarefree")
            elif len(factorize(self.Nminus).factors) % 2:
                out.append(f"N- = {self.Nminus} has an odd number of prime factors")
        return out


@dataclass(frozen=True)
class HeegnerInput:
    d1: int
    d2: int
    level: Level = Level()
    m: Optional[int] = None

    @classmethod
    def of(cls, d1: int, d2: int, nplus: int = 1, nminus: int = 1, m: Optional[int] = None) -> "HeegnerInput":
        return cls(d1, d2, Level(nplus, nminus), m)

    @property
    def product(self) -> int:
        return self.d1 * self.d2

    def swapped(self) -> "HeegnerInput":
        return HeegnerInput(self.d2, self.d1, self.level, self.m)


@dataclass(frozen=True)
class ValidationReport:
    status: Status
    reason: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _level_m_problems(inp: HeegnerInput) -> list[str]:
    m = inp.m
    if m is None:
        return []
    N = inp.level.N
    out = []
    if m < 1:
        return [f"m = {m} must be positive"]
    if math.gcd(m, N) != 1:
        out.append(f"C1 fails: gcd(m, N) = {math.gcd(m, N)}")
    # C2: m = m1*m2 with m1, m2 >= 4 coprime; try all unitary splittings
    pp = [p**e for p, e in factorize(m).factors.items()] if m > 1 else []
    ok = False
    for mask in range(1 << len(pp)):
        m1 = math.prod(q for i, q in enumerate(pp) if mask >> i & 1)
        if m1 >= 4 and m // m1 >= 4:
            ok = True
            break
    if not ok:
        out.append(f"C2 fails: m = {m} is not a product of coprime factors >= 4")
    small = [p for p in (factorize(m).primes() if m > 1 else []) if 4 * N * p <= inp.product]
    if small:
        out.append(f"C3 fails: primes {small} of m do not exceed D1*D2/(4N)")
    return out


def validate(inp: HeegnerInput) -> ValidationReport:
    """Check input invariants, then the local conditions forcing P_D = 0."""
    problems: list[str] = []
    for D in (inp.d1, inp.d2):
        if D >= 0 or not is_discriminant(D):
            problems.append(f"{D} is not a negative discriminant")
    problems += inp.level.problems()
    if problems:
        return ValidationReport("invalid", "; ".join(problems))
    if is_square(inp.product):
        return ValidationReport(
            "invalid", f"D1*D2 = {inp.product} is a square: Q(sqrt({inp.d1})) = Q(sqrt({inp.d2}))"
        )
    s1, s2 = split_discriminant(inp.d1), split_discriminant(inp.d2)
    for l in inp.level.primes:
        if s1.c % l == 0 or s2.c % l == 0:
            problems.append(f"{l} | N divides a conductor")
        if inp.d1 % l == 0 and inp.d2 % l == 0:
            problems.append(f"{l} | N divides both D1 and D2")
    problems += _level_m_problems(inp)
    if problems:
        return ValidationReport("invalid", "; ".join(problems))

    for D in (inp.d1, inp.d2):
        for p in factorize(inp.level.Nplus).primes() if inp.level.Nplus > 1 else []:
            if kronecker(D, p) == -1:
                return ValidationReport("trivially-zero", f"{p} inert in Q(sqrt({D}))")
        for p in factorize(inp.level.Nminus).primes() if inp.level.Nminus > 1 else []:
            if kronecker(D, p) == 1:
                return ValidationReport("trivially-zero", f"{p} split in Q(sqrt({D}))")
    return ValidationReport("ok")


def eta(m: Optional[int]) -> Fraction:
    """(1/2) m^2 prod_{p | m} (1 - p^-2); None means eta normalized to 1."""
    if m is None:
        return Fraction(1)
    if m < 1:
        raise InvalidInput("m must be positive")
    out = Fraction(m * m, 2)
    for p in factorize(m).primes() if m > 1 else []:
        out *= 1 - Fraction(1, p * p)
    return out


@dataclass(frozen=True)
class HClass:
    """A pair {h, -h} of residues modulo 2N."""

    modulus: int
    residues: tuple[int, ...]

    @classmethod
    def of(cls, h: int, modulus: int) -> "HClass":
        return cls(modulus, tuple(sorted({h % modulus, -h % modulus})))

    @property
    def representative(self) -> int:
        return self.residues[0]

    def __contains__(self, n: int) -> bool:
        return n % self.modulus in self.residues

    def __str__(self) -> str:
        return f"±{self.representative} (mod {self.modulus})"


def h_classes(d1: int, d2: int, level: Level) -> list[HClass]:
    """All {h, -h} mod 2N with h^2 = D1*D2 (mod 4N), by brute force."""
    N = level.N
    mod = 2 * N
    seen: dict[tuple[int, ...], HClass] = {}
    for h in range(mod):
        if (h * h - d1 * d2) % (4 * N) == 0:
            c = HClass.of(h, mod)
            seen.setdefault(c.residues, c)
    return [seen[k] for k in sorted(seen)]


def find_class(d1: int, d2: int, level: Level, h: int) -> HClass:
    for c in h_classes(d1, d2, level):
        if h in c:
            return c
    raise InvalidInput(f"h = {h} is not an admissible class mod {2 * level.N}")


def enumerate_n(d1: int, d2: int, level: Level, cls: Optional[HClass] = None) -> list[int]:
    """Integers n with n^2 < D1*D2 in the given class, or with N | delta_n if no class."""
    P = d1 * d2
    bound = math.isqrt(P - 1) if P > 0 else -1
    N = level.N
    out = []
    for n in range(-bound, bound + 1):
        if (n - P) % 2:
            continue
        if cls is not None:
            if n in cls:
                out.append(n)
        elif (n * n - P) % (4 * N) == 0:
            out.append(n)
    return out


def check_level_divides(d1: int, d2: int, level: Level, n: int) -> None:
    """N+ | delta+ and N- | delta- for admissible n; violations are bugs upstream."""
    if delta_n(d1, d2, n) % level.N:
        raise ConsistencyError(f"N = {level.N} does not divide delta_{n}")
    split_delta(d1, d2, n, level.Nplus, level.Nminus)
