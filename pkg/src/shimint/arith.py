"""Integer number theory kernel: factorization, valuations, Kronecker symbols,
and the conductor decomposition of quadratic discriminants."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

_TRIAL_LIMIT = 10**6
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class FactoredInt:
    sign: int
    factors: dict[int, int] = field(default_factory=dict)

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors.items():
            n *= p**e
        return n

    def primes(self) -> list[int]:
        return sorted(self.factors)


@dataclass(frozen=True)
class DiscSplit:
    """A negative discriminant D written as c**2 * D0 with D0 fundamental."""

    D: int
    D0: int
    c: int


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # seeded so that factorizations are reproducible
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@lru_cache(maxsize=4096)
def _factor_abs(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p * p <= n and p <= _TRIAL_LIMIT:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        if p * p > n:
            out[n] = out.get(n, 0) + 1
        else:
            _factor_into(n, out)
    return tuple(sorted(out.items()))


def factorize(n: int) -> FactoredInt:
    """Prime factorization of a nonzero integer.

    >>> factorize(-12)
    FactoredInt(sign=-1, factors={2: 2, 3: 1})
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    return FactoredInt(1 if n > 0 else -1, dict(_factor_abs(abs(n))))


def prime_divisors(n: int) -> list[int]:
    return factorize(n).primes()


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if p < 2:
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(n).factors.values())


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def kronecker(D: int, m: int) -> int:
    """Kronecker symbol (D/m), extended to m = 2, m = -1 and m = 0."""
    if D == 0 and m == 0:
        raise ValueError("kronecker(0, 0) is undefined")
    if m == 0:
        return 1 if abs(D) == 1 else 0
    result = 1
    if m < 0:
        m = -m
        if D < 0:
            result = -result
    v = 0
    while m % 2 == 0:
        m //= 2
        v += 1
    if v:
        if D % 2 == 0:
            return 0
        if v % 2 == 1 and D % 8 in (3, 5):
            result = -result
    # Jacobi symbol (D/m) for odd positive m
    a = D % m
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def is_discriminant(D: int) -> bool:
    return D % 4 in (0, 1)


def is_fundamental(D: int) -> bool:
    """True when D is a fundamental discriminant (D = 1 excluded)."""
    if D == 1 or D == 0:
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        q = D // 4
        return q % 4 in (2, 3) and is_squarefree(q)
    return False


def split_discriminant(D: int) -> DiscSplit:
    """Write a negative discriminant as c**2 * D0 with D0 fundamental."""
    if D >= 0:
        raise ValueError(f"discriminant must be negative, got {D}")
    if not is_discriminant(D):
        raise ValueError(f"{D} is not congruent to 0 or 1 mod 4")
    f = factorize(D)
    core = -1
    c = 1
    for p, e in f.factors.items():
        core *= p ** (e % 2)
        c *= p ** (e // 2)
    # core is the squarefree kernel of D; fix up the 2-part
    if core % 4 == 1:
        D0 = core
    else:
        D0 = 4 * core
        c //= 2
    assert c * c * D0 == D and is_fundamental(D0), (D, D0, c)
    return DiscSplit(D, D0, c)
