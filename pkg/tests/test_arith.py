import math

import pytest
from hypothesis import given, strategies as st

from shimint.arith import (
    factorize,
    is_fundamental,
    is_prime,
    kronecker,
    split_discriminant,
    vp,
)


def naive_factor(n):
    out = {}
    n = abs(n)
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def brute_legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if any(x * x % p == a for x in range(1, p)) else -1


def brute_kronecker(D, m):
    """Kronecker symbol straight from its definition on the factorization of m."""
    if m == 0:
        return 1 if abs(D) == 1 else 0
    out = 1
    if m < 0:
        out = -1 if D < 0 else 1
        m = -m
    for p, e in naive_factor(m).items():
        if p == 2:
            s = 0 if D % 2 == 0 else (1 if D % 8 in (1, 7) else -1)
        else:
            s = brute_legendre(D, p)
        out *= s**e
    return out


@pytest.mark.parametrize(
    "n, sign, factors",
    [(-12, -1, {2: 2, 3: 1}), (1, 1, {}), (2310, 1, {2: 1, 3: 1, 5: 1, 7: 1, 11: 1})],
)
def test_factorize_examples(n, sign, factors):
    f = factorize(n)
    assert (f.sign, f.factors) == (sign, factors)
    assert f.factors == naive_factor(n)


def test_factorize_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_beyond_trial_division():
    n = 1000003 * 1000033
    assert factorize(n).factors == {1000003: 1, 1000033: 1}
    assert factorize(-(2**5) * 999983**2).factors == {2: 5, 999983: 2}


@given(st.integers(min_value=-10**9, max_value=10**9).filter(bool))
def test_factorize_reassembles(n):
    f = factorize(n)
    assert f.value() == n
    assert all(is_prime(p) and e >= 1 for p, e in f.factors.items())


@pytest.mark.parametrize("n, p, e", [(24, 2, 3), (24, 5, 0), (-54, 3, 3)])
def test_vp(n, p, e):
    assert vp(n, p) == e


@pytest.mark.parametrize("D, m, s", [(-4, 3, -1), (-3, 3, 0), (-7, 2, 1), (-3, 2, -1)])
def test_kronecker_examples(D, m, s):
    assert kronecker(D, m) == s


def test_kronecker_two_and_sign_conventions():
    # (D/2) by D mod 8
    table = {1: 1, 7: 1, 3: -1, 5: -1}
    for D in range(-41, 42, 2):
        assert kronecker(D, 2) == table[D % 8]
    assert kronecker(-8, 2) == 0
    assert kronecker(-3, -1) == -1 and kronecker(5, -1) == 1
    assert kronecker(1, 0) == 1 and kronecker(4, 0) == 0
    with pytest.raises(ValueError):
        kronecker(0, 0)


@given(st.integers(-500, 500), st.integers(-300, 300))
def test_kronecker_matches_definition(D, m):
    if D == 0 and m == 0:
        return
    assert kronecker(D, m) == brute_kronecker(D, m)


@given(st.integers(-500, 500).filter(lambda d: d % 4 in (0, 1) and d != 0),
       st.integers(1, 200), st.integers(1, 200))
def test_kronecker_multiplicative(D, m, n):
    assert kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n)


@pytest.mark.parametrize("D, D0, c", [(-12, -3, 2), (-4, -4, 1), (-63, -7, 3), (-16, -4, 2), (-32, -8, 2)])
def test_split_discriminant_examples(D, D0, c):
    s = split_discriminant(D)
    assert (s.D0, s.c) == (D0, c)


@pytest.mark.parametrize("D", [5, 0, -2, -5, -1])
def test_split_discriminant_rejects(D):
    with pytest.raises(ValueError):
        split_discriminant(D)


def _squarefree(n):
    return all(e == 1 for e in naive_factor(n).values())


def brute_fundamental(D):
    odd = abs(D)
    while odd % 2 == 0:
        odd //= 2
    if D % 4 == 1:
        return _squarefree(abs(D))
    return D % 4 == 0 and (D // 4) % 4 in (2, 3) and _squarefree(odd)


@pytest.mark.parametrize("D", range(-400, 0))
def test_split_discriminant_against_search(D):
    if D % 4 not in (0, 1):
        return
    # largest c with D/c^2 still a discriminant that is fundamental
    cands = [c for c in range(1, math.isqrt(-D) + 1)
             if D % (c * c) == 0 and (D // (c * c)) % 4 in (0, 1) and brute_fundamental(D // (c * c))]
    assert len(cands) == 1
    s = split_discriminant(D)
    assert s.c == cands[0] and s.D0 == D // (cands[0] ** 2)
    assert is_fundamental(s.D0) == brute_fundamental(s.D0)
