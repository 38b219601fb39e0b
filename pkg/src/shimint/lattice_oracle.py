"""Brute-force genus weights on explicit maximal orders.

For the primes p in ORACLE_PRIMES the definite quaternion algebra ramified at
{p, oo} has class number one, so its maximal orders form a single proper
class of quaternary lattices (under the reduced norm).  Genus-weighted
representation numbers of the ternary forms Q_n then reduce to one count
R_L(Q_n) / w_L on one lattice, which this module computes by enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from .clifford import TernaryForm, delta_n, qn_form
from .errors import ConsistencyError, InvalidInput, UnsupportedConfiguration
from .matrix import det, is_positive_definite, is_positive_semidefinite, is_symmetric
from .quaternion import NotAnOrder, Order, QuaternionAlgebra

ORACLE_PRIMES = (2, 3, 5, 7, 13)

# |N(E) / Q^x E^x| for a maximal order E ramified at p: the two-sided ideal of
# norm p is principal, giving one extra class
NORMALIZER_INDEX = {2: 2, 3: 2, 5: 2, 7: 2, 13: 2}

_H = Fraction(1, 2)
_Q = Fraction(1, 4)

# (a, b) with i^2 = a, j^2 = b, and a Z-basis in coordinates on (1, i, j, k)
_CONSTRUCTIONS: dict[str, tuple[int, list[tuple], list[str]]] = {
    "hurwitz": (
        -1,
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (_H, _H, _H, _H)],
        ["1", "i", "j", "(1+i+j+k)/2"],
    ),
    "3mod4": (
        -1,
        [(1, 0, 0, 0), (0, 1, 0, 0), (_H, 0, _H, 0), (0, _H, 0, _H)],
        ["1", "i", "(1+j)/2", "(i+k)/2"],
    ),
    "5mod8": (
        -2,
        [(_H, 0, _H, _H), (0, _Q, _H, _Q), (0, 0, 1, 0), (0, 0, 0, 1)],
        ["(1+j+k)/2", "(i+2j+k)/4", "j", "k"],
    ),
}


@dataclass(frozen=True)
class QuatLattice:
    p: int
    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    order: Optional[Order] = None

    @property
    def rank(self) -> int:
        return len(self.gram)

    def gram_array(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)


def maximal_order(p: int) -> Order:
    if p not in ORACLE_PRIMES:
        raise UnsupportedConfiguration(f"no one-class maximal order table entry for p = {p}")
    if p == 2:
        key = "hurwitz"
    elif p % 4 == 3:
        key = "3mod4"
    elif p % 8 == 5:
        key = "5mod8"
    else:
        raise UnsupportedConfiguration(f"no construction for p = {p}")
    a, basis, _ = _CONSTRUCTIONS[key]
    b = -1 if key == "hurwitz" else -p
    return Order.from_basis(QuaternionAlgebra(a, b), basis)


@lru_cache(maxsize=None)
def maximal_order_gram(p: int) -> QuatLattice:
    """Trace-pairing Gram matrix of a maximal order of the algebra ramified at {p, oo}.

    The construction is certified before use: closed under multiplication,
    contains 1, and reduced discriminant p (det of the trace form = p^2).
    """
    order = maximal_order(p)
    try:
        order.structure_constants()
        one = order.coordinates((1, 0, 0, 0))
        if any(c.denominator != 1 for c in one):
            raise NotAnOrder("1 is not in the lattice")
        gram = order.gram()
    except NotAnOrder as exc:
        raise ConsistencyError(f"maximal order construction for p = {p} failed: {exc}") from exc
    if det(gram) != p * p:
        raise ConsistencyError(f"det of trace form is {det(gram)}, expected {p * p}")
    key = "hurwitz" if p == 2 else ("3mod4" if p % 4 == 3 else "5mod8")
    labels = tuple(_CONSTRUCTIONS[key][2])
    return QuatLattice(p, tuple(tuple(r) for r in gram), labels, order)


def _ldl(gram: Sequence[Sequence[int]]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """x^T G x = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2."""
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    d: list[Fraction] = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        di = q[i][i] - sum(d[k] * mu[k][i] ** 2 for k in range(i))
        if di <= 0:
            raise InvalidInput("Gram matrix is not positive definite")
        d.append(di)
        for j in range(i + 1, n):
            mu[i][j] = (q[i][j] - sum(d[k] * mu[k][i] * mu[k][j] for k in range(i))) / di
    return d, mu


def _int_range(center: Fraction, radius_sq: Fraction) -> range:
    """Integers t with (t + center)^2 <= radius_sq."""
    if radius_sq < 0:
        return range(0)
    s = math.sqrt(float(radius_sq))
    lo = math.floor(-center - s) - 1
    hi = math.ceil(-center + s) + 1
    while (lo + center) ** 2 > radius_sq and lo <= hi:
        lo += 1
    while (hi + center) ** 2 > radius_sq and hi >= lo:
        hi -= 1
    return range(lo, hi + 1)


def short_vectors(gram: Sequence[Sequence[int]], bound: int) -> np.ndarray:
    """All integer x with x^T G x <= bound, by Fincke-Pohst enumeration.

    Coordinate ranges are computed in exact rationals from the LDL
    decomposition; the final norms are rechecked in integer arithmetic.
    """
    n = len(gram)
    d, mu = _ldl(gram)
    out: list[tuple[int, ...]] = []
    x = [0] * n

    def rec(i: int, budget: Fraction) -> None:
        center = sum((mu[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        r = _int_range(center, budget / d[i])
        if i == 0:
            rest = tuple(x[1:])
            for t in r:
                out.append((t,) + rest)
            return
        for t in r:
            x[i] = t
            rec(i - 1, budget - d[i] * (t + center) ** 2)
        x[i] = 0

    rec(n - 1, Fraction(bound))
    V = np.array(out, dtype=np.int64).reshape(-1, n)
    G = np.array(gram, dtype=np.int64)
    norms = np.einsum("ij,jk,ik->i", V, G, V)
    if np.any(norms > bound):
        raise ConsistencyError("enumeration produced a vector over the bound")
    return V


_VECTOR_CACHE: dict[tuple, tuple[int, np.ndarray, np.ndarray]] = {}


def _vectors_upto(L: QuatLattice, bound: int) -> tuple[np.ndarray, np.ndarray]:
    key = L.gram
    hit = _VECTOR_CACHE.get(key)
    if hit is None or hit[0] < bound:
        V = short_vectors(L.gram, bound)
        G = L.gram_array()
        norms = np.einsum("ij,jk,ik->i", V, G, V)
        _VECTOR_CACHE[key] = hit = (bound, V, norms)
    _, V, norms = hit
    keep = norms <= bound
    return V[keep], norms[keep]


def _check_target(target: Sequence[Sequence[int]], rank: int) -> list[list[int]]:
    T = [[int(x) for x in row] for row in target]
    if not is_symmetric(T):
        raise InvalidInput("target Gram matrix must be symmetric")
    if len(T) > rank:
        raise InvalidInput("target rank exceeds lattice rank")
    if any(T[i][i] % 2 for i in range(len(T))):
        raise InvalidInput("target Gram matrix must have even diagonal")
    if not is_positive_semidefinite(T):
        raise InvalidInput("target Gram matrix is indefinite")
    return T


def _embeddings(
    L: QuatLattice,
    target: list[list[int]],
    visit: Optional[Callable[[list[np.ndarray]], None]] = None,
) -> int:
    """Count tuples (v_1..v_k) of lattice vectors with B(v_i, v_j) = target[i][j].

    If `visit` is given it is called on every full tuple (slow path).
    """
    k = len(target)
    if k == 0:
        return 1
    V, norms = _vectors_upto(L, max(target[i][i] for i in range(k)))
    G = L.gram_array()
    buckets = [V[norms == target[i][i]] for i in range(k)]

    def rec(i: int, chosen: list[np.ndarray], cands: list[np.ndarray]) -> int:
        C = cands[i]
        if i == k - 1 and visit is None:
            return len(C)
        total = 0
        for v in C:
            Gv = G @ v
            nxt = list(cands)
            for j in range(i + 1, k):
                nxt[j] = cands[j][cands[j] @ Gv == target[i][j]]
            if i == k - 1:
                visit(chosen + [v])
                total += 1
            else:
                total += rec(i + 1, chosen + [v], nxt)
        return total

    return rec(0, [], buckets)


def count_vectors_with_gram(L: QuatLattice, target: Sequence[Sequence[int]]) -> int:
    """Number of k-tuples of vectors of L realizing the k x k Gram matrix `target`."""
    T = _check_target(target, L.rank)
    return _embeddings(L, T)


def representation_count(L: QuatLattice, form: TernaryForm) -> int:
    """R_L(Q): isometric embeddings of (Z^3, Q) into L."""
    if not is_positive_definite(form.gram):
        raise InvalidInput("form must be positive definite")
    return count_vectors_with_gram(L, form.gram)


def unit_count(L: QuatLattice) -> int:
    """Vectors of reduced norm 1 (trace-form value 2)."""
    return count_vectors_with_gram(L, [[2]])


@lru_cache(maxsize=None)
def _automorphism_counts(L: QuatLattice) -> tuple[int, int]:
    counts = {1: 0, -1: 0}

    def visit(vs: list[np.ndarray]) -> None:
        U = [[int(v[r]) for v in vs] for r in range(L.rank)]
        counts[det(U)] += 1

    T = [list(r) for r in L.gram]
    _embeddings(L, T, visit)
    return counts[1], counts[-1]


def proper_automorphism_count(L: QuatLattice) -> int:
    """w_L: integral U with U^T G U = G and det U = +1."""
    return _automorphism_counts(L)[0]


def automorphism_count(L: QuatLattice) -> int:
    return sum(_automorphism_counts(L))


def genus_term(p: int, d1: int, d2: int, n: int) -> Fraction:
    """R_L(Q_n) / w_L on the single class of maximal orders ramified at {p, oo}."""
    if p not in ORACLE_PRIMES:
        raise UnsupportedConfiguration(f"p = {p} is outside the one-class table {ORACLE_PRIMES}")
    if n * n >= d1 * d2:
        raise InvalidInput("need n^2 < D1*D2")
    delta = delta_n(d1, d2, n)
    if delta % p:
        raise InvalidInput(f"p = {p} does not divide delta_{n} = {delta}")
    L = maximal_order_gram(p)
    return Fraction(representation_count(L, qn_form(d1, d2, n)), proper_automorphism_count(L))
