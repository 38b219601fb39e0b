import random

import pytest

from shimint.clifford import qn_form
from shimint.errors import InvalidInput, UnsupportedConfiguration
from shimint.lattice_oracle import (
    NORMALIZER_INDEX,
    ORACLE_PRIMES,
    QuatLattice,
    automorphism_count,
    count_vectors_with_gram,
    genus_term,
    maximal_order_gram,
    proper_automorphism_count,
    representation_count,
    short_vectors,
    unit_count,
)
from shimint.matrix import congruent, det, is_positive_definite

from test_localmult import random_unimodular


def test_hurwitz_gram():
    L = maximal_order_gram(2)
    assert L.gram == ((2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, 1), (1, 1, 1, 2))


@pytest.mark.parametrize("p", ORACLE_PRIMES)
def test_table_entries_are_certified(p):
    L = maximal_order_gram(p)
    assert det(L.gram) == p * p
    assert is_positive_definite(L.gram)
    assert all(L.gram[i][i] % 2 == 0 for i in range(4))
    assert L.order.reduced_discriminant() == p


def test_outside_table_is_unsupported():
    with pytest.raises(UnsupportedConfiguration):
        maximal_order_gram(11)
    with pytest.raises(UnsupportedConfiguration):
        genus_term(11, -4, -11, 0)


def test_short_vectors_against_box_search():
    G = maximal_order_gram(3).gram
    V = short_vectors(G, 6)
    found = {tuple(int(x) for x in v) for v in V}
    rng = range(-4, 5)
    box = {
        (a, b, c, d)
        for a in rng for b in rng for c in rng for d in rng
        if sum(G[i][j] * x * y for i, x in enumerate((a, b, c, d)) for j, y in enumerate((a, b, c, d))) <= 6
    }
    assert found == box


def test_counting_examples():
    L = maximal_order_gram(2)
    assert count_vectors_with_gram(L, [[2]]) == 24
    assert count_vectors_with_gram(L, [[0]]) == 1
    with pytest.raises(InvalidInput):
        count_vectors_with_gram(L, [[2, 3], [3, 2]])
    with pytest.raises(InvalidInput):
        count_vectors_with_gram(L, [[3]])
    assert representation_count(maximal_order_gram(3), qn_form(-3, -4, 0)) == 144


def test_unrealizable_target_gives_zero():
    # the only units at p = 13 are +-1, so no two are orthogonal
    L = maximal_order_gram(13)
    assert count_vectors_with_gram(L, [[2, 0], [0, 2]]) == 0
    assert count_vectors_with_gram(L, [[2, 2], [2, 2]]) == 2


@pytest.mark.parametrize("p, units, w", [(2, 24, 576), (3, 12, 144), (5, 6, 36), (7, 4, 16), (13, 2, 4)])
def test_automorphism_identity(p, units, w):
    L = maximal_order_gram(p)
    assert unit_count(L) == units
    u = units // 2
    assert proper_automorphism_count(L) == w == 2 * u * u * NORMALIZER_INDEX[p]
    assert automorphism_count(L) == 2 * w


def test_counts_invariant_under_basis_change():
    rng = random.Random(7)
    for p in (2, 3, 5):
        L = maximal_order_gram(p)
        U = random_unimodular(rng, size=4, steps=5)
        G2 = tuple(tuple(int(x) for x in row) for row in congruent(L.gram, U))
        L2 = QuatLattice(p, G2, L.labels)
        assert unit_count(L2) == unit_count(L)
        assert proper_automorphism_count(L2) == proper_automorphism_count(L)
        q = qn_form(-3, -4, 0 if p == 3 else 2)
        assert representation_count(L2, q) == representation_count(L, q)


@pytest.mark.parametrize(
    "args, value", [((3, -3, -4, 0), 1), ((2, -3, -4, 2), 1), ((2, -3, -8, 0), 2)]
)
def test_genus_term_examples(args, value):
    assert genus_term(*args) == value


def test_genus_term_preconditions():
    with pytest.raises(InvalidInput):
        genus_term(5, -3, -4, 0)
    with pytest.raises(InvalidInput):
        genus_term(3, -3, -4, 4)


@pytest.mark.parametrize("p, d1, d2, n", [(3, -3, -4, 0), (2, -3, -8, 0), (5, -7, -8, 6), (13, -7, -8, 2), (7, -4, -7, 0)])
def test_representations_divisible_by_units(p, d1, d2, n):
    L = maximal_order_gram(p)
    assert representation_count(L, qn_form(d1, d2, n)) % unit_count(L) == 0
