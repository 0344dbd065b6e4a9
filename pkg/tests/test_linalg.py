import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pglrep.linalg import (
    NotOrthogonal,
    OrthComponent,
    RatMatrix,
    commutator,
    component,
    is_orthogonal,
)

import randmat


def test_is_orthogonal_examples():
    assert is_orthogonal(RatMatrix.identity(3))
    rot = RatMatrix([[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]])
    assert is_orthogonal(rot)
    assert not is_orthogonal(RatMatrix([[1, 1], [0, 1]]))


def test_component_examples():
    assert component(RatMatrix.identity(4)) == OrthComponent.SO
    assert component(RatMatrix.diagonal([-1, 1, 1, 1])) == OrthComponent.O_MINUS
    # X_4 is a pair of swaps, an even permutation
    x4 = RatMatrix.block_diag(RatMatrix([[0, 1], [1, 0]]), RatMatrix([[0, 1], [1, 0]]))
    assert component(x4) == OrthComponent.SO


def test_component_rejects_non_orthogonal():
    with pytest.raises(NotOrthogonal):
        component(RatMatrix([[1, 1], [0, 1]]))


def test_commutator_examples():
    x2 = RatMatrix([[0, 1], [1, 0]])
    xp2 = RatMatrix([[1, 0], [0, -1]])
    assert commutator(RatMatrix.identity(2), xp2) == RatMatrix.identity(2)
    assert commutator(x2, xp2) == -RatMatrix.identity(2)
    y4 = RatMatrix.block_diag(RatMatrix.diagonal([1, -1]), RatMatrix.identity(2))
    yp4 = RatMatrix.block_diag(RatMatrix.diagonal([-1, 1]), RatMatrix.identity(2))
    assert commutator(y4, yp4) == RatMatrix.identity(4)


def test_commutator_size_mismatch():
    with pytest.raises(ValueError):
        commutator(RatMatrix.identity(2), RatMatrix.identity(3))


def test_matrix_equality_and_blocks():
    a = RatMatrix([["1/2", "1/2"], [0, 1]])
    assert a.entry(0, 1) == Fraction(1, 2)
    assert RatMatrix.block_diag(a, RatMatrix.identity(1)).n == 3
    assert a.transpose().transpose() == a


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.integers(min_value=2, max_value=5))
def test_det_multiplicative_on_orthogonal_pairs(seed, n):
    rng = random.Random(seed)
    a = randmat.random_orthogonal(rng, n)
    b = randmat.random_orthogonal(rng, n)
    assert (a * b).det() == a.det() * b.det()
    assert a.det() in (1, -1)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.integers(min_value=2, max_value=5))
def test_commutator_ignores_sign_of_either_factor(seed, n):
    # lift independence: representatives of a projective class differ by -I
    rng = random.Random(seed)
    a = randmat.random_orthogonal(rng, n)
    b = randmat.random_orthogonal(rng, n)
    base = commutator(a, b)
    assert commutator(-a, b) == base
    assert commutator(a, -b) == base
    assert commutator(-a, -b) == base
