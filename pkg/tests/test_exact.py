from fractions import Fraction
from functools import reduce
from math import gcd
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monomult.errors import DegenerateInputError, DimensionError
from monomult.exact import (
    Hyperplane,
    affine_rank,
    determinant,
    dot,
    int_determinant,
    primitive,
    primitive_normal,
    rank,
)

small = st.integers(-9, 9)
rat = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def leibniz(m):
    """Permutation-sum determinant, used as an independent reference."""
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Fraction(sign)
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def square(n):
    return st.lists(st.lists(rat, min_size=n, max_size=n), min_size=n, max_size=n)


class TestDot:
    def test_examples(self):
        assert dot((1, 5), (2, 1)) == 7
        assert dot((0, 0, 0), (3, -1, 4)) == 0
        assert dot((Fraction(1, 2), Fraction(1, 3)), (2, 3)) == 2

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            dot((1, 2), (1, 2, 3))

    @given(st.integers(1, 5).flatmap(lambda n: st.tuples(*[st.lists(rat, min_size=n, max_size=n)] * 3)))
    def test_linear(self, abc):
        a, b, c = abc
        assert dot(a, [x + y for x, y in zip(b, c)]) == dot(a, b) + dot(a, c)


class TestDeterminant:
    def test_examples(self):
        assert determinant([[1, 5], [2, 3]]) == -7
        assert determinant([[int(i == j) for j in range(4)] for i in range(4)]) == 1
        assert determinant([[1, 1, 0], [0, 1, 1], [1, 0, 1]]) == 2
        assert determinant([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)

    def test_non_square(self):
        with pytest.raises(DimensionError):
            determinant([[1, 2, 3], [4, 5, 6]])

    def test_singular(self):
        assert determinant([[1, 2], [2, 4]]) == 0
        assert int_determinant([[0, 0], [0, 0]]) == 0

    @given(st.integers(1, 4).flatmap(square))
    def test_matches_leibniz(self, m):
        assert determinant(m) == leibniz(m)

    @given(st.integers(2, 4).flatmap(square), st.data())
    def test_alternating(self, m, data):
        i, j = data.draw(st.lists(st.integers(0, len(m) - 1), min_size=2, max_size=2, unique=True))
        swapped = list(m)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert determinant(swapped) == -determinant(m)

    @given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
    def test_integer_matrices_give_integers(self, m):
        assert int_determinant(m) == determinant(m)
        assert determinant(m).denominator == 1


class TestPrimitive:
    def test_examples(self):
        assert primitive_normal((2, 4, 6)) == (1, 2, 3)
        assert primitive_normal((0, -3)) == (0, 1)
        assert primitive_normal((1, 1)) == (1, 1)

    def test_orientation(self):
        # the orientation vector fixes the sign instead of the first entry
        assert primitive_normal((2, -4), orient=(-1, 0)) == (-1, 2)

    def test_zero(self):
        with pytest.raises(DegenerateInputError):
            primitive_normal((0, 0))

    @given(st.lists(small, min_size=1, max_size=5).filter(any))
    def test_idempotent_and_primitive(self, v):
        p = primitive_normal(v)
        assert primitive_normal(p) == p
        assert reduce(gcd, p) == 1
        assert rank([p, v]) == 1
        assert primitive(v) in (p, tuple(-x for x in p))


class TestRank:
    def test_examples(self):
        assert rank([(1, 0), (0, 1), (1, 1)]) == 2
        assert rank([(1, 2, 3), (2, 4, 6)]) == 1
        assert rank([]) == 0
        assert affine_rank([(1, 1, 0), (0, 1, 1), (1, 0, 1)]) == 2
        assert affine_rank([(1, 1)]) == 0


class TestHyperplane:
    def test_integer_form(self):
        h = Hyperplane((Fraction(1, 2), Fraction(1, 2)), Fraction(3, 4))
        b, c = h.integer_form()
        assert h.contains((1, 1)) and not h.contains((0, 1))
        assert h.is_tight((Fraction(3, 2), 0))
        assert Fraction(c) / b[0] == Fraction(3, 2)

    def test_scaled(self):
        h = Hyperplane.from_integer_row((2, 1), 4)
        assert h.scaled(3).offset == 12
        assert h.value((1, 2)) == 4
        assert h.is_tight((1, 2))
