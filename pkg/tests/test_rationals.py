from fractions import Fraction

import pytest

from spherestruct import bernoulli, num_b_over_4k

from helpers import bernoulli_oracle, von_staudt_clausen_denominator


@pytest.mark.parametrize(
    "k, expected",
    [
        (1, Fraction(1, 6)),
        (2, Fraction(1, 30)),
        (3, Fraction(1, 42)),
        (4, Fraction(1, 30)),
        (5, Fraction(5, 66)),
        (6, Fraction(691, 2730)),
        (7, Fraction(7, 6)),
        (8, Fraction(3617, 510)),
    ],
)
def test_bernoulli_small_values(k, expected):
    assert bernoulli(k) == expected


def test_bernoulli_rejects_bad_index():
    with pytest.raises(ValueError):
        bernoulli(0)
    with pytest.raises(ValueError):
        bernoulli(-3)
    with pytest.raises(ValueError):
        num_b_over_4k(0)


def test_bernoulli_agrees_with_recurrence_oracle():
    for k in range(1, 41):
        assert bernoulli(k) == bernoulli_oracle(k), k


def test_bernoulli_positive_and_lowest_terms():
    for k in range(1, 41):
        b = bernoulli(k)
        assert b > 0
        # Fraction keeps lowest terms; make the invariant explicit anyway.
        from math import gcd

        assert gcd(b.numerator, b.denominator) == 1
        assert b.denominator > 0


def test_von_staudt_clausen():
    for k in range(1, 41):
        d = bernoulli(k).denominator
        assert d == von_staudt_clausen_denominator(k), k
        assert d % 6 == 0


def test_num_b_over_4k_values():
    assert num_b_over_4k(1) == 1
    assert num_b_over_4k(2) == 1
    assert num_b_over_4k(3) == 1
    assert num_b_over_4k(6) == 691
    # frozen from the recurrence oracle
    assert num_b_over_4k(25) == 19802288209643185928499101


def test_num_b_over_4k_always_odd():
    for k in range(1, 41):
        value = num_b_over_4k(k)
        assert value >= 1
        assert value % 2 == 1, k
        assert value == (bernoulli_oracle(k) / (4 * k)).numerator
