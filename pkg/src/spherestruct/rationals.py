"""Exact rational arithmetic and Bernoulli numbers.

Integers throughout the package are plain Python ``int`` (arbitrary
precision) and rationals are ``fractions.Fraction``, which is always kept
in lowest terms with a positive denominator.  ``Rational`` is exported as
an alias so callers can spell that contract explicitly.  Nothing in this
package touches floating point.

Bernoulli numbers use the topologist's indexing: ``bernoulli(k)`` is the
absolute value of the classical B_{2k}, so

    bernoulli(1) = 1/6,  bernoulli(2) = 1/30,  bernoulli(3) = 1/42, ...

The odd-index classical values (which vanish beyond B_1) never appear in
this indexing, and the sign convention for B_1 is irrelevant because only
even classical indices are consulted.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Rational = Fraction

__all__ = ["Rational", "bernoulli", "num_b_over_4k"]


@lru_cache(maxsize=None)
def _abs_classical_bernoulli(n: int) -> Fraction:
    # Akiyama-Tanigawa triangular recurrence.  Row m starts with 1/(m+1);
    # after the in-place sweep the left end holds B_m (in the convention
    # with B_1 = +1/2, which agrees with the usual one at even indices).
    row: list[Fraction] = []
    value = Fraction(1)
    for m in range(n + 1):
        row.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        value = row[0]
    return abs(value)


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number in the topologist's indexing, i.e. |B_{2k}|.

    Exact for any k >= 1; intended working range is k <= 100 or so, where
    the quadratic recurrence stays cheap.
    """
    if k < 1:
        raise ValueError(f"bernoulli(k) requires k >= 1, got {k}")
    return _abs_classical_bernoulli(2 * k)


def num_b_over_4k(k: int) -> int:
    """Numerator of bernoulli(k)/4k in lowest terms (a positive integer)."""
    if k < 1:
        raise ValueError(f"num_b_over_4k(k) requires k >= 1, got {k}")
    return (bernoulli(k) / (4 * k)).numerator
