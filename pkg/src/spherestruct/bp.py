"""Orders of the groups bP_m of spheres bounding parallelisable manifolds.

For k >= 2 the group bP_{4k} is cyclic of order given by the Levine order
formula

    t_{4k} = a_k * 2^(2k-2) * (2^(2k-1) - 1) * Num(B_k / 4k),

where a_k is 2 for odd k and 1 for even k, B_k is the k-th Bernoulli
number in the topologist's indexing, and Num(.) takes the numerator in
lowest terms.  t_4 is 2 by definition: it is the order of the cokernel of
the smooth-to-topological comparison on degree-4 normal invariants, where
bP_4 itself is trivial.  (The formula evaluated at k = 1 happens to give
2 as well.)  For i not divisible by 4 we set t_i = 0.

First values: t_4 = 2, t_8 = 28, t_12 = 992, t_16 = 8128 (= 64 * 127; the
value 8182 seen in some printed tables is a misprint), t_20 = 261632.

The residual group of a pair (p, q) is the subgroup of bP_{p+q} generated
by 8 * t_p * t_q.  It is the cokernel of the smooth normal-invariant map
of S^p x S^q, hence the obstruction to the image of the forgetful map to
the topological structure set being a subgroup.  Its order is always odd:
the 2-adic valuation of 8 * t_{4j} * t_{4k} is at least that of t_{4(j+k)}.
"""

from __future__ import annotations

from math import gcd

from .cyclic import CyclicGroup
from .rationals import num_b_over_4k
from .tables import GroupTable, KnownGroup, bp_from_table

__all__ = ["t", "bp_order", "residual_group", "image_f_is_subgroup"]


def t(i: int) -> int:
    """The constant t_i: |bP_{4k}| for i = 4k >= 8, 2 for i = 4, else 0."""
    if i < 1:
        raise ValueError(f"t(i) requires i >= 1, got {i}")
    if i % 4 != 0:
        return 0
    k = i // 4
    if k == 1:
        return 2
    a_k = 2 if k % 2 == 1 else 1
    return a_k * 2 ** (2 * k - 2) * (2 ** (2 * k - 1) - 1) * num_b_over_4k(k)


def bp_order(m: int, table: GroupTable | None = None) -> KnownGroup:
    """Order of bP_m as a KnownGroup.

    Odd m and m = 4 give the trivial group, m = 4k >= 8 is computed by the
    Levine order formula, and m = 2 mod 4 is a table lookup (typically
    unknown unless forced or overridden).
    """
    if m < 4:
        raise ValueError(f"bp_order(m) requires m >= 4, got {m}")
    if m % 2 == 1:
        return KnownGroup.trivial()
    if m % 4 == 0:
        return KnownGroup.trivial() if m == 4 else KnownGroup.finite(t(m))
    return bp_from_table(m, table)


def _check_pair(p: int, q: int) -> None:
    if p < 2 or q < 2 or p + q < 5:
        raise ValueError(
            f"sphere factors need p, q >= 2 with p + q >= 5, got ({p}, {q})"
        )


def residual_group(p: int, q: int) -> CyclicGroup:
    """The subgroup of bP_{p+q} generated by 8 * t_p * t_q, as a cyclic group.

    Trivial unless both p and q are divisible by 4.  Always computable:
    a nontrivial answer needs p + q = 4(j + k) with j + k >= 2, where the
    order formula applies.
    """
    _check_pair(p, q)
    generator = 8 * t(p) * t(q)
    if (p + q) % 4 != 0 or generator == 0:
        return CyclicGroup(1)
    ambient = t(p + q)
    return CyclicGroup(ambient // gcd(ambient, generator))


def image_f_is_subgroup(p: int, q: int) -> bool:
    """Whether the forgetful image in the topological structure set of
    S^{4j} x S^{4k} forms a subgroup; equivalent to the residual group
    being trivial."""
    if p % 4 != 0 or q % 4 != 0 or p < 4 or q < 4:
        raise ValueError(
            f"image_f_is_subgroup expects dimensions (4j, 4k), got ({p}, {q})"
        )
    return residual_group(p, q).order == 1
