"""Finite cyclic groups Z_n, their elements, and their subgroups.

The subgroup of Z_n generated by g equals the one generated by gcd(g, n),
so subgroups are stored by the canonical generator gcd(g mod n, n).  That
makes subgroup values compare equal exactly when they are the same
subgroup, which is what the classification predicates rely on.  The
canonical generator is always a positive divisor of n; the trivial
subgroup is stored with generator n itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "CyclicGroup",
    "CyclicElement",
    "CyclicSubgroup",
    "subgroup_generated",
    "in_subgroup",
    "quotient_order",
]


@dataclass(frozen=True)
class CyclicGroup:
    """The additive cyclic group Z_n; order 1 is the trivial group."""

    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"cyclic group order must be >= 1, got {self.order}")

    def element(self, value: int) -> CyclicElement:
        return CyclicElement(self, value)

    def __str__(self) -> str:
        return "0" if self.order == 1 else f"Z_{self.order}"


@dataclass(frozen=True)
class CyclicElement:
    """An element of Z_n, stored by its representative in 0..n-1."""

    group: CyclicGroup
    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.group.order)

    def _check_same_group(self, other: CyclicElement) -> None:
        if self.group != other.group:
            raise ValueError(
                f"elements live in different groups: {self.group} vs {other.group}"
            )

    def __add__(self, other: CyclicElement) -> CyclicElement:
        self._check_same_group(other)
        return CyclicElement(self.group, self.value + other.value)

    def __sub__(self, other: CyclicElement) -> CyclicElement:
        self._check_same_group(other)
        return CyclicElement(self.group, self.value - other.value)

    def __neg__(self) -> CyclicElement:
        return CyclicElement(self.group, -self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return f"{self.value} in {self.group}"


@dataclass(frozen=True)
class CyclicSubgroup:
    """A subgroup of Z_n, canonicalised to its generator gcd(g mod n, n)."""

    ambient: CyclicGroup
    generator_value: int

    def __post_init__(self) -> None:
        n = self.ambient.order
        object.__setattr__(self, "generator_value", gcd(self.generator_value % n, n))

    @property
    def order(self) -> int:
        return self.ambient.order // self.generator_value

    def contains(self, x: CyclicElement) -> bool:
        if x.group != self.ambient:
            raise ValueError(
                f"element of {x.group} tested against a subgroup of {self.ambient}"
            )
        return x.value % self.generator_value == 0

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __str__(self) -> str:
        shown = self.generator_value % self.ambient.order
        return f"<{shown}> in {self.ambient}"


def subgroup_generated(n: int, g: int) -> CyclicSubgroup:
    """The subgroup of Z_n generated by g, i.e. (g mod n)Z_n."""
    if n < 1:
        raise ValueError(f"ambient order must be >= 1, got {n}")
    return CyclicSubgroup(CyclicGroup(n), g)


def in_subgroup(x: CyclicElement, subgroup: CyclicSubgroup) -> bool:
    """Whether x lies in the subgroup; groups must match."""
    return subgroup.contains(x)


def quotient_order(n: int, g: int) -> int:
    """Order of Z_n / <g>, which is gcd(g mod n, n)."""
    if n < 1:
        raise ValueError(f"ambient order must be >= 1, got {n}")
    return gcd(g % n, n)
