"""Surgery obstruction groups of the trivial group and the product pairing.

The quadratic L-groups are 4-periodic: L_i = Z, 0, Z/2, 0 for i = 0, 1,
2, 3 mod 4.  The symmetric groups run Z, Z/2, 0, 0 in the same order.
Classes are stored as an integer coefficient of a fixed generator z_i of
L_i; the coefficient is normalised to 0 in the zero groups and to {0, 1}
in the Z/2 groups.

The external product L_p x L_q -> L_{p+q} vanishes unless both degrees
are divisible by 4, where it is multiplication by 8 on the integer
coefficients (signature-product conventions with the usual eighth).

Smooth normal invariants of a sphere enter through their integer
coordinate phi: the comparison map to topological normal invariants
multiplies phi by t_{4k} in degree 4k and is treated as zero elsewhere
(the Z/2-coordinate bookkeeping in degrees 2 mod 4 is outside this
package's scope).  The surgery obstructions of a product of two spheres
are then

    theta_top(x, y, z)  = x*y + z           on topological invariants,
    theta_diff(u, v, w) = F(u)F(v) + F(w)   on smooth ones,

so theta_diff is theta_top after applying the comparison map to every
coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bp import t

__all__ = [
    "LGroupKind",
    "SymmetricLGroupKind",
    "LClass",
    "NormalClassDiff",
    "l_group",
    "symmetric_l_group",
    "pairing",
    "theta_top",
    "forgetful_f",
    "theta_diff",
]

_QUADRATIC = ("Z", "0", "Z/2", "0")
_SYMMETRIC = ("Z", "Z/2", "0", "0")


@dataclass(frozen=True)
class LGroupKind:
    """An L-group in a fixed dimension, identified by its symbol."""

    dim: int
    symbol: str  # "Z" | "0" | "Z/2"

    def __str__(self) -> str:
        return self.symbol


# The symmetric groups carry the same shape of data.
SymmetricLGroupKind = LGroupKind


def l_group(i: int) -> LGroupKind:
    """The quadratic L-group in dimension i >= 0."""
    return LGroupKind(i, _QUADRATIC[i % 4])


def symmetric_l_group(i: int) -> SymmetricLGroupKind:
    """The symmetric L-group in dimension i >= 0."""
    return LGroupKind(i, _SYMMETRIC[i % 4])


@dataclass(frozen=True)
class LClass:
    """An element of the quadratic L-group in its dimension.

    The stored value is the coefficient of the generator z_dim; it is
    normalised on construction (anything in a zero group is 0, Z/2 values
    are reduced mod 2).
    """

    dim: int
    value: int

    def __post_init__(self) -> None:
        symbol = _QUADRATIC[self.dim % 4]
        if symbol == "0":
            object.__setattr__(self, "value", 0)
        elif symbol == "Z/2":
            object.__setattr__(self, "value", self.value % 2)

    @property
    def kind(self) -> LGroupKind:
        return l_group(self.dim)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: LClass) -> LClass:
        if self.dim != other.dim:
            raise ValueError(
                f"cannot add L-classes of dimensions {self.dim} and {other.dim}"
            )
        return LClass(self.dim, self.value + other.value)

    def __str__(self) -> str:
        return f"{self.value}*z_{self.dim}"


@dataclass(frozen=True)
class NormalClassDiff:
    """A smooth normal invariant of a sphere, reduced to its Z-coordinate.

    ``phi`` is the integer coordinate, meaningful only in dimensions
    divisible by 4 and normalised to 0 elsewhere.  ``torsion_label`` is an
    opaque tag callers may attach to remember a torsion component; nothing
    in this package reads it.
    """

    dim: int
    phi: int = 0
    torsion_label: str | None = None

    def __post_init__(self) -> None:
        if self.dim % 4 != 0:
            object.__setattr__(self, "phi", 0)


def _check_pair_dims(p: int, q: int) -> None:
    if p < 2 or q < 2 or p + q < 5:
        raise ValueError(
            f"sphere factors need p, q >= 2 with p + q >= 5, got ({p}, {q})"
        )


def pairing(p: int, q: int, x: LClass, y: LClass) -> LClass:
    """External product L_p x L_q -> L_{p+q}: 8*x*y when 4 | p and 4 | q,
    zero otherwise."""
    if x.dim != p or y.dim != q:
        raise ValueError(
            f"pairing dimension mismatch: expected ({p}, {q}), "
            f"got classes in ({x.dim}, {y.dim})"
        )
    if p % 4 == 0 and q % 4 == 0:
        return LClass(p + q, 8 * x.value * y.value)
    return LClass(p + q, 0)


def theta_top(p: int, q: int, x: LClass, y: LClass, z: LClass) -> LClass:
    """Surgery obstruction x*y + z of a topological normal invariant
    (x, y, z) of S^p x S^q."""
    _check_pair_dims(p, q)
    if z.dim != p + q:
        raise ValueError(
            f"third coordinate must live in dimension {p + q}, got {z.dim}"
        )
    return pairing(p, q, x, y) + z


def forgetful_f(u: NormalClassDiff) -> LClass:
    """Comparison map on normal invariants: multiplication by t_dim on the
    integer coordinate in dimensions divisible by 4, zero otherwise."""
    if u.dim % 4 == 0:
        return LClass(u.dim, t(u.dim) * u.phi)
    return LClass(u.dim, 0)


def theta_diff(
    p: int, q: int, u: NormalClassDiff, v: NormalClassDiff, w: NormalClassDiff
) -> LClass:
    """Surgery obstruction of a smooth normal invariant (u, v, w) of
    S^p x S^q: theta_top applied to the comparison images."""
    _check_pair_dims(p, q)
    if u.dim != p or v.dim != q or w.dim != p + q:
        raise ValueError(
            f"coordinate dimensions must be ({p}, {q}, {p + q}), "
            f"got ({u.dim}, {v.dim}, {w.dim})"
        )
    return theta_top(p, q, forgetful_f(u), forgetful_f(v), forgetful_f(w))
