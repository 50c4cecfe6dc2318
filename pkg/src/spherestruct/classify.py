"""Diffeomorphism classification over S^3 x S^4 and S^4 x S^4.

S^3 x S^4 side.  Write N_v for the 3-sphere bundle over S^4 with trivial
Euler class and first Pontrjagin class 48v.  Every smooth manifold
homotopy equivalent to S^3 x S^4 is Sigma # N_v for a homotopy 7-sphere
Sigma, so a manifold is recorded as a pair (sigma in Z_28 = bP_8, v in Z).
Two such records name the same structure exactly when v agrees and the
sigma difference lies in <32 v>; they are diffeomorphic exactly when
v agrees up to sign and the difference lies in the inertia group of N_v,
which by Wilkens' classification is the subgroup <2v> of Z_28, of order
14 / gcd(14, v).

S^4 x S^4 side.  Write W_{u,v} for the plumbing of two 4-disc bundles
over S^4 with Pontrjagin data (48u, 48v).  Its Wall classification triple
is the rank-2 hyperbolic intersection form together with the tangential
invariant Salpha taking values (24u, 24v) on the standard basis, and
signature 0.  The boundary of W_{u,v} is a homotopy 7-sphere whose class
in bP_8 = Z_28 is the Eells-Kuiper style quantity

    (signature - Salpha^2) / 8  mod 28  =  -4uv  mod 28,

so the boundary is the standard sphere exactly when 7 divides uv.  In
that case capping off gives closed manifolds N_{u,v,phi} indexed by a
gluing twist phi in Z/2.  Two of them are almost diffeomorphic exactly
when {u0, v0} = {eps u1, eps v1} as unordered pairs for a sign eps (the
twist is invisible up to connected sum with a homotopy sphere), and
diffeomorphic exactly when additionally phi agrees: the inertia group is
trivial because Salpha's image lies in 24Z, inside 4Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

from .cyclic import CyclicElement, CyclicGroup, CyclicSubgroup, in_subgroup, subgroup_generated

__all__ = [
    "BP8",
    "S3S4Invariant",
    "WallTriple",
    "S4S4Manifold",
    "s3s4_structure_equal",
    "s3s4_diffeomorphic",
    "s3s4_inertia_group",
    "wall_triple_of_plumbing",
    "plumbing_boundary_class",
    "s4s4_boundary_is_standard",
    "s4s4_almost_diffeomorphic",
    "s4s4_diffeomorphic",
]

BP8 = CyclicGroup(28)


@dataclass(frozen=True)
class S3S4Invariant:
    """A manifold Sigma # N_v: the class sigma of Sigma in Z_28 and the
    bundle parameter v.  ``sigma`` may be given as a plain integer."""

    sigma: CyclicElement
    v: int

    def __post_init__(self) -> None:
        if isinstance(self.sigma, int):
            object.__setattr__(self, "sigma", BP8.element(self.sigma))
        elif self.sigma.group != BP8:
            raise ValueError(f"sigma must lie in {BP8}, got {self.sigma.group}")


def s3s4_structure_equal(a: S3S4Invariant, b: S3S4Invariant) -> bool:
    """Same point of the structure set: equal v and sigma difference in
    <32 v> (the stabiliser subgroup for the d = v structures)."""
    if a.v != b.v:
        return False
    return in_subgroup(a.sigma - b.sigma, subgroup_generated(28, 32 * a.v))


def s3s4_diffeomorphic(a: S3S4Invariant, b: S3S4Invariant) -> bool:
    """Diffeomorphic (orientation aside): v agrees up to sign and the
    sigma difference lies in the inertia group <2v>."""
    if a.v != b.v and a.v != -b.v:
        return False
    return in_subgroup(a.sigma - b.sigma, s3s4_inertia_group(a.v))


def s3s4_inertia_group(v: int) -> CyclicSubgroup:
    """Inertia group of N_v: the subgroup <2v> of Z_28, whose order is
    14 / gcd(14, v)."""
    return subgroup_generated(28, 2 * v)


@dataclass(frozen=True)
class WallTriple:
    """Wall classification data of a plumbing: hyperbolic intersection
    form, the tangential invariant on the standard basis, signature 0."""

    s_alpha_x: int
    s_alpha_y: int

    lambda_matrix: ClassVar[tuple[tuple[int, int], tuple[int, int]]] = ((0, 1), (1, 0))

    @property
    def signature(self) -> int:
        return 0

    @property
    def s_alpha_squared(self) -> int:
        # Hyperbolic evaluation: (a x + b y)^2 = 2ab.
        return 2 * self.s_alpha_x * self.s_alpha_y


def wall_triple_of_plumbing(u: int, v: int) -> WallTriple:
    """Wall triple of W_{u,v}: Salpha is (24u, 24v) on the basis."""
    return WallTriple(24 * u, 24 * v)


def plumbing_boundary_class(u: int, v: int) -> CyclicElement:
    """Class of the boundary sphere of W_{u,v} in bP_8 = Z_28, computed
    as (signature - Salpha^2)/8 from the Wall triple; equals -4uv mod 28."""
    triple = wall_triple_of_plumbing(u, v)
    numerator = triple.signature - triple.s_alpha_squared
    # 8 | 2 * 24u * 24v, so the division is exact.
    return BP8.element(numerator // 8)


def s4s4_boundary_is_standard(u: int, v: int) -> bool:
    """Whether the boundary of W_{u,v} is the standard 7-sphere
    (equivalently 7 | uv)."""
    return plumbing_boundary_class(u, v).is_zero


@dataclass(frozen=True)
class S4S4Manifold:
    """A closed manifold N_{u,v,phi} obtained by capping off W_{u,v}.

    Requires 7 | uv; otherwise the boundary sphere is exotic and no such
    closed manifold exists.  The twist phi is reduced mod 2.
    """

    u: int
    v: int
    phi: int

    def __post_init__(self) -> None:
        if (self.u * self.v) % 7 != 0:
            raise ValueError(
                f"no closed manifold for (u, v) = ({self.u}, {self.v}): the "
                "plumbing boundary is an exotic sphere unless 7 divides u*v"
            )
        object.__setattr__(self, "phi", self.phi % 2)


def s4s4_almost_diffeomorphic(a: S4S4Manifold, b: S4S4Manifold) -> bool:
    """Almost diffeomorphic: (u, v) pairs agree as unordered pairs up to
    a common sign; the twist phi plays no role here."""
    mine = {(a.u, a.v), (a.v, a.u)}
    return (b.u, b.v) in mine or (-b.u, -b.v) in mine


def s4s4_diffeomorphic(a: S4S4Manifold, b: S4S4Manifold) -> bool:
    """Diffeomorphic: almost diffeomorphic with matching twist."""
    return s4s4_almost_diffeomorphic(a, b) and a.phi == b.phi
