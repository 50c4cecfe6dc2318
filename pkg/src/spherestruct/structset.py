"""Presentations of the smooth structure set of a product of two spheres.

For p, q >= 2 with p + q >= 5 the smooth structure set of S^p x S^q sits
in an exact sequence of pointed sets

    0 -> Theta_{p+q} -> S^Diff(S^p x S^q)
                     -> pi_p(G/O) x pi_q(G/O) -> 8 t_p t_q . bP_{p+q} -> 0

where Theta_{p+q} (homotopy spheres, acting by connected sum) acts
transitively on the fibres of the normal-invariant map in the middle, and
the right-hand map sends a pair of invariants with integer coordinates
(phi_u, phi_v) to 8 t_p t_q phi_u phi_v in bP_{p+q}.  The residual group
on the right is the obstruction to the image of the middle map being a
subgroup.

Convention: when p + q is odd the even factor is listed second; inputs
are normalised to that order and the original order is echoed back.

The Theta-action is free except when the normalised shape is
(4j-1, 4k).  There the stabiliser of a structure whose even-factor
invariant has integer coordinate d is the subgroup of bP_{4(j+k)}
generated by 8 d t_{4j} t_{4k}, so fibre sizes vary with d:
|fibre| = |Theta_{p+q}| / |stabiliser(d)|.

The topological structure set, by contrast, is a group isomorphic to
L_p x L_q, and the smooth set never is one when the shape is (4j-1, 4k)
(stabilisers vary) or (4j, 4k) (the image of the forgetful map to the
topological set is not a subgroup whenever the residual group is
nontrivial, which holds in every shipped dimension).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bp, tables
from .cyclic import CyclicElement, CyclicGroup, CyclicSubgroup, subgroup_generated
from .ltheory import LGroupKind, l_group
from .tables import GroupTable, KnownGroup

__all__ = [
    "DInvariant",
    "StructureSetPresentation",
    "TopStructureSet",
    "GroupStructureVerdict",
    "ACTION_FREE",
    "ACTION_STABILIZER",
    "normalize_dims",
    "present",
    "del_map",
    "stabilizer",
    "eta_fiber_size",
    "top_structure_set",
    "group_structure_possible",
    "forgetful_fiber",
]

ACTION_FREE = "free_everywhere"
ACTION_STABILIZER = "stabilizers_vary_with_d"


@dataclass(frozen=True)
class DInvariant:
    """Integer coordinate of the even-factor normal invariant of a
    structure; the quantity stabilisers depend on."""

    value: int


def _d_value(d: DInvariant | int) -> int:
    return d.value if isinstance(d, DInvariant) else int(d)


def _check_pair(p: int, q: int) -> None:
    if p < 2 or q < 2 or p + q < 5:
        raise ValueError(
            f"sphere factors need p, q >= 2 with p + q >= 5, got ({p}, {q})"
        )


def normalize_dims(p: int, q: int) -> tuple[int, int, bool]:
    """Validate (p, q) and apply the convention that the even factor is
    listed second when p + q is odd.  Returns (p, q, swapped)."""
    _check_pair(p, q)
    if (p + q) % 2 == 1 and q % 2 == 1:
        return q, p, True
    return p, q, False


def _is_stabilizer_shape(p: int, q: int) -> bool:
    # Normalised shape (4j-1, 4k); only possible when p + q = 3 mod 4.
    return p % 4 == 3 and q % 4 == 0


@dataclass(frozen=True)
class StructureSetPresentation:
    """Everything the exact sequence above says about one product."""

    p: int
    q: int
    input_p: int
    input_q: int
    theta_group: KnownGroup
    bp_next: KnownGroup
    normal_invariants: tuple[KnownGroup, KnownGroup]
    residual: CyclicGroup
    action_case: str
    stabilizer_coefficient: int | None  # 8 t_{p+1} t_q in the stabiliser case

    def stabilizer_rule(self, d: DInvariant | int) -> CyclicSubgroup:
        """Stabiliser of a structure with even-factor coordinate d."""
        return stabilizer(self.p, self.q, d)

    def sequence_text(self) -> str:
        n = self.p + self.q
        theta = _named_order(f"Theta_{n}", self.theta_group)
        left = f"pi_{self.p}(G/O)"
        right = f"pi_{self.q}(G/O)"
        residual = str(self.residual)
        return (
            f"0 -> {theta} -> S^Diff(S^{self.p} x S^{self.q}) -> "
            f"{left} x {right} -> {residual} -> 0"
        )

    def as_dict(self) -> dict:
        n = self.p + self.q
        coefficient = 8 * bp.t(self.p) * bp.t(self.q)
        payload = {
            "p": self.p,
            "q": self.q,
            "input_p": self.input_p,
            "input_q": self.input_q,
            "theta": self.theta_group.as_json(),
            "bp_next": self.bp_next.as_json(),
            "normal_invariants": [g.as_json() for g in self.normal_invariants],
            "residual_order": self.residual.order,
            "residual_generator_coefficient": coefficient,
            "bp_dim": n,
            "action": self.action_case,
            "sequence": self.sequence_text(),
        }
        if self.theta_group.is_unknown:
            payload["fiber_group_order"] = "unknown"
        elif self.action_case == ACTION_FREE:
            payload["fiber_group_order"] = self.theta_group.order
        else:
            payload["fiber_group_order"] = "depends on d"
            payload["stabilizer_generator_coefficient"] = self.stabilizer_coefficient
            payload["stabilizer_ambient_order"] = bp.t(n + 1)
        return payload


def _named_order(name: str, group: KnownGroup) -> str:
    if group.is_unknown:
        return f"{name}(order unknown)"
    if group.is_trivial:
        return "0"
    return f"{name}(order {group.order})"


def present(
    p: int, q: int, table: GroupTable | None = None
) -> StructureSetPresentation:
    """Populate the presentation of S^Diff(S^p x S^q) from the order
    formulas and the reference table."""
    np_, nq, _ = normalize_dims(p, q)
    n = np_ + nq
    theta_group = tables.theta_order(n, table)
    bp_next = bp.bp_order(n + 1, table)
    normal = (tables.pi_go(np_, table), tables.pi_go(nq, table))
    residual = bp.residual_group(np_, nq)
    if _is_stabilizer_shape(np_, nq):
        case = ACTION_STABILIZER
        coefficient = 8 * bp.t(np_ + 1) * bp.t(nq)
    else:
        case = ACTION_FREE
        coefficient = None
    return StructureSetPresentation(
        p=np_,
        q=nq,
        input_p=p,
        input_q=q,
        theta_group=theta_group,
        bp_next=bp_next,
        normal_invariants=normal,
        residual=residual,
        action_case=case,
        stabilizer_coefficient=coefficient,
    )


def del_map(p: int, q: int, phi_u: int, phi_v: int) -> CyclicElement:
    """Value 8 t_p t_q phi_u phi_v of the right-hand map in bP_{p+q}.

    When p + q is not divisible by 4 the target is represented by the
    trivial group (the map is identically zero there).
    """
    _check_pair(p, q)
    n = p + q
    if n % 4 != 0:
        return CyclicGroup(1).element(0)
    group = CyclicGroup(bp.t(n))
    return group.element(8 * bp.t(p) * bp.t(q) * phi_u * phi_v)


def stabilizer(p: int, q: int, d: DInvariant | int) -> CyclicSubgroup:
    """Stabiliser in bP_{p+q+1} of a structure with even-factor integer
    coordinate d.

    In the (4j-1, 4k) shape this is the subgroup generated by
    8 d t_{4j} t_{4k}; every other shape has a free action and gets the
    trivial subgroup (with ambient bP_{p+q+1} when its order follows from
    the formulas, the trivial group otherwise).
    """
    np_, nq, _ = normalize_dims(p, q)
    value = _d_value(d)
    m = np_ + nq + 1
    if _is_stabilizer_shape(np_, nq):
        return subgroup_generated(bp.t(m), 8 * value * bp.t(np_ + 1) * bp.t(nq))
    if m % 4 == 0:
        return subgroup_generated(bp.t(m), 0)
    return subgroup_generated(1, 0)


def eta_fiber_size(
    p: int, q: int, d: DInvariant | int, table: GroupTable | None = None
) -> KnownGroup:
    """Size of the normal-invariant-map fibre through a structure with
    even-factor coordinate d: |Theta_{p+q}| / |stabiliser(d)|.

    Unknown when the order of Theta_{p+q} is outside the table.
    """
    np_, nq, _ = normalize_dims(p, q)
    theta_group = tables.theta_order(np_ + nq, table)
    if theta_group.is_unknown:
        return KnownGroup.unknown()
    stab = stabilizer(np_, nq, d)
    if theta_group.order % stab.order != 0:
        raise ValueError(
            f"table gives |Theta_{np_ + nq}| = {theta_group.order}, which the "
            f"stabiliser order {stab.order} does not divide; the table "
            "contradicts the subgroup chain stabiliser <= bP <= Theta"
        )
    return KnownGroup.finite(theta_group.order // stab.order)


@dataclass(frozen=True)
class TopStructureSet:
    """The topological structure set: a group, isomorphic to L_p x L_q."""

    p_factor: LGroupKind
    q_factor: LGroupKind
    is_group: bool = True

    @property
    def is_singleton(self) -> bool:
        return self.p_factor.symbol == "0" and self.q_factor.symbol == "0"

    def __str__(self) -> str:
        return f"{self.p_factor} x {self.q_factor}"


def top_structure_set(p: int, q: int) -> TopStructureSet:
    """S^Top(S^p x S^q) as the group L_p x L_q (factor order as given)."""
    _check_pair(p, q)
    return TopStructureSet(l_group(p), l_group(q))


@dataclass(frozen=True)
class GroupStructureVerdict:
    """Whether the smooth structure set can carry a compatible group
    structure; ``reason`` names the obstruction when it cannot."""

    possible: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.possible


def group_structure_possible(p: int, q: int) -> GroupStructureVerdict:
    """Group-structure verdict by normalised shape: (4j-1, 4k) fails with
    varying stabilisers, (4j, 4k) fails when the residual group is
    nontrivial, everything else succeeds."""
    np_, nq, _ = normalize_dims(p, q)
    if _is_stabilizer_shape(np_, nq):
        return GroupStructureVerdict(False, "non-constant stabilizers")
    if np_ % 4 == 0 and nq % 4 == 0 and bp.residual_group(np_, nq).order > 1:
        return GroupStructureVerdict(False, "image not a subgroup")
    return GroupStructureVerdict(True, None)


def forgetful_fiber(p: int, q: int, top_invariant: int) -> KnownGroup:
    """Size of the forgetful-map fibre over a topological structure of
    S^3 x S^4 with normal invariant ``top_invariant`` in Z.

    Smooth structures hit exactly the even invariants (the comparison map
    has index-two image in degree 4), so odd inputs are rejected.  Over
    2y the fibre has 4 elements when 7 does not divide y, else 28.
    """
    np_, nq, _ = normalize_dims(p, q)
    if (np_, nq) != (3, 4):
        raise ValueError(
            f"forgetful_fiber currently handles only S^3 x S^4, got ({p}, {q})"
        )
    if top_invariant % 2 != 0:
        raise ValueError(
            f"topological normal invariant {top_invariant} is odd, hence not "
            "in the image of the smooth structure set (even invariants only)"
        )
    y = top_invariant // 2
    return KnownGroup.finite(28 if y % 7 == 0 else 4)
