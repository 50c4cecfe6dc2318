"""Reference orders for groups the calculator consumes but cannot derive.

Three families are tabulated:

* ``theta``          -- orders of the group of homotopy n-spheres,
* ``pi_go_torsion``  -- torsion of the n-th homotopy group of G/O,
* ``bp``             -- orders of the boundary-sphere groups bP_m for
                        m = 2 mod 4, the only residue with no closed
                        formula used here (odd m is trivial and m = 4k
                        follows from the Levine order formula in ``bp``).

The shipped entries cover dimensions up to 20 and come from the standard
Kervaire-Milnor era tables; they are reference data, not computed by this
package.  The bp family ships only the entries forced by the theta data
(bP_6 and bP_14 must be trivial because they embed in groups of order 1
and 3).  The pi_go torsion entries are the ones determined by the theta
and bp data through the surgery sequence of the sphere, namely
|Theta_n| / |bP_{n+1}| for odd n and that times 2/|bP_n| for n = 2 mod 4,
plus the classical pi_2(G/O) = Z/2.  For n = 0 mod 4 the group splits as
Z x Theta_n, so the torsion is read off the theta family at lookup time.

Any dimension outside the shipped data is reported as unknown rather than
guessed.  A JSON file can override individual entries; see ``load_table``.
Tables are immutable once constructed.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

__all__ = [
    "KnownGroup",
    "GroupTable",
    "TableError",
    "TableConsistencyWarning",
    "builtin_table",
    "theta_order",
    "pi_go",
    "bp_from_table",
    "parse_table",
    "load_table",
]


class TableError(ValueError):
    """Raised when a table file cannot be parsed or fails validation."""


class TableConsistencyWarning(UserWarning):
    """Emitted when loaded orders violate a divisibility constraint."""


@dataclass(frozen=True)
class KnownGroup:
    """Order data for a group: finite of known order, Z x finite, or unknown.

    Only orders are recorded, not isomorphism types; a ``finite`` entry of
    order 8 says nothing about whether the group is cyclic.  ``unknown``
    is a legal state that propagates through every computation consuming
    it, never silently becoming 0 or 1.
    """

    kind: str  # "finite" | "z_times_finite" | "unknown"
    order: int | None = None  # group order, or torsion order for z_times_finite

    @staticmethod
    def finite(order: int) -> KnownGroup:
        if order < 1:
            raise ValueError(f"finite group order must be >= 1, got {order}")
        return KnownGroup("finite", order)

    @staticmethod
    def trivial() -> KnownGroup:
        return KnownGroup("finite", 1)

    @staticmethod
    def z_times_finite(torsion_order: int) -> KnownGroup:
        if torsion_order < 1:
            raise ValueError(f"torsion order must be >= 1, got {torsion_order}")
        return KnownGroup("z_times_finite", torsion_order)

    @staticmethod
    def unknown() -> KnownGroup:
        return KnownGroup("unknown", None)

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_trivial(self) -> bool:
        return self.kind == "finite" and self.order == 1

    def describe(self) -> str:
        if self.kind == "unknown":
            return "unknown"
        if self.kind == "z_times_finite":
            if self.order == 1:
                return "Z"
            return f"Z x (torsion order {self.order})"
        if self.order == 1:
            return "trivial"
        return f"finite of order {self.order}"

    def as_json(self) -> dict:
        if self.kind == "finite":
            return {"kind": "finite", "order": self.order}
        if self.kind == "z_times_finite":
            return {"kind": "z_times_finite", "torsion_order": self.order}
        return {"kind": "unknown"}


# Orders of the homotopy-sphere groups Theta_n, n <= 20 (reference data).
_THETA_ORDERS: dict[int, int] = {
    1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 28, 8: 2, 9: 8, 10: 6,
    11: 992, 12: 1, 13: 3, 14: 2, 15: 16256, 16: 2, 17: 16, 18: 16,
    19: 523264, 20: 24,
}

# bP_m for m = 2 mod 4: only the entries forced by the theta orders above.
_BP_2MOD4_ORDERS: dict[int, int] = {6: 1, 14: 1}

# Torsion of pi_n(G/O) for n != 0 mod 4, where determined by the data
# above (see the module docstring); pi_2(G/O) = Z/2 is classical.
_PI_GO_TORSION: dict[int, int] = {
    2: 2, 3: 1, 5: 1, 6: 2, 7: 1, 11: 1, 13: 3, 14: 4, 15: 2, 19: 2,
}


@dataclass(frozen=True)
class GroupTable:
    """Immutable bundle of the three order families."""

    theta: dict[int, KnownGroup] = field(default_factory=dict)
    pi_go_torsion: dict[int, KnownGroup] = field(default_factory=dict)
    bp: dict[int, KnownGroup] = field(default_factory=dict)

    def theta_order(self, n: int) -> KnownGroup:
        return self.theta.get(n, KnownGroup.unknown())

    def pi_go(self, n: int) -> KnownGroup:
        """Order data for pi_n(G/O); Z x torsion in the 4-periodic degrees."""
        if n % 4 == 0 and n >= 4:
            override = self.pi_go_torsion.get(n)
            torsion = override if override is not None else self.theta_order(n)
            if torsion.is_unknown:
                return KnownGroup.unknown()
            return KnownGroup.z_times_finite(torsion.order)
        return self.pi_go_torsion.get(n, KnownGroup.unknown())

    def bp_2mod4(self, m: int) -> KnownGroup:
        return self.bp.get(m, KnownGroup.unknown())


def _finite_map(orders: dict[int, int]) -> dict[int, KnownGroup]:
    return {n: KnownGroup.finite(k) for n, k in orders.items()}


_BUILTIN = GroupTable(
    theta=_finite_map(_THETA_ORDERS),
    pi_go_torsion=_finite_map(_PI_GO_TORSION),
    bp=_finite_map(_BP_2MOD4_ORDERS),
)


def builtin_table() -> GroupTable:
    """The table shipped with the package (dimensions <= 20)."""
    return _BUILTIN


def theta_order(n: int, table: GroupTable | None = None) -> KnownGroup:
    """Order of the group of homotopy n-spheres, or unknown."""
    return (table or _BUILTIN).theta_order(n)


def pi_go(n: int, table: GroupTable | None = None) -> KnownGroup:
    """Order data for pi_n(G/O), n >= 2."""
    return (table or _BUILTIN).pi_go(n)


def bp_from_table(m: int, table: GroupTable | None = None) -> KnownGroup:
    """Table lookup for |bP_m| in the residue m = 2 mod 4."""
    return (table or _BUILTIN).bp_2mod4(m)


_FAMILIES = ("theta", "pi_go_torsion", "bp")


def _parse_entry(family: str, dim_key: str, value: object) -> tuple[int, KnownGroup]:
    try:
        dim = int(dim_key, 10)
    except ValueError:
        raise TableError(
            f"{family}: dimension keys must be decimal strings, got {dim_key!r}"
        ) from None
    if dim < 1:
        raise TableError(f"{family}[{dim_key}]: dimension must be >= 1")
    if family == "bp" and dim % 4 != 2:
        raise TableError(
            f"bp[{dim_key}]: only dimensions = 2 mod 4 are table entries "
            "(odd ones are trivial, multiples of 4 are computed)"
        )
    if value == "unknown":
        return dim, KnownGroup.unknown()
    if value == "Z":
        if family != "pi_go_torsion":
            raise TableError(
                f"{family}[{dim_key}]: the marker 'Z' is only meaningful for "
                "pi_go_torsion (it denotes a free group with trivial torsion)"
            )
        return dim, KnownGroup.finite(1)
    if isinstance(value, str):
        try:
            order = int(value, 10)
        except ValueError:
            raise TableError(
                f"{family}[{dim_key}]: expected a decimal order string, "
                f"'Z', or 'unknown'; got {value!r}"
            ) from None
    elif isinstance(value, int):
        order = value
    else:
        raise TableError(
            f"{family}[{dim_key}]: expected a decimal order string, "
            f"'Z', or 'unknown'; got {value!r}"
        )
    if order < 1:
        raise TableError(f"{family}[{dim_key}]: orders must be >= 1, got {order}")
    return dim, KnownGroup.finite(order)


def _check_consistency(table: GroupTable) -> None:
    # bP_m embeds in Theta_{m-1}, so its order must divide when both known.
    for m, bp_group in sorted(table.bp.items()):
        theta_group = table.theta.get(m - 1)
        if theta_group is None or bp_group.is_unknown or theta_group.is_unknown:
            continue
        if theta_group.order % bp_group.order != 0:
            warnings.warn(
                f"|bP_{m}| = {bp_group.order} does not divide "
                f"|Theta_{m - 1}| = {theta_group.order}; the table is "
                "inconsistent with bP_m being a subgroup of Theta_{m-1}",
                TableConsistencyWarning,
                stacklevel=3,
            )


def parse_table(text: str) -> GroupTable:
    """Parse override JSON and merge it over the built-in table.

    Empty input yields the built-ins unchanged.  Each family maps decimal
    dimension strings to a decimal order string, the marker ``"Z"`` (for
    pi_go_torsion only), or ``"unknown"``.  Entries replace the built-in
    entry for that dimension wholesale.  Divisibility violations between
    bp and theta entries are reported as warnings, not errors.
    """
    if not text.strip():
        return _BUILTIN
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableError(
            f"table JSON is malformed at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}"
        ) from exc
    if not isinstance(raw, dict):
        raise TableError("table file must contain a JSON object at top level")
    stray = sorted(set(raw) - set(_FAMILIES))
    if stray:
        raise TableError(
            f"unrecognised table keys {stray}; expected any of {list(_FAMILIES)}"
        )
    merged = {
        "theta": dict(_BUILTIN.theta),
        "pi_go_torsion": dict(_BUILTIN.pi_go_torsion),
        "bp": dict(_BUILTIN.bp),
    }
    for family in _FAMILIES:
        entries = raw.get(family)
        if entries is None:
            continue
        if not isinstance(entries, dict):
            raise TableError(f"{family}: expected an object of dimension entries")
        for dim_key, value in entries.items():
            dim, group = _parse_entry(family, dim_key, value)
            merged[family][dim] = group
    table = GroupTable(**merged)
    _check_consistency(table)
    return table


def load_table(path: str) -> GroupTable:
    """Read a JSON override file and merge it over the built-ins."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise TableError(f"cannot read table file {path!r}: {exc}") from exc
    return parse_table(text)
