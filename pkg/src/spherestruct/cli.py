"""Command-line front end.

Every subcommand answers one library question; ``--json`` switches the
output to a deterministic envelope with the query echoed back, the result
payload, and provenance notes saying which numbers are exact formula
output and which come from the reference table.  ``--table FILE`` (or the
SURGERY_TABLE environment variable) merges a JSON override file over the
built-in table.

Exit status: 0 on success, 1 on domain errors (a precondition violated by
otherwise well-formed arguments), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .bp import bp_order, image_f_is_subgroup, residual_group, t
from .classify import (
    S3S4Invariant,
    S4S4Manifold,
    plumbing_boundary_class,
    s3s4_diffeomorphic,
    s3s4_inertia_group,
    s3s4_structure_equal,
    s4s4_almost_diffeomorphic,
    s4s4_boundary_is_standard,
    s4s4_diffeomorphic,
    wall_triple_of_plumbing,
)
from .rationals import bernoulli
from .structset import (
    ACTION_FREE,
    eta_fiber_size,
    group_structure_possible,
    present,
    stabilizer,
    top_structure_set,
)
from .tables import GroupTable, KnownGroup, load_table

PROG = "spherestruct"

_NOTE_TABLE = (
    "theta, pi(G/O) and bP_{4k+2} orders: shipped reference table "
    "(override with --table or SURGERY_TABLE)"
)
_NOTE_FORMULA = "t_i and |bP_{4k}| orders: Levine order formula, exact integers"
_NOTE_BERNOULLI = (
    "Bernoulli numbers: exact rationals in the topologist's indexing (B_1 = 1/6)"
)
_NOTE_T16 = (
    "t_16 = 8128 = 64 * 127; the value 8182 appearing in some printed "
    "tables is a misprint"
)


class UsageError(Exception):
    """Argument combinations argparse alone cannot reject."""


def _order_or_unknown(group: KnownGroup) -> int | str:
    return "unknown" if group.is_unknown else group.order


def _cyclic_name(group: KnownGroup, name: str) -> str:
    if group.is_unknown:
        return f"{name} = unknown"
    if group.is_trivial:
        return f"{name} = 0 (trivial)"
    return f"{name} = Z_{group.order}"


def _cmd_bernoulli(args, table):
    value = bernoulli(args.k)
    payload = {
        "k": args.k,
        "value": str(value),
        "numerator": value.numerator,
        "denominator": value.denominator,
    }
    return payload, [f"B_{args.k} = {value}"], [_NOTE_BERNOULLI]


def _cmd_t(args, table):
    value = t(args.i)
    text = [f"t_{args.i} = {value}"]
    notes = [_NOTE_FORMULA, "t_4 = 2 by definition; t_i = 0 off multiples of 4"]
    if args.i == 16:
        text.append(_NOTE_T16)
        notes.append(_NOTE_T16)
    return {"i": args.i, "value": value}, text, notes


def _cmd_bp_order(args, table):
    group = bp_order(args.m, table)
    payload = {
        "m": args.m,
        "group": group.as_json(),
        "order": _order_or_unknown(group),
    }
    notes = [_NOTE_FORMULA]
    if args.m % 4 == 2:
        notes.append(_NOTE_TABLE)
    return payload, [_cyclic_name(group, f"bP_{args.m}")], notes


def _cmd_residual(args, table):
    group = residual_group(args.p, args.q)
    coefficient = 8 * t(args.p) * t(args.q)
    n = args.p + args.q
    payload = {
        "p": args.p,
        "q": args.q,
        "order": group.order,
        "generator_coefficient": coefficient,
        "ambient_bp_dim": n,
        "ambient_bp_order": t(n) if n % 4 == 0 else None,
    }
    label = f"8*t_{args.p}*t_{args.q} . bP_{n}"
    if group.order == 1:
        text = [f"residual group {label} = 0 (trivial)"]
    else:
        text = [f"residual group {label} = {group} (order {group.order})"]
    return payload, text, [_NOTE_FORMULA]


def _describe_pi(dim: int, group: KnownGroup) -> str:
    return f"pi_{dim}(G/O): {group.describe()}"


def _cmd_structure_set(args, table):
    pres = present(args.p, args.q, table)
    payload = pres.as_dict()
    n = pres.p + pres.q
    text = [f"S^Diff(S^{pres.p} x S^{pres.q})"]
    if (pres.input_p, pres.input_q) != (pres.p, pres.q):
        text[0] += f"   [normalised from ({pres.input_p}, {pres.input_q})]"
    text.append(f"sequence: {pres.sequence_text()}")
    text.append(_describe_pi(pres.p, pres.normal_invariants[0]))
    text.append(_describe_pi(pres.q, pres.normal_invariants[1]))
    if pres.residual.order == 1:
        text.append(f"residual 8*t_{pres.p}*t_{pres.q} . bP_{n}: trivial")
    else:
        text.append(
            f"residual 8*t_{pres.p}*t_{pres.q} . bP_{n}: {pres.residual} "
            "(image of the forgetful map is not a subgroup)"
        )
    if pres.action_case == ACTION_FREE:
        text.append(f"Theta_{n} acts freely; every fibre has |Theta_{n}| elements")
    else:
        text.append(
            f"Theta_{n} stabilisers vary: stab(d) = "
            f"<{pres.stabilizer_coefficient}*d> in Z_{t(n + 1)}"
        )
    text.append(f"bP_{n + 1}: {pres.bp_next.describe()}")
    return payload, text, [_NOTE_FORMULA, _NOTE_TABLE]


def _cmd_fiber(args, table):
    group = eta_fiber_size(args.p, args.q, args.d, table)
    payload = {
        "p": args.p,
        "q": args.q,
        "d": args.d,
        "fiber_order": _order_or_unknown(group),
    }
    if group.is_unknown:
        text = [f"fibre over d = {args.d}: unknown size"]
    else:
        text = [f"fibre over d = {args.d}: {group.order} elements"]
    return payload, text, [_NOTE_FORMULA, _NOTE_TABLE]


def _cmd_stabilizer(args, table):
    sub = stabilizer(args.p, args.q, args.d)
    payload = {
        "p": args.p,
        "q": args.q,
        "d": args.d,
        "ambient_order": sub.ambient.order,
        "generator": sub.generator_value % sub.ambient.order,
        "order": sub.order,
    }
    return payload, [f"stabiliser(d = {args.d}) = {sub} (order {sub.order})"], [_NOTE_FORMULA]


def _cmd_group_structure(args, table):
    verdict = group_structure_possible(args.p, args.q)
    payload = {
        "p": args.p,
        "q": args.q,
        "possible": verdict.possible,
        "reason": verdict.reason,
    }
    if verdict.possible:
        text = ["group structure possible: yes"]
    else:
        text = [f"group structure possible: no ({verdict.reason})"]
    return payload, text, [_NOTE_FORMULA]


def _cmd_image_f(args, table):
    is_subgroup = image_f_is_subgroup(args.p, args.q)
    residual = residual_group(args.p, args.q)
    payload = {
        "p": args.p,
        "q": args.q,
        "is_subgroup": is_subgroup,
        "residual_order": residual.order,
    }
    if is_subgroup:
        text = ["image of the forgetful map is a subgroup: yes"]
    else:
        text = [
            "image of the forgetful map is a subgroup: no "
            f"(residual group {residual})"
        ]
    return payload, text, [_NOTE_FORMULA]


def _cmd_top_set(args, table):
    top = top_structure_set(args.p, args.q)
    payload = {
        "p": args.p,
        "q": args.q,
        "factors": [top.p_factor.symbol, top.q_factor.symbol],
        "is_group": top.is_group,
        "singleton": top.is_singleton,
    }
    text = [f"S^Top(S^{args.p} x S^{args.q}) = {top} (a group)"]
    if top.is_singleton:
        text.append("the topological structure set is a single point")
    return payload, text, ["topological structure set: L_p x L_q, 4-periodic"]


def _cmd_classify_s3s4(args, table):
    a = S3S4Invariant(args.sigma0, args.v0)
    b = S3S4Invariant(args.sigma1, args.v1)
    payload = {
        "a": {"sigma": a.sigma.value, "v": a.v},
        "b": {"sigma": b.sigma.value, "v": b.v},
        "structure_equal": s3s4_structure_equal(a, b),
        "diffeomorphic": s3s4_diffeomorphic(a, b),
        "inertia_order_a": s3s4_inertia_group(a.v).order,
        "inertia_order_b": s3s4_inertia_group(b.v).order,
    }
    text = [
        f"manifolds (sigma, v): ({a.sigma.value}, {a.v}) vs ({b.sigma.value}, {b.v})",
        f"same structure-set point: {_yesno(payload['structure_equal'])}",
        f"diffeomorphic: {_yesno(payload['diffeomorphic'])}",
        f"inertia group orders: {payload['inertia_order_a']}, {payload['inertia_order_b']}",
    ]
    return payload, text, ["classification over S^3 x S^4 (Wilkens data)"]


def _cmd_classify_s4s4(args, table):
    if args.plumbing is not None:
        if args.data:
            raise UsageError(
                "classify-s4s4 takes either --plumbing U V or six integers, not both"
            )
        u, v = args.plumbing
        triple = wall_triple_of_plumbing(u, v)
        boundary = plumbing_boundary_class(u, v)
        payload = {
            "mode": "plumbing-boundary",
            "u": u,
            "v": v,
            "s_alpha": [triple.s_alpha_x, triple.s_alpha_y],
            "boundary_class": boundary.value,
            "standard": s4s4_boundary_is_standard(u, v),
        }
        text = [
            f"plumbing W_({u},{v}): Salpha = ({triple.s_alpha_x}, {triple.s_alpha_y})",
            f"boundary class in Z_28: {boundary.value}",
            f"boundary is the standard sphere: {_yesno(payload['standard'])}",
        ]
        return payload, text, ["boundary class: (signature - Salpha^2)/8 mod 28"]
    if len(args.data) != 6:
        raise UsageError(
            "classify-s4s4 needs U0 V0 PHI0 U1 V1 PHI1 (or --plumbing U V)"
        )
    u0, v0, phi0, u1, v1, phi1 = args.data
    a = S4S4Manifold(u0, v0, phi0)
    b = S4S4Manifold(u1, v1, phi1)
    payload = {
        "a": {"u": a.u, "v": a.v, "phi": a.phi},
        "b": {"u": b.u, "v": b.v, "phi": b.phi},
        "almost_diffeomorphic": s4s4_almost_diffeomorphic(a, b),
        "diffeomorphic": s4s4_diffeomorphic(a, b),
    }
    text = [
        f"manifolds N_(u,v,phi): ({a.u}, {a.v}, {a.phi}) vs ({b.u}, {b.v}, {b.phi})",
        f"almost diffeomorphic: {_yesno(payload['almost_diffeomorphic'])}",
        f"diffeomorphic: {_yesno(payload['diffeomorphic'])}",
    ]
    return payload, text, ["classification over S^4 x S^4 (Wall data)"]


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


_HANDLERS = {
    "bernoulli": _cmd_bernoulli,
    "t": _cmd_t,
    "bp-order": _cmd_bp_order,
    "residual": _cmd_residual,
    "structure-set": _cmd_structure_set,
    "fiber": _cmd_fiber,
    "stabilizer": _cmd_stabilizer,
    "group-structure": _cmd_group_structure,
    "image-f": _cmd_image_f,
    "top-set": _cmd_top_set,
    "classify-s3s4": _cmd_classify_s3s4,
    "classify-s4s4": _cmd_classify_s4s4,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", metavar="FILE", help="JSON table override file")
    common.add_argument("--json", action="store_true", help="emit a JSON envelope")

    parser = argparse.ArgumentParser(
        prog=PROG,
        description="exact structure-set calculator for products of spheres",
    )
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser("bernoulli", parents=[common], help="Bernoulli number B_k")
    sp.add_argument("k", type=int)

    sp = sub.add_parser("t", parents=[common], help="the constant t_i")
    sp.add_argument("i", type=int)

    sp = sub.add_parser("bp-order", parents=[common], help="order of bP_m")
    sp.add_argument("m", type=int)

    for name, help_text in (
        ("residual", "residual group 8 t_p t_q . bP_{p+q}"),
        ("structure-set", "present S^Diff(S^p x S^q)"),
        ("group-structure", "can the smooth structure set be a group?"),
        ("image-f", "is the forgetful image a subgroup? (4j, 4k only)"),
        ("top-set", "the topological structure set L_p x L_q"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)

    sp = sub.add_parser("fiber", parents=[common], help="normal-invariant fibre size")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--d", type=int, required=True, help="even-factor coordinate")

    sp = sub.add_parser("stabilizer", parents=[common], help="stabiliser subgroup")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--d", type=int, required=True, help="even-factor coordinate")

    sp = sub.add_parser(
        "classify-s3s4", parents=[common], help="compare two manifolds over S^3 x S^4"
    )
    for name in ("sigma0", "v0", "sigma1", "v1"):
        sp.add_argument(name, type=int)

    sp = sub.add_parser(
        "classify-s4s4", parents=[common], help="compare two manifolds over S^4 x S^4"
    )
    sp.add_argument(
        "data", type=int, nargs="*", metavar="U0 V0 PHI0 U1 V1 PHI1", help="two (u, v, phi) triples"
    )
    sp.add_argument(
        "--plumbing", type=int, nargs=2, metavar=("U", "V"), help="boundary of the plumbing W_{u,v} instead"
    )

    return parser


def _load_table(args) -> GroupTable | None:
    path = args.table or os.environ.get("SURGERY_TABLE")
    if not path:
        return None
    return load_table(path)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        table = _load_table(args)
        payload, text, provenance = _HANDLERS[args.command](args, table)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.json:
        query = {"command": args.command}
        for key, value in sorted(vars(args).items()):
            if key in ("command", "json", "table"):
                continue
            query[key] = value
        envelope = {"query": query, "result": payload, "provenance": provenance}
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        for line in text:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
