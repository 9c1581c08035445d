"""Command-line front end: ``milnorarr {build,edges,analyze,ade,ts}``.

Exit codes: 0 on success, 2 when an analysis leaves some eigenvalue
Unknown, 1 on any error.  JSON output is canonical (sorted keys, fixed
ordering), so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .ade import AdeType, negative_control, verify_coincidence
from .arrangement import (
    BUILDERS,
    Arrangement,
    ArrangementError,
    Lattice,
    compute_lattice,
    load_arrangement,
)
from .exactmath import rational_to_json
from .tscomb import (
    GEN_X,
    GEN_Y,
    MonomialPairConfig,
    cone_pair_rank,
    invariant_rank_brute,
    invariant_rank_closed,
    ts_tensor,
    one_var_spectrum,
    verify_monomial_pair,
)
from .vanishing import (
    DEFAULT_WITNESSES,
    AnalysisConfig,
    OracleConfig,
    VanishingReport,
    analyze,
    load_oracle_table,
    load_witnesses,
)


class CliError(Exception):
    pass


# -- helpers -----------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="arrangement JSON file")
    p.add_argument("--builder", choices=sorted(BUILDERS), help="build a reflection arrangement")
    p.add_argument("--m", type=int, help="cyclotomic parameter m for gmm/gm1")
    p.add_argument("--dim", type=int, help="ambient dimension d_X for gmm/gm1")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write to this file instead of stdout")


def _arrangement(args) -> Arrangement:
    if (args.input is None) == (args.builder is None):
        raise CliError("give exactly one of --input or --builder")
    if args.input is not None:
        return load_arrangement(args.input)
    if args.builder == "g31":
        return BUILDERS["g31"]()
    if args.m is None or args.dim is None:
        raise CliError(f"builder {args.builder} needs --m and --dim")
    return BUILDERS[args.builder](args.m, args.dim)


def _emit(args, payload: Any, text: Optional[str] = None) -> None:
    if getattr(args, "format", "json") == "text" and text is not None:
        out = text if text.endswith("\n") else text + "\n"
    else:
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _coeff_json(c) -> Any:
    q = c.is_rational()
    return rational_to_json(q) if q is not None else c.to_json()


def edge_json(edge) -> dict:
    return {
        "codim": edge.codim,
        "basis": [[_coeff_json(c) for c in row] for row in edge.basis],
        "members": list(edge.members),
        "multiplicity": edge.multiplicity,
        "support_size": edge.support_size,
        "profile": list(edge.profile) if edge.profile is not None else None,
    }


def lattice_json(lat: Lattice) -> dict:
    arr = lat.arrangement
    return {
        "label": arr.label,
        "ambient_dim": arr.ambient_dim,
        "degree": arr.degree,
        "codim2": [edge_json(e) for e in lat.edges2],
        "codim3": [edge_json(e) for e in lat.edges3],
        "incidences": [
            {"j": j, "i": i, "transversal": lat.incidence.transversal_count(j, i)}
            for j, i in lat.incidence.pairs
        ],
    }


def lattice_text(lat: Lattice) -> str:
    from collections import Counter

    arr = lat.arrangement
    lines = [f"{arr.label or 'arrangement'}: d={arr.degree}, d_X={arr.ambient_dim}"]
    for name, edges in (("codim 2", lat.edges2), ("codim 3", lat.edges3)):
        lines.append(f"{name}: {len(edges)} edges")
        c = Counter((e.support_size, e.multiplicity, e.profile) for e in edges)
        for (a, m, prof), n in sorted(c.items(), key=lambda kv: (kv[0][0], kv[0][1], str(kv[0][2]))):
            p = "+".join(map(str, prof)) if prof else "?"
            lines.append(f"  a={a} m={m} profile={p} count={n}")
    lines.append(f"incidences: {len(lat.incidence.pairs)}")
    return "\n".join(lines)


def report_text(rep: VanishingReport) -> str:
    lines = [f"{rep.label}: d={rep.degree}, dim H^1_1 = {rep.unipotent_dim}"]
    for n, entries in sorted(rep.by_order().items()):
        e = entries[0]
        extra = ""
        if e.certificate is not None:
            extra = f" [{e.certificate.kind}{', conditional' if e.certificate.conditional else ''}]"
        elif e.rho is not None:
            extra = f" rho={e.rho}"
        elif e.reason:
            extra = f" ({e.reason})"
        lines.append(f"order {n} ({len(entries)} eigenvalues): {e.verdict}{extra}")
        for a in e.assumptions:
            lines.append(f"    assumes: {a}")
    return "\n".join(lines)


# -- subcommands -------------------------------------------------------------


def cmd_build(args) -> int:
    arr = _arrangement(args)
    text = arr.dumps()
    summary = f"d={arr.degree} d_X={arr.ambient_dim} m={arr.cyclo_order}\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        sys.stdout.write(summary)
    else:
        sys.stdout.write(text)
        sys.stderr.write(summary)
    return 0


def cmd_edges(args) -> int:
    lat = compute_lattice(_arrangement(args), args.profile_limit)
    _emit(args, lattice_json(lat), lattice_text(lat))
    return 0


def _parse_orders(text: Optional[str]) -> Optional[tuple[int, ...]]:
    if text is None:
        return None
    try:
        orders = tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
    except ValueError:
        raise CliError(f"bad --orders value {text!r}") from None
    if not orders or min(orders) < 2:
        raise CliError("--orders needs integers >= 2")
    return orders


def cmd_analyze(args) -> int:
    arr = _arrangement(args)
    table = load_oracle_table(args.oracle_table) if args.oracle_table else ()
    witnesses = load_witnesses(args.witnesses) if args.witnesses else DEFAULT_WITNESSES
    if args.threshold_D < 1:
        raise CliError("--threshold-D must be >= 1")
    config = AnalysisConfig(
        OracleConfig(args.threshold_D, args.assume, table),
        witnesses,
        _parse_orders(args.orders),
        max(1, args.jobs),
    )
    rep = analyze(arr, config)
    payload = rep.to_json()
    if args.assume:
        payload["assumptions"] = {
            "threshold_D": args.threshold_D,
            "user_table_entries": len(table),
            "used": sorted({a for e in rep.entries for a in e.assumptions}),
        }
    _emit(args, payload, report_text(rep))
    return 2 if rep.has_unknown() else 0


def cmd_ade(args) -> int:
    family = args.type or args.family
    rank = args.rank if args.rank is not None else args.rank_pos
    if family is None or rank is None:
        raise CliError("ade needs a type and a rank, e.g. 'ade --type A --rank 4'")
    t = AdeType(family, rank)
    payload = verify_coincidence(t)
    if args.negative_control:
        payload["negative_control"] = negative_control(t)
    text = (
        f"{payload['type']}: det(-S)={payload['det_S']} recursion={payload['det_recursive']} "
        f"det(I-T)={payload['det_monodromy']} agree={payload['agree']}"
    )
    _emit(args, payload, text)
    return 0 if payload["agree"] else 1


def cmd_ts(args) -> int:
    ex = args.exponents
    if len(ex) == 2:
        a, b = ex
        milnor, unip, final = cone_pair_rank(a, b)
        tensor = ts_tensor(one_var_spectrum(a), one_var_spectrum(b))
        payload = {
            "exponents": ex,
            "closed_form": {"milnor": milnor, "unipotent": unip, "rank": final},
            "brute_force": {"milnor": tensor.total(), "unipotent": tensor.mult_one()},
        }
        payload["agree"] = milnor == tensor.total() and unip == tensor.mult_one()
    elif len(ex) == 4:
        cfg = MonomialPairConfig(*ex)
        if args.component is not None:
            gens = tuple(g for g, on in ((GEN_X, args.tx), (GEN_Y, args.ty)) if on)
            comp = tuple(args.component)
            c = invariant_rank_closed(cfg, comp, gens)
            b = invariant_rank_brute(cfg, comp, gens)
            payload = {
                "exponents": ex,
                "component": list(comp),
                "generators": list(gens),
                "closed_form": c,
                "brute_force": b,
                "agree": c == b,
            }
        else:
            full = verify_monomial_pair(cfg)
            payload = {
                "exponents": ex,
                "closed_form": full["h1_rank"]["closed_form"],
                "brute_force": full["h1_rank"]["brute_force"],
                "invariant_ranks": full["invariant_ranks"],
                "agree": full["agree"],
            }
    else:
        raise CliError("ts takes 2 exponents (a b) or 4 (a1 a2 b1 b2)")
    _emit(args, payload, json.dumps(payload, sort_keys=True))
    return 0 if payload["agree"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="milnorarr",
        description="Exact lattice computations and H^1 eigenspace certificates for hyperplane arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write an arrangement as canonical JSON")
    _add_input(p)
    p.add_argument("--out", help="output file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("edges", help="codimension-2 and -3 flats with incidences")
    _add_input(p)
    _add_output(p)
    p.add_argument("--profile-limit", type=int, default=24)
    p.set_defaults(func=cmd_edges)

    p = sub.add_parser("analyze", help="verdict for every non-unipotent eigenvalue")
    _add_input(p)
    _add_output(p)
    p.add_argument("--orders", help="comma-separated eigenvalue orders to analyse")
    p.add_argument("--threshold-D", dest="threshold_D", type=int, default=6)
    p.add_argument("--oracle-table", help="JSON list of local results (used with --assume)")
    p.add_argument("--witnesses", help="JSON list of strong-connectivity rules")
    p.add_argument("--assume", action="store_true", help="enable the degree threshold and user table")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("ade", help="det(-S), recursion and det(I-T) for an ADE type")
    p.add_argument("family", nargs="?", help="A, D or E")
    p.add_argument("rank_pos", nargs="?", type=int, metavar="rank")
    p.add_argument("--type", help="A, D or E")
    p.add_argument("--rank", type=int)
    p.add_argument("--negative-control", action="store_true")
    _add_output(p)
    p.set_defaults(func=cmd_ade)

    p = sub.add_parser("ts", help="Thom-Sebastiani rank checks")
    p.add_argument("exponents", nargs="+", type=int)
    p.add_argument("--component", nargs=2, type=int, metavar=("I", "J"))
    p.add_argument("--tx", action="store_true", help="include the T_x generator")
    p.add_argument("--ty", action="store_true", help="include the T_y generator")
    _add_output(p)
    p.set_defaults(func=cmd_ts)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ArrangementError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
