"""Command-line front end.

    covgran show <covering.json>            granule report for a covering
    covgran approx <covering.json> --set 1,3 --op fh
    covgran axioms <table.json> [--reconstruct first|second|third|fourth]
    covgran verify --n 3 [--claims id,...]
    covgran enumerate --n 3 [--kind coverings|tolerances|both] [--count-only]

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 semantically invalid input, 4 axiom precondition failure. Output is
deterministic: identical inputs produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import fileio
from .approx import OperatorKind, covering_lower, covering_upper, rel_lower, rel_upper
from .axioms import check_axioms, reconstruct
from .errors import AxiomPreconditionError, InputError, ParseError
from .granulation import (
    granule_profile,
    induced_tolerance,
    point_closure_system,
    specialization_preorder,
    star_system,
)
from .model import Covering, Subset, family_complement, refines
from .tolerance import Tolerance, blocks, kernel_system_masks
from .verify import (
    MAX_COVERING_N,
    MAX_TOLERANCE_N,
    CLAIMS_BY_ID,
    ClaimResult,
    enumerate_coverings,
    enumerate_tolerances,
    run_suite,
    upper_table,
)

_AXIOM_LABELS = (
    ("1H", "empty set fixed"),
    ("2H", "extensive"),
    ("3H", "additive"),
    ("4H", "singleton symmetric"),
    ("5H", "kernel witnessed"),
    ("H4", "idempotent"),
)

_UPPER_OPS = {"fh": OperatorKind.FIRST, "sh": OperatorKind.SECOND,
              "th": OperatorKind.THIRD, "xh": OperatorKind.FOURTH}
_LOWER_OPS = {"fl": OperatorKind.FIRST, "sl": OperatorKind.SECOND,
              "tl": OperatorKind.THIRD, "xl": OperatorKind.FOURTH}


# ----------------------------------------------------------------------
# show
# ----------------------------------------------------------------------

def _show_data(cov: Covering) -> dict[str, Any]:
    u = cov.universe
    prof = granule_profile(cov)
    tol = Tolerance(induced_tolerance(cov))
    pre = specialization_preorder(cov)
    chain_ok = refines(point_closure_system(cov), cov) and refines(cov, star_system(cov))
    sub = lambda m: Subset(u, m)  # noqa: E731
    return {
        "universe": list(u.elements),
        "covering": fileio.covering_to_dict(cov)["blocks"],
        "granules": {
            name: {
                "star": list(sub(prof.stars[i]).names()),
                "down": list(sub(prof.downs[i]).names()),
                "up": list(sub(prof.ups[i]).names()),
            }
            for i, name in enumerate(u.elements)
        },
        "star_system": fileio.covering_to_dict(star_system(cov))["blocks"],
        "point_closure_system": fileio.covering_to_dict(point_closure_system(cov))["blocks"],
        "complement_family": fileio.covering_to_dict(family_complement(cov))["blocks"],
        "preorder_pairs": [[a, b] for a, b in pre.pairs()],
        "tolerance_classes": {
            name: list(tol.class_of(name).names()) for name in u.elements
        },
        "tolerance_blocks": fileio.covering_to_dict(blocks(tol))["blocks"],
        "kernels": {
            name: list(sub(kernel_system_masks(tol)[i]).names())
            for i, name in enumerate(u.elements)
        },
        "refinement_chain_ok": chain_ok,
    }


def _render_show(cov: Covering) -> str:
    u = cov.universe
    prof = granule_profile(cov)
    tol = Tolerance(induced_tolerance(cov))
    pre = specialization_preorder(cov)
    kernels = kernel_system_masks(tol)
    sub = lambda m: Subset(u, m)  # noqa: E731
    lines = [
        "universe: " + " ".join(u.elements),
        f"covering: {cov}",
        "granules (element: star / down / up):",
    ]
    for i, name in enumerate(u.elements):
        lines.append(
            f"  {name}: {sub(prof.stars[i])} / {sub(prof.downs[i])} / {sub(prof.ups[i])}"
        )
    lines.append(f"star system: {star_system(cov)}")
    lines.append(f"point closure system: {point_closure_system(cov)}")
    lines.append(f"complement family: {family_complement(cov)}")
    pairs = " ".join(f"({a},{b})" for a, b in pre.pairs())
    lines.append(f"specialization preorder pairs (a,b) with a below b: {pairs}")
    lines.append(
        "tolerance classes: "
        + "  ".join(f"{name}: {tol.class_of(name)}" for name in u.elements)
    )
    lines.append(f"tolerance blocks: {blocks(tol)}")
    lines.append(
        "kernels: "
        + "  ".join(f"{name}: {sub(kernels[i])}" for i, name in enumerate(u.elements))
    )
    chain_ok = refines(point_closure_system(cov), cov) and refines(cov, star_system(cov))
    lines.append(
        "refinement chain star system <= covering <= point closure system: "
        + ("ok" if chain_ok else "VIOLATED")
    )
    return "\n".join(lines)


def _cmd_show(args: argparse.Namespace) -> int:
    cov = fileio.load_covering(args.covering)
    if args.json:
        print(json.dumps(_show_data(cov), indent=2))
    else:
        print(_render_show(cov))
    return 0


# ----------------------------------------------------------------------
# approx
# ----------------------------------------------------------------------

def _parse_set(cov: Covering, spec: str) -> Subset:
    names = [s for s in spec.split(",") if s] if spec else []
    return cov.universe.subset(names)


def _cmd_approx(args: argparse.Namespace) -> int:
    cov = fileio.load_covering(args.covering)
    x = _parse_set(cov, args.set)
    op = args.op
    if op == "rel-upper":
        result = rel_upper(induced_tolerance(cov), x)
    elif op == "rel-lower":
        result = rel_lower(induced_tolerance(cov), x)
    elif op in _UPPER_OPS:
        result = covering_upper(_UPPER_OPS[op], cov, x)
    else:
        result = covering_lower(_LOWER_OPS[op], cov, x)
    if args.json:
        print(json.dumps({"op": op, "set": list(x.names()), "result": list(result.names())}))
    else:
        print(result)
    return 0


# ----------------------------------------------------------------------
# axioms
# ----------------------------------------------------------------------

def _cmd_axioms(args: argparse.Namespace) -> int:
    table = fileio.load_table(args.table)
    report = check_axioms(table)
    flags = report.flags()
    sets_line = {
        "first-kind(1H-4H)": report.first_kind,
        "second-kind(1H-5H)": report.second_kind,
        "closure-kind(H1-H4)": report.closure_kind,
    }
    data: dict[str, Any] = {
        "universe": list(table.universe.elements),
        "axioms": flags,
        "witnesses": dict(report.witnesses),
        "axiom_sets": sets_line,
    }
    out_lines = ["universe: " + " ".join(table.universe.elements), "axioms:"]
    for tag, label in _AXIOM_LABELS:
        verdict = "pass" if flags[tag] else "fail"
        out_lines.append(f"  {tag} {label}: {verdict}")
        if tag in report.witnesses:
            out_lines.append(f"      {report.witnesses[tag]}")
    out_lines.append(
        "axiom sets: "
        + "  ".join(f"{k}={'pass' if v else 'fail'}" for k, v in sets_line.items())
    )

    code = 0
    if args.reconstruct:
        kind = OperatorKind(args.reconstruct)
        try:
            cov = reconstruct(kind, table)
        except AxiomPreconditionError as exc:
            data["reconstruction"] = {"kind": kind.value, "error": str(exc)}
            out_lines.append(f"reconstruction ({kind.value}): {exc}")
            code = 4
        else:
            round_trip = upper_table(kind, cov) == table
            data["reconstruction"] = {
                "kind": kind.value,
                "covering": fileio.covering_to_dict(cov)["blocks"],
                "round_trip_ok": round_trip,
            }
            out_lines.append(f"reconstruction ({kind.value}): {cov}")
            out_lines.append("round trip: " + ("ok" if round_trip else "FAILED"))
            if not round_trip:
                code = 1

    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(out_lines))
    return code


# ----------------------------------------------------------------------
# verify / enumerate
# ----------------------------------------------------------------------

def _render_results(n: int, results: list[ClaimResult]) -> str:
    lines = [f"claims at n={n}:"]
    for r in results:
        mark = " (sampled)" if r.sampled else ""
        lines.append(f"  {r.status:<13} {r.claim_id:<30} checked={r.checked}{mark}")
        if r.witness is not None:
            lines.append(f"      witness: {r.witness}")
        for failure in r.failures[:5]:
            lines.append(f"      failure: {failure}")
        if len(r.failures) > 5:
            lines.append(f"      ... and {len(r.failures) - 5} more failures")
    failing = sum(1 for r in results if not r.ok)
    lines.append(f"summary: {len(results)} claims, {failing} failing")
    return "\n".join(lines)


def _cmd_verify(args: argparse.Namespace) -> int:
    claim_ids = None
    if args.claims:
        claim_ids = [c for c in args.claims.split(",") if c]
        unknown = [c for c in claim_ids if c not in CLAIMS_BY_ID]
        if unknown:
            print(f"error: unknown claim id(s): {', '.join(unknown)}", file=sys.stderr)
            return 2
    results = run_suite(args.n, claim_ids)
    if args.json:
        print(json.dumps({"n": args.n, "claims": [r.to_dict() for r in results]}, indent=2))
    else:
        print(_render_results(args.n, results))
    return 0 if all(r.ok for r in results) else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    want_cov = args.kind in ("coverings", "both")
    want_tol = args.kind in ("tolerances", "both")
    if want_cov and args.n > MAX_COVERING_N:
        print(f"error: covering enumeration supports n up to {MAX_COVERING_N}", file=sys.stderr)
        return 2
    if args.count_only:
        parts = []
        counts: dict[str, int] = {}
        if want_cov:
            counts["coverings"] = sum(1 for _ in enumerate_coverings(args.n))
            parts.append(f"{counts['coverings']} coverings")
        if want_tol:
            counts["tolerances"] = sum(1 for _ in enumerate_tolerances(args.n))
            parts.append(f"{counts['tolerances']} tolerances")
        if args.json:
            print(json.dumps({"n": args.n, **counts}))
        else:
            print(f"n={args.n}: " + ", ".join(parts))
        return 0
    if want_cov:
        for cov in enumerate_coverings(args.n):
            print(fileio.covering_json(cov))
    if want_tol:
        for tol in enumerate_tolerances(args.n):
            print(fileio.relation_json(tol.relation))
    return 0


# ----------------------------------------------------------------------
# parser and entry points
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covgran",
        description="Covering-based granulation: granular worlds, tolerance "
        "spaces, closure operators, rough approximation and exhaustive "
        "verification on small universes.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    show = commands.add_parser("show", help="granule report for a covering file")
    show.add_argument("covering", help="path to a covering JSON file")
    show.add_argument("--json", action="store_true", help="emit JSON instead of text")
    show.set_defaults(func=_cmd_show)

    approx = commands.add_parser("approx", help="apply one approximation operator")
    approx.add_argument("covering", help="path to a covering JSON file")
    approx.add_argument("--set", required=True,
                        help="comma-separated element names; empty string for the empty set")
    approx.add_argument("--op", required=True,
                        choices=sorted(_UPPER_OPS) + sorted(_LOWER_OPS) + ["rel-upper", "rel-lower"],
                        help="operator; rel-upper/rel-lower use the covering's induced tolerance")
    approx.add_argument("--json", action="store_true")
    approx.set_defaults(func=_cmd_approx)

    axioms = commands.add_parser("axioms", help="check operator-table axioms")
    axioms.add_argument("table", help="path to an operator table JSON file")
    axioms.add_argument("--reconstruct", choices=[k.value for k in OperatorKind],
                        help="also reconstruct a covering of the given kind")
    axioms.add_argument("--json", action="store_true")
    axioms.set_defaults(func=_cmd_axioms)

    verify = commands.add_parser("verify", help="run the claim suite")
    verify.add_argument("--n", type=int, required=True,
                        choices=range(1, MAX_COVERING_N + 1),
                        help="universe size to verify at")
    verify.add_argument("--claims", help="comma-separated claim ids (default: all)")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    enum = commands.add_parser("enumerate", help="enumerate coverings/tolerances")
    enum.add_argument("--n", type=int, required=True,
                      choices=range(1, MAX_TOLERANCE_N + 1))
    enum.add_argument("--kind", choices=["coverings", "tolerances", "both"],
                      default="both")
    enum.add_argument("--count-only", action="store_true")
    enum.add_argument("--json", action="store_true")
    enum.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiomPreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    """Console-script entry point."""
    raise SystemExit(main(sys.argv[1:]))
