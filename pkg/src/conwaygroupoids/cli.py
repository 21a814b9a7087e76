"""Command-line interface.

Reports are JSON documents with stable key order; group orders that exceed
the 53-bit float-safe range are rendered as decimal strings. Exit codes:
0 success, 1 verification failure, 2 usage error, 3 enumeration budget
exceeded (with a partial report).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__, catalog, reporting
from .codes import BudgetExceeded, analyze, golay_chain
from .designs import Hypergraph, profile
from .groupoid import build_groupoid, classify, design_law_report
from .m13 import DonorAnalysis, dual_game_report, signed_game_report
from .pliable import primitivity_criterion, validate

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _design_hash(h: Hypergraph) -> str:
    canonical = json.dumps(h.to_json(), sort_keys=True)
    return hashlib.sha256(canonical.encode()).hexdigest()[:16]


def _envelope(command: str, inputs: dict, results) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "versions": {"conwaygroupoids": __version__},
    }


def _emit(doc: dict, as_json: bool, lines=None) -> None:
    if as_json or lines is None:
        sys.stdout.write(reporting.dumps(doc))
    else:
        for line in lines:
            print(line)


def _load_design(spec: str) -> Hypergraph:
    return catalog.load_design(spec)


def cmd_catalog_list(args) -> int:
    entries = catalog.catalog_entries()
    doc = _envelope(
        "catalog list",
        {},
        {
            "designs": entries,
            "design_families": catalog.DESIGN_FAMILIES,
            "pliable_families": catalog.PLIABLE_FAMILIES,
        },
    )
    lines = [
        f"{e['label']:>15}  n={e['points']:<3} blocks={e['blocks']:<5} "
        f"lambda={e['lambda']} supersimple={e['supersimple']}"
        for e in entries
    ]
    _emit(doc, args.json, lines)
    return EXIT_OK


def cmd_design_build(args) -> int:
    h = catalog.get_design(args.label)
    sys.stdout.write(reporting.dumps(h.to_json()))
    return EXIT_OK


def cmd_design_check(args) -> int:
    h = _load_design(args.design)
    prof = profile(h)
    results = {
        "n": h.n,
        "blocks": len(h.blocks),
        "pliable": prof.is_pliable,
        "connected": prof.is_connected,
        "lambda": prof.lam,
        "supersimple": prof.is_supersimple,
        "regular_two_graph": prof.is_regular_two_graph,
        "symmetric_difference_closed": prof.has_triangle_property,
    }
    doc = _envelope(
        "design check", {"label": h.label, "hash": _design_hash(h)}, results
    )
    _emit(doc, args.json, [f"{k}: {v}" for k, v in results.items()])
    return EXIT_OK


def cmd_groupoid_compute(args) -> int:
    h = _load_design(args.design)
    g = build_groupoid(h, args.base)
    report = classify(g).to_json()
    doc = _envelope(
        "groupoid compute", {"label": h.label, "hash": _design_hash(h)}, report
    )
    _emit(doc, args.json, [f"{k}: {v}" for k, v in report.items()])
    return EXIT_OK


def cmd_groupoid_laws(args) -> int:
    h = _load_design(args.design)
    report = design_law_report(h)
    doc = _envelope(
        "groupoid verify-section4",
        {"label": h.label, "hash": _design_hash(h)},
        report.to_json(),
    )
    ok = report.all_hold()
    lines = [
        f"{c.name}: {'n/a' if not c.applicable else 'ok' if c.holds else 'FAIL'}"
        for c in report.checks
    ]
    lines.append(f"all applicable hold: {ok}")
    _emit(doc, args.json, lines)
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def cmd_m13(args) -> int:
    if args.game == "verify-6t":
        report = DonorAnalysis().report()
        ok = report["donor_iff_contains_hole"] and report["recipient_iff_contains_line"]
        doc = _envelope("m13 verify-6t", {"label": "pg23"}, report)
        lines = [
            f"orbits: {report['orbit_count']}",
            f"universal donors: {report['donor_count']}",
            f"universal recipients: {report['recipient_count']}",
            f"donor iff contains hole: {report['donor_iff_contains_hole']}",
            f"recipient iff contains line: {report['recipient_iff_contains_line']}",
        ]
        _emit(doc, args.json, lines)
        return EXIT_OK if ok else EXIT_VERIFICATION_FAILED
    if args.game == "signed":
        report = signed_game_report()
        ok = report["hole_stabilizer_order"] == 190_080 and report["negation_central"]
        doc = _envelope("m13 signed", {"label": "pg23"}, report)
        _emit(doc, args.json, [f"{k}: {v}" for k, v in report.items()])
        return EXIT_OK if ok else EXIT_VERIFICATION_FAILED
    report = dual_game_report()
    ok = (
        report["hole_stabilizer_order"] == 95_040
        and report["orbits_refine_point_line_split"]
    )
    doc = _envelope("m13 dual", {"label": "pg23"}, report)
    _emit(doc, args.json, [f"{k}: {v}" for k, v in report.items()])
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def cmd_pliable(args) -> int:
    f = catalog.get_pliable(args.function)
    ok, message = validate(f)
    if not ok:
        doc = _envelope("pliable", {"label": f.label}, {"valid": False, "error": message})
        _emit(doc, args.json, [f"invalid pliable function: {message}"])
        return EXIT_VERIFICATION_FAILED
    g = build_groupoid(f, 0)
    report = classify(g).to_json()
    report["mu"] = f.triple_system.mu
    report["primitivity_criterion"] = primitivity_criterion(f, g).to_json()
    doc = _envelope("pliable", {"label": f.label}, report)
    _emit(doc, args.json, [f"{k}: {v}" for k, v in report.items()])
    status = report["primitivity_criterion"]["status"]
    return EXIT_OK if status != "violation" else EXIT_VERIFICATION_FAILED


def cmd_code_analyze(args) -> int:
    h = _load_design(args.design)
    report = analyze(h, args.field)
    if args.full:
        try:
            from .codes import code_from_design, qary_design_check

            code = code_from_design(h, args.field)
            if report.get("min_distance"):
                lam, witness = qary_design_check(
                    code, report["min_distance"], report["min_distance"] // 2
                )
                report["qary_design_lambda"] = lam
                if witness:
                    report["qary_design_witness"] = [
                        list(w) if w else None for w in witness
                    ]
        except BudgetExceeded as exc:
            report.setdefault("skipped", []).append(str(exc))
    doc = _envelope(
        "code analyze",
        {"label": h.label, "hash": _design_hash(h), "field": args.field},
        report,
    )
    _emit(doc, args.json, [f"{k}: {v}" for k, v in report.items()])
    return EXIT_BUDGET if report.get("skipped") else EXIT_OK


def cmd_code_golay(args) -> int:
    report = golay_chain()
    ok = report["is_perfect"] and report["line_sum_identity"]
    doc = _envelope("code golay-chain", {"label": "pg23"}, report)
    _emit(doc, args.json, [f"{k}: {v}" for k, v in report.items()])
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def cmd_verify_all(args) -> int:
    from .acceptance import run_all

    numbers = None
    if args.criteria:
        numbers = {int(x) for x in args.criteria.split(",")}
    t0 = time.time()
    results = run_all(numbers)
    all_ok = all(r.passed for r in results)
    if args.json:
        doc = _envelope(
            "verify-all",
            {"criteria": sorted(numbers) if numbers else "all"},
            {
                "passed": all_ok,
                "results": [
                    {
                        "criterion": r.number,
                        "title": r.title,
                        "passed": r.passed,
                        "details": r.details,
                    }
                    for r in results
                ],
            },
        )
        sys.stdout.write(reporting.dumps(doc))
    else:
        for r in results:
            print(r.line())
        print(
            f"{'ALL CRITERIA PASS' if all_ok else 'FAILURES PRESENT'} "
            f"({time.time() - t0:.1f}s total)"
        )
    return EXIT_OK if all_ok else EXIT_VERIFICATION_FAILED


def cmd_serve(args) -> int:
    from .server import serve

    serve(host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupoids",
        description="moving-counter puzzles, hole stabilizers and design codes",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="named designs and functions")
    psub = p.add_subparsers(dest="subcommand", required=True)
    plist = psub.add_parser("list", help="list the catalog")
    plist.add_argument("--json", action="store_true")
    plist.set_defaults(func=cmd_catalog_list)

    p = sub.add_parser("design", help="build or check designs")
    psub = p.add_subparsers(dest="subcommand", required=True)
    pbuild = psub.add_parser("build", help="emit a catalog design as JSON")
    pbuild.add_argument("label")
    pbuild.set_defaults(func=cmd_design_build)
    pcheck = psub.add_parser("check", help="profile a design (label or file)")
    pcheck.add_argument("design")
    pcheck.add_argument("--json", action="store_true")
    pcheck.set_defaults(func=cmd_design_check)

    p = sub.add_parser("groupoid", help="hole stabilizers and groupoids")
    psub = p.add_subparsers(dest="subcommand", required=True)
    pcomp = psub.add_parser("compute", help="classify the groupoid of a design")
    pcomp.add_argument("design")
    pcomp.add_argument("--base", type=int, default=0)
    pcomp.add_argument("--json", action="store_true")
    pcomp.set_defaults(func=cmd_groupoid_compute)
    plaws = psub.add_parser(
        "verify-section4", help="check every applicable design law"
    )
    plaws.add_argument("design")
    plaws.add_argument("--json", action="store_true")
    plaws.set_defaults(func=cmd_groupoid_laws)

    p = sub.add_parser("m13", help="the 13-point plane's special games")
    psub = p.add_subparsers(dest="game", required=True)
    for game, help_text in (
        ("verify-6t", "exhaustive donor/recipient sweep over 6-tuples"),
        ("signed", "the signed game report"),
        ("dual", "the dualized game report"),
    ):
        pg = psub.add_parser(game, help=help_text)
        pg.add_argument("--json", action="store_true")
        pg.set_defaults(func=cmd_m13)

    p = sub.add_parser("pliable", help="pliable-function groupoids")
    p.add_argument("function", help="paley6 | affine:k | group:file.json | design:<label or file>")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pliable)

    p = sub.add_parser("code", help="design codes")
    psub = p.add_subparsers(dest="subcommand", required=True)
    pan = psub.add_parser("analyze", help="full code report for a design")
    pan.add_argument("design")
    pan.add_argument("--field", type=int, choices=(2, 3), required=True)
    pan.add_argument("--full", action="store_true")
    pan.add_argument("--json", action="store_true")
    pan.set_defaults(func=cmd_code_analyze)
    pgo = psub.add_parser("golay-chain", help="the ternary chain down to [11,6,5]")
    pgo.add_argument("--json", action="store_true")
    pgo.set_defaults(func=cmd_code_golay)

    p = sub.add_parser("verify-all", help="run every acceptance criterion")
    p.add_argument("--json", action="store_true")
    p.add_argument("--criteria", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("serve", help="HTTP JSON service for the puzzle UI")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        sys.stdout.write(reporting.dumps({"error": str(exc), "partial": True}))
        return EXIT_BUDGET
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
