"""Command-line front end.

Five commands: eps, rootnum, llc, distinguish, verify, orbits.  Output is
JSON on stdout (CSV for sweeps via --csv); diagnostics go to stderr.  Exit
codes: 0 all checks passed, 1 a verification predicate failed (the
counterexample is printed), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .distinction import abc_bookkeeping, check_main_theorem
from .errors import ParseError, WeilPtbError
from .grammar import (
    parse_blocks,
    parse_chi,
    parse_gauss,
    parse_partition,
    parse_rational,
    parse_weil,
    print_blocks,
    print_gauss,
    print_weil,
)
from .langlands import DivAlg, IrrRepGL, llc, llc_inverse, make_standard
from .orbits import (
    KIND_GAUSS,
    KIND_QUAT,
    OrbitMatrix,
    PartitionSpec,
    enumerate_J,
    find_positive_witness,
    is_monomial,
    levi_stable,
    representative_gS,
    root_datum_from_orbit,
)
from .sweeps import SweepConfig, run_esi_sweep, run_module_sweep
from .weil import epsilon, root_number

CSV_COLUMNS = (
    "D", "n", "blocks", "chi_l", "chi_eta",
    "T_size", "gsp_ok", "eps_lhs", "eps_rhs", "identity_ok",
)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def emit(rows, fmt: str) -> str:
    """Serialize sweep rows as JSON or CSV with the fixed column order."""
    if fmt == "json":
        clean = [{k: v for k, v in row.items() if not k.startswith("_")} for row in rows]
        return json.dumps(clean, indent=2)
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_csv_cell(row.get(col)) for col in CSV_COLUMNS])
    return buf.getvalue()


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("WEIL_PTB_THREADS", "1")))
    except ValueError:
        return 1


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _matrix_json(M) -> dict:
    if M.kind == KIND_QUAT:
        entries = [[[str(c) for c in q.coords()] for q in row] for row in M.rows]
    elif M.kind == KIND_GAUSS:
        entries = [[str(x) for x in row] for row in M.rows]
    else:
        entries = [[str(x) for x in row] for row in M.rows]
    return {"scalar": M.kind, "entries": entries}


def _report_json(sm, chi, report) -> dict:
    return {
        "D": sm.D.value,
        "blocks": print_blocks(sm.blocks),
        "chi": {"l": chi.l, "eta": print_gauss(chi.eta)},
        "T": [s.cycle_string() for s in report.T_set],
        "bound": report.hom_upper_bound,
        "gsp_ok": report.gsp_ok,
        "eps_lhs": None if report.epsilon_lhs is None else str(report.epsilon_lhs),
        "eps_rhs": report.epsilon_rhs,
        "identity_ok": report.identity_ok,
        "abc": None if report.abc is None else list(report.abc),
    }


def _cmd_eps(args) -> int:
    phi = parse_weil(args.phi)
    s = parse_gauss(args.s)
    a = parse_rational(args.a)
    value = epsilon(s, phi, a)
    _print_json({"phi": print_weil(phi), "s": print_gauss(s), "a": str(a), "eps": str(value)})
    return 0


def _cmd_rootnum(args) -> int:
    phi = parse_weil(args.phi)
    _print_json({"phi": print_weil(phi), "root_number": root_number(phi)})
    return 0


def _cmd_llc(args) -> int:
    D = DivAlg(args.D)
    if args.inverse:
        text = args.phi if args.phi is not None else args.pi
        if text is None:
            raise ParseError(0, "--phi (or --pi) with a parameter expression")
        phi = parse_weil(text)
        pi = llc_inverse(phi, D)
        _print_json({"D": D.value, "phi": print_weil(phi), "pi": print_blocks(pi.blocks)})
    else:
        if args.pi is None:
            raise ParseError(0, "--pi with a block expression")
        pi = IrrRepGL(D, parse_blocks(args.pi))
        _print_json({"D": D.value, "pi": print_blocks(pi.blocks), "phi": print_weil(llc(pi))})
    return 0


def _cmd_distinguish(args) -> int:
    D = DivAlg(args.D)
    sm = make_standard(D, parse_blocks(args.pi))
    chi = parse_chi(args.chi)
    report = check_main_theorem(sm, chi)
    _print_json(_report_json(sm, chi, report))
    bad = report.T_set and not (report.gsp_ok and report.identity_ok and report.abc_ok)
    return 1 if bad else 0


def _cmd_verify(args) -> int:
    cfg = SweepConfig.from_json_file(args.sweep)
    workers = _workers()
    esi_points, esi_failures = run_esi_sweep(cfg, workers)
    rows, module_failures = run_module_sweep(cfg, workers)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(emit(rows, "csv"))
    summary = {
        "esi": {"points": esi_points, "failures": esi_failures},
        "modules": {"count": len(rows), "failures": module_failures},
        "csv": args.csv,
        "ok": not esi_failures and not module_failures,
    }
    _print_json(summary)
    return 0 if summary["ok"] else 1


def _cmd_orbits(args) -> int:
    D = DivAlg(args.D)
    parts = parse_partition(args.partition)
    spec = PartitionSpec(D, parts)
    orbits = []
    for S in enumerate_J(spec):
        mono = is_monomial(S)
        entry = {
            "S": [list(row) for row in S.S],
            "monomial": None if mono is None else mono.cycle_string(),
            "levi_stable": levi_stable(S),
            "representative": _matrix_json(representative_gS(S)),
        }
        if args.witness:
            witness = find_positive_witness(root_datum_from_orbit(S))
            entry["witness"] = None if witness is None else [str(x) for x in witness]
        orbits.append(entry)
    _print_json({
        "D": D.value,
        "partition": list(parts),
        "count": len(orbits),
        "orbits": orbits,
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weilptb",
        description="Exact calculator for real Weil-group parameters, root "
        "numbers, distinction criteria and orbit combinatorics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eps", help="epsilon factor of a parameter expression")
    p.add_argument("--phi", required=True)
    p.add_argument("--s", default="1/2")
    p.add_argument("--a", default="1")
    p.set_defaults(func=_cmd_eps)

    p = sub.add_parser("rootnum", help="root number of a self-dual parameter")
    p.add_argument("--phi", required=True)
    p.set_defaults(func=_cmd_rootnum)

    p = sub.add_parser("llc", help="parameter of a representation, or back")
    p.add_argument("--pi")
    p.add_argument("--phi")
    p.add_argument("--D", required=True, choices=("R", "H"))
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_cmd_llc)

    p = sub.add_parser("distinguish", help="full distinction report for a module")
    p.add_argument("--D", required=True, choices=("R", "H"))
    p.add_argument("--pi", required=True)
    p.add_argument("--chi", required=True)
    p.set_defaults(func=_cmd_distinguish)

    p = sub.add_parser("verify", help="run the verification sweeps from a config")
    p.add_argument("--sweep", required=True, help="path to a JSON sweep config")
    p.add_argument("--csv", help="write module rows as CSV to this path")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("orbits", help="enumerate double-coset orbit data")
    p.add_argument("--D", required=True, choices=("R", "H"))
    p.add_argument("--partition", required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=_cmd_orbits)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(
            json.dumps({
                "error": "ParseError",
                "offset": exc.offset,
                "expected": exc.expected,
                "found": exc.found,
            }),
            file=sys.stderr,
        )
        return 2
    except (WeilPtbError, ValueError, ZeroDivisionError, OSError) as exc:
        _print_json({"error": type(exc).__name__, "message": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
