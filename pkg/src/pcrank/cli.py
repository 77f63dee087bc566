"""Command-line front door: analyze, cop, reduce, serve.

Exit codes: 0 success, 2 input/validation error, 3 eigen convergence
failure, 4 theorem falsification (a cop premise row whose conclusion fails,
which would disprove the order-preservation theorems).
"""

from __future__ import annotations

import argparse
import json
import socket
import sys
from pathlib import Path

from .analysis import SAATY_ACCEPT_NOTE, analyze, report_to_dict
from .bounds import kappa_recommendation, poip_check, pop_check
from .discrepancy import global_discrepancy
from .eigen import ConvergenceError, rank_ev
from .inconsistency import koczkodaj_index
from .matrix import MatrixValidationError, PCMatrix, parse_matrix
from .reduction import AlreadyConsistentError, reduce

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CONVERGENCE = 3
EXIT_FALSIFIED = 4

# POIP row scans are O(n^4); above this size they are skipped unless --full.
POIP_SCAN_MAX_N = 12


def _load_matrix(path: str, fmt: str) -> PCMatrix:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise MatrixValidationError(f"cannot read {path}: {exc}") from exc
    if fmt == "auto":
        fmt = "csv" if p.suffix.lower() == ".csv" else "json"
    return parse_matrix(text, fmt)


def _fmt5(x: float) -> str:
    return f"{x:.5f}"


def _analysis_table(report) -> str:
    lines = []
    labels = report.matrix.labels
    width = max(len(lab) for lab in labels)
    lines.append(f"Concepts ({report.n}): {', '.join(labels)}")
    lines.append("")
    lines.append("Matrix (canonical reciprocal form):")
    for lab, row in zip(labels, report.matrix.entries):
        lines.append(f"  {lab:<{width}}  " + "  ".join(f"{v:>9.5f}" for v in row))
    lines.append("")
    lines.append("Ranking (eigenvector, sums to 1):")
    for lab, v in sorted(zip(labels, report.ranking.values), key=lambda t: -t[1]):
        lines.append(f"  {lab:<{width}}  {_fmt5(v)}")
    lines.append("")
    lines.append(f"lambda_max      {_fmt5(report.lambda_max)}   "
                 f"({report.eigen_iterations} iterations, residual {report.eigen_residual:.2e})")
    lines.append(f"Saaty S         {_fmt5(report.saaty)}")
    if report.koczkodaj is None:
        lines.append("Koczkodaj K     undefined (n < 3)")
    else:
        t = report.worst_triad
        lines.append(f"Koczkodaj K     {_fmt5(report.koczkodaj)}   "
                     f"(worst triad {labels[t.i]}, {labels[t.j]}, {labels[t.k]})")
        lines.append(f"alpha = 1 - K   {_fmt5(report.alpha)}")
    i, j = report.discrepancy.worst_pair
    lines.append(f"Discrepancy D   {_fmt5(report.discrepancy.worst)}   "
                 f"(worst pair {labels[i]}, {labels[j]})")
    if report.bounds is not None:
        b = report.bounds
        lines.append("")
        lines.append("Bounds from K (alpha = 1 - K):")
        lines.append(f"  D  <= 1/alpha - 1        = {_fmt5(b.discrepancy_bound)}")
        lines.append(f"  S  in [alpha-1, 1/alpha-1] = [{_fmt5(b.saaty_lower)}, {_fmt5(b.saaty_upper)}]")
        lines.append(f"  lambda_max in            [{_fmt5(b.lambda_lower)}, {_fmt5(b.lambda_upper)}]")
        lines.append(f"  kappa (guaranteed-gain reduction) = {_fmt5(b.kappa)}")
        lines.append(f"  POP threshold 1/alpha    = {_fmt5(b.pop_threshold)}")
        lines.append(f"  POIP threshold 1/alpha^2 = {_fmt5(b.poip_threshold)}")
    s = report.scale
    flag = "within scale" if s.within_scale else "EXCEEDS scale bound"
    lines.append("")
    lines.append(f"Scale: max entry {_fmt5(s.max_entry)} vs Fulop constant "
                 f"{_fmt5(s.fulop_constant)} -> {flag}")
    if report.cop is not None:
        c = report.cop
        lines.append(f"POP : {c.pop_premises_met}/{c.pop_pairs} premises met, "
                     f"{c.pop_premise_failures} theorem failures, "
                     f"{c.raw_pop_violations} raw order breaks")
        lines.append(f"POIP: {c.poip_premises_met}/{c.poip_quadruples} premises met, "
                     f"{c.poip_premise_failures} theorem failures, "
                     f"{c.raw_poip_violations} raw intensity breaks")
    lines.append("")
    lines.append(f"Note: {SAATY_ACCEPT_NOTE}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    m = _load_matrix(args.input, args.format)
    report = analyze(m, tol=args.tol, max_iter=args.max_iter)
    if args.output == "json":
        print(json.dumps(report_to_dict(report, include_cop_detail=False), indent=2))
    else:
        print(_analysis_table(report))
    return EXIT_OK


def cmd_cop(args) -> int:
    m = _load_matrix(args.input, args.format)
    ranking = rank_ev(m, tol=args.tol, max_iter=args.max_iter)
    if m.n < 3:
        print("Koczkodaj index undefined for n < 3; COP thresholds unavailable.",
              file=sys.stderr)
        return EXIT_VALIDATION
    k, _ = koczkodaj_index(m)

    skip_poip = m.n > POIP_SCAN_MAX_N and not args.full
    if skip_poip:
        print(f"warning: n = {m.n} > {POIP_SCAN_MAX_N}, skipping the O(n^4) POIP scan "
              "(pass --full to force it)", file=sys.stderr)

    pop_rows, raw_pop = pop_check(m, ranking, k)
    poip_rows, raw_poip = ([], []) if skip_poip else poip_check(m, ranking, k)

    falsified = False
    if args.output == "json":
        payload = {
            "koczkodaj": k,
            "popThreshold": 1.0 / (1.0 - k),
            "poipThreshold": (1.0 / (1.0 - k)) ** 2,
            "pop": [
                {"i": r.i, "j": r.j, "judgment": float(m.entries[r.i, r.j]),
                 "premiseMet": r.premise_met, "conclusionHolds": r.conclusion_holds}
                for r in pop_rows
            ],
            "poip": None if skip_poip else [
                {"i": r.i, "j": r.j, "k": r.k, "l": r.l,
                 "premiseMet": r.premise_met, "conclusionHolds": r.conclusion_holds}
                for r in poip_rows
            ],
            "rawPopViolations": [list(p) for p in raw_pop],
            "rawPoipViolations": [list(q) for q in raw_poip],
        }
        falsified = any(r.premise_met and not r.conclusion_holds for r in pop_rows)
        falsified |= any(r.premise_met and not r.conclusion_holds for r in poip_rows)
        print(json.dumps(payload, indent=2))
    else:
        labels = m.labels
        threshold = 1.0 / (1.0 - k)
        print(f"K = {_fmt5(k)}   POP threshold 1/alpha = {_fmt5(threshold)}   "
              f"POIP threshold = {_fmt5(threshold * threshold)}")
        print()
        print("POP rows with m_ij > 1:")
        any_pop = False
        for r in pop_rows:
            v = m.entries[r.i, r.j]
            if v <= 1.0:
                continue
            any_pop = True
            if r.premise_met:
                status = "premise met, holds" if r.conclusion_holds else "premise met, FAILS"
                falsified |= not r.conclusion_holds
            else:
                status = f"premise not met (threshold {_fmt5(threshold)})"
            print(f"  {labels[r.i]} vs {labels[r.j]}: m = {_fmt5(v)}  [{status}]")
        if not any_pop:
            print("  (no dominant judgments)")
        print(f"Raw POP violations: {len(raw_pop)}")
        if skip_poip:
            print("POIP: skipped")
        else:
            met = [r for r in poip_rows if r.premise_met]
            bad = [r for r in met if not r.conclusion_holds]
            falsified |= bool(bad)
            print(f"POIP: {len(met)}/{len(poip_rows)} premises met, {len(bad)} failures, "
                  f"{len(raw_poip)} raw intensity breaks")
            for r in bad:
                print(f"  FAILS: ({labels[r.i]},{labels[r.j]}) vs ({labels[r.k]},{labels[r.l]})")

    if falsified:
        print("theorem premise satisfied but conclusion false: implementation falsified",
              file=sys.stderr)
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_reduce(args) -> int:
    m = _load_matrix(args.input, args.format)
    k_before, _ = koczkodaj_index(m)
    d_before = global_discrepancy(m, rank_ev(m, tol=args.tol, max_iter=args.max_iter)).worst

    if args.target_k is not None:
        target = args.target_k
        if not 0.0 <= target < 1.0:
            raise MatrixValidationError(f"--target-k must lie in [0, 1), got {target}")
    else:
        if k_before == 0.0:
            raise AlreadyConsistentError("matrix is already consistent; nothing to reduce")
        # kappa mode: reduce K by the guaranteed-gain amount.
        kappa = kappa_recommendation(k_before, d_before)
        target = k_before - kappa

    result = reduce(m, target, max_steps=args.max_steps, theta=args.theta)
    k_after, _ = koczkodaj_index(result.matrix)
    d_after = global_discrepancy(
        result.matrix, rank_ev(result.matrix, tol=args.tol, max_iter=args.max_iter)
    ).worst

    log = {
        "targetK": target,
        "reachedTarget": result.reached_target,
        "steps": len(result.revisions),
        "before": {"koczkodaj": k_before, "discrepancy": d_before},
        "after": {"koczkodaj": k_after, "discrepancy": d_after},
        "revisions": [
            {"i": r.i, "j": r.j, "oldValue": r.old_value, "newValue": r.new_value,
             "theta": r.theta, "predictedK": r.predicted_k, "predictedD": r.predicted_d}
            for r in result.revisions
        ],
    }

    if args.out:
        out = Path(args.out)
        out.write_text(json.dumps(result.matrix.to_json_dict(), indent=2) + "\n")
        log_path = Path(args.log) if args.log else out.with_suffix(out.suffix + ".log.json")
        log_path.write_text(json.dumps(log, indent=2) + "\n")
        where = f"matrix -> {out}, log -> {log_path}"
    else:
        print(json.dumps({"matrix": result.matrix.to_json_dict(), **log}, indent=2))
        where = "written to stdout"

    print(f"K: {_fmt5(k_before)} -> {_fmt5(k_after)}   "
          f"D: {_fmt5(d_before)} -> {_fmt5(d_after)}   "
          f"target {_fmt5(target)} {'reached' if result.reached_target else 'NOT reached'} "
          f"in {len(result.revisions)} step(s); {where}", file=sys.stderr)
    if not result.reached_target:
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    static_dir = Path(args.static) if args.static else None
    if static_dir is not None and not static_dir.is_dir():
        print(f"notice: static dir {static_dir} not found, running API-only",
              file=sys.stderr)
        static_dir = None
    snapshot_dir = Path(args.snapshot_dir) if args.snapshot_dir else None

    app = create_app(snapshot_dir=snapshot_dir, static_dir=static_dir)
    sock = socket.create_server((args.host, args.port))
    host, port = sock.getsockname()[:2]
    print(f"Serving on http://{host}:{port}", flush=True)
    config = uvicorn.Config(app, log_level="warning")
    server = uvicorn.Server(config)
    server.run(sockets=[sock])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcrank",
        description="Pairwise-comparisons ranking workbench",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, output_default="table"):
        p.add_argument("input", help="matrix file (JSON or CSV)")
        p.add_argument("--format", choices=["auto", "json", "csv"], default="auto",
                       help="input format (default: by file extension)")
        p.add_argument("--output", choices=["json", "table"], default=output_default,
                       help="output rendering")
        p.add_argument("--tol", type=float, default=1e-12,
                       help="eigen solver residual tolerance")
        p.add_argument("--max-iter", type=int, default=10000,
                       help="eigen solver iteration cap")

    p = sub.add_parser("analyze", help="full report: ranking, indices, discrepancy, bounds")
    add_io(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cop", help="order-preservation (POP/POIP) tables")
    add_io(p)
    p.add_argument("--full", action="store_true",
                   help=f"run the POIP scan even for n > {POIP_SCAN_MAX_N}")
    p.set_defaults(func=cmd_cop)

    p = sub.add_parser("reduce", help="inconsistency-reducing judgment revision")
    add_io(p, output_default="json")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--kappa", action="store_true",
                       help="reduce K by the guaranteed-gain amount (default)")
    group.add_argument("--target-k", type=float, default=None,
                       help="explicit Koczkodaj index to reach")
    p.add_argument("--theta", type=float, default=0.5,
                   help="geometric blending weight in (0, 1]")
    p.add_argument("--max-steps", type=int, default=100)
    p.add_argument("--out", default=None, help="path for the revised matrix JSON")
    p.add_argument("--log", default=None,
                   help="path for the revision log (default: OUT.log.json)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("serve", help="run the HTTP API (and UI when built)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080,
                   help="TCP port; 0 asks the OS for a free one")
    p.add_argument("--static", default=None, help="directory of built UI assets")
    p.add_argument("--snapshot-dir", default=None,
                   help="persist session snapshots as JSON files here")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MatrixValidationError, AlreadyConsistentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
