"""Command line front end.

    skein-tori analyze --builtin polygon:3 --n 2 --order 4
    skein-tori verify --builtin annulus:2,2 --n 3
    skein-tori batch --builtin polygon:3 --builtin polygon:4 --n 2 3 --order 2 4 6
    skein-tori skewnf --builtin genus:1,1 --n 2
    skein-tori emit-matrices --builtin polygon:3 --n 2

Exit codes: 0 when every asserted identity holds, 1 on an assertion
failure, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from pathlib import Path

from .amatrix import MatrixIdentityError, p_matrices, reduced_blocks, verify_block_lemmas
from .center import NOT_ASSERTED, rank, reduced_torus_data, root_params, torus_data
from .quiver import label
from .surface import Triangulation, TriangulationError, build_mu_triangulation, builtin, load_triangulation

SCHEMA = 1
MAX_CASES = 10_000
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _source(args) -> list[tuple[str, Triangulation]]:
    out = []
    try:
        for name in args.builtin or []:
            out.append((name, builtin(name)))
        for path in args.spec or []:
            out.append((str(path), load_triangulation(Path(path))))
    except (TriangulationError, OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc
    if not out:
        raise InputError("give a surface with --builtin or --spec")
    return out


def _dump(doc, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    rows = doc["rows"] if "rows" in doc else [_flatten(doc)]
    buf = io.StringIO()
    keys = sorted({k for r in rows for k in r})
    w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: _cell(r.get(k)) for k in keys})
    return buf.getvalue()


def _cell(v):
    return json.dumps(v, sort_keys=True) if isinstance(v, (list, dict)) else v


def _flatten(doc: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in doc.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict) and v and all(not isinstance(x, dict) for x in v.values()):
            out.update({f"{key}.{a}": b for a, b in v.items()})
        elif isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        else:
            out[key] = v
    return out


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Single cases


def matrix_checks(T: Triangulation, n: int, reduced: bool, seed: int = 0) -> dict:
    if reduced:
        rep = reduced_blocks(build_mu_triangulation(T.surface), n)
        return {"ok": rep.ok, "identities": {}, "blocks": rep.to_dict()}
    try:
        A = p_matrices(T, n, strict=False)
    except MatrixIdentityError as exc:
        return {"ok": False, "identities": {str(exc): False}, "blocks": {}}
    rep = verify_block_lemmas(A, T, n, seed=seed)
    return {"ok": rep.ok and all(A.checks.values()), "identities": dict(A.checks), "blocks": rep.to_dict()}


def analyze_case(name: str, T: Triangulation, n: int, m_pp: int, reduced: bool, seed: int = 0) -> dict:
    checks = matrix_checks(T, n, reduced, seed)
    data = reduced_torus_data(T.surface, n) if reduced else torus_data(T, n)
    rep = rank(data, m_pp, with_quotients=True)
    doc = {
        "schema": SCHEMA,
        "surface": name,
        "topology": T.surface.as_dict(),
        "n": n,
        "order": m_pp,
        "reduced": reduced,
        "matrix_checks": checks,
        "center": rep.as_dict(),
        "ok": checks["ok"] and rep.ok,
    }
    if rep.lattice_equality == NOT_ASSERTED:
        doc["note"] = "n odd required for explicit center; kernel side only"
    return doc


def _row(case) -> dict:
    name, T, n, m_pp, reduced, seed = case
    try:
        doc = analyze_case(name, T, n, m_pp, reduced, seed)
    except Exception as exc:  # recorded per row, the batch continues
        return {"surface": name, "n": n, "order": m_pp, "reduced": reduced, "error": repr(exc), "ok": False}
    c = doc["center"]
    return {
        "surface": name, "n": n, "order": m_pp, "reduced": reduced,
        "case": c["params"]["case"],
        "rank_kernel": c["rank_kernel"], "rank_skew": c["rank_skew"], "rank_closed": c["rank_closed"],
        "lattice_equality": c["lattice_equality"],
        "z_sequence": c["z_sequence"], "z_predicted": c["z_predicted"],
        "matrix_checks": doc["matrix_checks"]["ok"], "ok": doc["ok"],
    }


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SKEIN_TORI_THREADS", "1")))
    except ValueError as exc:
        raise InputError("SKEIN_TORI_THREADS must be an integer") from exc


# ---------------------------------------------------------------------------
# Commands


def cmd_analyze(args) -> int:
    (name, T), *rest = _source(args)
    if rest:
        raise InputError("analyze takes a single surface")
    doc = analyze_case(name, T, args.n[0], args.order[0], args.reduced, args.seed)
    doc["command"] = "analyze"
    _emit(_dump(doc, args.format), args.output)
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def cmd_verify(args) -> int:
    rows = []
    for (name, T), n in product(_source(args), args.n):
        checks = matrix_checks(T, n, args.reduced, args.seed)
        rows.append({"surface": name, "n": n, "reduced": args.reduced, **checks})
    doc = {"schema": SCHEMA, "command": "verify", "rows": rows, "ok": all(r["ok"] for r in rows)}
    if args.format == "csv":
        doc = {"rows": [{"surface": r["surface"], "n": r["n"], "reduced": r["reduced"], "ok": r["ok"]} for r in rows]}
    _emit(_dump(doc, args.format), args.output)
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAIL


def cmd_batch(args) -> int:
    cases = [(name, T, n, m, args.reduced, args.seed)
             for (name, T), n, m in product(_source(args), args.n, args.order)]
    if len(cases) > MAX_CASES:
        raise InputError(f"grid has {len(cases)} cases, the limit is {MAX_CASES}")
    threads = _threads()
    if threads > 1:
        with ProcessPoolExecutor(threads) as pool:
            rows = list(pool.map(_row, cases))
    else:
        rows = [_row(c) for c in cases]
    doc = {"schema": SCHEMA, "command": "batch", "rows": rows, "ok": all(r["ok"] for r in rows)}
    _emit(_dump(doc, args.format), args.output)
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def cmd_skewnf(args) -> int:
    rows = []
    for (name, T), n in product(_source(args), args.n):
        data = reduced_torus_data(T.surface, n) if args.reduced else torus_data(T, n)
        h = [x for x in data.skew().h if x]
        rows.append({"surface": name, "n": n, "reduced": args.reduced, "h": h,
                     "z": [x // n for x in h], "zeros": data.skew().zeros})
    _emit(_dump({"schema": SCHEMA, "command": "skewnf", "rows": rows}, args.format), args.output)
    return EXIT_OK


def cmd_emit(args) -> int:
    (name, T), *rest = _source(args)
    if rest:
        raise InputError("emit-matrices takes a single surface")
    n = args.n[0]
    A = p_matrices(T, n)
    mats = {"Qbar": A.qbar, "Hbar": A.hbar, "Kbar": A.kbar, "Pbar": A.pbar,
            "Q": A.q, "H": A.h, "K": A.k, "P": A.p, "KQ": A.kq}
    doc = {"schema": SCHEMA, "command": "emit-matrices", "surface": name, "n": n,
           "matrices": {k: {"rows": [label(v) for v in M.rows], "cols": [label(v) for v in M.cols],
                            "data": M.tolist()} for k, M in mats.items()}}
    if args.format == "csv":
        raise InputError("emit-matrices writes JSON only")
    _emit(_dump(doc, "json"), args.output)
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "batch": cmd_batch,
            "skewnf": cmd_skewnf, "emit-matrices": cmd_emit}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skein-tori", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        p = sub.add_parser(cmd)
        p.add_argument("--builtin", action="append", help="polygon:k, annulus:r1,r2 or genus:g,r")
        p.add_argument("--spec", action="append", help="triangulation spec file (JSON)")
        p.add_argument("--n", type=int, nargs="+", required=True)
        if cmd in ("analyze", "batch"):
            p.add_argument("--order", type=int, nargs="+", required=True, help="order m'' of q^2")
        p.add_argument("--reduced", action="store_true")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output")
        p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if any(n < 2 for n in args.n):
            raise InputError("n must be at least 2")
        if any(m < 2 for m in getattr(args, "order", None) or [2]):
            raise InputError("the order must be at least 2")
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
