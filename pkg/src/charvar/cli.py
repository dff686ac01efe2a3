"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 on a check failure,
2 for a malformed spec or arguments, 3 for parameters outside the
supported range.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import fq_oracle, hlv, lefschetz, seifert, strata
from .coxeter import BraidWord, Permutation
from .lattice_tsv import cell_tsv, check_axioms, convolve_all, fiber_reduction, rank_formula_check, stay_tsv
from .walks import cell_shape, enumerate_walks, stay_graph_components

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_UNSUPPORTED = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


# --- input ----------------------------------------------------------------------

def load_spec(path: str) -> strata.CharVarSpec:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        data = json.loads(text)
    except OSError as exc:
        raise CliError(f"cannot read spec: {exc}", EXIT_MALFORMED) from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"spec is not valid JSON: {exc}", EXIT_MALFORMED) from exc
    return strata.parse_spec(data)


def parse_braid(text: str, n: int) -> BraidWord:
    try:
        letters = tuple(int(x) for x in text.split(",") if x.strip()) if text else ()
        return BraidWord(n, letters)
    except ValueError as exc:
        raise CliError(f"bad braid {text!r}: {exc}", EXIT_MALFORMED) from exc


# --- output ---------------------------------------------------------------------

def emit(payload: dict, fmt: str, table: Callable[[dict], str] | None = None) -> None:
    payload = {"schema": SCHEMA, **payload}
    if fmt == "table" and table is not None:
        print(table(payload))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


def _format_rows(rows: Sequence[dict], columns: Sequence[str]) -> str:
    widths = [max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c) for c in columns]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(str(r.get(c, "")).ljust(w) for c, w in zip(columns, widths)))
    return "\n".join(lines)


def _perm_list(p: Permutation) -> list[int]:
    return list(p.one_line)


# --- subcommands ----------------------------------------------------------------

def _census_payload(spec: strata.CharVarSpec, jobs: int) -> tuple[dict, list]:
    cells = strata.cell_census(spec, jobs)
    connected = [c for c in cells if c.connected]
    summary = strata.cell_decomposition_summary(cells, spec.n)
    epoly = strata.e_polynomial_from_cells(cells, spec.n)
    wr = strata.weights_report(spec, cells)
    totals = {
        "cells": len(cells),
        "connected": len(connected),
        "strata": len({c.stratum for c in cells}),
        "decomposition": [{"torus_rank": r, "affine_rank": a, "count": n}
                          for (r, a), n in sorted(summary.items(), reverse=True)],
        "dim": wr.dim,
        "weights_ok": wr.ok,
        "e_poly": epoly.to_json(),
    }
    rows = [c.as_dict() for c in cells]
    return {"spec": spec.to_json(), "cells": rows, "totals": totals}, cells


def cmd_census(args) -> int:
    spec = load_spec(args.spec)
    payload, _ = _census_payload(spec, args.jobs)

    def table(p):
        cols = ["stratum", "walk", "affine_dim", "r1", "middle_weight", "connected"]
        t = p["totals"]
        decomp = ", ".join(f"{d['count']} x (C*)^{d['torus_rank']} x C^{d['affine_rank']}" for d in t["decomposition"])
        return (_format_rows(p["cells"], cols) + f"\n\nconnected cells: {t['connected']} of {t['cells']}"
                f"\nX = {decomp}\ndim = {t['dim']}, weights ok = {t['weights_ok']}")

    emit(payload, args.format, table)
    return EXIT_OK


def cmd_epoly(args) -> int:
    spec = load_spec(args.spec)
    E = strata.e_polynomial(spec, args.jobs)
    emit({"e_poly": E.to_json()}, args.format, lambda p: f"E(q) = {E}")
    return EXIT_OK


def _lefschetz_rows(cells) -> list[dict]:
    rows = []
    for c in cells:
        if not c.connected:
            continue
        rep = lefschetz.check_cell(c.r1, c.omega_red, c.affine_dim)
        M = lefschetz.GradedSkewModule(c.r1, c.omega_red, c.affine_dim)
        mh_ok = bool(rep) and lefschetz.mh_from_kernels(M) == lefschetz.mh_closed_form(c.r1, c.affine_dim)
        rows.append({"stratum": c.stratum, "walk": c.walk, "r1": c.r1, "affine_dim": c.affine_dim,
                     "lefschetz": bool(rep), "mh_ok": mh_ok})
    return rows


def cmd_lefschetz(args) -> int:
    spec = load_spec(args.spec)
    cells = strata.cell_census(spec, args.jobs)
    rows = _lefschetz_rows(cells)
    wr = strata.weights_report(spec, cells)
    passed = all(r["lefschetz"] and r["mh_ok"] for r in rows) and wr.ok
    emit({"cells": rows, "weights_ok": wr.ok, "dim": wr.dim, "passed": passed}, args.format,
         lambda p: _format_rows(p["cells"], ["stratum", "walk", "r1", "affine_dim", "lefschetz", "mh_ok"])
         + f"\n\npassed = {p['passed']}")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_walks(args) -> int:
    b = parse_braid(args.braid, args.n)
    rows = []
    for i, w in enumerate(enumerate_walks(b)):
        shape = cell_shape(b, w)
        rows.append({"walk": i, "states": [_perm_list(p) for p in w.states], "up": list(shape.up),
                     "stay": list(shape.stay), "down": list(shape.down),
                     "connected": len(stay_graph_components(shape, b.n)) == 1})

    def table(p):
        body = [{**r, "states": " ".join("".join(map(str, s)) for s in r["states"])} for r in p["list"]]
        return (_format_rows(body, ["walk", "states", "up", "stay", "down", "connected"])
                + f"\n\nwalks: {p['walks']}, connected: {p['connected']}")

    emit({"braid": list(b.letters), "n": b.n, "walks": len(rows),
          "connected": sum(r["connected"] for r in rows), "list": rows}, args.format, table)
    return EXIT_OK


def cmd_surface(args) -> int:
    b = parse_braid(args.braid, args.n)
    walks = list(enumerate_walks(b))
    if not 0 <= args.walk < len(walks):
        raise CliError(f"walk index {args.walk} out of range (braid has {len(walks)} walks)", EXIT_MALFORMED)
    shape = cell_shape(b, walks[args.walk])
    S = seifert.build_surface(b, shape)
    if args.dot:
        print(seifert.to_dot(S))
        return EXIT_OK
    inv = seifert.surface_invariants(S)
    X = cell_tsv(b, shape)
    red = fiber_reduction(X)
    predicted = len(stay_graph_components(shape, b.n))
    checks = {
        "components_match": inv.components == predicted,
        "euler_char_match": inv.euler_char == b.n - len(shape.stay),
        "alternating": seifert.alternates(S),
    }
    if predicted == 1:
        checks["h1_matches_r1"] = inv.h1_closed_rank == red.r1
        checks["rank_formula"] = rank_formula_check(X, shape, b)
    passed = all(checks.values())
    emit({"braid": list(b.letters), "n": b.n, "walk": args.walk, "surface": inv.as_dict(),
          "stay_graph_components": predicted, "r1": red.r1, "checks": checks, "passed": passed},
         args.format,
         lambda p: "\n".join(f"{k}: {v}" for k, v in {**p["surface"], "r1": p["r1"], **p["checks"]}.items()))
    return EXIT_OK if passed else EXIT_FAIL


def _mus_of(spec: strata.CharVarSpec) -> list[tuple[int, ...]]:
    return [tuple(sorted(mu, reverse=True)) for mu in spec.mult]


def _hlv_payload(spec: strata.CharVarSpec, jobs: int) -> dict:
    try:
        W = hlv.hlv_prediction(spec.g, spec.k, _mus_of(spec))
    except hlv.UnsupportedHLV as exc:
        raise CliError(str(exc), EXIT_UNSUPPORTED) from exc
    E = strata.e_polynomial(spec, jobs)
    dim = strata.dim_charvar(spec)
    specialized = W.specialize_t_inverse_q()
    return {"W": W.to_json(), "W_text": str(W), "W_at_t_inverse_q": specialized.to_json(),
            "e_poly": E.to_json(), "match": specialized == E,
            "qt_symmetric": hlv.reduced_symmetric(W, dim),
            "t_one_nonnegative": hlv.nonnegative_at_t_one(W),
            "t_one_nonnegative_twisted": hlv.nonnegative_at_t_one(W, twist=True)}


def cmd_hlv_compare(args) -> int:
    spec = load_spec(args.spec)
    payload = _hlv_payload(spec, args.jobs)
    if not payload["t_one_nonnegative_twisted"]:
        print("warning: W(q, 1) with q^(1/2) -> -q^(1/2) has a negative or fractional coefficient",
              file=sys.stderr)
    passed = payload["match"] and payload["qt_symmetric"]
    emit({**payload, "passed": passed}, args.format,
         lambda p: f"W(q,t) = {p['W_text']}\nmatch = {p['match']}\nsymmetric = {p['qt_symmetric']}")
    return EXIT_OK if passed else EXIT_FAIL


def _fq_spec(spec: strata.CharVarSpec, q: int | None) -> strata.CharVarSpec:
    if spec.eigen.backend == "finite_field" and (q is None or q == spec.eigen.q):
        return spec
    if q is None:
        raise CliError("fq-count needs --q for a spec without finite-field eigenvalues", EXIT_MALFORMED)
    for cand in fq_oracle.generic_eigenvalue_tuples(spec.g, spec.n, spec.k, spec.mult, q, limit=1):
        return cand
    raise CliError(f"no generic eigenvalues with these multiplicities exist over F_{q}", EXIT_UNSUPPORTED)


def _fq_payload(spec: strata.CharVarSpec, q: int | None, budget: int, jobs: int) -> dict:
    fspec = _fq_spec(spec, q)
    try:
        count = fq_oracle.count_points(fspec, budget=budget)
    except fq_oracle.BudgetExceeded as exc:
        raise CliError(str(exc), EXIT_UNSUPPORTED) from exc
    E = strata.e_polynomial(spec, jobs)
    qq = fspec.eigen.q
    value = E(qq)
    return {"q": qq, "eigenvalues": [list(v) for v in fspec.eigen.values], "count": count,
            "e_poly_at_q": int(value) if value.denominator == 1 else str(value), "match": value == count}


def cmd_fq_count(args) -> int:
    spec = load_spec(args.spec)
    payload = _fq_payload(spec, args.q, args.budget, args.jobs)
    emit({**payload, "passed": payload["match"]}, args.format,
         lambda p: f"#X(F_{p['q']}) = {p['count']}, E({p['q']}) = {p['e_poly_at_q']}, match = {p['match']}")
    return EXIT_OK if payload["match"] else EXIT_FAIL


def _random_chain_check(n: int, count: int, seed: int) -> bool:
    rng = random.Random(seed)
    for _ in range(count):
        factors = []
        for _ in range(rng.randint(1, 6)):
            i, j = rng.sample(range(1, n + 1), 2)
            factors.append(stay_tsv(n, i, j))
        if not check_axioms(convolve_all(n, factors)):
            return False
    return True


def cmd_check_all(args) -> int:
    spec = load_spec(args.spec)
    steps: dict[str, bool] = {}
    steps["genericity"] = strata.genericity_check(spec)
    if not steps["genericity"]:
        emit({"steps": steps, "passed": False}, args.format, _steps_table)
        return EXIT_FAIL
    census, cells = _census_payload(spec, args.jobs)
    steps["census"] = census["totals"]["connected"] > 0
    steps["weights"] = census["totals"]["weights_ok"]
    rows = _lefschetz_rows(cells)
    steps["lefschetz"] = all(r["lefschetz"] for r in rows)
    steps["mh_reconstruction"] = all(r["mh_ok"] for r in rows)

    axioms_ok, seifert_ok = True, True
    for s in strata.enumerate_strata(spec):
        layout = strata.stratum_layout(s, spec.n)
        b = layout.braid
        for w in enumerate_walks(b):
            shape = cell_shape(b, w)
            axioms_ok = axioms_ok and bool(check_axioms(strata.assemble_cell(layout, w, shape)))
            X = cell_tsv(b, shape)
            inv = seifert.surface_invariants(seifert.build_surface(b, shape))
            ok = inv.components == len(stay_graph_components(shape, b.n))
            ok = ok and inv.euler_char == b.n - len(shape.stay)
            if inv.components == 1:
                ok = ok and inv.h1_closed_rank == fiber_reduction(X).r1
            seifert_ok = seifert_ok and ok
    steps["tsv_axioms"] = axioms_ok and _random_chain_check(max(spec.n, 2), args.random_chains, args.seed)
    steps["seifert"] = seifert_ok
    E = strata.e_polynomial_from_cells(cells, spec.n)
    dim = strata.dim_charvar(spec)
    steps["palindromic"] = E.substitute_inverse() * strata.LaurentQ.q(dim) == E

    extra: dict = {"e_poly": E.to_json()}
    if args.q is not None or spec.eigen.backend == "finite_field":
        fq = _fq_payload(spec, args.q, args.budget, args.jobs)
        steps["fq_count"] = fq["match"]
        extra["fq"] = fq
    if args.hlv:
        h = _hlv_payload(spec, args.jobs)
        steps["hlv"] = h["match"] and h["qt_symmetric"]
        extra["hlv"] = {k: h[k] for k in ("W", "match", "qt_symmetric", "t_one_nonnegative", "t_one_nonnegative_twisted")}
    passed = all(steps.values())
    emit({"steps": steps, **extra, "passed": passed}, args.format, _steps_table)
    return EXIT_OK if passed else EXIT_FAIL


def _steps_table(p: dict) -> str:
    return "\n".join(f"{name:<18} {'ok' if ok else 'FAIL'}" for name, ok in p["steps"].items()) \
        + f"\n\npassed = {p['passed']}"


# --- entry points ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=strata.default_jobs(), help="worker processes")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--budget", type=int, default=10 ** 8, help="iteration budget for brute force")
    common.add_argument("--q", type=int, default=None, help="prime power for finite-field counting")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(prog="charvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_cmd(name: str, func, help_: str):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("spec", help="spec JSON file, or - for stdin")
        p.set_defaults(func=func)
        return p

    spec_cmd("census", cmd_census, "list all cells and the decomposition totals")
    spec_cmd("epoly", cmd_epoly, "E-polynomial from the cell census")
    spec_cmd("lefschetz", cmd_lefschetz, "curious Lefschetz and MH checks per cell")
    spec_cmd("hlv-compare", cmd_hlv_compare, "compare with the Macdonald generating function")
    spec_cmd("fq-count", cmd_fq_count, "brute-force point count over F_q")
    p = spec_cmd("check-all", cmd_check_all, "run every check in sequence")
    p.add_argument("--hlv", action="store_true", help="include the generating-function comparison")
    p.add_argument("--random-chains", type=int, default=20, help="random convolution chains to test")

    for name, func, help_ in (("walks", cmd_walks, "enumerate walks on a braid"),
                              ("surface", cmd_surface, "Seifert surface invariants of a braid walk")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--braid", required=True, help="comma-separated letters, e.g. 1,1,1,1")
        p.add_argument("--n", type=int, required=True, help="strand count")
        if name == "surface":
            p.add_argument("--walk", type=int, default=0, help="walk index in enumeration order")
            p.add_argument("--dot", action="store_true", help="print the ribbon graph in DOT format")
        p.set_defaults(func=func)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_MALFORMED
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except strata.SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (strata.UnsupportedSpec, strata.NotGeneric, hlv.UnsupportedHLV, lefschetz.LefschetzError) as exc:
        print(f"error: unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


def main() -> None:
    sys.exit(run())
