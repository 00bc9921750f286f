"""Command-line interface.

Exit codes: 0 success or agreement, 1 semantic negative (formula/oracle
mismatch, no decomposition), 2 input error.  With ``--json`` each command
prints exactly one JSON document on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .apolarity import decompose_quadric, load_decomposition_input, star_holds_d2
from .arrangement import WeightVector, configuration_from_json
from .exactlinalg import DEFAULT_PRIME, check_prime
from .formula import (
    expected_dim_I2,
    fano_dim,
    fiber_deficiency,
    max_plane_dim_on_rank_r,
    n_quadrics,
)
from .oracle import DEFAULT_TRIALS, dim_I2_exact, generic_dim_I2

SWEEP_FIELDS = ["n", "s", "weights", "case", "tau", "v", "expected_dim",
                "oracle_dim", "agree", "trials", "prime", "seed"]


class InputError(Exception):
    pass


def parse_weights(text: str, n: int) -> WeightVector:
    try:
        ws = [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise InputError(f"weights must be comma-separated integers, got {text!r}")
    if not ws:
        raise InputError("at least one weight is required")
    try:
        return WeightVector(n, ws)
    except ValueError as exc:
        raise InputError(str(exc))


def _prime(p: int) -> int:
    try:
        return check_prime(p)
    except ValueError as exc:
        raise InputError(str(exc))


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_expect(args) -> int:
    e = expected_dim_I2(parse_weights(args.weights, args.n))
    lines = [f"weight vector: {e.weight}", f"case: {e.label}"]
    if e.tau is not None:
        lines.append(f"tau: {e.tau}  v: {e.v}")
    lines += [f"dim (I)_2: {e.dim_I2}", f"HF(2): {e.hf2}"]
    _emit(args, e.to_json(), "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise InputError("--trials must be >= 1")
    w = parse_weights(args.weights, args.n)
    rep = generic_dim_I2(w, args.trials, _prime(args.prime), args.seed)
    text = (f"weight vector: {w}\nper-trial dims: {list(rep.per_trial_dims)}\n"
            f"oracle: {rep.oracle_dim}  formula: {rep.formula_dim}  "
            f"{'agree' if rep.agree else 'MISMATCH'}")
    _emit(args, rep.to_json(), text)
    return 0 if rep.agree else 1


def cmd_dim(args) -> int:
    try:
        c = configuration_from_json(args.config)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read configuration: {exc}")
    d = dim_I2_exact(c)
    payload = {"n": c.ambient_n, "dims": list(c.dims), "prime": c.prime,
               "dim_I2": d, "hf2": n_quadrics(c.ambient_n) - d}
    _emit(args, payload, f"dim (I)_2: {d}\nHF(2): {payload['hf2']}")
    return 0


def enumerate_weight_vectors(n_max: int, s_max: int):
    for n in range(2, n_max + 1):
        for s in range(1, s_max + 1):
            for ws in itertools.combinations_with_replacement(range(n - 1, -1, -1), s):
                yield WeightVector(n, ws)


def sweep_row(w: WeightVector, trials: int, prime: int, seed: int) -> dict:
    e = expected_dim_I2(w)
    rep = generic_dim_I2(w, trials, prime, seed)
    return {
        "n": w.n, "s": w.s, "weights": ";".join(map(str, w.weights)),
        "case": e.label.value, "tau": e.tau, "v": e.v,
        "expected_dim": e.dim_I2, "oracle_dim": rep.oracle_dim,
        "agree": rep.agree, "trials": trials, "prime": prime, "seed": seed,
    }


def _threads() -> int:
    raw = os.environ.get("QUADRICA_THREADS", "0")
    try:
        k = int(raw)
    except ValueError:
        raise InputError(f"QUADRICA_THREADS must be an integer, got {raw!r}")
    return k if k > 0 else (os.cpu_count() or 1)


def run_sweep(n_max: int, s_max: int, trials: int, prime: int, seed: int) -> list[dict]:
    vectors = list(enumerate_weight_vectors(n_max, s_max))
    workers = _threads()
    if workers == 1:
        return [sweep_row(w, trials, prime, seed) for w in vectors]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda w: sweep_row(w, trials, prime, seed), vectors))


def render_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if row[k] is None else str(row[k]).lower() if k == "agree" else row[k])
                         for k in SWEEP_FIELDS})
    return buf.getvalue()


def cmd_sweep(args) -> int:
    if args.n_max < 2 or args.s_max < 1:
        raise InputError("need --n-max >= 2 and --s-max >= 1")
    if args.trials < 1:
        raise InputError("--trials must be >= 1")
    rows = run_sweep(args.n_max, args.s_max, args.trials, _prime(args.prime), args.seed)
    text = render_rows(rows, args.format)
    if args.out and args.out != "-":
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc}")
    else:
        sys.stdout.write(text)
    mismatches = sum(not r["agree"] for r in rows)
    summary = {"total": len(rows), "mismatches": mismatches}
    if args.out and args.out != "-":
        _emit(args, summary, f"total: {len(rows)}  mismatches: {mismatches}")
    else:
        print(f"total: {len(rows)}  mismatches: {mismatches}", file=sys.stderr)
    return 0 if mismatches == 0 else 1


def cmd_fano(args) -> int:
    try:
        d = fano_dim(args.m, args.n)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit(args, {"m": args.m, "n": args.n, "fano_dim": d}, "empty" if d is None else str(d))
    return 0


def cmd_rankbound(args) -> int:
    try:
        m = max_plane_dim_on_rank_r(args.n, args.r)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit(args, {"n": args.n, "r": args.r, "max_plane_dim": m}, str(m))
    return 0


def cmd_fiber(args) -> int:
    w = parse_weights(args.weights, args.n)
    try:
        rep = fiber_deficiency(w, args.r)
    except ValueError as exc:
        raise InputError(str(exc))
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}"
                     for k, v in rep.to_json().items())
    _emit(args, rep.to_json(), text)
    return 0


def cmd_decompose(args) -> int:
    try:
        families, target = load_decomposition_input(args.input)
    except (OSError, ValueError) as exc:
        raise InputError(f"bad decomposition input: {exc}")
    prime = _prime(args.prime)
    if target is None:
        holds, defect = star_holds_d2(families, prime, exact=args.exact)
        print(json.dumps({"holds": holds, "defect": defect}) if args.json
              else f"holds: {str(holds).lower()}\ndefect: {defect}")
        return 0
    wit = decompose_quadric(target, families, prime, exact=args.exact)
    if wit is None:
        print(json.dumps({"decomposition": None}) if args.json else "no decomposition")
        return 1
    print(json.dumps(wit.to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadrica",
                                 description="Quadrics through generic configurations of linear spaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        p.set_defaults(func=func)
        return p

    def sampling(p):
        p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
        p.add_argument("--seed", type=int, default=0)

    p = add("expect", cmd_expect, "closed-form dimension of (I)_2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True, help="comma-separated component dimensions")

    p = add("verify", cmd_verify, "compare the formula with the exact oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True)
    sampling(p)

    p = add("dim", cmd_dim, "exact dim (I)_2 of an explicit configuration file")
    p.add_argument("--config", required=True)

    p = add("sweep", cmd_sweep, "formula vs oracle over all weight vectors")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    sampling(p)

    p = add("fano", cmd_fano, "dimension of m-planes on a smooth quadric in P^n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("rankbound", cmd_rankbound, "largest plane on a rank-r quadric in P^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("fiber", cmd_fiber, "rank-r quadric fiber count for a disjoint weight vector")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("decompose", cmd_decompose, "decide the quadratic sum question / build a witness")
    p.add_argument("--input", required=True)
    p.add_argument("--exact", action="store_true", help="rational arithmetic for the verdict")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
