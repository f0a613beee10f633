"""Command-line interface.

Exit codes: 0 ok, 1 a check failed, 2 parse/usage error, 3 unphysical input,
4 I/O error, 5 state too large for the oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import curves, oracle, sampler
from .errors import DomainError, InvalidInput, NotEntangled
from .fixtures import EXAMPLES, builtin_witness, check_example
from .linalg import PureState, fidelity_with_pure, schmidt_decompose
from .measures import MeasureKind, pure_measure
from .statefile import as_density_matrix, load_state
from .witness import compute_lambda, lambda_from_fidelity, make_witness

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_UNPHYSICAL = 3
EXIT_IO = 4
EXIT_TOO_LARGE = 5

ORACLE_MAX_DIM = 16


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_measures(text: str | None) -> list[MeasureKind]:
    if not text or text == "all":
        return list(MeasureKind)
    try:
        return [MeasureKind.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


def _load(path: str):
    try:
        return load_state(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_IO) from None
    except InvalidInput as exc:
        raise CliError(f"{path}: {exc}", EXIT_USAGE) from None


def _resolve_witness(arg: str | None, dims: tuple[int, int] | None) -> PureState:
    if arg is None:
        if dims is None:
            raise CliError("a witness is required", EXIT_USAGE)
        return builtin_witness(f"max-entangled:{dims[0]},{dims[1]}")
    if Path(arg).is_file():
        state = _load(arg)
        if not isinstance(state, PureState):
            raise CliError(f"witness file {arg} must hold a pure state", EXIT_USAGE)
        return state
    try:
        return builtin_witness(arg)
    except InvalidInput as exc:
        raise CliError(f"{exc} (and no such file)", EXIT_USAGE) from None


def _witness_spec(phi: PureState):
    try:
        return make_witness(phi)
    except NotEntangled as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


# -- subcommands -----------------------------------------------------------


def cmd_bound(args) -> int:
    kinds = _parse_measures(args.measures)
    if args.fidelity is not None:
        if args.state:
            raise CliError("give either a state file or --fidelity, not both", EXIT_USAGE)
        w = _witness_spec(_resolve_witness(args.witness, None))
        fid = args.fidelity
        lam = lambda_from_fidelity(fid, w.s1, w.m)
    else:
        if not args.state:
            raise CliError("a state file or --fidelity is required", EXIT_USAGE)
        state = _load(args.state)
        rho = as_density_matrix(state)
        w = _witness_spec(_resolve_witness(args.witness, (rho.dim_a, rho.dim_b)))
        if (w.m, w.n) != (rho.dim_a, rho.dim_b):
            raise CliError(
                f"witness is {w.m}x{w.n} but state is {rho.dim_a}x{rho.dim_b}", EXIT_USAGE
            )
        fid = fidelity_with_pure(rho, w.phi)
        lam = compute_lambda(rho, w)

    rep = curves.bound_report(lam)
    payload = {
        "m": w.m,
        "n": w.n,
        "s1": w.s1,
        "fidelity": fid,
        "lambda": lam.lam,
        "bounds": {k.value: rep.bound(k) for k in kinds},
        "branches": {k.value: rep.branch_notes[k.value] for k in kinds},
    }
    lines = [
        f"m = {w.m}, n = {w.n}, s1 = {w.s1:.6g}",
        f"fidelity <phi|rho|phi> = {fid:.6g}",
        f"Lambda = {lam.lam:.6g}",
    ]
    for k in kinds:
        lines.append(f"  {k.value:<13s} >= {rep.bound(k):.6g}   [{rep.branch_notes[k.value]}]")
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_examples(args) -> int:
    names = list(EXAMPLES) if args.which == "all" else [args.which]
    t0 = time.perf_counter()
    checks = [c for name in names for c in check_example(EXAMPLES[name])]
    elapsed = time.perf_counter() - t0
    ok = all(c.passed for c in checks)
    payload = {
        "checks": [
            {
                "example": c.example,
                "quantity": c.quantity,
                "computed": c.computed,
                "expected": c.expected,
                "tolerance": c.tolerance,
                "passed": c.passed,
            }
            for c in checks
        ],
        "all_passed": ok,
        "seconds": elapsed,
    }
    lines = [f"{'example':<8s}{'quantity':<14s}{'computed':>12s}{'quoted':>10s}{'tol':>7s}  result"]
    for c in checks:
        lines.append(
            f"{c.example:<8s}{c.quantity:<14s}{c.computed:>12.5f}{c.expected:>10.4f}"
            f"{c.tolerance:>7.2f}  {'PASS' if c.passed else 'FAIL'}"
        )
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} passed in {elapsed * 1e3:.1f} ms")
    _emit(payload, args.json, lines)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _write_rows(path: str, rows) -> int:
    try:
        return sampler.write_csv(path, rows)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}", EXIT_IO) from None


def cmd_scatter(args) -> int:
    try:
        kind = MeasureKind.parse(args.measure)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    lam, val = sampler.scatter_arrays(args.m, args.samples, kind, args.seed)
    violations = sampler.dominance_violations(args.m, lam, val, kind)
    count = _write_rows(args.out, zip(lam.tolist(), val.tolist()))
    print(f"wrote {count} rows to {args.out}")
    print(f"dominance violations: {violations}")
    return EXIT_OK if violations == 0 else EXIT_CHECK_FAILED


def cmd_curves(args) -> int:
    rows = sampler.curve_table(args.m, args.curve, args.grid)
    count = _write_rows(args.out, rows)
    print(f"wrote {count} rows to {args.out}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    kind = _parse_measures(args.measure)
    if len(kind) != 1:
        raise CliError("oracle takes a single measure", EXIT_USAGE)
    kind = kind[0]
    state = _load(args.state)
    rho = as_density_matrix(state)
    if rho.dim > ORACLE_MAX_DIM:
        raise CliError(f"state dimension {rho.dim} exceeds the oracle limit {ORACLE_MAX_DIM}", EXIT_TOO_LARGE)
    w = _witness_spec(_resolve_witness(args.witness, (rho.dim_a, rho.dim_b)))
    if (w.m, w.n) != (rho.dim_a, rho.dim_b):
        raise CliError(f"witness is {w.m}x{w.n} but state is {rho.dim_a}x{rho.dim_b}", EXIT_USAGE)
    lam = compute_lambda(rho, w)
    lower = curves.lower_bound(kind, lam.lam, lam.m)
    est = oracle.convex_roof_upper(rho, kind, trials=args.trials, seed=args.seed)

    exact = None
    if isinstance(state, PureState):
        exact = float(pure_measure(kind, schmidt_decompose(state)))
    elif (rho.dim_a, rho.dim_b) == (2, 2) and kind is MeasureKind.CONCURRENCE:
        exact = oracle.wootters_concurrence(rho)
    elif (rho.dim_a, rho.dim_b) == (2, 2) and kind is MeasureKind.EOF:
        exact = oracle.wootters_eof(rho)

    tol = 1e-9
    ordered = lower <= est.value + tol
    if exact is not None:
        ordered = ordered and lower <= exact + tol and exact <= est.value + tol
    payload = {
        "measure": kind.value,
        "lambda": lam.lam,
        "lower": lower,
        "exact": exact,
        "upper": est.value,
        "trials": est.trials,
        "ensemble_size": est.ensemble_size,
        "seed": est.seed,
        "ordered": ordered,
    }
    lines = [
        f"measure       {kind.value}",
        f"Lambda        {lam.lam:.6g}",
        f"lower bound   {lower:.6g}",
        f"exact         {'-' if exact is None else f'{exact:.6g}'}",
        f"roof upper    {est.value:.6g}   ({est.trials} trials, ensembles of {est.ensemble_size})",
        f"ordering      {'ok' if ordered else 'VIOLATED'}",
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK if ordered else EXIT_CHECK_FAILED


# -- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="entbound",
        description="Lower bounds on bipartite entanglement measures from one witness expectation value.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="bounds for a state file or a measured fidelity")
    b.add_argument("state", nargs="?", help="JSON state file")
    b.add_argument("--witness", help="pure-state file or builtin tag (max-entangled:d, psi-s, dicke-4-2)")
    b.add_argument("--fidelity", type=float, help="measured <phi|rho|phi> instead of a state file")
    b.add_argument("--measures", default="all", help="comma-separated subset of eof,gme,concurrence,cren,gconcurrence")
    b.add_argument("--json", action="store_true", help="structured output")
    b.set_defaults(func=cmd_bound)

    e = sub.add_parser("examples", help="recompute the published experimental examples")
    e.add_argument("which", nargs="?", default="all", choices=[*EXAMPLES, "all"])
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_examples)

    s = sub.add_parser("scatter", help="random pure states as (lambda, measure) CSV")
    s.add_argument("--m", type=int, default=4)
    s.add_argument("--samples", type=int, default=50000)
    s.add_argument("--measure", default="eof")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_scatter)

    c = sub.add_parser("curves", help="tabulate a boundary curve or hull as CSV")
    c.add_argument("--m", type=int, default=4)
    c.add_argument("--curve", required=True, choices=sorted(sampler.CURVES))
    c.add_argument("--grid", type=int, default=201)
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_curves)

    o = sub.add_parser("oracle", help="compare a bound with exact and Monte Carlo roof values")
    o.add_argument("state")
    o.add_argument("--measure", default="concurrence")
    o.add_argument("--witness")
    o.add_argument("--trials", type=int, default=2000)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DomainError as exc:
        print(f"error: unphysical input: {exc}", file=sys.stderr)
        return EXIT_UNPHYSICAL
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
