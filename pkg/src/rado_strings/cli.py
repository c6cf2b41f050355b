"""Command line entry point; every verdict is printed as one JSON document on stdout.

Exit status: 0 when a verdict was produced (including UNSAT), 1 when a
cross-check found a disagreement, 2 on usage or parse errors, 3 when the
solver hit its state limit.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import characterizations as chz
from .coloring import color_check, load_coloring
from .equations import EquationParseError, LinearEquation, is_rado, parse_equation
from .mtsystems import (
    SIGN_POLICIES,
    SparseSequence,
    column_blocks,
    gen_sparse_sequence,
    instantiate_witness,
    max_sparsity,
    mt_enumerate,
    sparsity_constant,
)
from .solver import DEFAULT_MAX_STATES, IndeterminateError, brute_force_oracle, solve_in_class
from .strings import are_equivalent, is_reduced, reduce

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def notice(msg: str) -> None:
    print(msg, file=sys.stderr)


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {text!r}") from exc


def parse_int_list(text: str, what: str = "string") -> tuple:
    data = _json_arg(text, what)
    if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
        raise UsageError(f"{what} must be a JSON array of integers, got {text!r}")
    return tuple(data)


def parse_equation_arg(text: str) -> LinearEquation:
    """Text form ``"3x1-5x2+2x3"`` or a JSON array / ``{"coefficients": [...]}``."""
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        data = _json_arg(stripped, "equation")
        if isinstance(data, dict):
            data = data.get("coefficients")
        if not isinstance(data, list):
            raise UsageError(f"cannot read equation from {text!r}")
        try:
            return LinearEquation(tuple(data))
        except (TypeError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
    return parse_equation(stripped)


def parse_sigma_arg(text: str) -> tuple:
    sigma = parse_int_list(text, "sigma")
    if not is_reduced(sigma):
        reduced = reduce(sigma)
        notice(f"notice: sigma {list(sigma)} is not reduced; using {list(reduced)}")
        sigma = reduced
    if not sigma:
        raise UsageError("sigma must be nonempty after reduction")
    return sigma


def parse_sequence_arg(text: str) -> SparseSequence:
    data = _json_arg(text, "sequence")
    if isinstance(data, list):
        try:
            return SparseSequence(tuple(data), max_sparsity(data))
        except ValueError as exc:
            raise UsageError(f"bad sequence {text!r}: {exc}") from exc
    try:
        return SparseSequence(tuple(data["values"]), int(data["M"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad sequence {text!r}: {exc}") from exc


# ---- subcommands -----------------------------------------------------------

def cmd_reduce(args):
    emit(list(reduce(parse_int_list(args.string))))
    return EXIT_OK


def cmd_equiv(args):
    emit(are_equivalent(parse_int_list(args.s), parse_int_list(args.t)))
    return EXIT_OK


def cmd_classify(args):
    eq = parse_equation_arg(args.equation)
    rado, witness = is_rado(eq)
    out = {"coefficients": list(eq), "rado": rado, "I": list(witness) if witness else None}
    if eq.m == 3:
        out["three_var"] = chz.classify_three_var(eq).to_json()
    emit(out)
    return EXIT_OK


def cmd_solve(args):
    eq = parse_equation_arg(args.equation)
    sigma = parse_sigma_arg(args.sigma)
    try:
        verdict = solve_in_class(eq, sigma, args.injective, max_states=args.max_states)
    except IndeterminateError as exc:
        emit(exc.to_json())
        return EXIT_INDETERMINATE
    out = verdict.to_json()
    out["method"] = "general-solver"
    out["states_explored"] = verdict.states_explored
    out["frontier_peak"] = verdict.frontier_peak
    status = EXIT_OK
    if args.oracle_check:
        bound = verdict.k if verdict.sat else args.oracle_rows
        oracle = brute_force_oracle(eq, sigma, args.injective, bound)
        agrees = oracle.sat == verdict.sat and (not verdict.sat or oracle.witness == verdict.witness)
        out["oracle"] = {"status": oracle.status, "max_rows": bound, "agrees": agrees}
        if not agrees:
            status = EXIT_DISAGREE
    emit(out)
    return status


def cmd_fastpath(args):
    eq = parse_equation_arg(args.equation)
    sigma = parse_sigma_arg(args.sigma)
    try:
        verdict = chz.fastpath(eq, sigma, args.injective)
    except chz.NoFastpath as exc:
        raise UsageError(str(exc)) from exc
    emit(verdict.to_json())
    return EXIT_OK


def cmd_mt_gen(args):
    seq = gen_sparse_sequence(args.M, args.length, args.seed, args.signs, jitter=not args.no_jitter)
    emit(seq.to_json())
    return EXIT_OK


def cmd_mt_enum(args):
    sigma = parse_sigma_arg(args.sigma)
    seq = parse_sequence_arg(args.sequence)
    elems = mt_enumerate(sigma, seq, args.max_index, args.max_block_size)
    emit([e.to_json() for e in elems])
    return EXIT_OK


def cmd_mt_instantiate(args):
    eq = parse_equation_arg(args.equation)
    sigma = parse_sigma_arg(args.sigma)
    if args.witness:
        rows = _json_arg(args.witness, "witness")
        if isinstance(rows, dict):
            rows = rows.get("rows")
        rows = tuple(tuple(r) for r in rows)
    else:
        try:
            verdict = solve_in_class(eq, sigma, args.injective, max_states=args.max_states)
        except IndeterminateError as exc:
            emit(exc.to_json())
            return EXIT_INDETERMINATE
        if not verdict.sat:
            emit({"status": "unsat"})
            return EXIT_OK
        rows = verdict.witness
    M = sparsity_constant(sigma, eq)
    seq = gen_sparse_sequence(M, len(rows), args.seed, args.signs)
    try:
        y = instantiate_witness(rows, eq, sigma, seq)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cols = list(zip(*rows))
    emit({
        "status": "sat",
        "rows": [list(r) for r in rows],
        "sequence": seq.to_json(),
        "y": list(y),
        "value": eq.evaluate(y),
        "blocks": [[list(b) for b in column_blocks(sigma, c)] for c in cols],
    })
    return EXIT_OK


def cmd_color_check(args):
    eq = parse_equation_arg(args.equation)
    try:
        coloring = load_coloring(args.colors, args.N)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load coloring {args.colors!r}: {exc}") from exc
    sol = color_check(eq, coloring)
    out = {"found": sol is not None, "solution": list(sol) if sol else None}
    if sol:
        out["color"] = coloring[sol[0]]
    emit(out)
    return EXIT_OK


def cmd_cross_validate(args):
    from .crossval import run_all

    report = run_all(args.trials, args.seed)
    emit(report)
    return EXIT_DISAGREE if report["disagreements"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rado-strings",
        description="Solvability of linear equations in string classes, with JSON verdicts.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", help="canonical form of a JSON integer array")
    s.add_argument("string")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("equiv", help="are two strings equivalent")
    s.add_argument("s")
    s.add_argument("t")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("classify", help="Rado condition and three-variable class")
    s.add_argument("equation")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("solve", help="decide solvability in the class of sigma")
    s.add_argument("equation")
    s.add_argument("sigma")
    s.add_argument("--injective", action="store_true")
    s.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    s.add_argument("--oracle-check", action="store_true",
                   help="re-check with the brute-force oracle (small instances only)")
    s.add_argument("--oracle-rows", type=int, default=4,
                   help="oracle row bound used when the solver says unsat")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("fastpath", help="closed-form verdict, if one applies")
    s.add_argument("equation")
    s.add_argument("sigma")
    s.add_argument("--injective", action="store_true")
    s.set_defaults(func=cmd_fastpath)

    mt = sub.add_parser("mt", help="sparse sequences and Milliken-Taylor sums")
    mts = mt.add_subparsers(dest="mt_command", required=True)

    s = mts.add_parser("gen", help="generate an M-sparse sequence")
    s.add_argument("--M", type=int, required=True)
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--signs", choices=SIGN_POLICIES, default="positive")
    s.add_argument("--no-jitter", action="store_true")
    s.set_defaults(func=cmd_mt_gen)

    s = mts.add_parser("enum", help="enumerate a bounded piece of MT(sigma, seq)")
    s.add_argument("sigma")
    s.add_argument("sequence", help='JSON {"M":..,"values":[..]} or a plain array')
    s.add_argument("--max-index", type=int, required=True)
    s.add_argument("--max-block-size", type=int, required=True)
    s.set_defaults(func=cmd_mt_enum)

    s = mts.add_parser("instantiate", help="turn a witness into integer solutions")
    s.add_argument("equation")
    s.add_argument("sigma")
    s.add_argument("--witness", help="JSON rows; solved for when omitted")
    s.add_argument("--injective", action="store_true")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--signs", choices=SIGN_POLICIES, default="positive")
    s.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    s.set_defaults(func=cmd_mt_instantiate)

    s = sub.add_parser("color-check", help="search a coloring for a monochromatic solution")
    s.add_argument("equation")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--colors", required=True, help="FILE, random:r:seed, parity or sign")
    s.set_defaults(func=cmd_color_check)

    s = sub.add_parser("cross-validate", help="randomized fastpath/solver/oracle agreement")
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(func=cmd_cross_validate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, EquationParseError) as exc:
        notice(f"error: {exc}")
        return EXIT_USAGE
    except ValueError as exc:
        notice(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
