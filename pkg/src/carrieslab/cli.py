"""Command line harness ``carries-lab``.

Subcommands expose the exact computations (matrix, eigen, moments,
simulate, shuffle, digits) and the verification suites (verify).  Output
is JSON by default or CSV with ``--format csv``; rationals are rendered as
``num/den`` strings, or as fixed-point decimals under ``--float --digits
k``.  Global flags (``--format``, ``--out``, ``--seed``, ``--float``,
``--digits``) go before the subcommand.  Exit codes: 0 success, 1 internal
or verification failure, 2 invalid parameters.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from fractions import Fraction

from .moments import (
    covariance_conditional,
    has_quadratic_eigenfunction,
    mean_conditional,
    moments_oracle,
    stationary_moments,
    variance_conditional,
)
from .process import DEFAULT_SEED, digit_expansion, digit_value, make_process, simulate_trace
from .shuffle import sample_sequence
from .spectral import eigen_system, transition_matrix
from .verify import SUITES, run_suite

SCHEMA_VERSION = 1


def _fraction_flag(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected NUM or NUM/DEN, got {text!r}") from exc


def _sign_flag(text: str) -> str:
    aliases = {"+": "+", "plus": "+", "-": "-", "minus": "-"}
    if text not in aliases:
        raise argparse.ArgumentTypeError(f"expected + or -, got {text!r}")
    return aliases[text]


def _seed_flag(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _digits_flag(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 60:
        raise argparse.ArgumentTypeError("digits must lie in 1..60")
    return value


def _decimal_string(value: Fraction, digits: int) -> str:
    """Fixed-point rendering with exact decimal rounding (no binary floats)."""
    rounded = round(value, digits)
    scaled = int(rounded * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, part = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{part:0{digits}d}"


def _render(value: Fraction, args) -> str:
    if args.as_float:
        return _decimal_string(Fraction(value), args.digits)
    return str(value)


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    if args.global_seed is not None:
        return args.global_seed
    return DEFAULT_SEED


def _add_chain_flags(parser: argparse.ArgumentParser, with_d: bool = False) -> None:
    parser.add_argument("--sign", type=_sign_flag, required=True, help="+ or - (or plus/minus)")
    parser.add_argument("--b", type=int, required=True, help="base magnitude, >= 2")
    parser.add_argument("--n", type=int, required=True, help="number of summands / cards")
    parser.add_argument("--p", type=_fraction_flag, required=True, help="parameter, NUM[/DEN]")
    if with_d:
        parser.add_argument("--d", type=int, default=None, help="digit set offset, 1-b <= d <= 0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carries-lab",
        description="Exact carries chains, their spectra, and shuffle bijections.",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", default=None, help="write output to this path instead of stdout")
    parser.add_argument("--seed", type=_seed_flag, default=None, dest="global_seed",
                        help="default seed for the seeded subcommands")
    parser.add_argument("--float", action="store_true", dest="as_float",
                        help="render rationals as fixed-point decimals")
    parser.add_argument("--digits", type=_digits_flag, default=12,
                        help="decimal places used with --float (default 12)")
    sub = parser.add_subparsers(dest="command", required=True)

    matrix = sub.add_parser("matrix", help="exact transition matrix")
    _add_chain_flags(matrix, with_d=True)

    eigen = sub.add_parser("eigen", help="eigenvalues and both eigenvector matrices")
    _add_chain_flags(eigen)
    eigen.add_argument("--check", action="store_true", help="verify R L = I and P = R D L")

    moments = sub.add_parser("moments", help="moments of the chain (closed form or oracle)")
    _add_chain_flags(moments)
    moments.add_argument("--r", type=int, default=1, help="step count (lag in stationary mode)")
    moments.add_argument("--s", type=int, default=0, help="first time for the covariance")
    group = moments.add_mutually_exclusive_group()
    group.add_argument("--i", type=int, default=0, help="start state")
    group.add_argument("--stationary", action="store_true", help="stationary moments instead")

    simulate = sub.add_parser("simulate", help="run the chain on random digit columns")
    _add_chain_flags(simulate)
    simulate.add_argument("--N", type=int, required=True, help="number of steps")
    simulate.add_argument("--seed", type=_seed_flag, default=None)

    shuffle = sub.add_parser("shuffle", help="compose random shuffles and record descents")
    shuffle.add_argument("--sign", type=_sign_flag, default="+",
                         help="+ plain composition, - color-negated even factors")
    shuffle.add_argument("--b", type=int, required=True)
    shuffle.add_argument("--n", type=int, required=True)
    shuffle.add_argument("--p", type=int, required=True, help="number of colors (integer)")
    shuffle.add_argument("--N", type=int, required=True, help="number of shuffles")
    shuffle.add_argument("--seed", type=_seed_flag, default=None)

    digits = sub.add_parser("digits", help="digit expansion over {d..d+b-1}")
    digits.add_argument("--x", type=int, required=True, help="nonnegative integer to expand")
    digits.add_argument("--sign", type=_sign_flag, required=True)
    digits.add_argument("--b", type=int, required=True)
    digits.add_argument("--d", type=int, default=0)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--samples", type=int, default=None,
                        help="sample count for the sampled tiers (bijection suites)")
    verify.add_argument("--seed", type=_seed_flag, default=None)
    verify.add_argument("--b", type=int, default=None, help="base bound, or case base")
    verify.add_argument("--n", type=int, default=None, help="summand bound, or case size")
    verify.add_argument("--p", type=int, default=None, help="parameter bound, or case p")
    verify.add_argument("--N", type=int, default=None, help="case step count (bijection suites)")
    verify.add_argument("--r", type=int, default=None, help="power bound (moments)")
    verify.add_argument("--s", type=int, default=None, help="lag bound (moments)")
    verify.add_argument("--cutoff", type=int, default=None, help="index cutoff (gessel)")

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    return json.dumps(obj, indent=2)


def _params_obj(params) -> dict:
    obj = {"sign": params.sign, "b": params.b, "n": params.n, "p": str(params.p)}
    if params.d is not None:
        obj["d"] = params.d
    return obj


def cmd_matrix(args) -> str:
    params = make_process(args.sign, args.b, args.n, args.p, args.d)
    matrix = transition_matrix(params)
    rows = [[_render(x, args) for x in row] for row in matrix.rows]
    if args.format == "csv":
        lines = [f"dim,{matrix.dim}"] + [",".join(row) for row in rows]
        return "\n".join(lines) + "\n"
    return _json(rows)


def cmd_eigen(args) -> str:
    params = make_process(args.sign, args.b, args.n, args.p)
    system = eigen_system(params)  # raises RuntimeError on inconsistency
    if args.check:
        return "R·L=I: ok, P=RDL: ok"
    values = [_render(v, args) for v in system.eigenvalues]
    left = [[_render(x, args) for x in row] for row in system.left.rows]
    right = [[_render(x, args) for x in row] for row in system.right.rows]
    if args.format == "csv":
        lines = ["eigenvalues," + ",".join(values)]
        lines += ["left", f"dim,{system.left.dim}"] + [",".join(row) for row in left]
        lines += ["right", f"dim,{system.right.dim}"] + [",".join(row) for row in right]
        return "\n".join(lines) + "\n"
    return _json(
        {
            "schema": SCHEMA_VERSION,
            "params": _params_obj(params),
            "eigenvalues": values,
            "left": {"dim": system.left.dim, "rows": left},
            "right": {"dim": system.right.dim, "rows": right},
        }
    )


def cmd_moments(args) -> str:
    params = make_process(args.sign, args.b, args.n, args.p)
    if args.r < 0 or args.s < 0:
        raise ValueError("step counts must be nonnegative")
    closed = has_quadratic_eigenfunction(params)
    if args.stationary:
        if closed:
            mean, cov = stationary_moments(params, args.r)
            _, var = stationary_moments(params, 0)
        else:  # n = 1: no closed second moments; fall back to matrix powers
            oracle = moments_oracle(params, args.r, start="stationary")
            mean, var, cov = oracle.mean, oracle.variance, oracle.covariance
        obj = {
            "schema": SCHEMA_VERSION,
            "params": _params_obj(params),
            "start": "stationary",
            "r": args.r,
            "mean": _render(mean, args),
            "variance": _render(var, args),
            "cov": _render(cov, args),
        }
    else:
        if not 0 <= args.i < params.state_count:
            raise ValueError(f"start state must lie in 0..{params.state_count - 1}")
        if closed:
            mean = mean_conditional(params, args.r, args.i)
            var = variance_conditional(params, args.r, args.i)
            cov = covariance_conditional(params, args.s, args.r, args.i)
        else:
            oracle = moments_oracle(params, args.r, args.s, args.i)
            mean, var, cov = oracle.mean, oracle.variance, oracle.covariance
        obj = {
            "schema": SCHEMA_VERSION,
            "params": _params_obj(params),
            "start": args.i,
            "r": args.r,
            "s": args.s,
            "mean": _render(mean, args),
            "variance": _render(var, args),
            "cov": _render(cov, args),
        }
    if args.format == "csv":
        lines = [f"{key},{value}" for key, value in obj.items() if key != "params"]
        return "\n".join(lines) + "\n"
    return _json(obj)


def cmd_simulate(args) -> str:
    params = make_process(args.sign, args.b, args.n, args.p)
    if args.N < 0:
        raise ValueError("step count must be nonnegative")
    seed = _resolve_seed(args)
    trace = simulate_trace(params, args.N, seed=seed)
    if args.format == "csv":
        lines = ["step,kappa,remainder,digits"]
        for step in range(trace.steps):
            digits = " ".join(str(x) for x in trace.summand_digits[step])
            lines.append(
                f"{step + 1},{trace.kappas[step + 1]},{trace.remainders[step]},{digits}"
            )
        return "\n".join(lines) + "\n"
    return _json(
        {
            "schema": SCHEMA_VERSION,
            "params": _params_obj(params),
            "seed": seed,
            "kappas": list(trace.kappas),
            "remainders": list(trace.remainders),
            "summand_digits": [list(col) for col in trace.summand_digits],
        }
    )


def cmd_shuffle(args) -> str:
    if args.p < 1:
        raise ValueError("the shuffle needs a positive integer p")
    if args.N < 0:
        raise ValueError("shuffle count must be nonnegative")
    congruent = (args.b - 1) % args.p if args.sign == "+" else (args.b + 1) % args.p
    if congruent != 0:
        want = "1" if args.sign == "+" else "-1"
        raise ValueError(f"sign {args.sign} needs b = {want} mod p")
    seed = _resolve_seed(args)
    trace = sample_sequence(args.b, args.n, args.p, args.N, seed=seed, sign=args.sign)
    if args.format == "csv":
        lines = ["step,descent,word,element"]
        for step in range(len(trace.words)):
            word = " ".join(str(x) for x in trace.words[step])
            lines.append(
                f"{step + 1},{trace.descents[step]},{word},{trace.elements[step].to_text()}"
            )
        return "\n".join(lines) + "\n"
    return _json(
        {
            "schema": SCHEMA_VERSION,
            "b": args.b,
            "n": args.n,
            "p": args.p,
            "sign": args.sign,
            "seed": seed,
            "words": [list(w) for w in trace.words],
            "elements": [e.to_pairs() for e in trace.elements],
            "descents": list(trace.descents),
        }
    )


def cmd_digits(args) -> str:
    digits = digit_expansion(args.x, args.sign, args.b, args.d)
    check = digit_value(digits, args.sign, args.b)
    obj = {
        "schema": SCHEMA_VERSION,
        "x": args.x,
        "sign": args.sign,
        "b": args.b,
        "d": args.d,
        "digits": list(digits),
        "value": check,
    }
    if args.format == "csv":
        lines = [f"{key},{value}" for key, value in obj.items() if key != "digits"]
        lines.append("digits," + " ".join(str(a) for a in digits))
        return "\n".join(lines) + "\n"
    return _json(obj)


def _verify_options(args) -> dict:
    """Map verify flags onto the chosen suite's keyword arguments."""
    allowed = inspect.signature(SUITES[args.suite]).parameters
    options: dict = {}
    unused: list[str] = []
    provided = {"b": args.b, "n": args.n, "p": args.p, "N": args.N,
                "r": args.r, "s": args.s}
    if "cases" in allowed:
        names = ("b", "n", "p", "N") if "mc_case" in allowed else ("b", "n", "p")
        given = {name: provided.pop(name) for name in names}
        if any(value is not None for value in given.values()):
            if any(value is None for value in given.values()):
                flags = " ".join("--" + name for name in names)
                raise ValueError(f"overriding the {args.suite} case list needs all of {flags}")
            options["cases"] = (tuple(given[name] for name in names),)
            if "mc_case" in allowed:
                options["mc_case"] = None  # a single explicit case, no sampled tier
    bounds = {"b": "b_max", "n": "n_max", "p": "p_max", "r": "r_max", "s": "s_max"}
    for flag, value in provided.items():
        if value is None:
            continue
        key = bounds.get(flag)
        if key in allowed:
            options[key] = value
        else:
            unused.append("--" + flag)
    if args.cutoff is not None:
        if "cutoff" in allowed:
            options["cutoff"] = (args.cutoff, args.cutoff)
        else:
            unused.append("--cutoff")
    if args.samples is not None:
        if "samples" in allowed:
            options["samples"] = args.samples
        else:
            unused.append("--samples")
    if "seed" in allowed:
        seed = args.seed if args.seed is not None else args.global_seed
        if seed is not None:
            options["seed"] = seed
    elif args.seed is not None:
        unused.append("--seed")
    if unused:
        raise ValueError(f"suite {args.suite} does not use {', '.join(sorted(set(unused)))}")
    return options


def _reproduce_command(suite: str, options: dict) -> str:
    """The exact invocation that reruns a failing suite."""
    signature = inspect.signature(SUITES[suite]).parameters
    bits = [f"carries-lab verify {suite}"]
    if "cases" in options:
        for flag, value in zip(("--b", "--n", "--p", "--N"), options["cases"][0]):
            bits.append(f"{flag} {value}")
    for key, flag in (("b_max", "--b"), ("n_max", "--n"), ("p_max", "--p"),
                      ("r_max", "--r"), ("s_max", "--s")):
        if key in options:
            bits.append(f"{flag} {options[key]}")
    if "cutoff" in options:
        bits.append(f"--cutoff {options['cutoff'][0]}")
    for key in ("samples", "seed"):
        if key in signature:
            bits.append(f"--{key} {options.get(key, signature[key].default)}")
    return " ".join(bits)


def cmd_verify(args) -> tuple[str, bool]:
    options = _verify_options(args)
    report = run_suite(args.suite, **options)
    if not report.passed:
        print(f"reproduce: {_reproduce_command(args.suite, options)}", file=sys.stderr)
    if args.format == "csv":
        lines = ["case,ok,detail"]
        for case in sorted(report.cases, key=lambda c: c.key):
            detail = case.detail.replace(",", ";")
            lines.append(f"{case.key},{int(case.ok)},{detail}")
        lines.append(f"passed,{int(report.passed)},")
        return "\n".join(lines) + "\n", report.passed
    return _json(report.to_json_obj()), report.passed


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "matrix": cmd_matrix,
        "eigen": cmd_eigen,
        "moments": cmd_moments,
        "simulate": cmd_simulate,
        "shuffle": cmd_shuffle,
        "digits": cmd_digits,
    }
    try:
        if args.command == "verify":
            text, passed = cmd_verify(args)
            _emit(text, args.out)
            return 0 if passed else 1
        text = handlers[args.command](args)
        _emit(text, args.out)
        return 0
    except ValueError as exc:
        print(f"carries-lab: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, ArithmeticError) as exc:
        print(f"carries-lab: internal consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
