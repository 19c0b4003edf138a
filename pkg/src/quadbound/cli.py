"""Command-line front end: every experiment as a reproducible subcommand.

Identical invocations produce byte-identical output; results go to stdout
or to ``--output PATH``.  Exit codes: 0 success, 1 computation or domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, bounds, delay_ode, specfun, transforms
from .errors import QuadboundError

_FAMILIES = {
    "sinc": transforms.SINC,
    "cin": transforms.CIN_KERNEL,
    "cin2": transforms.CIN_OVER_T2,
    "ein": transforms.EIN_KERNEL,
    "shi": transforms.SINH_OVER_T,
    "atan": transforms.ARCTAN_OVER_T,
    "tan": transforms.TAN_EVEN,
}

_PARITY_NOTE = {"even": "k even", "odd": "k odd", "always": "all k"}


def _g(v: float) -> str:
    # Shortest representation that round-trips; CSV output instead uses the
    # fixed 17-significant-digit form required of it.
    return repr(float(v))


def _cmd_bound(args) -> str:
    family = _FAMILIES[args.family]
    result = bounds.family_bound(family, args.k, args.t)
    lines = [_g(result.value)]
    if result.sharp_at is not None:
        lines.append(f"sharp at t={result.sharp_at:g} ({_PARITY_NOTE[result.parity]})")
    return "\n".join(lines) + "\n"


def _cmd_deriv(args) -> str:
    family = _FAMILIES[args.family]
    spec = transforms.TaylorKernelSpec.of(family)
    value = transforms.transform_derivative(spec, args.k, args.t)
    lines = [_g(value)]
    if args.check == "fd":
        fd = transforms.finite_difference_derivative(
            lambda u: transforms.ratio_value(spec, u), args.k, args.t
        )
        lines.append(f"fd={_g(fd)} |diff|={_g(abs(value - fd))}")
    elif args.check == "closed":
        if family is transforms.SINC and args.k == 4:
            closed = transforms.d4_sinc_product_rule(args.t)
        elif family is transforms.CIN_OVER_T2 and args.k == 4:
            closed = transforms.d4_cin_over_t2_product_rule(args.t)
        else:
            raise QuadboundError("closed-form check exists only for sinc k=4 and cin2 k=4")
        lines.append(f"closed={_g(closed)} |diff|={_g(abs(value - closed))}")
    return "\n".join(lines) + "\n"


def _cmd_specfun(args) -> str:
    return _g(specfun.eval_special(args.fn, args.x)) + "\n"


def _cmd_table1(args) -> str:
    reports = analysis.table1()
    if args.format == "csv":
        return analysis.reports_to_csv(reports)
    by_cell = {(r.x, r.n): r for r in reports}
    lines = ["   x\\n      10     100    1000"]
    for x in analysis.TABLE_X:
        row = [f"{x:5.1f}"]
        for n in analysis.TABLE_N:
            r = by_cell[(x, n)]
            cell = "undef" if r.r_n is None else f"{analysis.round_half_away(r.r_n):.2f}"
            row.append(f"{cell:>8}")
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def _cmd_scan(args) -> str:
    return analysis.reports_to_csv(analysis.scan_reports(args.n, args.xmin, args.xmax, args.step))


def _cmd_zero(args) -> str:
    e_in_lo = analysis.simpson_error(args.lo, args.n)
    e_in_hi = analysis.simpson_error(args.hi, args.n)
    z = analysis.locate_error_zero(args.n, args.lo, args.hi, args.tol)
    return (
        f"input=[{_g(args.lo)},{_g(args.hi)}]\n"
        f"e_input_lo={_g(e_in_lo)}\n"
        f"e_input_hi={_g(e_in_hi)}\n"
        f"bracket=[{_g(z.lo)},{_g(z.hi)}]\n"
        f"width={_g(z.hi - z.lo)}\n"
        f"e_lo={_g(z.e_lo)}\n"
        f"e_hi={_g(z.e_hi)}\n"
    )


def _cmd_frullani(args) -> str:
    result = analysis.frullani_check(analysis.FrullaniSpec(args.alpha, args.beta, args.T))
    return (
        f"truncated={_g(result.truncated)}\n"
        f"target={_g(result.target)}\n"
        f"tail_bound={_g(result.tail_bound)}\n"
        f"abs_diff={_g(abs(result.truncated - result.target))}\n"
    )


def _cmd_lambda(args) -> str:
    grid = delay_ode.build_lambda_grid(args.kappa, args.vmax, 2.0 ** (-args.step_exp))
    if args.laplace_t is None:
        return delay_ode.grid_to_csv(grid)
    check = delay_ode.laplace_check(grid, args.laplace_t)
    return (
        f"lhs={_g(check.lhs)}\n"
        f"rhs={_g(check.rhs)}\n"
        f"defect={_g(check.defect)}\n"
        f"min_lambda={_g(float(grid.values.min()))}\n"
        f"ode_residual={_g(delay_ode.delay_residual(grid))}\n"
    )


def _cmd_qint(args) -> str:
    spec = delay_ode.QIntSpec(kappa=args.kappa, u=args.u, a=args.a, b=args.b)
    grid = delay_ode.build_lambda_grid(args.kappa, 40, 2.0**-10)
    value, bound = delay_ode.qint_eval(spec, args.n, grid)
    f4a = delay_ode.q_derivative(spec, 4, spec.a, grid) if spec.a < spec.b else 0.0
    return f"value={_g(value)}\nbound={_g(bound)}\nf4_at_a={_g(f4a)}\n"


def _even_int(text: str) -> int:
    value = int(text)
    if value < 2 or value % 2:
        raise argparse.ArgumentTypeError(f"expected an even integer >= 2, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadbound",
        description="Derivative bounds from integral transforms and the Simpson-error experiments built on them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=handler)
        p.add_argument("--output", help="write the result to this file instead of stdout")
        return p

    p = add("bound", _cmd_bound, "closed-form derivative bound for a kernel family")
    p.add_argument("--family", required=True, choices=sorted(_FAMILIES))
    p.add_argument("--k", required=True, type=int, help="derivative order (pair count for tan)")
    p.add_argument("--t", type=float, default=0.0)

    p = add("deriv", _cmd_deriv, "transform-route derivative value")
    p.add_argument("--family", required=True, choices=sorted(_FAMILIES))
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--t", required=True, type=float)
    p.add_argument("--check", choices=("fd", "closed"))

    p = add("specfun", _cmd_specfun, "evaluate a special function")
    p.add_argument("--fn", required=True, choices=[f.value for f in specfun.SpecialFn])
    p.add_argument("--x", required=True, type=float)

    p = add("table1", _cmd_table1, "the 30-cell bound/error ratio table")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = add("scan", _cmd_scan, "ratio scan over an x range")
    p.add_argument("--n", required=True, type=_even_int)
    p.add_argument("--xmin", required=True, type=float)
    p.add_argument("--xmax", required=True, type=float)
    p.add_argument("--step", required=True, type=float)
    p.add_argument("--format", choices=("csv",), default="csv")

    p = add("zero", _cmd_zero, "bisect a sign change of the actual error")
    p.add_argument("--n", required=True, type=_even_int)
    p.add_argument("--lo", required=True, type=float)
    p.add_argument("--hi", required=True, type=float)
    p.add_argument("--tol", type=float, default=1e-6)

    p = add("frullani", _cmd_frullani, "truncated Frullani-type identity check")
    p.add_argument("--alpha", required=True, type=float)
    p.add_argument("--beta", required=True, type=float)
    p.add_argument("--T", required=True, type=float)

    p = add("lambda", _cmd_lambda, "delay-ODE grid (CSV) or its Laplace check")
    p.add_argument("--kappa", required=True, type=float)
    p.add_argument("--vmax", required=True, type=int)
    p.add_argument("--step-exp", type=int, default=10, dest="step_exp")
    p.add_argument("--laplace-t", type=float, default=None, dest="laplace_t")

    p = add("qint", _cmd_qint, "certified Simpson evaluation of the sieve integral")
    p.add_argument("--kappa", required=True, type=float)
    p.add_argument("--u", required=True, type=float)
    p.add_argument("--a", required=True, type=float)
    p.add_argument("--b", required=True, type=float)
    p.add_argument("--n", required=True, type=_even_int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        text = args.func(args)
    except QuadboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
