"""Command-line entry point.

    hamburger eval --fn chi --s 0.5,0
    hamburger verify --suite theta --seed 1 [--json report.json]
    hamburger decompose --in measure.json --window 30 [--out dec.json]
    hamburger fourier --in dec.json [--out dec_out.json]
    hamburger table --fn zeta --sigma-range 2:10:0.5 [--csv out.csv]
    hamburger fit --in samples.csv --k-range -3:3 [--out fit.json]

Exit codes: 0 success, 1 failed verification, 2 usage or input error,
3 numerical failure.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from typing import Callable, Sequence

import numpy as np

from . import serialize
from .dirichlet import recover_shift_coefficients, zeta_shift_g
from .errors import NumericalError
from .measures import decompose_prony, fourier_measure
from .specfun import chi, hurwitz_zeta, lerch_sum, periodic_zeta, riemann_zeta
from .tde import tde_f, tde_g
from .verify import SUITES, run_suite

FUNCTIONS = ("chi", "zeta", "hurwitz", "periodic", "lerch", "tde-f", "tde-g", "gk")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_complex(text: str) -> complex:
    """'RE,IM' or 'RE' to a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")


def format_complex(z: complex) -> str:
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real:.17g}{sign}{abs(z.imag):.17g}i"


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--fn {args.fn} needs " + ", ".join("--" + n for n in missing))


def evaluator(args) -> Callable[[complex], complex]:
    """The function of s selected by --fn and its parameters."""
    fn = args.fn
    if fn == "chi":
        return chi
    if fn == "zeta":
        return riemann_zeta
    if fn == "hurwitz":
        _need(args, "a")
        return lambda s: hurwitz_zeta(s, args.a)
    if fn == "periodic":
        _need(args, "e")
        return lambda s: periodic_zeta(args.e, s)
    if fn == "lerch":
        _need(args, "d", "e")
        return lambda s: lerch_sum(args.d, args.e, s)
    if fn == "tde-f":
        _need(args, "d", "e")
        return lambda s: tde_f(args.d, args.e, s)
    if fn == "tde-g":
        _need(args, "d", "e")
        return lambda s: tde_g(args.d, args.e, s)
    _need(args, "k")
    return lambda s: zeta_shift_g(args.k, s)


def _add_function_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fn", required=True, choices=FUNCTIONS)
    p.add_argument("--a", type=float, help="Hurwitz shift in (0, 1]")
    p.add_argument("--d", type=float, help="residue class / translation")
    p.add_argument("--e", type=float, help="twist")
    p.add_argument("--k", type=int, help="index of g_k")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamburger", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a function at one point")
    _add_function_flags(p)
    p.add_argument("--s", required=True, type=parse_complex, help="RE,IM")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", help="also write the report as JSON")

    p = sub.add_parser("decompose", help="decompose a measure into T_{d,e} terms")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--window", type=float, required=True)
    p.add_argument("--out")

    p = sub.add_parser("fourier", help="Fourier transform of a decomposition")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")

    p = sub.add_parser("table", help="CSV of a function along the real axis")
    _add_function_flags(p)
    p.add_argument("--sigma-range", required=True, help="A:B:STEP, B inclusive")
    p.add_argument("--csv")

    p = sub.add_parser("fit", help="fit sigma,re,im samples in the g_k basis")
    p.add_argument("--in", dest="input", required=True, help="CSV with header sigma,re,im")
    p.add_argument("--k-range", required=True, help="KMIN:KMAX, both inclusive")
    p.add_argument("--out")
    return parser


def _join_values(argv: Sequence[str]) -> list[str]:
    # '--s -1,2' would read '-1,2' as an option; glue such values to the flag.
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--s", "--sigma-range", "--k-range"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _sigma_grid(text: str) -> np.ndarray:
    try:
        a, b, step = (float(v) for v in text.split(":"))
    except ValueError:
        raise UsageError(f"--sigma-range expects A:B:STEP, got {text!r}") from None
    if step <= 0 or b < a:
        raise UsageError("--sigma-range needs STEP > 0 and B >= A")
    n = int(np.floor((b - a) / step + 1e-9)) + 1
    return a + step * np.arange(n)


def _k_range(text: str) -> tuple[int, int]:
    try:
        k_min, k_max = (int(v) for v in text.split(":"))
    except ValueError:
        raise UsageError(f"--k-range expects KMIN:KMAX, got {text!r}") from None
    if k_max < k_min:
        raise UsageError("--k-range needs KMAX >= KMIN")
    return k_min, k_max


def _read_samples(path: str) -> list[tuple[float, complex]]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [(float(r["sigma"]), complex(float(r["re"]), float(r["im"]))) for r in rows]


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _run(args) -> int:
    if args.command == "eval":
        print(format_complex(evaluator(args)(args.s)))
        return 0
    if args.command == "verify":
        report = run_suite(args.suite, args.seed)
        print(report.table())
        if args.json:
            _emit(report.to_json(), args.json)
        return 0 if report.passed else 1
    if args.command == "decompose":
        measure = serialize.measure_from_dict(serialize.read_json(args.input))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            dec = decompose_prony(measure, args.window)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        _emit(serialize.dumps(serialize.decomposition_to_dict(dec)), args.out)
        return 0
    if args.command == "fourier":
        dec = serialize.decomposition_from_dict(serialize.read_json(args.input))
        _emit(serialize.dumps(serialize.decomposition_to_dict(fourier_measure(dec))), args.out)
        return 0
    if args.command == "fit":
        k_min, k_max = _k_range(args.k_range)
        fit = recover_shift_coefficients(_read_samples(args.input), k_min, k_max, full_output=True)
        coeffs = fit.combination.coefficients
        out = {"coefficients": [{"k": k, "re": coeffs[k].real, "im": coeffs[k].imag} for k in sorted(coeffs)],
               "residual": fit.residual, "relative_residual": fit.relative_residual,
               "condition": fit.condition}
        _emit(serialize.dumps(out), args.out)
        return 0
    fn = evaluator(args)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["sigma", "re", "im"])
    for sigma in _sigma_grid(args.sigma_range):
        value = fn(complex(sigma))
        writer.writerow([repr(float(sigma)), repr(value.real), repr(value.imag)])
    _emit(buf.getvalue().rstrip("\n"), args.csv)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_join_values(argv))
        return _run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
