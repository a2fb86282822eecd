"""Command-line front end; every subcommand prints one JSON report."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .exactmath import PoleError, format_rational, parse_rational
from .feulerian import (
    EulerianSpec,
    classify_zeros,
    hatw_direct,
    hatw_from_poly,
    hatw_recursive,
    m_eulerian,
    quadratic_region,
    tp_minor_check,
)
from .jacobipineiro import JP_VARIANTS, JPParams, jp_polynomial, jp_zero_location, narayana_as_jp
from .millerparis import GuardError, MPParams, compare_first_mp, compare_second_mp, gasper_sides
from .narayana import (
    NarayanaParams,
    all_routes,
    ballot_path_oracle,
    catalan_multidim,
    narayana_explicit,
    narayana_sulanke,
    narayana_via_feulerian,
    negative_zero_check,
    palindrome_check,
    reconstruct_bernstein,
    VARIANTS,
)
from .polyalgebra import Poly, sturm_zone_counts
from . import suite

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class InputError(ValueError):
    pass


@dataclass
class Report:
    command: str
    inputs: dict
    outputs: Any = None
    status: str = "PASS"
    witness: Any = None

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "status": self.status,
            "witness": self.witness,
        }

    @property
    def exit_code(self) -> int:
        return {"PASS": EXIT_OK, "FAIL": EXIT_FAIL}.get(self.status, EXIT_ERROR)


# argument parsing


def rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from exc


def rational_list_arg(text: str) -> list[Fraction]:
    if not text.strip():
        return []
    return [rational_arg(part.strip()) for part in text.split(",")]


def int_list_arg(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}") from exc


def blocks_arg(text: str) -> list[tuple[Fraction, int]]:
    """``"f:m,f:m"`` pairs; an empty string means no blocks."""
    out = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        try:
            f, m = part.split(":")
            out.append((rational_arg(f), int(m)))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"malformed block {part!r}, expected f:m") from exc
    return out


def range_arg(text: str) -> tuple[Fraction, Fraction]:
    try:
        lo, hi = text.split(":")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}, expected lo:hi") from exc
    return rational_arg(lo), rational_arg(hi)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _fmt(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    if isinstance(value, dict):
        return {k: _fmt(v) for k, v in value.items()}
    return value


def _poly_out(p: Poly) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def _zones(p: Poly) -> dict | None:
    return sturm_zone_counts(p).to_json() if p.degree > 0 else None


# subcommands


def cmd_hatw(args) -> Report:
    inputs = {"a": args.a, "blocks": args.blocks, "poly": args.poly, "normalize": args.normalize}
    if args.poly is not None:
        p = hatw_from_poly(args.a, Poly(args.poly))
        return Report("hatw", inputs, {"coeffs": _poly_out(p), "degree": p.degree, "route": "series"})
    spec = EulerianSpec(args.a, tuple(args.blocks))
    direct = hatw_direct(spec, normalize=args.normalize)
    recursive = hatw_recursive(spec, normalize=args.normalize)
    series = hatw_from_poly(spec.a, Poly.constant(1) if not spec.blocks else _f_poly(spec, args.normalize))
    out = {
        "coeffs": _poly_out(direct),
        "degree": direct.degree,
        "routes_agree": direct == recursive == series,
    }
    if direct == recursive == series:
        return Report("hatw", inputs, out)
    return Report("hatw", inputs, out, "FAIL", {"recursive": _poly_out(recursive), "series": _poly_out(series)})


def _f_poly(spec: EulerianSpec, normalize: bool) -> Poly:
    p = Poly.constant(1)
    for f, m in spec.blocks:
        p = p * Poly.rising(f, m)
    return p / spec.normalization if normalize else p


def cmd_classify(args) -> Report:
    spec = EulerianSpec(args.a, tuple(args.blocks))
    cls = classify_zeros(spec)
    out = {"coeffs": _poly_out(hatw_direct(spec)), **cls.to_json()}
    inputs = {"a": args.a, "blocks": args.blocks}
    if cls.violated:
        return Report("classify", inputs, out, "FAIL", {"violated": cls.violated, "spec": spec.to_json()})
    return Report("classify", inputs, out)


def cmd_tp_check(args) -> Report:
    if args.seq is not None:
        seq = args.seq
    elif args.poly is not None:
        f = Poly(args.poly)
        seq = [f(k) for k in range(args.window)]
    else:
        raise InputError("give --seq or --poly")
    ok, w = tp_minor_check(seq, max_order=args.max_order, window=args.window)
    inputs = {"seq": seq, "max_order": args.max_order, "window": args.window}
    out = {"totally_positive_window": ok}
    if ok:
        return Report("tp-check", inputs, out)
    witness = {"rows": list(w.rows), "cols": list(w.cols), "value": format_rational(w.value)}
    return Report("tp-check", inputs, out, "FAIL", witness)


def _grid(lo: Fraction, hi: Fraction, count: int) -> list[Fraction]:
    if count < 1:
        raise InputError("grid size must be positive")
    if count == 1:
        return [lo]
    return [lo + (hi - lo) * Fraction(k, count - 1) for k in range(count)]


def cmd_quad_region(args) -> Report:
    if args.a <= 0:
        raise InputError("quadratic criterion needs a > 0")
    bs = _grid(*args.b_range, args.grid)
    cs = _grid(*args.c_range, args.grid)
    cells = quadratic_region(args.a, bs, cs)
    inputs = {"a": args.a, "grid": args.grid, "b_range": list(args.b_range), "c_range": list(args.c_range)}
    out = [{"b": format_rational(c["b"]), "c": format_rational(c["c"]), "inside": c["inside"]} for c in cells]
    bad = next((c for c in cells if c["inside"] != c["sturm"]), None)
    if bad is None:
        return Report("quad-region", inputs, out)
    return Report("quad-region", inputs, out, "FAIL", _fmt(bad))


def cmd_m_eulerian(args) -> Report:
    if args.m < 1 or args.n < 0:
        raise InputError("need m >= 1 and n >= 0")
    p = m_eulerian(args.m, args.n)
    z = sturm_zone_counts(p) if p.degree > 0 else None
    out = {"coeffs": _poly_out(p), "degree": p.degree, "zones": z.to_json() if z else None}
    inputs = {"m": args.m, "n": args.n}
    if z is None or z.neg == p.degree:
        return Report("m-eulerian", inputs, out)
    return Report("m-eulerian", inputs, out, "FAIL", {"zones": z.to_json()})


def cmd_mp_verify(args) -> Report:
    nu = [f for f, _ in args.blocks]
    om = [m for _, m in args.blocks]
    params = MPParams(args.delta, args.epsilon, args.rho, nu, om)
    cmp = compare_first_mp(params, args.order) if args.kind == "first" else compare_second_mp(params, args.order)
    inputs = {
        "kind": args.kind,
        "delta": args.delta,
        "epsilon": args.epsilon,
        "rho": args.rho,
        "blocks": args.blocks,
        "order": args.order if args.order is not None else 2 * params.omega + 6,
    }
    out = {"identity_holds": cmp.ok}
    if cmp.ok:
        return Report("mp-verify", inputs, out)
    witness = {"coefficient": cmp.mismatch, "lhs": format_rational(cmp.lhs), "rhs": format_rational(cmp.rhs)}
    return Report("mp-verify", inputs, out, "FAIL", witness)


def cmd_gasper_check(args) -> Report:
    f = [x for x, _ in args.blocks]
    m = [k for _, k in args.blocks]
    left, right = gasper_sides(args.n, args.b, args.c, f, m)
    inputs = {"n": args.n, "b": args.b, "c": args.c, "blocks": args.blocks}
    out = {"left": format_rational(left), "right": format_rational(right)}
    if left == right:
        return Report("gasper-check", inputs, out)
    return Report("gasper-check", inputs, out, "FAIL", out)


def _narayana_route(d: int, m: int, route: str) -> Poly:
    if route == "sulanke":
        return narayana_sulanke(d, m)
    if route == "feulerian":
        return narayana_via_feulerian(d, m)
    if route == "explicit":
        return narayana_explicit(d, m)
    if route == "oracle":
        return ballot_path_oracle(d, m)
    if route == "bernstein":
        polys = {v: reconstruct_bernstein(d, m, v) for v in VARIANTS}
        first = polys[VARIANTS[0]]
        if any(p != first for p in polys.values()):
            raise ArithmeticError("Bernstein reconstructions disagree")
        return first
    raise InputError(f"unknown route {route!r}")


def _narayana_summary(d: int, m: int, p: Poly) -> dict:
    return {
        "coeffs": _poly_out(p),
        "catalan": format_rational(catalan_multidim(d, m)),
        "palindromic": p.reversed() == p and p.degree == NarayanaParams(d, m).K,
        "zeros": _zones(p),
    }


def cmd_narayana(args) -> Report:
    d, m = args.d, args.m
    NarayanaParams(d, m)
    inputs = {"d": d, "m": m, "route": args.route}
    if args.route == "all":
        routes = all_routes(d, m)
        p = routes["sulanke"]
        out = _narayana_summary(d, m, p)
        out["routes"] = sorted(routes)
        bad = [k for k, v in routes.items() if v != p]
        if bad:
            return Report("narayana", inputs, out, "FAIL", {k: _poly_out(routes[k]) for k in bad})
    else:
        p = _narayana_route(d, m, args.route)
        out = _narayana_summary(d, m, p)
    if p(1) != catalan_multidim(d, m) or not out["palindromic"]:
        return Report("narayana", inputs, out, "FAIL", {"value_at_1": format_rational(p(1))})
    return Report("narayana", inputs, out)


def _grid_row(dm) -> dict:
    d, m = dm
    routes = all_routes(d, m)
    p = routes["sulanke"]
    small = d <= 4 and m <= 4
    return {
        "d": d,
        "m": m,
        "coeffs": _poly_out(p),
        "routes": sorted(routes),
        "routes_agree": all(v == p for v in routes.values()),
        "catalan": p(1) == catalan_multidim(d, m),
        "palindromic": palindrome_check(d, m, with_gasper=small),
        "negative_zeros": negative_zero_check(d, m),
    }


def cmd_narayana_grid(args) -> Report:
    rows = suite._map(_grid_row, suite.NARAYANA_GRID, args.jobs)
    inputs = {"grid": [list(dm) for dm in suite.NARAYANA_GRID], "jobs": args.jobs}
    keys = ("routes_agree", "catalan", "palindromic", "negative_zeros")
    bad = next((r for r in rows if not all(r[k] for k in keys)), None)
    if bad is None:
        return Report("narayana-grid", inputs, rows)
    return Report("narayana-grid", inputs, rows, "FAIL", bad)


def cmd_jp(args) -> Report:
    params = JPParams(args.alpha, args.beta, args.n)
    p = jp_polynomial(params)
    rep = jp_zero_location(params)
    inputs = params.to_json()
    out = {
        "coeffs": _poly_out(p),
        "zones": rep.counts.to_json(),
        "verdict": {"hypothesis": rep.hypothesis, "confirmed": rep.confirmed},
    }
    if rep.confirmed is False:
        return Report("jp", inputs, out, "FAIL", {"params": params.to_json(), "zones": rep.counts.to_json()})
    return Report("jp", inputs, out)


def cmd_jp_narayana(args) -> Report:
    rep = narayana_as_jp(args.d, args.m, args.variant)
    inputs = {"d": args.d, "m": args.m, "variant": args.variant}
    if rep.verified:
        return Report("jp-narayana", inputs, rep.to_json())
    return Report("jp-narayana", inputs, rep.to_json(), "FAIL", {"d": args.d, "m": args.m, "variant": args.variant})


def cmd_verify_paper(args) -> Report:
    results = suite.run_all(seed=args.seed, jobs=args.jobs)
    for r in results:
        print(r.line(), file=sys.stderr)
    table = [r.to_json() for r in results]
    inputs = {"seed": args.seed, "jobs": args.jobs}
    failed = [r for r in results if not r.ok]
    if not failed:
        return Report("verify-paper", inputs, table)
    return Report("verify-paper", inputs, table, "FAIL", {"criterion": failed[0].number, "detail": failed[0].witness})


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eulerpoly", description=__doc__)
    parser.add_argument("--out", help="also write the JSON report to this path")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=fn)
        p.add_argument("--out", default=argparse.SUPPRESS, help="also write the JSON report to this path")
        return p

    p = add("hatw", cmd_hatw, "numerator polynomial for a block-form or raw F")
    p.add_argument("--a", type=rational_arg, required=True)
    p.add_argument("--blocks", type=blocks_arg, default=[])
    p.add_argument("--poly", type=rational_list_arg, help="raw coefficients of F, lowest degree first")
    p.add_argument("--normalize", action="store_true", help="divide F by its value at 0")

    p = add("classify", cmd_classify, "zone counts and zero-location verdicts")
    p.add_argument("--a", type=rational_arg, required=True)
    p.add_argument("--blocks", type=blocks_arg, default=[])

    p = add("tp-check", cmd_tp_check, "finite-window Toeplitz minor search")
    p.add_argument("--seq", type=rational_list_arg)
    p.add_argument("--poly", type=rational_list_arg, help="sequence f(0), f(1), ... of this polynomial")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--window", type=int, default=12)

    p = add("quad-region", cmd_quad_region, "quadratic criterion over a (b, c) grid")
    p.add_argument("--a", type=rational_arg, required=True)
    p.add_argument("--grid", type=int, default=41)
    p.add_argument("--b-range", type=range_arg, default=(Fraction(-1), Fraction(3)))
    p.add_argument("--c-range", type=range_arg, default=(Fraction(0), Fraction(2)))

    p = add("m-eulerian", cmd_m_eulerian, "iterated m-Eulerian recursion")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("mp-verify", cmd_mp_verify, "transformation identity as a truncated series equality")
    p.add_argument("--kind", choices=("first", "second"), default="first")
    p.add_argument("--delta", type=rational_arg, required=True)
    p.add_argument("--epsilon", type=rational_arg, required=True)
    p.add_argument("--rho", type=rational_arg, required=True)
    p.add_argument("--blocks", type=blocks_arg, default=[], help="nu:omega pairs")
    p.add_argument("--order", type=int)

    p = add("gasper-check", cmd_gasper_check, "terminating Gasper identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=rational_arg, required=True)
    p.add_argument("--c", type=rational_arg, required=True)
    p.add_argument("--blocks", type=blocks_arg, default=[])

    p = add("narayana", cmd_narayana, "d-Narayana polynomial by one or all routes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--route", default="all", choices=("all", "sulanke", "feulerian", "explicit", "bernstein", "oracle"))

    p = add("narayana-grid", cmd_narayana_grid, "all routes and properties on the acceptance grid")
    p.add_argument("--jobs", type=int, default=1)

    p = add("jp", cmd_jp, "Jacobi-Pineiro polynomial with zone counts")
    p.add_argument("--alpha", type=rational_list_arg, required=True)
    p.add_argument("--beta", type=rational_arg, required=True)
    p.add_argument("--n", type=int_list_arg, required=True)

    p = add("jp-narayana", cmd_jp_narayana, "d-Narayana as a Jacobi-Pineiro polynomial")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--variant", choices=JP_VARIANTS, required=True)

    p = add("verify-paper", cmd_verify_paper, "run every acceptance criterion")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    return parser


_NEGATIVE_VALUE = re.compile(r"^-\d")


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--beta -3/2`` into ``--beta=-3/2`` so argparse does not read a flag."""
    out: list[str] = []
    for token in argv:
        if out and _NEGATIVE_VALUE.match(token) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def run(argv: Sequence[str] | None = None, stream=None) -> int:
    stream = sys.stdout if stream is None else stream
    argv = list(sys.argv[1:] if argv is None else argv)
    out_path = None
    try:
        args = build_parser().parse_args(_attach_negative_values(argv))
        out_path = args.out
        if args.command is None:
            raise InputError("missing subcommand")
        report = args.handler(args)
    except (InputError, GuardError, PoleError, ValueError, TypeError, ArithmeticError) as exc:
        command = next((a for a in argv if not a.startswith("-")), None)
        report = Report(command or "", {"argv": argv}, None, "ERROR", {"error": str(exc)})
    report.inputs = _fmt(report.inputs)
    text = json.dumps(report.to_json(), indent=2)
    print(text, file=stream)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return report.exit_code


def main() -> None:
    sys.exit(run())
