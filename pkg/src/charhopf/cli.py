"""Command-line interface: ``charhopf <group> <command> [flags]``.

Exit status is 0 on success, 2 on a usage or parse error and 1 when a
``check`` command finds a violated identity.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Callable, Dict, List, Sequence, TextIO

from . import checks, knots, pideform, schur
from .plethysm import plethysm
from .series import series
from .symfunc import SymFunc, outer_product
from .textio import (
    ParseError,
    dumps,
    format_partition,
    parse_partition,
    parse_symfunc,
    symfunc_to_json,
    tensor_to_json,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 2, like parse errors
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _sf_out(args, f: SymFunc, out: TextIO) -> int:
    out.write((dumps(symfunc_to_json(f)) if args.json else str(f)) + "\n")
    return 0


def _report_out(args, report: pideform.Report, out: TextIO) -> int:
    if args.json:
        out.write(dumps(report.to_json()) + "\n")
    else:
        out.write(report.summary() + "\n")
        for line in report.failures:
            out.write("  counterexample: " + line + "\n")
    return 0 if report.passed else 1


# -- sf ------------------------------------------------------------------------

def _sf_binary(op: Callable[[SymFunc, SymFunc], SymFunc]):
    def run(args, out):
        return _sf_out(args, op(parse_symfunc(args.lhs), parse_symfunc(args.rhs)), out)

    return run


def _sf_coprod(args, out):
    t = schur.coproduct(parse_symfunc(args.expr))
    out.write((dumps(tensor_to_json(t)) if args.json else str(t)) + "\n")
    return 0


def _sf_antipode(args, out):
    return _sf_out(args, schur.antipode(parse_symfunc(args.expr)), out)


def _sf_scalar(args, out):
    v = schur.schur_hall(parse_symfunc(args.lhs), parse_symfunc(args.rhs))
    out.write((dumps({"value": str(v)}) if args.json else str(v)) + "\n")
    return 0


# -- series / pi -----------------------------------------------------------------

def _series_show(args, out):
    ser = series(args.pi, args.kind, args.degree)
    if args.json:
        obj = {"pi": list(ser.pi), "kind": ser.kind, "degree": ser.degree, "value": symfunc_to_json(ser.value)}
        out.write(dumps(obj) + "\n")
    else:
        out.write(f"{ser.kind}_{format_partition(ser.pi)} = {ser.value}\n")
    return 0


def _pi_product(args, out):
    ctx = pideform.context(args.pi)
    return _sf_out(args, pideform.pi_product(ctx, parse_symfunc(args.lhs), parse_symfunc(args.rhs)), out)


def _pi_rker(args, out):
    ctx = pideform.context(args.pi)
    fn = pideform.r_kernel_inverse if args.inverse else pideform.r_kernel
    t = fn(ctx, args.degree)
    out.write((dumps(tensor_to_json(t)) if args.json else str(t)) + "\n")
    return 0


def _pi_qpi(args, out):
    ctx = pideform.context(args.pi)
    fn = pideform.q_scalar_inverse if args.inverse else pideform.q_scalar
    return _sf_out(args, fn(ctx, args.degree), out)


# -- check -------------------------------------------------------------------------

def _check_yb(args, out):
    return _report_out(args, pideform.check_yang_baxter(pideform.context(args.pi), args.degree), out)


def _check_cocycle(args, out):
    return _report_out(args, pideform.check_cocycle(pideform.context(args.pi), args.weight), out)


def _check_hopf(args, out):
    return _report_out(args, checks.check_hopf(args.weight), out)


def _check_coquasi(args, out):
    ctx = pideform.context(args.pi)
    return _report_out(args, checks.check_coquasitriangular(ctx, args.degree, min(args.degree, 4)), out)


def _check_writhe(args, out):
    rng = random.Random(args.seed)
    report = pideform.Report("writhe decomposition")
    for _ in range(args.count):
        b = knots.random_braid(rng, 4, 6)
        st = knots.link_stats(b)
        report.record(st.writhe == b.writhe, lambda: f"braid '{b}': {st.writhe} vs {b.writhe}")
    return _report_out(args, report, out)


# -- knot --------------------------------------------------------------------------

def _power_label(w: int) -> str:
    return f"Q^{w}"


def _knot_invariant(args, out):
    ctx = pideform.context(args.pi)
    b = knots.parse_braid(args.braid, args.strands)
    st = knots.link_stats(b)
    closed = knots.invariant_closed_form(ctx, b, args.degree)
    k = len(st.components)
    direct = None
    status = 0
    if args.direct:
        seed = parse_symfunc(args.seed_sf)
        direct = knots.invariant_direct(ctx, b, seed, args.degree)
        expected = outer_product(seed, closed.to_symfunc(), args.degree)
        status = 0 if direct == expected else 1
    if args.json:
        obj: Dict[str, object] = {
            "pi": list(ctx.pi),
            "degree": args.degree,
            "braid": str(b),
            "strands": b.strands,
            "writhe": b.writhe,
            "components": [list(c) for c in st.components],
            "component_writhes": list(st.component_writhes),
            "linking_matrix": [list(r) for r in st.linking_matrix],
        }
        obj["invariant"] = symfunc_to_json(closed.to_symfunc()) if k == 1 else tensor_to_json(closed)
        if direct is not None:
            obj["direct"] = symfunc_to_json(direct)
            obj["agree"] = status == 0
        out.write(dumps(obj) + "\n")
        return status
    if k == 1:
        out.write(f"{_power_label(st.component_writhes[0])} = {closed.to_symfunc()}\n")
        out.write(f"w={b.writhe}\n")
    else:
        label = "⊗".join(_power_label(w) for w in st.component_writhes)
        links = [
            f"r^{st.linking_matrix[i][j]}[{i + 1}{j + 1}]"
            for i in range(k)
            for j in range(i + 1, k)
            if st.linking_matrix[i][j]
        ]
        out.write(" · ".join([label] + links) + f" = {closed}\n")
        out.write(f"w={b.writhe} " + " ".join(f"w_{i + 1}={w}" for i, w in enumerate(st.component_writhes)))
        out.write(
            " "
            + " ".join(
                f"w_{i + 1}{j + 1}={st.linking_matrix[i][j]}" for i in range(k) for j in range(i + 1, k)
            )
            + "\n"
        )
    if direct is not None:
        out.write(f"direct({args.seed_sf}) = {direct}\n")
        out.write("agree: " + ("yes" if status == 0 else "NO") + "\n")
    return status


def _knot_stats(args, out):
    b = knots.parse_braid(args.braid, args.strands)
    st = knots.link_stats(b)
    if args.json:
        obj = {
            "braid": str(b),
            "strands": b.strands,
            "length": b.length,
            "writhe": b.writhe,
            "permutation": list(st.permutation),
            "cycles": st.cycle_notation(),
            "components": [list(c) for c in st.components],
            "component_writhes": list(st.component_writhes),
            "linking_matrix": [list(r) for r in st.linking_matrix],
        }
        out.write(dumps(obj) + "\n")
        return 0
    out.write(f"strands={b.strands} length={b.length} w={b.writhe}\n")
    out.write(f"kappa={list(st.permutation)} cycles={st.cycle_notation()}\n")
    for i, (comp, w) in enumerate(zip(st.components, st.component_writhes), 1):
        out.write(f"component {i}: strands {list(comp)} w_{i}={w}\n")
    k = len(st.components)
    for i in range(k):
        for j in range(i + 1, k):
            out.write(f"w_{i + 1}{j + 1}={st.linking_matrix[i][j]}\n")
    return 0


# -- parser --------------------------------------------------------------------------

def _pi_arg(text: str):
    lam = parse_partition(text)
    if not lam:
        raise argparse.ArgumentTypeError("π must be non-empty")
    return lam


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="charhopf", description="Exact computations in the π-deformed ring of symmetric functions.")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def cmd(group, name: str, fn, help_: str):
        p = group.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(run=fn)
        return p

    sf = groups.add_parser("sf", help="ring operations").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, fn, help_ in (
        ("mult", _sf_binary(outer_product), "outer product"),
        ("skew", _sf_binary(schur.skew), "skew lhs / rhs"),
        ("plethysm", _sf_binary(plethysm), "plethysm lhs[rhs]"),
        ("scalar", _sf_scalar, "Schur-Hall scalar product"),
    ):
        p = cmd(sf, name, fn, help_)
        p.add_argument("--lhs", required=True)
        p.add_argument("--rhs", required=True)
    for name, fn, help_ in (("coprod", _sf_coprod, "coproduct"), ("antipode", _sf_antipode, "antipode")):
        p = cmd(sf, name, fn, help_)
        p.add_argument("--expr", "--lhs", dest="expr", required=True)

    ser = groups.add_parser("series", help="M and L series").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = cmd(ser, "show", _series_show, "print a truncated series")
    p.add_argument("--pi", type=_pi_arg, required=True)
    p.add_argument("--kind", choices=("M", "L"), default="M")
    p.add_argument("--degree", type=_nonneg, required=True)

    pi = groups.add_parser("pi", help="π-deformed structure").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = cmd(pi, "product", _pi_product, "π-product lhs ⊙ rhs")
    p.add_argument("--pi", type=_pi_arg, required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    for name, fn, help_ in (("rker", _pi_rker, "kernel r_π"), ("qpi", _pi_qpi, "Cauchy scalar Q_π")):
        p = cmd(pi, name, fn, help_)
        p.add_argument("--pi", type=_pi_arg, required=True)
        p.add_argument("--degree", type=_nonneg, required=True)
        p.add_argument("--inverse", action="store_true")

    chk = groups.add_parser("check", help="exhaustive identity checks").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser
    )
    p = cmd(chk, "yang-baxter", _check_yb, "braid relation on basis triples")
    p.add_argument("--pi", type=_pi_arg, required=True)
    p.add_argument("--degree", type=_nonneg, required=True)
    p = cmd(chk, "cocycle", _check_cocycle, "2-cocycle identity and associativity of ⊙")
    p.add_argument("--pi", type=_pi_arg, required=True)
    p.add_argument("--weight", type=_nonneg, required=True)
    p = cmd(chk, "hopf", _check_hopf, "Hopf algebra axioms")
    p.add_argument("--weight", type=_nonneg, required=True)
    p = cmd(chk, "coquasitriangular", _check_coquasi, "normalization, hexagons, antipode relations, r^-1 r = 1")
    p.add_argument("--pi", type=_pi_arg, required=True)
    p.add_argument("--degree", type=_nonneg, default=6)
    p = cmd(chk, "writhe", _check_writhe, "w = Σ w_i + 2 Σ w_ij on random braids")
    p.add_argument("--count", type=_nonneg, default=200)
    p.add_argument("--seed", type=int, default=0)

    kn = groups.add_parser("knot", help="braids and knot invariants").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser
    )
    p = cmd(kn, "invariant", _knot_invariant, "closed-form invariant, optionally cross-checked")
    p.add_argument("--pi", type=_pi_arg, required=True)
    p.add_argument("--braid", required=True)
    p.add_argument("--strands", type=int)
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--direct", action="store_true", help="also run the sliced-tangle evaluation")
    p.add_argument("--seed-sf", default="s[]", help="seed on the open strand for --direct")
    p = cmd(kn, "stats", _knot_stats, "permutation, components, writhes, linking numbers")
    p.add_argument("--braid", required=True)
    p.add_argument("--strands", type=int)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"charhopf: error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.run(args, out)
    except (ParseError, ValueError) as exc:
        err.write(f"charhopf: error: {exc}\n")
        return 2


def main(argv: List[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
