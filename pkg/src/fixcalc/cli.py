"""Command-line entry point: ``fixcalc <command> ...``.

Results go to stdout, diagnostics to stderr.  Exit status is 0 on success
and 2 for usage or domain errors.
"""
from __future__ import annotations

import argparse
import sys

from . import arithmetic, formats, real
from .duality import verify_duality
from .errors import FixcalcError
from .fixpoint import classify_all, fixpoint_report, prove_by_induction
from .generators import (
    additive_random_generator, constant, dual, identity, intersect_with, is_monotone,
    load_table, peano_successor,
)
from .lattice import Universe, parse_subset

GENERATOR_HELP = ("peano | identity | constant:{..} | meet:{..} | additive:<seed> | "
                  "table:<file> | dual:<generator>")


def build_generator(spec: str, u: Universe):
    kind, _, arg = spec.partition(":")
    if kind == "dual" and arg:
        return dual(build_generator(arg, u))
    if kind == "peano" and not arg:
        return peano_successor(u)
    if kind == "identity" and not arg:
        return identity(u)
    if kind == "constant" and arg:
        return constant(parse_subset(u, arg))
    if kind == "meet" and arg:
        return intersect_with(parse_subset(u, arg))
    if kind == "additive" and arg:
        try:
            seed = int(arg)
        except ValueError:
            raise FixcalcError(f"additive seed must be an integer, got {arg!r}") from None
        return additive_random_generator(u, seed)
    if kind == "table" and arg:
        return load_table(u, arg)
    raise FixcalcError(f"unknown generator {spec!r}; expected {GENERATOR_HELP}")


def _universe(args) -> Universe:
    return Universe(args.size)


def cmd_fixpoint(args) -> str:
    u = _universe(args)
    report = fixpoint_report(build_generator(args.gen, u), override=args.allow_nonmonotone)
    if args.format == "json":
        return formats.dumps(formats.fixpoint_doc(report))
    if args.format == "csv":
        return formats.fixpoint_csv(report)
    p = report.partition
    lines = [
        f"generator: {report.generator_name}",
        f"universe:  {u.label}",
        f"lfp (mu):  {report.lfp}",
        f"gfp (nu):  {report.gfp}",
        "partition:",
        f"  finitely-consistent    (mu)     : {p.mu}",
        f"  infinitely-consistent  (nu - mu): {p.nu_minus_mu}",
        f"  inconsistent           (U - nu) : {p.outside}",
        f"lfp trace ({len(report.lfp_trace)} iterates):",
    ]
    lines += [f"  {i:>3}  {s}" for i, s in enumerate(report.lfp_trace)]
    lines.append(f"gfp trace ({len(report.gfp_trace)} iterates):")
    lines += [f"  {i:>3}  {s}" for i, s in enumerate(report.gfp_trace)]
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> str:
    u = _universe(args)
    g = build_generator(args.gen, u)
    rows, counts = classify_all(g)
    if args.format == "json":
        return formats.dumps(formats.classification_doc(g.name, u, rows, counts))
    if args.format == "csv":
        return formats.classification_csv(rows)
    width = max(len(str(s)) for s, _ in rows)
    lines = [f"generator: {g.name}", f"universe:  {u.label}", ""]
    lines += [f"  {str(s):<{width}}  {c}" for s, c in rows]
    lines.append("")
    lines += [f"{c}: {n}" for c, n in counts.items()]
    return "\n".join(lines) + "\n"


def cmd_duality(args) -> str:
    u = _universe(args)
    report = verify_duality(build_generator(args.gen, u))
    doc = formats.duality_doc(report)
    if args.format == "json":
        return formats.dumps(doc)
    if args.format == "csv":
        return formats.csv_text(("key", "value"),
                                [(k, str(v).lower() if isinstance(v, bool) else v) for k, v in doc.items()])
    return (
        f"generator:        {report.generator_name}\n"
        f"universe:         {u.label}\n"
        f"gfp (direct):     {report.gfp_direct}\n"
        f"rejected:         {report.rejected}\n"
        f"gfp (via dual):   {report.gfp_via_duality}\n"
        f"agrees:           {'yes' if report.agrees else 'NO'}\n"
    )


def cmd_induction(args) -> str:
    u = _universe(args)
    check = prove_by_induction(build_generator(args.gen, u), parse_subset(u, args.prop))
    doc = {
        "generator": args.gen,
        "universe": u.size,
        "property_set": str(check.property_set),
        "base_holds": check.base_holds,
        "closed_holds": check.closed_holds,
        "conclusion_holds": check.conclusion_holds,
        "counterexample": check.counterexample,
    }
    if args.format == "json":
        return formats.dumps(doc)
    if args.format == "csv":
        return formats.csv_text(("key", "value"), [(k, "" if v is None else v) for k, v in doc.items()])
    yn = lambda b: "yes" if b else "no"
    return (
        f"generator:   {args.gen}\n"
        f"universe:    {u.label}\n"
        f"property:    {check.property_set}\n"
        f"base:        {yn(check.base_holds)}\n"
        f"closed:      {yn(check.closed_holds)}\n"
        f"lfp <= P:    {yn(check.conclusion_holds)}\n"
        f"witness:     {'-' if check.counterexample is None else check.counterexample}\n"
    )


def cmd_monotone(args) -> str:
    u = _universe(args)
    g = build_generator(args.gen, u)
    v = is_monotone(g, args.mode, k=args.samples, seed=args.seed)
    doc = {
        "generator": g.name,
        "universe": u.size,
        "mode": v.mode,
        "holds": v.holds,
        "counterexample": None if v.counterexample is None else [str(s) for s in v.counterexample],
        "pairs_checked": v.pairs_checked,
    }
    if args.format == "json":
        return formats.dumps(doc)
    out = f"generator: {g.name}\nmode: {v.mode}\nmonotone: {'yes' if v.holds else 'no'}\n"
    if v.counterexample:
        x, y = v.counterexample
        out += f"counterexample: {x} <= {y} but F({x}) = {g(x)}, F({y}) = {g(y)}\n"
    return out + f"pairs checked: {v.pairs_checked}\n"


def cmd_perfect(args) -> str:
    if args.format == "csv":
        return formats.number_rows_csv(arithmetic.class_rows(args.limit))
    census = arithmetic.enumerate_classes(args.limit)
    if args.format == "json":
        return formats.dumps(formats.census_doc(census))
    lines = [f"perfect numbers up to {census.limit}: "
             + (", ".join(map(str, census.perfect)) or "none")]
    lines += [f"{c}: {n}" for c, n in census.counts.items()]
    return "\n".join(lines) + "\n"


def _real_function(name: str):
    if name == "f":
        return real.builtin_f()
    if name == "g":
        return real.builtin_g()
    return real.load_function(name)


def _fmt_result(r: real.FixedPointResult) -> str:
    bracket = "" if r.bracket is None else f"  bracket [{r.bracket[0]!r}, {r.bracket[1]!r}]"
    return (f"x = {r.location!r}  residual {r.residual:.3e}  "
            f"{r.method}, {r.iterations} iteration{'' if r.iterations == 1 else 's'}{bracket}")


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise FixcalcError(f"--{name.replace('_', '-')} is required for --action {args.action}")
    return value


def cmd_real(args) -> str:
    spec = _real_function(args.fn)
    action = args.action
    if action == "classify":
        x = _need(args, "x")
        cls = real.classify_point(spec, x, args.tol)
        doc = {"function": spec.name, "x": x, "phi": spec(x), "class": str(cls)}
        if args.format == "json":
            return formats.dumps(doc)
        return f"{spec.name}({x!r}) = {spec(x)!r}: {cls}\n"
    if action == "fixed-points":
        scan = real.find_fixed_points(spec, args.step, args.tol)
        if args.format == "json":
            return formats.dumps(formats.root_scan_doc(spec, scan, "fixed-points"))
        if args.format == "csv":
            rows = [("point", repr(p.location), repr(p.location), repr(p.residual)) for p in scan.points]
            rows += [("interval", repr(lo), repr(hi), "") for lo, hi in scan.intervals]
            return formats.csv_text(("kind", "lo", "hi", "residual"), rows)
        lines = [f"fixed points of {spec.name} (step {args.step}, tol {args.tol}):"]
        lines += ["  " + _fmt_result(p) for p in scan.points]
        lines += [f"  interval [{lo!r}, {hi!r}]" for lo, hi in scan.intervals]
        return "\n".join(lines) + "\n"
    if action == "zeros":
        zeros = real.find_zeros(spec, args.step, args.tol)
        if args.format == "json":
            return formats.dumps({"function": spec.name, "kind": "zeros", "zeros": zeros})
        if args.format == "csv":
            return formats.csv_text(("x",), [(repr(z),) for z in zeros])
        return f"zeros of {spec.name}:\n" + "".join(f"  x = {z!r}\n" for z in zeros)
    if action in ("newton", "iterate"):
        x0 = _need(args, "x0")
        solver = real.newton_fixed_point if action == "newton" else real.fixed_point_iteration
        result = solver(spec, x0, args.tol, args.max_iter)
        if args.format == "json":
            return formats.dumps({"function": spec.name, **formats.result_doc(result)})
        return _fmt_result(result) + "\n"
    if action == "monotonicity":
        v = real.monotonicity_scan(spec, args.samples)
        doc = {"function": spec.name, "holds": v.holds,
               "counterexample": None if v.counterexample is None else list(v.counterexample),
               "pairs_checked": v.pairs_checked}
        if args.format == "json":
            return formats.dumps(doc)
        out = f"{spec.name} monotone on {args.samples} samples: {'yes' if v.holds else 'no'}\n"
        if v.counterexample:
            a, b = v.counterexample
            out += f"counterexample: {a!r} < {b!r} but {spec(a)!r} > {spec(b)!r}\n"
        return out
    if action == "plot":
        return formats.plot_csv(real.plot_rows(spec, args.step, args.tol))
    raise FixcalcError(f"unknown action {action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fixcalc", description="Fixed points on finite powerset "
                                     "lattices, the integers and the reals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def lattice_cmd(name, func, help_text, formats_=("table", "json", "csv")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--gen", required=True, help=GENERATOR_HELP)
        p.add_argument("--size", type=int, required=True, help="universe size n (carrier 0..n-1)")
        p.add_argument("--format", choices=formats_, default="table")
        p.set_defaults(func=func)
        return p

    p = lattice_cmd("fixpoint", cmd_fixpoint, "least/greatest fixed points, traces and partition")
    p.add_argument("--allow-nonmonotone", action="store_true",
                   help="iterate without a monotonicity proof (step cap 2^n + 1)")
    lattice_cmd("classify", cmd_classify, "pre-/post-/fixed class of every subset (size <= 12)")
    lattice_cmd("duality", cmd_duality, "compare gfp with the complement of the dual's lfp")
    p = lattice_cmd("induction", cmd_induction, "check an induction argument for a property set")
    p.add_argument("--prop", required=True, help="property set, e.g. {0,1,2}")
    p = lattice_cmd("monotone", cmd_monotone, "check monotonicity", ("table", "json"))
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("perfect", help="deficient/perfect/abundant census")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("real", help="fixed points of real functions")
    p.add_argument("--fn", required=True, help="f, g, or a JSON function file")
    p.add_argument("--action", required=True,
                   choices=("classify", "fixed-points", "zeros", "newton", "iterate",
                            "monotonicity", "plot"))
    p.add_argument("--x", type=float)
    p.add_argument("--x0", type=float)
    p.add_argument("--step", type=float, default=real.DEFAULT_STEP)
    p.add_argument("--tol", type=float, default=real.DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_real)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (FixcalcError, OSError) as exc:
        print(f"fixcalc: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
