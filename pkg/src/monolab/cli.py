"""``monolab`` command line.

Exit status: 0 when every checked property held, 1 when one failed (or a
search hit its cap and stayed undecided), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import betti, classes, complexes, harness, quotients
from .core import IrreducibleIdeal, MonomialIdeal, alexander_dual_ideal
from .io import ParseError, format_complex, format_ideal, parse_complex, parse_ideal, to_jsonable
from .reports import CapExceeded, PropertyReport, Verdict

IDEAL_CHECKS = ("lq", "lq-sdi", "popescu", "cpt-lq", "pack", "wp", "cpt-wp", "scpt-wp",
                "stable", "vd", "svd", "seqpure")
COMPLEX_CHECKS = ("shellable", "vd", "wcp", "costable", "skeleton", "facet-skeleton", "dual")


class UsageError(Exception):
    pass


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").strip("()[]").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated vector, got {text!r}") from None


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _emit(payload, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(to_jsonable(payload), indent=2, ensure_ascii=False))
    else:
        print(text)


def _report_text(rep: PropertyReport) -> str:
    lines = [f"{rep.name}: {rep.verdict.value}"]
    data = rep.to_json()
    if data["certificate"] is not None:
        lines.append(f"  certificate: {json.dumps(data['certificate'], ensure_ascii=False)}")
    if data["witness"] is not None:
        lines.append(f"  witness: {json.dumps(data['witness'], ensure_ascii=False)}")
    return "\n".join(lines)


def _finish(rep: PropertyReport, as_json: bool) -> int:
    _emit(rep, as_json, _report_text(rep))
    return 0 if rep.verdict is Verdict.HOLDS else 1


def _ideal_report(args, I: MonomialIdeal) -> PropertyReport:
    prop = args.property
    if prop == "lq":
        return quotients.has_linear_quotients(I, cap=args.cap)
    if prop == "lq-sdi":
        return quotients.has_linear_quotients(I, "support_degree_increasing", cap=args.cap)
    if prop == "popescu":
        order = quotients.find_admissible_order(I, cap=args.cap)
        if order is None:
            return PropertyReport.from_bool("popescu_order", False,
                                            witness={"reason": "no admissible order"})
        return quotients.is_popescu_order(order, s=args.s, weak=args.weak)
    if prop == "cpt-lq":
        reps = quotients.componentwise_lq(I, args.mode, cap=args.cap)
        return quotients.summarize(reps, f"componentwise_lq[{args.mode}]")
    if prop == "pack":
        return quotients.pack_compatibility(I, cap=args.cap)
    if prop in ("wp", "cpt-wp", "scpt-wp"):
        if prop == "wp":
            return classes.is_weakly_polymatroidal(I)
        profile = classes.wp_profile(I)
        ok = profile.cpt_wp if prop == "cpt-wp" else profile.scpt_wp
        return PropertyReport.from_bool(prop, ok, certificate=profile, witness=profile)
    if prop == "stable":
        if args.param is None:
            raise UsageError("check stable needs --param, e.g. --param 2,2,0")
        if len(args.param) != I.n:
            raise UsageError(f"--param has {len(args.param)} entries, the ideal has n={I.n}")
        try:
            return classes.is_I_stable(I, IrreducibleIdeal(args.param), args.variant)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if prop in ("vd", "svd"):
        return classes.is_variable_decomposable(I, strong=prop == "svd")
    if prop == "seqpure":
        return classes.is_sequentially_pure(I)
    raise UsageError(f"unknown property {prop}")


def cmd_check(args) -> int:
    I = parse_ideal(_read(args.file))
    return _finish(_ideal_report(args, I), args.json)


def cmd_complex(args) -> int:
    delta = parse_complex(_read(args.file))
    prop = args.property
    if prop in ("skeleton", "facet-skeleton", "dual"):
        try:
            if prop == "skeleton":
                if args.r is None or args.s is None:
                    raise UsageError("complex skeleton needs --r and --s")
                out = complexes.skeleton(delta, args.r, args.s)
            elif prop == "facet-skeleton":
                out = complexes.facet_skeleton(delta, args.i)
            else:
                out = complexes.dual_ideal(delta)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        text = format_ideal(out) if prop == "dual" else format_complex(out)
        _emit(out, args.json, text.rstrip("\n"))
        return 0
    if prop == "shellable":
        rep = complexes.is_shellable(delta, cap=args.cap)
    elif prop == "vd":
        rep = complexes.is_vertex_decomposable(delta)
    elif prop == "wcp":
        rep = complexes.is_weakly_co_polymatroidal(delta, essential=args.essential)
    else:
        rep = complexes.co_stable_check(delta, args.variant)
    return _finish(rep, args.json)


def cmd_betti(args) -> int:
    I = parse_ideal(_read(args.file))
    table = betti.betti_table(I, args.char)
    lines = [f"beta_{i} at {list(b)}: {r}" for (i, b), r in sorted(table.entries.items())]
    _emit(table.to_json(), args.json, "\n".join(lines) or "no nonzero Betti numbers")
    return 0


def cmd_suppreg(args) -> int:
    I = parse_ideal(_read(args.file))
    if I.is_zero:
        raise UsageError("suppreg is undefined for the zero ideal")
    table = betti.betti_table(I)
    data = {"suppreg": betti.suppreg(I, table), "reg": betti.reg(I, table),
            "max_suppdeg": I.max_suppdeg,
            "truncations": betti.suppreg_truncation_profile(I)}
    _emit(data, args.json, f"suppreg {data['suppreg']}  reg {data['reg']}")
    return 0


def cmd_dual_ideal(args) -> int:
    I = parse_ideal(_read(args.file))
    if len(args.g) != I.n:
        raise UsageError(f"--g has {len(args.g)} entries, the ideal has n={I.n}")
    try:
        out = alexander_dual_ideal(I, args.g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(out, args.json, format_ideal(out).rstrip("\n"))
    return 0


def _spec(args) -> harness.GeneratorSpec:
    try:
        return harness.GeneratorSpec(n=args.n, max_exp=args.maxexp or args.maxdeg,
                                     max_deg=args.maxdeg, min_gens=args.mingens,
                                     max_gens=args.maxgens, squarefree=args.squarefree,
                                     seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_audit(args) -> int:
    if args.list:
        for law in harness.LAWS.values():
            print(f"{law.name:40s} [{law.kind}] {law.cites}")
        return 0
    if not args.law:
        raise UsageError("audit needs --law (or --list)")
    names = list(harness.LAWS) if args.law == ["all"] else args.law
    for name in names:
        if name not in harness.LAWS:
            raise UsageError(f"unknown law {name!r}; see 'monolab audit --list'")
    spec = _spec(args)
    results = [harness.audit(name, spec, args.count) for name in names]
    text = "\n".join(f"{r.law}: {r.count} instances, hypothesis held {r.hypothesis_held}, "
                     f"skipped {r.skipped}, violations {len(r.violations)}" for r in results)
    _emit([r.to_json() for r in results], args.json, text)
    return 0 if all(r.ok for r in results) else 1


def cmd_mine(args) -> int:
    summary = harness.mine_open_question(_spec(args), args.budget, exhaustive=args.exhaustive)
    text = (f"{summary['mode']} search: tried {summary['tried']}, skipped {summary['skipped']}, "
            f"hits {len(summary['hits'])}")
    _emit(summary, args.json, text)
    return 1 if summary["hits"] else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monolab", description="Monomial ideal and simplicial complex checks.")
    p.add_argument("-v", "--verbose", action="store_true", help="log parser warnings and progress")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="property of an ideal file")
    c.add_argument("property", choices=IDEAL_CHECKS)
    c.add_argument("file")
    c.add_argument("--variant", default="WIS", type=str.upper, choices=classes.VARIANTS)
    c.add_argument("--param", type=_vector, help="exponent vector of the pure-power ideal; 0 drops a variable")
    c.add_argument("--mode", default="support", choices=("degree", "support", "support_geq"))
    c.add_argument("--s", type=int, default=1, help="popescu: support-degree parameter")
    c.add_argument("--weak", action="store_true", help="popescu: weak variant")
    c.add_argument("--cap", type=int, default=quotients.DEFAULT_CAP)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    x = sub.add_parser("complex", help="property or construction on a complex file")
    x.add_argument("property", choices=COMPLEX_CHECKS)
    x.add_argument("file")
    x.add_argument("--r", type=int)
    x.add_argument("--s", type=int)
    x.add_argument("--i", type=int, default=1)
    x.add_argument("--variant", default="WIS", type=str.upper, choices=classes.VARIANTS)
    x.add_argument("--essential", action="store_true", help="wcp: allow relabelings")
    x.add_argument("--cap", type=int, default=quotients.DEFAULT_CAP)
    x.add_argument("--json", action="store_true")
    x.set_defaults(func=cmd_complex)

    b = sub.add_parser("betti", help="multigraded Betti numbers")
    b.add_argument("file")
    b.add_argument("--char", type=int, default=0)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_betti)

    s = sub.add_parser("suppreg", help="support-regularity and regularity")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_suppreg)

    d = sub.add_parser("dual-ideal", help="Alexander dual with respect to a vector")
    d.add_argument("file")
    d.add_argument("--g", type=_vector, required=True)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_dual_ideal)

    for name, func, helptext in (("audit", cmd_audit, "run registered laws on random instances"),
                                 ("mine", cmd_mine, "search for componentwise-LQ ideals without LQ")):
        a = sub.add_parser(name, help=helptext)
        if name == "audit":
            a.add_argument("--law", nargs="+", help="law names, or 'all'")
            a.add_argument("--list", action="store_true")
            a.add_argument("--count", type=int, default=200)
        else:
            a.add_argument("--budget", type=int, required=True)
            a.add_argument("--exhaustive", action="store_true")
        a.add_argument("--n", type=int, default=4)
        a.add_argument("--maxdeg", type=int, default=3)
        a.add_argument("--maxexp", type=int)
        a.add_argument("--mingens", type=int, default=1)
        a.add_argument("--maxgens", type=int, default=5)
        a.add_argument("--squarefree", action="store_true")
        a.add_argument("--seed", type=int, default=0)
        a.add_argument("--json", action="store_true")
        a.set_defaults(func=func)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="monolab: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ParseError, CapExceeded) as exc:
        print(f"monolab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
