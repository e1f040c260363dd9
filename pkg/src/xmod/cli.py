"""Command line: ``xmod validate``, ``xmod realize``, ``xmod catalog``.

Exit codes: 0 every check passed, 1 a mathematical check failed, 2 bad input
or usage.
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from xmod import catalog
from xmod.crossed import validate
from xmod.errors import ParseError, TruncationTooShallow, UnknownEntry, XmodError
from xmod.problem import Report, parse_problem, problem_document
from xmod.realization import realize, verify_roundtrip
from xmod.report import AxiomReport

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _default_cap():
    try:
        return int(os.environ.get("XMOD_MAX_ORDER", "10080"))
    except ValueError:
        return 10080


def run_validate(nm, timing=True):
    t0 = time.perf_counter()
    rep = validate(nm)
    return Report.from_axiom_report(
        "validate", nm.label, rep,
        cardinalities={"N": nm.N.order, "G": nm.G.order},
        wall_time_s=round(time.perf_counter() - t0, 6) if timing else None,
    )


def run_realize(nm, levels=3, timing=True):
    """Validate, then realize and round-trip. Returns a :class:`Report`."""
    t0 = time.perf_counter()
    pre = validate(nm)
    if not pre.ok:
        r = Report.from_axiom_report("realize", nm.label, pre, cardinalities={"N": nm.N.order, "G": nm.G.order})
        r.error = "input is not a crossed module"
    else:
        res = realize(nm, levels, check_input=False)
        rep = AxiomReport().merge(res.report)
        rep.merge(_only(verify_roundtrip(nm, levels, res), "roundtrip"))
        r = Report.from_axiom_report("realize", nm.label, rep, cardinalities=res.cardinalities())
        skipped = r.check("g_homotopically_discrete")
        if levels < 2 and skipped is not None:
            exc = TruncationTooShallow(f"pi_1 check needs levels >= 2, have {levels}")
            skipped.details.append(f"{type(exc).__name__}: {exc}")
    if timing:
        r.wall_time_s = round(time.perf_counter() - t0, 6)
    return r


def _only(rep, name):
    # keep the round-trip verdict; the induced map's own axiom checks are folded in
    out = AxiomReport()
    for v in rep.violations:
        out.add(name, v.witness, f"{v.tag}: {v.detail}".rstrip(": "))
    if not rep.violations:
        out.record(name, [])
    return out


def _emit(reports, fmt, out):
    if fmt == "json":
        if isinstance(reports, list):
            out.write(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2) + "\n")
        else:
            out.write(reports.to_json() + "\n")
    else:
        for r in reports if isinstance(reports, list) else [reports]:
            out.write(r.to_text() + "\n")


def _load(path, max_order):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_problem(text, max_order)


def _input_error(command, label, exc, fmt, out):
    r = Report(command, label, False, error=f"{type(exc).__name__}: {exc}")
    _emit(r, fmt, out)
    return EXIT_INPUT


def cmd_validate(args, out=sys.stdout):
    fmt = args.format or "text"
    try:
        prob = _load(args.file, args.max_order)
    except ParseError as exc:
        return _input_error("validate", args.file, exc, fmt, out)
    except XmodError as exc:
        r = Report("validate", args.file, False, error=f"{type(exc).__name__}: {exc}")
        _emit(r, fmt, out)
        return EXIT_FAIL
    r = run_validate(prob.normal_map, timing=not args.no_timing)
    _emit(r, args.format or prob.format, out)
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_realize(args, out=sys.stdout):
    fmt = args.format or "text"
    try:
        prob = _load(args.file, args.max_order)
    except ParseError as exc:
        return _input_error("realize", args.file, exc, fmt, out)
    except XmodError as exc:
        r = Report("realize", args.file, False, error=f"{type(exc).__name__}: {exc}")
        _emit(r, fmt, out)
        return EXIT_FAIL
    levels = args.levels if args.levels is not None else prob.levels
    if levels < 1:
        return _input_error("realize", args.file, ParseError("--levels must be >= 1"), fmt, out)
    r = run_realize(prob.normal_map, levels, timing=not args.no_timing)
    _emit(r, args.format or prob.format, out)
    return EXIT_OK if r.ok else EXIT_FAIL


def _run_entry(entry, levels, timing):
    nm = entry.build()
    if entry.positive:
        return run_realize(nm, levels, timing)
    return run_validate(nm, timing)


def cmd_catalog(args, out=sys.stdout):
    fmt = args.format or "text"
    if args.list:
        if fmt == "json":
            out.write(json.dumps([{"name": e.name, "positive": e.positive, "description": e.description}
                                  for e in catalog.CATALOG.values()], indent=2) + "\n")
        else:
            for e in catalog.CATALOG.values():
                out.write(f"{e.name:22s} {'positive' if e.positive else 'negative'}  {e.description}\n")
        return EXIT_OK
    if args.export:
        try:
            e = catalog.get(args.export)
        except UnknownEntry as exc:
            return _input_error("catalog", args.export, exc, fmt, out)
        out.write(json.dumps(problem_document(e.build(), args.levels or 3), indent=1) + "\n")
        return EXIT_OK
    if args.run:
        try:
            e = catalog.get(args.run)
        except UnknownEntry as exc:
            return _input_error("catalog", args.run, exc, fmt, out)
        r = _run_entry(e, args.levels or 3, not args.no_timing)
        _emit(r, fmt, out)
        return EXIT_OK if r.ok else EXIT_FAIL
    if args.all:
        entries = list(catalog.CATALOG.values())
        with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
            reports = list(pool.map(lambda e: _run_entry(e, args.levels or 3, not args.no_timing), entries))
        as_expected = True
        for e, r in zip(entries, reports):
            r.command = f"catalog:{'expect-pass' if e.positive else 'expect-fail'}"
            as_expected &= r.ok == e.positive
        _emit(reports, fmt, out)
        if fmt == "text":
            out.write(f"catalog: {'all entries behaved as expected' if as_expected else 'UNEXPECTED RESULTS'}\n")
        return EXIT_OK if as_expected else EXIT_FAIL
    out.write("catalog: give one of --list, --run NAME, --all, --export NAME\n")
    return EXIT_INPUT


def build_parser():
    p = argparse.ArgumentParser(prog="xmod", description="Realize crossed modules as pi_0 of simplicial groups.")
    sub = p.add_subparsers(dest="command")

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default=None)
        sp.add_argument("--max-order", type=int, default=None, help="closure cap (env XMOD_MAX_ORDER)")
        sp.add_argument("--no-timing", action="store_true", help="omit wall time for byte-stable output")

    v = sub.add_parser("validate", help="check NM1/NM2 for a problem file")
    v.add_argument("file")
    common(v)
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("realize", help="realize a crossed module and verify the round trip")
    r.add_argument("file")
    r.add_argument("--levels", type=int, default=None, help="truncation level K (default 3)")
    common(r)
    r.set_defaults(func=cmd_realize)

    c = sub.add_parser("catalog", help="built-in examples")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--run", metavar="NAME")
    g.add_argument("--all", action="store_true")
    g.add_argument("--export", metavar="NAME", help="print the entry as a problem file")
    c.add_argument("--levels", type=int, default=None)
    c.add_argument("--jobs", type=int, default=1)
    common(c)
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    if args.max_order is None:
        args.max_order = _default_cap()
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
