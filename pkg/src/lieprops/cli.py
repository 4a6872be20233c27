"""Command-line interface: ``lieprops COMMAND FILE [options]``.

Exit codes: 0 ran to completion (verdicts are in the output), 1 bad input,
2 usage error, 3 cap exceeded, 4 unsupported field/algorithm.  Errors
print one line on standard error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import catalog, fileformat, harness, hunt, props, scans, triang
from .config import DEFAULT, ScanConfig
from .errors import CapExceeded, LieError, Unsupported
from .fields import Field
from .linalg import Subspace
from .report import (
    ReportWriter,
    algebra_fields,
    certificate_items,
    harness_items,
    hunt_items,
    property_items,
)

EXIT_OK, EXIT_INPUT, EXIT_USAGE, EXIT_CAP, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # one diagnostic line instead of the usage banner
        self.exit(EXIT_USAGE, f"{self.prog}: usage error: {' '.join(message.split())}\n")


def _config(args) -> ScanConfig:
    samples = getattr(args, "samples", None)
    return ScanConfig(
        mode="sampled" if samples is not None else "exhaustive",
        samples=samples if samples is not None else DEFAULT.samples,
        seed=getattr(args, "seed", 0) or 0,
        max_subspaces=args.max_subspaces,
        max_pairs=args.max_pairs,
        max_elements=args.max_elements,
        workers=args.workers,
    )


def _subspace_arg(L, text):
    """Parse "v1;v2;..." with comma-separated coordinates."""
    if text is None:
        return L.full
    vecs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk or chunk == "-":
            continue
        try:
            vecs.append(L.vec(c.strip() for c in chunk.split(",")))
        except LieError as exc:
            raise UsageError(f"bad vector {chunk!r}: {exc}") from None
    return Subspace.span(L.field, L.dim, vecs)


class _Timer:
    def __init__(self):
        self.t0 = time.perf_counter()

    @property
    def ms(self) -> int:
        return int((time.perf_counter() - self.t0) * 1000)


# ---------------------------------------------------------------------------
# commands

def cmd_check(args, out):
    L = fileformat.read(args.file)
    names = args.props.split(",") if args.props else None
    t = _Timer()
    rep = props.property_report(L, names, _config(args))
    out.record("properties", algebra_fields(L) + property_items(rep), time_ms=t.ms)
    for name in rep.verdicts:
        if name in rep.certificates:
            out.record("certificate", [("property", name)] + certificate_items(name, rep.certificates[name]))


def cmd_series(args, out):
    L = fileformat.read(args.file)
    t = _Timer()
    chain = props.derived_series(L) if args.kind == "derived" else props.lower_central_series(L)
    out.record(
        "series",
        algebra_fields(L),
        kind=args.kind,
        dims=list(chain.dims),
        terms=list(chain.terms),
        reaches_zero=chain.reaches_zero,
        time_ms=t.ms,
    )


def cmd_frattini(args, out):
    L = fileformat.read(args.file)
    t = _Timer()
    fr = props.frattini(L, _config(args))
    out.record(
        "frattini",
        algebra_fields(L),
        frattini_subalgebra=fr.frattini_subalgebra,
        frattini_ideal=fr.frattini_ideal.space,
        maximal_count=fr.maximal_count,
        phi_free=fr.is_phi_free,
        time_ms=t.ms,
    )


def cmd_subalgebras(args, out):
    L = fileformat.read(args.file)
    cfg = _config(args)
    t = _Timer()
    subs = scans.enumerate_subalgebras(L, cfg)
    which = "maximal" if args.maximal else "all"
    if args.maximal:
        subs = scans.maximal_subalgebras(L, cfg, subs)
    if not args.count_only:
        for i, S in enumerate(subs):
            out.record("subalgebra", index=i, dim=S.dim, basis=S.space, ideal=S.is_ideal)
    out.record("subalgebras", algebra_fields(L), which=which, count=len(subs), time_ms=t.ms)


def cmd_triang(args, out):
    L = fileformat.read(args.file)
    S = _subspace_arg(L, args.subalgebra)
    t = _Timer()
    res = triang.is_triangulable_on(L, S)
    cert = res.certificate
    out.record(
        "triangulable",
        algebra_fields(L),
        subalgebra=S,
        triangulable=res.verdict,
        derived=res.derived,
        descent_dims=[V.dim for V in cert.chain],
        stall_index=cert.stall_index,
        time_ms=t.ms,
    )


def cmd_nil(args, out):
    L = fileformat.read(args.file)
    S = _subspace_arg(L, args.subalgebra)
    t = _Timer()
    N = triang.nil_ideal(L, S, method=args.method, cfg=_config(args))
    out.record("nil", algebra_fields(L), subalgebra=S, nil=N.space, nil_dim=N.dim, time_ms=t.ms)


def cmd_twogen(args, out):
    L = fileformat.read(args.file)
    cfg = _config(args)
    t = _Timer()
    mode = [("mode", cfg.mode)] + ([("samples", cfg.samples), ("seed", cfg.seed)] if cfg.mode == "sampled" else [])
    if args.property:
        res = scans.twogen_subalgebra_scan(L, args.property, cfg)
        x, y, S = res.witness if res.witness else (None, None, None)
        out.record(
            "pair_scan",
            algebra_fields(L) + mode,
            property=args.property,
            status=res.status,
            x=x,
            y=y,
            subalgebra=S,
            scanned=res.scanned,
            time_ms=t.ms,
        )
        return
    res = scans.is_two_generated(L, cfg)
    verdict = {True: "true", False: "false", None: "unknown"}[res.verdict]
    out.record(
        "twogen",
        algebra_fields(L) + mode,
        two_generated=verdict,
        pair=list(res.pair) if res.pair else None,
        heuristic=res.heuristic,
        scanned=res.scanned,
        time_ms=t.ms,
    )


def cmd_theorems(args, out):
    L = fileformat.read(args.file)
    t = _Timer()
    for rep in harness.run_suite(L, args.suite, _config(args)):
        out.record("theorem", [("suite", args.suite)] + harness_items(rep))
    out.record("suite", algebra_fields(L), suite=args.suite, time_ms=t.ms)


def cmd_hunt(args, out):
    F = Field.parse(args.field)
    cfg = _config(args)
    t = _Timer()
    summary = hunt.conjecture_hunt(F, args.dim_min, args.dim_max, args.samples, args.seed, cfg)
    for rec in summary.records:
        items = hunt_items(rec)
        if rec.counterexample and args.dump_dir:
            items.append(("file", hunt.dump_counterexample(rec, args.dump_dir)))
        out.record("hunt", items)
    out.record(
        "hunt_summary",
        field=str(F),
        dim_min=args.dim_min,
        dim_max=args.dim_max,
        seed=str(args.seed),
        samples=summary.samples,
        valid=summary.valid,
        simple=summary.simple,
        hypothesis_met=summary.met,
        counterexamples=summary.counterexamples,
        time_ms=t.ms,
    )


def cmd_catalog(args, out):
    params = {}
    for kv in args.param:
        if "=" not in kv:
            raise UsageError(f"--param expects k=v, got {kv!r}")
        k, v = kv.split("=", 1)
        params[k] = v
    L = catalog.build(args.name, params)
    text = fileformat.serialize(L)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.record("catalog", algebra_fields(L), name=args.name, file=args.output)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="processes for scans (output does not depend on it)")
    common.add_argument("--no-timing", action="store_true", help="omit time_ms fields")
    common.add_argument("--max-subspaces", type=int, default=DEFAULT.max_subspaces)
    common.add_argument("--max-pairs", type=int, default=DEFAULT.max_pairs)
    common.add_argument("--max-elements", type=int, default=DEFAULT.max_elements)

    ap = _Parser(prog="lieprops", description="Exact structure checks for small Lie algebras.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="property verdicts")
    p.add_argument("file")
    p.add_argument("--props", help="comma-separated property names")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("series", parents=[common], help="derived or lower central series")
    p.add_argument("file")
    p.add_argument("--kind", choices=("derived", "lower-central"), default="derived")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("frattini", parents=[common], help="Frattini subalgebra and ideal (finite fields)")
    p.add_argument("file")
    p.set_defaults(func=cmd_frattini)

    p = sub.add_parser("subalgebras", parents=[common], help="subalgebra lattice (finite fields)")
    p.add_argument("file")
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_subalgebras)

    p = sub.add_parser("triang", parents=[common], help="triangulability of a subalgebra on L")
    p.add_argument("file")
    p.add_argument("--subalgebra", help='basis vectors "v1;v2;..." (default: L)')
    p.set_defaults(func=cmd_triang)

    p = sub.add_parser("nil", parents=[common], help="nil(S) for a triangulable subalgebra")
    p.add_argument("file")
    p.add_argument("--subalgebra", required=True, help='basis vectors "v1;v2;..."')
    p.add_argument("--method", choices=("auto", "exact", "fast", "bound"), default="auto")
    p.set_defaults(func=cmd_nil)

    p = sub.add_parser("twogen", parents=[common], help="two-generation, or a property scan of <x,y>")
    p.add_argument("file")
    p.add_argument("--property", choices=scans.SCAN_PROPERTIES)
    p.add_argument("--samples", type=int, help="sample N random pairs instead of an exhaustive scan")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_twogen)

    p = sub.add_parser("theorems", parents=[common], help="run a verification suite")
    p.add_argument("file")
    p.add_argument("--suite", required=True, choices=tuple(harness.SUITES))
    p.set_defaults(func=cmd_theorems)

    p = sub.add_parser("hunt", parents=[common], help="random search for non-two-generated simple minimal non-solvable algebras")
    p.add_argument("--field", required=True)
    p.add_argument("--dim-min", type=int, default=1)
    p.add_argument("--dim-max", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dump-dir", default="hunt-counterexamples", help="where counterexamples are written")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("catalog", parents=[common], help="write a catalog algebra in lie-sc format")
    p.add_argument("name", choices=tuple(catalog.BUILDERS))
    p.add_argument("--param", action="append", default=[], metavar="K=V")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)
    return ap


def _fail(code, exc) -> int:
    msg = " ".join(str(exc).split())
    sys.stderr.write(f"lieprops: {type(exc).__name__}: {msg}\n")
    return code


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.workers < 1:
        return _fail(EXIT_USAGE, UsageError("--workers must be at least 1"))
    out = ReportWriter(sys.stdout, timing=not args.no_timing)
    try:
        args.func(args, out)
    except UsageError as exc:
        return _fail(EXIT_USAGE, exc)
    except CapExceeded as exc:
        return _fail(EXIT_CAP, exc)
    except Unsupported as exc:
        return _fail(EXIT_UNSUPPORTED, exc)
    except (LieError, OSError, ValueError, KeyError) as exc:
        return _fail(EXIT_INPUT, exc)
    if args.command != "catalog" or args.output:
        out.finish()
    sys.stdout.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
