"""Command-line front end.

    hochschild check FILE        axiom and coherence suites
    hochschild complex FILE      differential matrices d^0..d^{K-1}
    hochschild cohomology FILE   HH^0..HH^{K-1}
    hochschild compare FILE      cochain differentials vs alternating coface sums
    hochschild selftest          simplex identities, SNF properties, unit monoid

Exit codes: 0 all checks pass, 1 usage, 2 parse/shape, 3 axiom failure,
4 resource ceiling, 5 internal invariant breach. JSON output carries no
timings, so identical inputs give byte-identical reports; ``--timing`` adds
them on stderr.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass

from .algebra import check_bimodule, check_monoid_axioms, regular_bimodule
from .coherence import coherence_suite
from .cohomology import cohomology_table
from .engine import (
    EngineConfig,
    build_cochain_complex,
    build_cosimplicial,
    check_cosimplicial_identities,
    check_dd_zero,
    compare_formulations,
)
from .errors import (
    AxiomFailure,
    HochschildError,
    InstanceError,
    InvariantBreach,
    ResourceCeilingError,
    RingError,
    ShapeError,
)
from .fixtures import unit_monoid
from .instance import FORMAT_VERSION, load_instance
from .linalg import Matrix, determinant, rank, smith_normal_form
from .report import AxiomReport
from .rings import QQ, ZZ
from .simplex import check_simplicial_identities, factorize, random_monotone, recompose

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_AXIOM, EXIT_CEILING, EXIT_BREACH = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Outcome:
    report: dict
    table: list
    code: int = EXIT_OK


def _check_block(report: AxiomReport, with_matrices=False):
    return report.summary(with_matrices)


def _base(args, digest=None):
    cmd = {"name": args.command, "max_degree": args.max_degree, "seed": args.seed}
    if getattr(args, "instance", None) is not None:
        cmd["instance"] = args.instance
    out = {"format_version": FORMAT_VERSION, "command": cmd}
    if digest is not None:
        out["instance_digest"] = "sha256:" + digest
    out["checks"] = {}
    return out


def _axioms(m, x):
    report = check_monoid_axioms(m)
    report.extend(check_bimodule(m, x))
    return report


def _require_axioms(inst, rep, lines):
    """Record the axiom suite; True if the engine may proceed."""
    report = _axioms(inst.monoid, inst.bimodule)
    rep["checks"]["axioms"] = _check_block(report)
    if not report.ok:
        lines.append("axiom failure: " + ", ".join(report.failed_names))
        return False
    return True


def _engine_config():
    # axioms are checked up front so failures land in the report
    return EngineConfig.from_env(check_axioms=False)


def cmd_check(args, inst) -> Outcome:
    rep = _base(args, inst.digest)
    lines = []
    axioms = _axioms(inst.monoid, inst.bimodule)
    rep["checks"]["axioms"] = _check_block(axioms, with_matrices=True)
    rng = random.Random(args.seed) if args.seed is not None else None
    coh = coherence_suite(inst.category, args.coherence_leaves, rng=rng,
                          samples=args.samples if rng is not None else None)
    rep["checks"]["coherence"] = _check_block(coh)
    for name, r in (("axioms", axioms), ("coherence", coh)):
        n = sum(1 for c in r.checks if c.status != "not applicable")
        lines.append(f"{name:<10} {'PASS' if r.ok else 'FAIL'}  ({n} diagrams)")
        lines.extend(f"  failed: {c.name}" for c in r.failures)
    ok = axioms.ok and coh.ok
    rep["ok"] = ok
    return Outcome(rep, lines, EXIT_OK if ok else EXIT_AXIOM)


def cmd_complex(args, inst) -> Outcome:
    rep = _base(args, inst.digest)
    lines = []
    if not _require_axioms(inst, rep, lines):
        rep["ok"] = False
        return Outcome(rep, lines, EXIT_AXIOM)
    c = build_cochain_complex(inst.monoid, inst.bimodule, args.max_degree, config=_engine_config())
    dd = check_dd_zero(c)
    rep["checks"]["d_squared_zero"] = _check_block(dd)
    rep["ranks"] = c.ranks()
    rep["differentials"] = [
        {"degree": k, "rows": d.rows, "cols": d.cols,
         "entries": [[inst.monoid.ring.format(v) for v in r] for r in d.to_rows()]}
        for k, d in enumerate(c.D)]
    lines.append("ranks of C^k: " + " ".join(map(str, c.ranks())))
    for k, d in enumerate(c.D):
        lines.append(f"d^{k}: {d.rows}x{d.cols}, {d.nonzero_count()} nonzero entries")
        if args.show_matrices:
            lines.append(d.pretty)
    lines.append(f"d∘d = 0: {'PASS' if dd.ok else 'FAIL'}")
    rep["ok"] = dd.ok
    return Outcome(rep, lines, EXIT_OK if dd.ok else EXIT_BREACH)


def cmd_cohomology(args, inst) -> Outcome:
    rep = _base(args, inst.digest)
    lines = []
    if not _require_axioms(inst, rep, lines):
        rep["ok"] = False
        return Outcome(rep, lines, EXIT_AXIOM)
    c = build_cochain_complex(inst.monoid, inst.bimodule, args.max_degree, config=_engine_config())
    dd = check_dd_zero(c)
    rep["checks"]["d_squared_zero"] = _check_block(dd)
    if not dd.ok:
        rep["ok"] = False
        return Outcome(rep, ["d∘d != 0: " + ", ".join(dd.failed_names)], EXIT_BREACH)
    table = cohomology_table(c)
    rep["ring"] = str(inst.monoid.ring)
    rep["cohomology"] = [g.to_dict() for g in table]
    lines.append(f"{'k':>3}  {'free':>5}  torsion")
    for g in table:
        tors = " + ".join(f"Z/{t}" for t in g.torsion) or "-"
        lines.append(f"{g.degree:>3}  {g.free_rank:>5}  {tors}")
    rep["ok"] = True
    return Outcome(rep, lines)


def cmd_compare(args, inst) -> Outcome:
    rep = _base(args, inst.digest)
    lines = []
    if not _require_axioms(inst, rep, lines):
        rep["ok"] = False
        return Outcome(rep, lines, EXIT_AXIOM)
    cfg = _engine_config()
    c = build_cochain_complex(inst.monoid, inst.bimodule, args.max_degree, config=cfg)
    a = build_cosimplicial(inst.monoid, inst.bimodule, args.max_degree, config=cfg)
    cmp_report = compare_formulations(c, a)
    ident = check_cosimplicial_identities(a)
    rep["checks"]["formulations_agree"] = _check_block(cmp_report)
    rep["checks"]["cosimplicial_identities"] = _check_block(ident)
    for k in range(args.max_degree):
        status = cmp_report.status_of(f"d^{k} = alternating coface sum")
        lines.append(f"degree {k}: {'EQUAL' if status == 'pass' else 'DIFFERENT'}")
    if cmp_report.ok:
        lines.append("EQUAL at all degrees")
    lines.append(f"cosimplicial identities: {'PASS' if ident.ok else 'FAIL'}")
    ok = cmp_report.ok and ident.ok
    rep["ok"] = ok
    return Outcome(rep, lines, EXIT_OK if ok else EXIT_BREACH)


def _snf_property_report(rng, count=50, max_dim=6, bound=9) -> AxiomReport:
    report = AxiomReport()
    for t in range(count):
        r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
        A = Matrix(ZZ, r, c, [rng.randint(-bound, bound) for _ in range(r * c)])
        res = smith_normal_form(A)
        D, U, V = res.D, res.U, res.V
        f = res.invariant_factors
        ok = (U @ A @ V == D
              and abs(determinant(U)) == 1 and abs(determinant(V)) == 1
              and all(f[i + 1] % f[i] == 0 for i in range(len(f) - 1))
              and len(f) == rank(Matrix(QQ, r, c, A.entries)))
        report.record(f"SNF properties, sample {t}", ok)
    return report


def cmd_selftest(args, inst=None) -> Outcome:
    rep = _base(args)
    rng = random.Random(args.seed if args.seed is not None else 0)
    simplex = check_simplicial_identities(6)
    for t in range(200):
        k, l = rng.randint(0, 6), rng.randint(0, 6)
        f = random_monotone(rng, k, l)
        faces, degs = factorize(f)
        simplex.record(f"factorize round trip {t}", recompose(faces, degs, f.source) == f)
    snf = _snf_property_report(rng)
    m = unit_monoid(ZZ)
    x = regular_bimodule(m)
    cfg = EngineConfig.from_env()
    unit = _axioms(m, x)
    c = build_cochain_complex(m, x, 5, config=cfg)
    a = build_cosimplicial(m, x, 5, config=cfg)
    unit.extend(check_dd_zero(c))
    unit.extend(compare_formulations(c, a))
    unit.extend(check_cosimplicial_identities(a))
    hh = [(g.free_rank, g.torsion) for g in cohomology_table(c)]
    unit.record("unit monoid HH = (1, 0, 0, 0, 0)", hh == [(1, ())] + [(0, ())] * 4,
                detail=str(hh))
    lines = []
    for name, r in (("simplex", simplex), ("snf", snf), ("unit_monoid", unit)):
        rep["checks"][name] = _check_block(r)
        lines.append(f"{name:<12} {'PASS' if r.ok else 'FAIL'}  ({len(r.checks)} checks)")
        lines.extend(f"  failed: {c.name}" for c in r.failures)
    ok = simplex.ok and snf.ok and unit.ok
    rep["ok"] = ok
    return Outcome(rep, lines, EXIT_OK if ok else EXIT_BREACH)


COMMANDS = {
    "check": cmd_check,
    "complex": cmd_complex,
    "cohomology": cmd_cohomology,
    "compare": cmd_compare,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-degree", type=int, default=4, metavar="K",
                        help="build C^0..C^K and report degrees 0..K-1 (default 4)")
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized sampling")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true",
                        help="print wall-clock time on stderr")

    p = _Parser(prog="hochschild", description="Hochschild cohomology of monoid objects")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common], help=COMMANDS[name].__name__[4:])
        if name != "selftest":
            sp.add_argument("instance", help="instance JSON file")
        if name == "check":
            sp.add_argument("--coherence-leaves", type=int, default=4,
                            help="max total leaves in coherence tuples (default 4)")
            sp.add_argument("--samples", type=int, default=200,
                            help="tuples per family when --seed is given")
        if name == "complex":
            sp.add_argument("--show-matrices", action="store_true")
    return p


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(outcome: Outcome, fmt):
    if fmt == "json":
        return json.dumps(outcome.report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    return "\n".join(outcome.table) + "\n"


def _error_outcome(args, code, kind, exc, digest=None):
    rep = _base(args, digest)
    rep["ok"] = False
    rep["error"] = {"kind": kind, "message": str(exc)}
    report = getattr(exc, "report", None)
    if report is not None:
        rep["checks"]["axioms"] = report.summary()
    return Outcome(rep, [f"error ({kind}): {exc}"], code)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: " + ", ".join(COMMANDS))
        if args.max_degree < 1:
            raise UsageError("--max-degree must be at least 1")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    start = time.perf_counter()
    digest = None
    try:
        inst = None
        if args.command != "selftest":
            inst = load_instance(args.instance)
            digest = inst.digest
        outcome = COMMANDS[args.command](args, inst)
    except (InstanceError, ShapeError, RingError, OSError) as exc:
        outcome = _error_outcome(args, EXIT_PARSE, "parse", exc, digest)
    except AxiomFailure as exc:
        outcome = _error_outcome(args, EXIT_AXIOM, "axiom", exc, digest)
    except ResourceCeilingError as exc:
        outcome = _error_outcome(args, EXIT_CEILING, "resource ceiling", exc, digest)
    except (InvariantBreach, HochschildError) as exc:
        outcome = _error_outcome(args, EXIT_BREACH, "invariant breach", exc, digest)

    _emit(_render(outcome, args.format), args.out)
    if outcome.code != EXIT_OK and args.format == "json":
        err = outcome.report.get("error", {}).get("message")
        if err:
            print(err, file=sys.stderr)
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return outcome.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
