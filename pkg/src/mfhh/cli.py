"""Command-line front end.

Subcommands:

* ``group``  -- character-lattice structure, kernel order, element list
* ``milnor`` -- Milnor number of the polynomial
* ``hh``     -- cohomology dimension table over a degree range
* ``verify`` -- closed-form degree-0 / degree-n predictions (exit 0 on pass,
  2 on mismatch, 3 when the hypotheses do not apply)
* ``oracle`` -- bounded rescan compared against the closed-form engine
  (exit 0 iff they agree on every degree)

Reports contain only exact integers and reduced fraction strings; JSON
output is canonical (fixed key order, no whitespace) so re-serializing a
parsed report reproduces it byte for byte.  Exit codes: 1 for usage errors,
4 when a computation aborts on Overflow or AmbiguousGrading (the error name
goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from mfhh.charlat import AmbiguousGradingError, GroupElement
from mfhh.diagpoly import DiagonalPolynomial, milnor_number
from mfhh.hhengine import HHReport, HochschildEngine, verify_proposition
from mfhh.intlat import IntegerOverflowError


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    exponents: tuple[int, ...]
    stabilized: bool
    k_min: int
    k_max: int
    fmt: str
    witnesses: bool
    parallel: int
    a0_bound: int | None
    u_bound: int | None


def _parse_exponents(text: str) -> tuple[int, ...]:
    try:
        exps = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not exps:
        raise argparse.ArgumentTypeError("exponent list is empty")
    if any(k < 2 for k in exps):
        raise argparse.ArgumentTypeError("every exponent must be >= 2")
    return exps


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mfhh", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add_common(p, k_range=False, witnesses=False, bounds=False):
        p.add_argument("--exponents", required=True, type=_parse_exponents,
                       metavar="k1,k2,...", help="diagonal exponents, each >= 2")
        p.add_argument("--stabilize", action="store_true",
                       help="adjoin the extra degree-compensating variable z0")
        p.add_argument("--format", dest="fmt", default="table",
                       choices=["table", "json", "csv"])
        p.add_argument("--parallel", type=int, default=1, metavar="N",
                       help="fan the per-group-element work out over N processes")
        if k_range:
            p.add_argument("--k-min", type=int, default=None)
            p.add_argument("--k-max", type=int, default=None)
        if witnesses:
            p.add_argument("--witnesses", action="store_true",
                           help="list every contribution behind each dimension")
        if bounds:
            p.add_argument("--a0-bound", type=int, default=None, metavar="B",
                           help="stabilizer-power scan bound (default: engine max + 10)")
            p.add_argument("--u-bound", type=int, default=None, metavar="U",
                           help="chi-multiple scan bound (default: wide enough for the range)")

    add_common(sub.add_parser("group", help="print the symmetry group data"))
    add_common(sub.add_parser("milnor", help="print the Milnor number"))
    add_common(sub.add_parser("hh", help="print the dimension table"),
               k_range=True, witnesses=True)
    add_common(sub.add_parser("verify", help="check the closed-form predictions"))
    add_common(sub.add_parser("oracle", help="compare the bounded rescan with the engine"),
               k_range=True, bounds=True)
    return parser


def _config_from_args(args) -> RunConfig:
    exps = args.exponents
    n = len(exps) - 1
    k_min = getattr(args, "k_min", None)
    k_max = getattr(args, "k_max", None)
    if k_min is None:
        k_min = -2 * n
    if k_max is None:
        k_max = 2 * n
    if k_min > k_max:
        raise _UsageError(f"--k-min {k_min} exceeds --k-max {k_max}")
    if args.parallel < 1:
        raise _UsageError("--parallel must be >= 1")
    if args.fmt == "csv" and args.subcommand != "hh":
        raise _UsageError("csv output is only defined for the hh subcommand")
    a0_bound = getattr(args, "a0_bound", None)
    u_bound = getattr(args, "u_bound", None)
    if a0_bound is not None and a0_bound < 0:
        raise _UsageError("--a0-bound must be >= 0")
    if u_bound is not None and u_bound < 0:
        raise _UsageError("--u-bound must be >= 0")
    return RunConfig(
        subcommand=args.subcommand,
        exponents=exps,
        stabilized=args.stabilize,
        k_min=k_min,
        k_max=k_max,
        fmt=args.fmt,
        witnesses=getattr(args, "witnesses", False),
        parallel=args.parallel,
        a0_bound=a0_bound,
        u_bound=u_bound,
    )


def canonical_json(payload) -> str:
    """Serializer used for every JSON report: fixed key order as built,
    no whitespace, no floats anywhere."""
    return json.dumps(payload, separators=(",", ":"))


def _phase_strings(gamma: GroupElement) -> list[str]:
    return [str(q) for q in gamma.phases]


def _monomial_string(exponents, variables) -> str:
    parts = [f"z{v}^{a}" for v, a in zip(variables, exponents) if a]
    return " ".join(parts) if parts else "1"


def _header_lines(exps, stabilized) -> list[str]:
    tag = " (stabilized)" if stabilized else ""
    return [f"exponents : {','.join(str(k) for k in exps)}{tag}"]


# -- hh ---------------------------------------------------------------------

def _witness_payload(w, kernel):
    return {
        "gamma_index": w.gamma_index,
        "gamma": _phase_strings(kernel[w.gamma_index]),
        "summand": w.summand,
        "monomial": list(w.exponents),
        "u": w.u,
    }


def _hh_payload(report: HHReport, kernel):
    rows = []
    for row in report.dimensions:
        item = {"k": row.degree, "dim": row.dim}
        if row.witnesses is not None:
            item["witnesses"] = [_witness_payload(w, kernel) for w in row.witnesses]
        rows.append(item)
    return {
        "exponents": list(report.exponents),
        "stabilized": report.stabilized,
        "kerchi_order": report.kerchi_order,
        "milnor": report.milnor,
        "hh": rows,
        "engine": report.engine,
    }


def _print_hh_table(report: HHReport, engine: HochschildEngine, out):
    for line in _header_lines(report.exponents, report.stabilized):
        print(line, file=out)
    print(f"|ker chi| : {report.kerchi_order}", file=out)
    print(f"milnor    : {report.milnor}", file=out)
    print(f"engine    : {report.engine}", file=out)
    print(f"{'k':>5} {'dim':>8}", file=out)
    variables = engine.polynomial.variables
    for row in report.dimensions:
        print(f"{row.degree:>5} {row.dim:>8}", file=out)
        if row.witnesses:
            for w in row.witnesses:
                phases = ",".join(_phase_strings(engine.kernel[w.gamma_index]))
                print(f"        gamma[{w.gamma_index}]=({phases})  {w.summand}"
                      f"  u={w.u}  {_monomial_string(w.exponents, variables)}",
                      file=out)


def cmd_hh(cfg: RunConfig, out) -> int:
    engine = HochschildEngine(DiagonalPolynomial(cfg.exponents, cfg.stabilized))
    report = engine.table(cfg.k_min, cfg.k_max, witnesses=cfg.witnesses,
                          parallel=cfg.parallel)
    if cfg.fmt == "json":
        print(canonical_json(_hh_payload(report, engine.kernel)), file=out)
    elif cfg.fmt == "csv":
        print("k,dim", file=out)
        for row in report.dimensions:
            print(f"{row.degree},{row.dim}", file=out)
    else:
        _print_hh_table(report, engine, out)
    return 0


# -- group / milnor ----------------------------------------------------------

def cmd_group(cfg: RunConfig, out) -> int:
    engine = HochschildEngine(DiagonalPolynomial(cfg.exponents, cfg.stabilized))
    lat = engine.lattice
    if cfg.fmt == "json":
        payload = {
            "exponents": list(cfg.exponents),
            "stabilized": cfg.stabilized,
            "free_rank": 1,
            "torsion": list(lat.torsion_mods),
            "kerchi_order": len(engine.kernel),
            "elements": [_phase_strings(g) for g in engine.kernel],
        }
        print(canonical_json(payload), file=out)
    else:
        for line in _header_lines(cfg.exponents, cfg.stabilized):
            print(line, file=out)
        torsion = " + ".join(f"Z/{d}" for d in lat.torsion_mods)
        print(f"lattice   : Z{' + ' + torsion if torsion else ''}", file=out)
        print(f"|ker chi| : {len(engine.kernel)}", file=out)
        print("elements (phases, z0 first when stabilized):", file=out)
        for i, gamma in enumerate(engine.kernel):
            print(f"  {i:>6}  ({','.join(_phase_strings(gamma))})", file=out)
    return 0


def cmd_milnor(cfg: RunConfig, out) -> int:
    mu = milnor_number(DiagonalPolynomial(cfg.exponents, cfg.stabilized))
    if cfg.fmt == "json":
        payload = {
            "exponents": list(cfg.exponents),
            "stabilized": cfg.stabilized,
            "milnor": mu,
        }
        print(canonical_json(payload), file=out)
    else:
        print(mu, file=out)
    return 0


# -- verify -------------------------------------------------------------------

def cmd_verify(cfg: RunConfig, out) -> int:
    report = verify_proposition(DiagonalPolynomial(cfg.exponents, cfg.stabilized))
    if cfg.fmt == "json":
        payload = {
            "exponents": list(cfg.exponents),
            "stabilized": cfg.stabilized,
            "status": report.status,
            "reasons": list(report.reasons),
            "checks": [
                {"label": c.label, "degree": c.degree,
                 "computed": c.computed, "expected": c.expected}
                for c in report.checks
            ],
        }
        print(canonical_json(payload), file=out)
    else:
        for line in _header_lines(cfg.exponents, cfg.stabilized):
            print(line, file=out)
        print(f"status    : {report.status}", file=out)
        for reason in report.reasons:
            print(f"  reason  : {reason}", file=out)
        for c in report.checks:
            mark = "ok" if c.computed == c.expected else "MISMATCH"
            print(f"  {c.label}: computed {c.computed}, expected {c.expected}  [{mark}]",
                  file=out)
    if report.status == "pass":
        return 0
    if report.status == "mismatch":
        return 2
    return 3


# -- oracle --------------------------------------------------------------------

def cmd_oracle(cfg: RunConfig, out) -> int:
    engine = HochschildEngine(DiagonalPolynomial(cfg.exponents, cfg.stabilized))
    closed = engine.table(cfg.k_min, cfg.k_max, parallel=cfg.parallel)
    a0_bound = cfg.a0_bound
    if a0_bound is None:
        a0_bound = closed.max_a0 + 10
    u_bound = cfg.u_bound
    if u_bound is None:
        span = max(abs(cfg.k_min), abs(cfg.k_max)) + len(engine.polynomial.variables) + 1
        u_bound = max(20, span // 2 + 1)
    oracle = engine.bruteforce_report(cfg.k_min, cfg.k_max, a0_bound, u_bound)
    mismatches = [
        (c.degree, c.dim, o.dim)
        for c, o in zip(closed.dimensions, oracle.dimensions)
        if c.dim != o.dim
    ]
    if cfg.fmt == "json":
        print(canonical_json(_hh_payload(oracle, engine.kernel)), file=out)
    else:
        for line in _header_lines(cfg.exponents, cfg.stabilized):
            print(line, file=out)
        print(f"bounds    : a0 <= {a0_bound}, |u| <= {u_bound}", file=out)
        print(f"{'k':>5} {'engine':>8} {'oracle':>8}  agree", file=out)
        for c, o in zip(closed.dimensions, oracle.dimensions):
            print(f"{c.degree:>5} {c.dim:>8} {o.dim:>8}  {'yes' if c.dim == o.dim else 'NO'}",
                  file=out)
        print(f"status    : {'agree' if not mismatches else 'DISAGREE'}", file=out)
    for k, c, o in mismatches:
        print(f"oracle mismatch at k={k}: engine {c}, oracle {o}", file=sys.stderr)
    return 0 if not mismatches else 2


_COMMANDS = {
    "group": cmd_group,
    "milnor": cmd_milnor,
    "hh": cmd_hh,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def run(argv, out=None) -> int:
    """Parse argv, dispatch, and return the process exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config_from_args(args)
    except _UsageError as exc:
        print(f"mfhh: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        code = exc.code
        return 0 if code in (None, 0) else int(code)
    try:
        return _COMMANDS[cfg.subcommand](cfg, out)
    except IntegerOverflowError as exc:
        print(f"Overflow: {exc}", file=sys.stderr)
        return 4
    except AmbiguousGradingError as exc:
        print(f"AmbiguousGrading: {exc}", file=sys.stderr)
        return 4


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
