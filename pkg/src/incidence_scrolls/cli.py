"""Command-line front end.

    python -m incidence_scrolls [--json] [--timing] [--oracle pieri|tableau|both] COMMAND ...

Commands: invariants, fundamental, catalog, families, crosscheck.  Exit
codes: 0 success, 1 cross-check disagreement, 2 parse or usage error,
3 invalid base, 4 internal consistency fault.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import crosscheck as xc
from . import families, incidence, ktheory, schubert, tableau
from .base import IncidenceBase
from .errors import ConsistencyFault, DomainError, InvalidBaseError

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_INVALID_BASE = 3
EXIT_FAULT = 4


class UsageError(Exception):
    """Bad command-line input; maps to exit code 2."""


class _Exit(Exception):
    def __init__(self, code: int):
        self.code = code


# ---------------------------------------------------------------------------
# parsing


@dataclass(frozen=True)
class BaseSpec:
    """Ambient n plus (dimension, multiplicity) entries, as typed by the user."""

    n: int
    entries: tuple[tuple[int, int], ...]

    def to_base(self) -> IncidenceBase:
        return IncidenceBase(self.n, tuple(d for d, k in self.entries for _ in range(k)))

    def as_json(self) -> dict:
        return {"n": self.n, "base": [[d, k] for d, k in self.entries]}


def _int(text: str, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise UsageError(f"{what}: expected an integer, got {text!r}") from None


def parse_base_spec(n: int, text: str) -> BaseSpec:
    """Grammar: comma-separated dimensions, ``k*d`` meaning k copies of P^d."""
    if n < 2:
        raise UsageError(f"--n must be at least 2, got {n}")
    entries = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise UsageError(f"empty entry in base {text!r}")
        if "*" in item:
            k_text, d_text = item.split("*", 1)
            k, d = _int(k_text, "multiplicity"), _int(d_text, "dimension")
        else:
            k, d = 1, _int(item, "dimension")
        if k < 1:
            raise UsageError(f"multiplicity must be >= 1 in {item!r}")
        if not 0 <= d <= n - 1:
            raise UsageError(f"P^{d} is not a proper subspace of P^{n}")
        entries.append((d, k))
    return BaseSpec(n, tuple(entries))


def parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(_int(x, "list entry") for x in text.split(",") if x.strip())


def parse_range(text: str) -> range:
    """``"7"`` or ``"3..10"`` (inclusive)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = _int(lo, "range start"), _int(hi, "range end")
    else:
        lo_i = hi_i = _int(text, "n")
    if lo_i > hi_i:
        raise UsageError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


# ---------------------------------------------------------------------------
# reports


def _check(name: str, lhs, rhs) -> dict:
    return {"name": name, "lhs": str(lhs), "rhs": str(rhs), "pass": lhs == rhs}


def _report(inp: dict, valid: bool, degree, genus, checks: list[dict]) -> dict:
    return {
        "input": inp,
        "valid": valid,
        "degree": None if degree is None else str(degree),
        "genus": None if genus is None else str(genus),
        "genus_status": "ok" if genus is not None else "unavailable",
        "checks": checks,
    }


def _degrees(base: IncidenceBase, oracle: str) -> tuple[int, list[dict]]:
    """Degree by the requested oracle(s) and the agreement check when both run."""
    checks = []
    if oracle == "tableau":
        return tableau.count_fillings(base), checks
    degree = schubert.curve_class_degree(base)
    if oracle == "both":
        checks.append(_check("degree (Pieri vs tableau)", degree, tableau.count_fillings(base)))
    return degree, checks


def base_report(spec: BaseSpec, oracle: str) -> tuple[dict, int]:
    base = spec.to_base()
    inp = {"command": "invariants", "oracle": oracle, **spec.as_json()}
    rep = incidence.validate_base(base)
    checks = [_check("IS count (r*n - sum - r vs 2n - 3)", rep.lhs, rep.target)]
    if not rep.valid:
        return _report(inp, False, None, None, checks) | {"_diagnostic": rep.describe()}, EXIT_INVALID_BASE
    degree, deg_checks = _degrees(base, oracle)
    checks += deg_checks
    gen = incidence.genus_report(base, degree)
    extra = {"_genus_source": gen.source, "_genus_reason": gen.reason}
    if gen.source.startswith("standard family"):
        checks.append(_check(f"genus ({gen.source} vs K-theory)", gen.genus, ktheory.ktheory_genus(base)))
    core = base.without_hyperplanes()
    if core.dims and all(d == core.n - 2 for d in core.dims) and core.n >= 3:
        inv = incidence.fundamental_invariants(core.n)
        extra["_directrix"] = inv.min_directrix_degree
        checks.append(_check("directrix degree (formula vs Schubert count)", inv.min_directrix_degree, incidence.directrix_intersection(core.n)))
    code = EXIT_OK if all(c["pass"] for c in checks) else EXIT_DISAGREEMENT
    return _report(inp, True, degree, gen.genus, checks) | extra, code


def _public(report: dict) -> dict:
    return {k: v for k, v in report.items() if not k.startswith("_")}


def _family_row(res: families.FamilyResult) -> dict:
    key = res.key
    inp = {
        "family": key.family.value,
        "r": key.r,
        "e": key.e,
        "j": key.j,
        "h": list(key.h),
        "partition": None if res.partition is None else list(res.partition.parts),
        "base": res.base.pretty(),
    }
    checks = [_check(c.name, c.lhs, c.rhs) for c in res.checks]
    checks += [_check(f"note: {name}", value, res.invariants.degree) for name, value in res.notes]
    row = _report(inp, res.base.is_valid(), res.invariants.degree, res.invariants.genus, checks)
    row["_delta"] = res.delta
    row["_consistent"] = res.consistent
    return row


# ---------------------------------------------------------------------------
# output helpers


def _emit(args, payload: dict, text_lines: list[str], started: float) -> None:
    if args.timing:
        payload = dict(payload)
        payload["timing_ms"] = f"{(time.perf_counter() - started) * 1000:.3f}"
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)
        if args.timing:
            print(f"elapsed: {payload['timing_ms']} ms")


def _table(rows: list[list[str]], header: list[str]) -> list[str]:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    out += [fmt.format(*map(str, r)) for r in rows]
    return out


def _check_lines(checks: list[dict]) -> list[str]:
    return [f"  [{'ok' if c['pass'] else 'FAIL'}] {c['name']}: {c['lhs']} vs {c['rhs']}" for c in checks]


# ---------------------------------------------------------------------------
# commands


def cmd_invariants(args) -> int:
    t0 = time.perf_counter()
    spec = parse_base_spec(args.n, args.base)
    report, code = base_report(spec, args.oracle)
    lines = [f"base: {spec.to_base().pretty()}"]
    if not report["valid"]:
        lines.append(report["_diagnostic"])
    else:
        lines.append(f"degree: {report['degree']}")
        if report["genus"] is not None:
            lines.append(f"genus: {report['genus']}  ({report['_genus_source']})")
        else:
            lines.append(f"genus: unavailable ({report['_genus_reason']})")
        if report.get("_directrix") is not None:
            lines.append(f"minimal directrix degree: {report['_directrix']}")
    lines += _check_lines(report["checks"])
    _emit(args, _public(report), lines, t0)
    return code


def cmd_fundamental(args) -> int:
    t0 = time.perf_counter()
    rows, text_rows, code = [], [], EXIT_OK
    for n in parse_range(args.n):
        if n < 3:
            raise UsageError(f"the fundamental scroll needs n >= 3, got {n}")
        inv = incidence.fundamental_invariants(n)
        base = incidence.fundamental_base(n)
        checks = [
            _check("degree (Catalan vs Pieri)", inv.degree, schubert.curve_class_degree(base)),
            _check("genus (adjunction vs K-theory)", inv.genus, ktheory.ktheory_genus(base)),
            _check("directrix (formula vs Schubert count)", inv.min_directrix_degree, incidence.directrix_intersection(n)),
        ]
        if not all(c["pass"] for c in checks):
            code = EXIT_DISAGREEMENT
        rows.append(_report({"command": "fundamental", "n": n}, True, inv.degree, inv.genus, checks))
        ok = "ok" if all(c["pass"] for c in checks) else "MISMATCH"
        text_rows.append([n, inv.degree, inv.genus, inv.min_directrix_degree, ok])
    _emit(args, {"command": "fundamental", "rows": rows}, _table(text_rows, ["n", "d", "g", "directrix", "checks"]), t0)
    return code


def cmd_catalog(args) -> int:
    t0 = time.perf_counter()
    if not 3 <= args.n <= 8:
        raise UsageError(f"catalog supports 3 <= n <= 8, got {args.n}")
    rows, text_rows, code = [], [], EXIT_OK
    for base in incidence.catalog(args.n, include_cones=args.include_cones):
        inp = {"command": "catalog", "n": base.n, "base": base.pretty()}
        if args.invariants:
            counts = base.counts()
            spec = BaseSpec(base.n, tuple(sorted(counts.items())))
            rep, rc = base_report(spec, args.oracle)
            rep = _public(rep)
            rep["input"] = inp
            code = max(code, rc)
            agree = "ok" if all(c["pass"] for c in rep["checks"]) else "MISMATCH"
            text_rows.append([base.pretty(), rep["degree"], rep["genus"] or "-", agree])
        else:
            rep = _report(inp, True, None, None, [])
            text_rows.append([base.pretty()])
        rows.append(rep)
    header = ["base", "d", "g", "checks"] if args.invariants else ["base"]
    _emit(args, {"command": "catalog", "n": args.n, "rows": rows}, _table(text_rows, header), t0)
    return code


def _family_selection(args) -> list[families.FamilyKey]:
    fam = families.Family.parse(args.family)
    e = args.e if args.e is not None else 0
    j = args.j if args.j is not None else 0
    if fam is not families.Family.EGE1 and (args.e is not None or args.j is not None):
        raise UsageError(f"--e and --j only apply to ege1")
    if args.h is not None:
        return [families.FamilyKey(fam, args.r, parse_int_list(args.h), e, j)]
    keys = list(families.family_keys(fam, args.r, e, j))
    if args.all_partitions:
        if fam is families.Family.E0:
            return [families.key_from_partition_e0(args.r, lam) for lam in families.partitions_of(args.r - 1)]
        seen, picked = set(), []
        for key in sorted((k for k in keys if k.is_partition), key=lambda k: (len(k.h), k.h)):
            b = key.base().without_hyperplanes()
            if b not in seen:
                seen.add(b)
                picked.append(key)
        return sorted(picked, key=lambda k: k.partition().parts, reverse=True)
    return keys


def cmd_families(args) -> int:
    t0 = time.perf_counter()
    try:
        keys = _family_selection(args)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    rows, text_rows = [], []
    consistent = True
    for key in keys:
        res = families.family_invariants(key, strict=False)
        row = _family_row(res)
        consistent &= row["_consistent"]
        rows.append(_public(row))
        status = "ok" if row["_consistent"] else "closed-form mismatch"
        part = "-" if res.partition is None else str(res.partition)
        text_rows.append([",".join(map(str, key.h)), part, res.base.pretty(), res.invariants.degree, res.invariants.genus, res.delta, status])
    lines = _table(text_rows, ["h", "partition", "base", "d", "g", "Delta", "closed forms"])
    if not consistent:
        lines.append("closed-form mismatches are reported only; d and g come from Pieri and K-theory")
    if len(keys) == 1:
        lines += _check_lines(rows[0]["checks"])
    _emit(args, {"command": "families", "rows": rows}, lines, t0)
    if not consistent and args.strict:
        return EXIT_FAULT
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    t0 = time.perf_counter()
    report = xc.run_crosscheck(args.scope, strict_closed_forms=args.strict_closed_forms)
    suites_json = []
    text_rows = []
    for s in report.suites:
        kind = "oracle" if s.gating else "closed-form audit"
        counts_against = s.gating or report.strict_closed_forms
        status = "pass" if s.passed else ("FAIL" if counts_against else "deviations")
        text_rows.append([s.name, kind, s.cases, len(s.mismatches), status] + ([f"{s.seconds:.2f}s"] if args.timing else []))
        entry = {
            "name": s.name,
            "gating": s.gating,
            "cases": s.cases,
            "mismatch_count": len(s.mismatches),
            "mismatches": [
                {"check": m.check, "context": m.context, "lhs": str(m.lhs), "rhs": str(m.rhs)}
                for m in s.mismatches[: args.max_report]
            ],
        }
        if args.timing:
            entry["seconds"] = f"{s.seconds:.3f}"
        suites_json.append(entry)
    header = ["suite", "kind", "cases", "mismatches", "status"] + (["time"] if args.timing else [])
    lines = [f"crosscheck scope={report.scope.name}"] + _table(text_rows, header)
    for s in report.suites:
        if not s.mismatches:
            continue
        counts_against = s.gating or report.strict_closed_forms
        label = "offending" if counts_against else "deviating"
        lines.append(f"{label} tuples in '{s.name}' (first {min(args.max_report, len(s.mismatches))} of {len(s.mismatches)}):")
        lines += [f"  {m.describe()}" for m in s.mismatches[: args.max_report]]
    lines.append("result: " + ("PASS" if report.ok else "FAIL"))
    _emit(args, {"command": "crosscheck", "scope": report.scope.name, "ok": report.ok, "suites": suites_json}, lines, t0)
    return EXIT_OK if report.ok else EXIT_DISAGREEMENT


# ---------------------------------------------------------------------------
# argument parser


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--timing", action="store_true", default=d(False), help="report elapsed time")
    p.add_argument("--oracle", choices=["pieri", "tableau", "both"], default=d("pieri"), help="degree oracle(s)")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _Exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="incidence-scrolls", description="Degrees and genera of incidence scrolls.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="degree and genus of one base")
    _add_globals(p, suppress=True)
    p.add_argument("--n", type=int, required=True, help="ambient dimension")
    p.add_argument("--base", required=True, help='dimensions, e.g. "3*2,1" = three P^2 and one P^1')
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("fundamental", help="table of fundamental scrolls")
    _add_globals(p, suppress=True)
    p.add_argument("--n", default="3..10", help='one n or a range "lo..hi" (default 3..10)')
    p.set_defaults(func=cmd_fundamental)

    p = sub.add_parser("catalog", help="all IS-valid bases of P^n")
    _add_globals(p, suppress=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--invariants", action="store_true", help="add degree and genus columns")
    p.add_argument("--include-cones", action="store_true", help="keep bases containing a point")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("families", help="decomposable scroll families")
    _add_globals(p, suppress=True)
    p.add_argument("family", choices=["e0", "enot0", "ege1"])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--e", type=int)
    p.add_argument("--j", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--h", help='h_1,...,h_s, e.g. "2,1"')
    group.add_argument("--all-partitions", action="store_true", help="one row per indexing partition")
    p.add_argument("--strict", action="store_true", help="exit 4 when a closed form misses its oracle")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("crosscheck", help="run the oracle suites")
    _add_globals(p, suppress=True)
    p.add_argument("--scope", choices=sorted(xc.SCOPES), default="quick")
    p.add_argument("--strict-closed-forms", action="store_true", help="closed-form deviations also fail the run")
    p.add_argument("--max-report", type=int, default=10, help="offending tuples listed per suite")
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "families" and args.h is None and not args.all_partitions:
            parser.error("families needs --h or --all-partitions")
        return args.func(args)
    except _Exit as exc:
        return exc.code
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidBaseError as exc:
        print(f"invalid base: {exc}", file=sys.stderr)
        return EXIT_INVALID_BASE
    except ConsistencyFault as exc:
        print(f"consistency fault: {exc}", file=sys.stderr)
        return EXIT_FAULT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
