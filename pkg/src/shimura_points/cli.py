"""Command-line front end.

Exit codes: 0 success or Proven, 1 Inconclusive or golden mismatch,
2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .abfield import AbelianField, decompose
from .fieldspec import FieldSpecSemanticError, FieldSpecSyntaxError, canonical, parse_field_spec
from .obstruction import (
    Inconclusive,
    Proven,
    UndefinedSBranch,
    emptiness_scan,
    hasse_report,
    theorem_check,
    validate_certificate,
    verdict_to_json,
)
from .quaternion import (
    QuaternionAlgebra,
    from_discriminant,
    from_symbol,
    is_indefinite_discriminant,
    splits_over,
)
from .table1_data import TABLE1
from .tracesets import trace_data

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    ok: bool
    version: str = __version__
    messages: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "ok": self.ok,
            "messages": self.messages,
            "version": self.version,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Report":
        return cls(data["command"], data["inputs"], data["result"], data["ok"],
                   data["version"], list(data["messages"]))


def _field(spec: str) -> tuple[str, AbelianField]:
    try:
        return canonical(spec), parse_field_spec(spec)
    except (FieldSpecSyntaxError, FieldSpecSemanticError) as exc:
        raise InputError(str(exc)) from exc


def _algebra(d: int) -> QuaternionAlgebra:
    try:
        return from_discriminant(d)
    except ValueError as exc:
        raise InputError(f"invalid discriminant: {exc}") from exc


# -- trace-sets ---------------------------------------------------------------

def run_trace_sets(N: int, e: int, want_d: bool = False) -> Report:
    if N < 2 or e < 1:
        raise InputError("need N >= 2 and e >= 1")
    if want_d and e % 2:
        raise InputError(f"non-integral D requested: e = {e} is odd")
    data = trace_data(N, e)
    result: dict[str, Any] = {"C": list(data.c_set)}
    if data.d_set is not None:
        result["D"] = list(data.d_set)
        result["P"] = list(data.p_set)
    return Report("trace-sets", {"N": N, "e": e}, result, True)


# -- table1 -------------------------------------------------------------------

def run_table1(goldens: dict | None = None) -> Report:
    goldens = TABLE1 if goldens is None else goldens
    diffs = []
    for (N, e), golden in sorted(goldens.items()):
        data = trace_data(N, e)
        computed = (set(data.c_set), set(data.d_set), set(data.p_set))
        for name, want, got in zip("CDP", golden, computed):
            if set(want) != got:
                diffs.append({
                    "row": [N, e],
                    "column": name,
                    "missing": sorted(set(want) - got),
                    "extra": sorted(got - set(want)),
                })
    rows_bad = {tuple(d["row"]) for d in diffs}
    n = len(goldens)
    summary = f"{n - len(rows_bad)}/{n} rows match"
    return Report("table1", {}, {"rows": n, "diffs": diffs}, not diffs, messages=[summary])


# -- check --------------------------------------------------------------------

def run_check(disc: int, spec: str, q: int | None = None, q_max: int = 100) -> Report:
    B = _algebra(disc)
    text, k = _field(spec)
    if q is not None:
        try:
            verdict = theorem_check(B, k, q, text)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    else:
        if q_max < 2:
            raise InputError("--qmax must be >= 2")
        verdict = emptiness_scan(B, k, q_max, text)
    inputs = {"disc": disc, "field": text, "q": q, "qmax": None if q is not None else q_max}
    return Report("check", inputs, verdict_to_json(verdict), not isinstance(verdict, Inconclusive))


# -- verify-paper -------------------------------------------------------------

REFERENCE_PAIRS = (
    (39, "Q(sqrt(2),sqrt(-13))", True, 2, (4, 1, 1), 13),
    (39, "Q(sqrt(-2),sqrt(-13))", True, 2, (4, 1, 1), 13),
    (62, "comp(cycsub(9;8),Q(sqrt(-39)))", False, 3, (6, 1, 1), 31),
    (86, "comp(cycsub(9;8),Q(sqrt(-15)))", False, 3, (6, 1, 1), 43),
)
REFERENCE_SYMBOLS = ((62, 13, 62), (86, 5, 86))


def run_verify_paper() -> Report:
    checks: list[dict[str, Any]] = []

    def record(name: str, expected: Any, got: Any) -> None:
        checks.append({"check": name, "expected": expected, "got": got, "ok": expected == got})

    for a, b, d in REFERENCE_SYMBOLS:
        alg = from_symbol(a, b)
        got = alg.discriminant if isinstance(alg, QuaternionAlgebra) else alg.kind
        record(f"symbol ({a},{b}) has discriminant", d, got)

    L39 = parse_field_spec("comp(cycsub(9;8),Q(sqrt(-39)))")
    dec = decompose(L39, 2)
    record("(e,f,g) of 2 in L(sqrt(-39))", [1, 3, 2], [dec.e, dec.f, dec.g])
    record("d=39 splits over Q(sqrt(-13))", True,
           splits_over(from_discriminant(39), parse_field_spec("Q(sqrt(-13))")).splits)

    reports = []
    for disc, spec, split, q, efg, witness in REFERENCE_PAIRS:
        B = from_discriminant(disc)
        k = parse_field_spec(spec)
        record(f"d={disc}, k={spec}: B splits over k", split, splits_over(B, k).splits)
        rep = hasse_report(B, k, q_max=100, spec=spec)
        reports.append(rep.to_json())
        v = rep.verdict
        if isinstance(v, Proven):
            c = v.certificate
            got = {"q": c.q, "efg": [c.e, c.f, c.g], "witness_p": c.witness_p,
                   "valid": validate_certificate(c)}
        else:
            got = {"verdict": v.kind}
        record(f"d={disc}, k={spec}: certificate",
               {"q": q, "efg": list(efg), "witness_p": witness, "valid": True}, got)
        record(f"d={disc}, k={spec}: Hasse counterexample", True, rep.counterexample)

    ok = all(c["ok"] for c in checks)
    passed = sum(c["ok"] for c in checks)
    return Report("verify-paper", {}, {"checks": checks, "reports": reports}, ok,
                  messages=[f"{passed}/{len(checks)} reference claims reproduced"])


# -- scan ---------------------------------------------------------------------

def indefinite_discriminants(d_max: int) -> list[int]:
    return [d for d in range(6, d_max + 1) if is_indefinite_discriminant(d)]


def _scan_one(task: tuple[int, str, int]) -> dict[str, Any] | None:
    disc, spec, q_max = task
    B = from_discriminant(disc)
    k = parse_field_spec(spec)
    rep = hasse_report(B, k, q_max, spec=spec)
    if isinstance(rep.verdict, Inconclusive):
        return None
    return rep.to_json()


def read_field_file(path: str) -> tuple[list[str], list[str]]:
    """Canonical spec lines and per-line error messages (blank and # lines skipped)."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    specs, errors = [], []
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            spec, _ = _field(text)
        except InputError as exc:
            errors.append(f"{path}:{lineno}: {exc}")
            continue
        specs.append(spec)
    return specs, errors


def run_scan(d_max: int, specs: list[str], q_max: int = 100,
             jobs: int = 1) -> Iterator[dict[str, Any]]:
    """Yield a Hasse report per non-Inconclusive pair, ordered by (disc, spec)."""
    tasks = sorted((d, s, q_max) for d in indefinite_discriminants(d_max) for s in set(specs))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves task order, so output does not depend on jobs
            for result in pool.map(_scan_one, tasks, chunksize=8):
                if result is not None:
                    yield result
    else:
        for task in tasks:
            result = _scan_one(task)
            if result is not None:
                yield result


# -- entry point --------------------------------------------------------------

def _emit(report: Report, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_json(), indent=2))
        return
    for msg in report.messages:
        print(msg)
    _print_human(report)


def _fmt(xs) -> str:
    return "{" + ", ".join(map(str, xs)) + "}"


def _print_human(report: Report) -> None:
    r = report.result
    if report.command == "trace-sets":
        print(f"C = {_fmt(r['C'])}")
        if "D" in r:
            print(f"D = {_fmt(r['D'])}")
            print(f"P = {_fmt(r['P'])}")
    elif report.command == "table1":
        for d in r["diffs"]:
            print(f"row {tuple(d['row'])} column {d['column']}: "
                  f"missing {d['missing']} extra {d['extra']}")
    elif report.command == "check":
        kind = r["kind"]
        print(f"verdict: {kind}")
        if kind == "Proven":
            print(json.dumps(r["certificate"], indent=2))
        elif kind == "ProvenRealPlace":
            print(r["evidence"])
        else:
            for reason in r["reasons"]:
                print(f"  q={reason['q']}: {reason['code']}: {reason['detail']}")
    elif report.command == "verify-paper":
        for c in r["checks"]:
            print(f"[{'PASS' if c['ok'] else 'FAIL'}] {c['check']}: {c['got']}")
        for rep in r["reports"]:
            if rep["label"]:
                print(f"d={rep['disc']}, k={rep['field_spec']}: {rep['label']}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shimura-points", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace-sets", help="print C(N,e), D(N,e) and P(D(N,e))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", action="store_true", help="require D (error for odd e)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("table1", help="recompute the trace-set table and diff against goldens")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="test the emptiness criterion for (B, k)")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--field", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--q", type=int)
    group.add_argument("--qmax", type=int, default=100)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-paper", help="reproduce the Hasse-principle counterexamples")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scan", help="scan discriminants against a file of field specs")
    p.add_argument("--disc-max", type=int, required=True)
    p.add_argument("--fields", required=True)
    p.add_argument("--qmax", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "scan":
            specs, errors = read_field_file(args.fields)
            for err in errors:
                print(err, file=sys.stderr)
            if args.qmax < 2 or args.jobs < 1:
                raise InputError("--qmax must be >= 2 and --jobs >= 1")
            for line in run_scan(args.disc_max, specs, args.qmax, args.jobs):
                print(json.dumps(line, sort_keys=True), flush=True)
            return EXIT_OK
        if args.command == "trace-sets":
            report = run_trace_sets(args.n, args.e, args.d)
        elif args.command == "table1":
            report = run_table1()
        elif args.command == "check":
            report = run_check(args.disc, args.field, args.q, args.qmax)
        else:
            report = run_verify_paper()
    except (InputError, UndefinedSBranch, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(report, args.json)
    return EXIT_OK if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
