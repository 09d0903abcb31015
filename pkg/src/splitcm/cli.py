"""``splitcm`` command line.

Exit codes: 0 affirmative verdict, 1 negative verdict, 2 input error.
With ``--json`` every command prints one RunReport object, serialized with
sorted keys so that load + dump reproduces the bytes exactly.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import __version__
from .cm import cm_report, explain_cm, is_cm
from .corpus import SCANS
from .families import (
    FamilyPreconditionError,
    classify_cm_polymatroidal,
    is_componentwise_polymatroidal,
    is_polymatroidal,
    is_tspread_strongly_stable,
    squarefree_veronese,
    tspread_cm_criterion,
    veronese,
)
from .graphs import is_bicm, parse_graph
from .monomial import MonomialIdeal, ParseError, parse_ideal
from .oracle import DEFAULT_PRIMES, FieldSpec, oracle_betti, oracle_summary
from .splitting import betti_table, certificate_to_json, certify_vertex_splittable, format_certificate

OK, NEGATIVE, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    input_digest: Optional[str]
    verdicts: dict
    result: dict = field(default_factory=dict)
    timings: Optional[dict] = None
    version: str = __version__

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "input_digest": self.input_digest,
            "verdicts": self.verdicts,
            "result": self.result,
            "version": self.version,
        }
        if self.timings is not None:
            out["timings"] = self.timings
        return out

    def dumps(self) -> str:
        return dumps(self.to_json())


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


@dataclass
class Outcome:
    code: int
    verdicts: dict
    result: dict
    text: str


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def _ideal(text: str) -> MonomialIdeal:
    try:
        return parse_ideal(text)
    except ParseError as exc:
        raise InputError(str(exc)) from exc


def _fields(values: Optional[Sequence[int]]) -> list[int]:
    primes = list(values) if values else list(DEFAULT_PRIMES)
    try:
        return [FieldSpec(p).characteristic for p in primes]
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# ---------------------------------------------------------------------------
# commands: each maps (args, text) -> Outcome
# ---------------------------------------------------------------------------


def cmd_split(args, text: str) -> Outcome:
    I = _ideal(text)
    cert = certify_vertex_splittable(I)
    if cert is None:
        return Outcome(NEGATIVE, {"vertex_splittable": False}, {"ideal": str(I)},
                       f"{I}: not vertex splittable\n")
    return Outcome(OK, {"vertex_splittable": True},
                   {"ideal": str(I), "certificate": certificate_to_json(cert)},
                   format_certificate(cert, I.ring) + "\n")


def cmd_betti(args, text: str) -> Outcome:
    I = _ideal(text)
    cert = certify_vertex_splittable(I)
    if cert is not None:
        table, route = betti_table(cert), "recursive"
    else:
        table, route = oracle_betti(I, args.field), f"oracle GF({args.field})"
    shown = table.quotient() if args.quotient else table
    label = "S/I" if args.quotient else "I"
    return Outcome(OK, {"vertex_splittable": cert is not None},
                   {"route": route, "module": label, "betti": shown.to_json()},
                   f"Betti table of {label} ({route})\n{shown.format()}\n")


def cmd_cm(args, text: str) -> Outcome:
    I = _ideal(text)
    if I.is_unit() or I.is_zero():
        raise InputError("cm needs a proper nonzero ideal")
    cert = certify_vertex_splittable(I)
    if cert is None and not args.oracle:
        raise InputError(f"{I} is not vertex splittable; rerun with --oracle for the brute-force route")
    if cert is None:
        s = oracle_summary(I, args.field)
        report = {"cm": s.cm, "depth": s.depth, "dim": s.krull_dim, "projdim": s.projdim,
                  "reg": s.reg, "gorenstein": s.gorenstein, "route": f"oracle GF({args.field})"}
        if s.cm:
            report.update(cm_type=s.cm_type, level=s.level, pseudo_gorenstein=s.pseudo_gorenstein)
    else:
        report = cm_report(I, explain=args.explain)
        report["route"] = "recursive"
    lines = [f"{I}", "  " + "  ".join(f"{k}={report[k]}" for k in
             ("cm", "depth", "dim", "projdim", "reg", "cm_type", "gorenstein", "level", "pseudo_gorenstein")
             if k in report)]
    if args.explain and cert is not None:
        lines.append(explain_cm(cert, I.ring).format())
    verdicts = {"cm": report["cm"], "vertex_splittable": cert is not None}
    return Outcome(OK if report["cm"] else NEGATIVE, verdicts, report, "\n".join(lines) + "\n")


def _parse_spread(value: str) -> tuple[int, ...]:
    try:
        t = tuple(int(s) for s in value.split(","))
    except ValueError as exc:
        raise InputError(f"bad spread vector {value!r}") from exc
    if not t or any(x < 0 for x in t):
        raise InputError(f"bad spread vector {value!r}")
    return t


def cmd_classify(args, text: str) -> Outcome:
    I = _ideal(text)
    if args.tspread is not None:
        t = _parse_spread(args.tspread)
        try:
            ss = is_tspread_strongly_stable(I, t)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if not ss:
            return Outcome(NEGATIVE, {"tspread_strongly_stable": False}, {"t": list(t)},
                           f"{I}: not {t}-spread strongly stable\n")
        try:
            crit = tspread_cm_criterion(I, t)
        except FamilyPreconditionError as exc:
            raise InputError(str(exc)) from exc
        return Outcome(OK if crit else NEGATIVE, {"tspread_strongly_stable": True, "witness_criterion": crit},
                       {"t": list(t)}, f"{I}: {t}-spread strongly stable, witness criterion {crit}\n")
    if I.is_zero() or I.is_unit():
        raise InputError("classify needs a proper nonzero ideal")
    if len(set(I.degrees())) > 1:
        if not is_componentwise_polymatroidal(I):
            return Outcome(NEGATIVE, {"polymatroidal": False, "componentwise_polymatroidal": False}, {},
                           f"{I}: not componentwise polymatroidal\n")
        cm = is_cm(I)[0]
        return Outcome(OK if cm else NEGATIVE,
                       {"polymatroidal": False, "componentwise_polymatroidal": True, "cm": cm}, {},
                       f"{I}: componentwise polymatroidal (not equigenerated), cm={cm}\n")
    if not is_polymatroidal(I):
        return Outcome(NEGATIVE, {"polymatroidal": False, "componentwise_polymatroidal": False}, {},
                       f"{I}: not polymatroidal\n")
    cls = classify_cm_polymatroidal(I)
    return Outcome(OK if cls.is_cm else NEGATIVE,
                   {"polymatroidal": True, "componentwise_polymatroidal": True, "cm": cls.is_cm},
                   cls.to_json(), f"{I}: polymatroidal, class {cls.tag.value}, cm={cls.is_cm}\n")


def cmd_bicm(args, text: str) -> Outcome:
    try:
        G = parse_graph(text)
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    rep = is_bicm(G, literal=args.literal)
    body = rep.to_json()
    return Outcome(OK if rep.bicm else NEGATIVE, {"bicm": rep.bicm}, body,
                   "  ".join(f"{k}={v}" for k, v in sorted(body.items())) + "\n")


def cmd_verify(args, text: str) -> Outcome:
    I = _ideal(text)
    primes = _fields(args.fields)
    cert = certify_vertex_splittable(I)
    tables = {p: oracle_betti(I, p) for p in primes}
    result = {"oracle": {str(p): t.to_json() for p, t in tables.items()}}
    lines = []
    if cert is None:
        same = len({t for t in tables.values()}) == 1
        result["field_independent"] = same
        lines.append(f"{I}: not vertex splittable; oracle tables agree across fields: {same}")
        return Outcome(NEGATIVE, {"vertex_splittable": False, "agree": None}, result, "\n".join(lines) + "\n")
    rec = betti_table(cert)
    result["recursive"] = rec.to_json()
    agree = {str(p): t == rec for p, t in tables.items()}
    lines.append(f"{I}")
    lines.extend(f"  GF({p}): {'equal' if ok else 'DIFFERENT'}" for p, ok in agree.items())
    ok = all(agree.values())
    return Outcome(OK if ok else NEGATIVE, {"vertex_splittable": True, "agree": agree}, result,
                   "\n".join(lines) + "\n")


def cmd_gen(args, text: Optional[str]) -> Outcome:
    if args.veronese:
        n, d = args.veronese
        family = "veronese"
    else:
        n, d = args.sqfree_veronese
        family = "squarefree_veronese"
    if n < 1 or d < 1 or (family == "squarefree_veronese" and d > n):
        raise InputError(f"invalid parameters n={n}, d={d}")
    I = veronese(n, d) if family == "veronese" else squarefree_veronese(n, d)
    return Outcome(OK, {}, {"family": family, "n": n, "d": d, "ideal": I.to_text()}, I.to_text())


def cmd_corpus(args, text: Optional[str]) -> Outcome:
    names = args.scan or list(SCANS)
    unknown = [s for s in names if s not in SCANS]
    if unknown:
        raise InputError(f"unknown scan(s) {unknown}; choose from {sorted(SCANS)}")
    results = {}
    seconds = {}
    lines = []
    for name in names:
        r = SCANS[name](args.seed)
        results[name] = r.to_json()
        seconds[name] = round(r.seconds, 3)
        lines.append(f"{name:18s} {'ok' if r.ok else 'FAIL':4s} checked={r.checked} failures={len(r.failures)}")
    ok = all(r["ok"] for r in results.values())
    verdicts = {name: r["ok"] for name, r in results.items()}
    out = Outcome(OK if ok else NEGATIVE, verdicts, {"seed": args.seed, "scans": results}, "\n".join(lines) + "\n")
    out.result["_seconds"] = seconds
    return out


COMMANDS: dict[str, tuple[Callable, bool]] = {
    "split": (cmd_split, True),
    "betti": (cmd_betti, True),
    "cm": (cmd_cm, True),
    "classify": (cmd_classify, True),
    "bicm": (cmd_bicm, True),
    "verify": (cmd_verify, True),
    "gen": (cmd_gen, False),
    "corpus": (cmd_corpus, False),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="splitcm", description="Vertex splittings of monomial ideals.")
    ap.add_argument("--version", action="version", version=f"splitcm {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_file=True):
        if needs_file:
            p.add_argument("file", help="input file, or - for stdin")
        p.add_argument("--json", action="store_true", help="print a JSON RunReport")
        p.add_argument("--timings", action="store_true", help="include wall-clock timings in the JSON report")
        return p

    common(sub.add_parser("split", help="vertex splitting certificate"))
    p = common(sub.add_parser("betti", help="graded Betti table"))
    p.add_argument("--quotient", action="store_true", help="show S/I instead of I")
    p.add_argument("--field", type=int, default=32003, help="oracle characteristic when no certificate exists")
    p = common(sub.add_parser("cm", help="Cohen-Macaulay report"))
    p.add_argument("--explain", action="store_true", help="include the splitting explanation tree")
    p.add_argument("--oracle", action="store_true", help="allow the brute-force route for non-splittable input")
    p.add_argument("--field", type=int, default=32003)
    p = common(sub.add_parser("classify", help="family criteria"))
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--polymatroidal", action="store_true")
    g.add_argument("--tspread", metavar="T", help="spread vector, e.g. 1,0,2")
    p = common(sub.add_parser("bicm", help="bi-Cohen-Macaulay test for a graph"))
    p.add_argument("--literal", action="store_true", help="forward-degree identity only, without the base-case check")
    p = common(sub.add_parser("verify", help="compare recursive and oracle Betti tables"))
    p.add_argument("--field", dest="fields", type=int, action="append", help="characteristic (repeatable)")
    p = common(sub.add_parser("gen", help="generate a family member"), needs_file=False)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--veronese", type=int, nargs=2, metavar=("N", "D"))
    g.add_argument("--sqfree-veronese", type=int, nargs=2, metavar=("N", "D"))
    p = common(sub.add_parser("corpus", help="run cross-validation scans"), needs_file=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scan", action="append", help=f"scan name (repeatable): {', '.join(SCANS)}")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    fn, needs_file = COMMANDS[args.command]
    t0 = time.perf_counter()
    try:
        text = _read(args.file) if needs_file else None
        out = fn(args, text)
    except InputError as exc:
        print(f"splitcm {args.command}: {exc}", file=sys.stderr)
        return INPUT_ERROR
    elapsed = time.perf_counter() - t0
    seconds = out.result.pop("_seconds", None)
    if args.json:
        timings = None
        if args.timings:
            timings = {"total": round(elapsed, 3)}
            if seconds:
                timings.update(seconds)
        report = RunReport(args.command, _digest(text) if text is not None else None,
                           out.verdicts, out.result, timings)
        sys.stdout.write(report.dumps())
    else:
        sys.stdout.write(out.text)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
