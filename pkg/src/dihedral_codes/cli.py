"""Command-line front end: ``dihedral-codes <command> [options]``.

Exit status: 0 success, 2 parse error, 3 precondition failure, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from . import verify as suites
from .dihedral import (
    DihedralSpec,
    bch_dihedral_generator,
    binary_bch_generator,
    binary_condition,
    code_from_generator,
    export_generator_matrix,
    make_spec,
)
from .distance import DEFAULT_EXHAUSTIVE_CAP
from .errors import DegenerateGenerator, DihedralCodesError, ParseError, PreconditionError
from .presets import KNOWN_DISCREPANCIES, PRESETS
from .report import SCHEMA_VERSION, analyze

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4

FORMAT_ENV = "DIHEDRAL_CODES_FORMAT"
METHODS = ("auto", "exhaustive", "bz", "bound-only")


class VerificationFailed(Exception):
    """Carries an already rendered document whose checks did not all pass."""

    def __init__(self, document):
        super().__init__("verification failed")
        self.document = document


# -- argument parsing ----------------------------------------------------------


def _bounded(lo: int, hi: int | None = None):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if v < lo or (hi is not None and v > hi):
            span = f">= {lo}" if hi is None else f"in [{lo}, {hi}]"
            raise argparse.ArgumentTypeError(f"{v} is not {span}")
        return v

    return parse


def _add_output(p: argparse.ArgumentParser) -> None:
    default = os.environ.get(FORMAT_ENV, "text")
    if default not in ("text", "json"):
        default = "text"
    p.add_argument("--format", choices=("text", "json"), default=default,
                   help=f"output format (default from ${FORMAT_ENV}, else text)")
    p.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")


def _add_distance(p: argparse.ArgumentParser) -> None:
    p.add_argument("--distance-method", choices=METHODS, default="auto")
    p.add_argument("--exhaustive-cap", type=_bounded(1, 62), default=DEFAULT_EXHAUSTIVE_CAP,
                   help="auto uses exhaustive search while k*log2(q) <= cap")
    p.add_argument("--budget", type=_bounded(1), default=None,
                   help="maximum enumerated combinations for Brouwer-Zimmermann")


def _add_code(p: argparse.ArgumentParser, with_bch: bool) -> None:
    p.add_argument("--q", type=_bounded(2), default=2)
    p.add_argument("--m", type=_bounded(3))
    p.add_argument("--gen", help="generator coefficients over F_{q^2}, ascending, e.g. '1,a^2,1'")
    p.add_argument("--preset", choices=sorted(PRESETS))
    if with_bch:
        p.add_argument("--b", type=_bounded(0))
        p.add_argument("--delta", type=_bounded(2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedral-codes", description="Construct and analyze principal dihedral codes."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("construct", help="BCH-dihedral code with prescribed distance")
    p.add_argument("--q", type=_bounded(2), default=2)
    p.add_argument("--m", type=_bounded(3), required=True)
    p.add_argument("--b", type=_bounded(0), default=1)
    p.add_argument("--delta", type=_bounded(2), required=True)
    _add_distance(p)
    _add_output(p)

    p = sub.add_parser("analyze", help="report on a user-supplied generator or preset")
    _add_code(p, with_bch=False)
    _add_distance(p)
    _add_output(p)

    p = sub.add_parser("search", help="scan (m, b, delta) for BCH-dihedral codes")
    p.add_argument("--q", type=_bounded(2), default=2)
    p.add_argument("--m-min", type=_bounded(3), default=3)
    p.add_argument("--m-max", type=_bounded(3), required=True)
    p.add_argument("--delta", type=_bounded(2), help="shorthand for --delta-min D --delta-max D")
    p.add_argument("--delta-min", type=_bounded(2), default=2)
    p.add_argument("--delta-max", type=_bounded(2), default=4)
    p.add_argument("--b-min", type=_bounded(0), default=0)
    p.add_argument("--b-max", type=_bounded(0), default=None, help="default m - 1")
    _add_distance(p)
    _add_output(p)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--property", action="append", choices=sorted(suites.SUITES),
                   help="suite to run (repeatable; default all)")
    p.add_argument("--m-max", type=_bounded(3), default=201, help="range for binary-equivalence")
    p.add_argument("--scale", type=float, default=1.0, help="multiplier on random sample counts")
    p.add_argument("--seed", type=int, default=0, help="offset added to every suite seed")
    p.add_argument("--inject-fault", choices=("conjugate-sign",), help=argparse.SUPPRESS)
    _add_output(p)

    p = sub.add_parser("export", help="print a generator matrix, one row per line")
    _add_code(p, with_bch=True)
    p.add_argument("--output", metavar="PATH")

    p = sub.add_parser("reproduce", help="compare the preset codes with their published parameters")
    p.add_argument("--budget", type=_bounded(1), default=None)
    _add_output(p)
    return parser


# -- rendering -----------------------------------------------------------------


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_scalar(x) for x in v) or "-"
    return str(v)


def _record_text(d: dict) -> str:
    return "".join(f"{k}: {_scalar(v)}\n" for k, v in d.items())


def _table_text(rows: list[dict], columns: Sequence[str]) -> str:
    cells = [list(columns)] + [[_scalar(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in cells)


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- commands ------------------------------------------------------------------


def _spec_from_args(args) -> DihedralSpec:
    if args.preset:
        if args.gen or args.m:
            raise PreconditionError("--preset excludes --gen and --m")
        return PRESETS[args.preset].spec()
    if getattr(args, "delta", None) is not None and not args.gen:
        if args.m is None or args.b is None:
            raise PreconditionError("--delta needs --m and --b")
        return _bch_spec(args.q, args.m, args.b, args.delta)[0]
    if args.m is None or args.gen is None:
        raise PreconditionError("give --preset, or --m with --gen")
    return make_spec(args.q, args.m, args.gen)


def _bch_spec(q: int, m: int, b: int, delta: int) -> tuple[DihedralSpec, str]:
    if q == 2 and m % 2 and binary_condition(m).holds:
        return binary_bch_generator(m, b % m, delta), "binary"
    return bch_dihedral_generator(q, m, b % m, delta), "general"


def _analysis(spec: DihedralSpec, args) -> dict:
    return analyze(spec, method=args.distance_method, cap=args.exhaustive_cap, budget=args.budget).as_dict()


def cmd_construct(args) -> str:
    spec, kind = _bch_spec(args.q, args.m, args.b, args.delta)
    doc = _analysis(spec, args)
    doc = {"schema": doc.pop("schema"), "construction": kind, "b": args.b, "delta": args.delta, **doc}
    return _json(doc) if args.format == "json" else _record_text(doc)


def cmd_analyze(args) -> str:
    doc = _analysis(_spec_from_args(args), args)
    return _json(doc) if args.format == "json" else _record_text(doc)


SEARCH_COLUMNS = ("m", "delta", "b", "n", "k", "d", "d_method", "bch_bound", "dim_bound", "status",
                  "construction", "also")


def _status(d: int | None, delta: int, k: int, dim_bound: int) -> str:
    if d is None:
        return "unknown"
    if d < delta or k < dim_bound:
        return "below"
    return "meets" if d == delta else "beats"


def search_rows(args) -> list[dict]:
    q = args.q
    d_lo, d_hi = (args.delta, args.delta) if args.delta is not None else (args.delta_min, args.delta_max)
    rows = []
    for m in range(args.m_min, args.m_max + 1):
        if q == 2 and (m % 2 == 0 or not binary_condition(m).holds):
            continue
        if math.gcd(m, q) != 1:
            continue
        groups: dict = {}
        for delta in range(d_lo, min(d_hi, m) + 1):
            b_hi = m - 1 if args.b_max is None else min(args.b_max, m - 1)
            for b in range(args.b_min, b_hi + 1):
                try:
                    spec, kind = _bch_spec(q, m, b, delta)
                except DegenerateGenerator:
                    continue
                groups.setdefault(spec.generator.coeffs, []).append((delta, b, spec, kind))
        if not groups:
            # every (b, delta) forces all m-th roots of unity: only the zero code
            rows.append({
                "m": m, "delta": d_lo, "b": None, "n": 2 * m, "k": 0, "d": None,
                "d_method": None, "d_certified": False, "bch_bound": None, "dim_bound": None,
                "status": "degenerate", "construction": None, "generator": "0", "also": [],
            })
        for members in groups.values():
            # the strongest designed distance represents the group
            delta, b, spec, kind = max(members, key=lambda t: (t[0], -t[1]))
            rep = analyze(spec, method=args.distance_method, cap=args.exhaustive_cap, budget=args.budget)
            also = [f"{dl}/{bb}" for dl, bb, _, _ in sorted(members) if (dl, bb) != (delta, b)]
            rows.append({
                "m": m, "delta": delta, "b": b, "n": rep.n, "k": rep.k, "d": rep.d,
                "d_method": rep.d_method, "d_certified": rep.d_certified,
                "bch_bound": rep.bch_bound, "dim_bound": rep.dim_bound,
                "status": _status(rep.d, delta, rep.k, rep.dim_bound),
                "construction": kind, "generator": rep.generator, "also": also,
            })
    rows.sort(key=lambda r: (r["m"], r["delta"], -1 if r["b"] is None else r["b"]))
    return rows


def cmd_search(args) -> str:
    rows = search_rows(args)
    if args.format == "json":
        return _json({"schema": SCHEMA_VERSION, "q": args.q, "rows": rows})
    return _table_text(rows, SEARCH_COLUMNS)


def run_suites(args) -> list[suites.PropertyResult]:
    names = args.property or list(suites.SUITES)
    conj = suites.sign_flipped_conjugate if args.inject_fault == "conjugate-sign" else suites._formula
    scaled = lambda n: max(1, round(n * args.scale))  # noqa: E731
    runners = {
        "binary-equivalence": lambda: suites.binary_equivalence(m_max=args.m_max),
        "bch-soundness": lambda: suites.bch_soundness(scaled(300), seed=1 + args.seed),
        "binary-soundness": lambda: suites.binary_soundness(),
        "structure": lambda: suites.structure(scaled(200), seed=2 + args.seed, conjugate=conj),
        "distance-oracle": lambda: suites.distance_oracle(scaled(100), seed=3 + args.seed),
    }
    return [runners[name]() for name in names]


def cmd_verify(args) -> str:
    results = run_suites(args)
    if args.format == "json":
        out = _json({
            "schema": SCHEMA_VERSION,
            "properties": [
                {"name": r.name, "passed": r.passed, "checked": r.checked, "skipped": r.skipped,
                 "failures": r.failures, "notes": r.notes}
                for r in results
            ],
        })
    else:
        lines = []
        for r in results:
            lines.append(r.summary())
            lines += [f"  {note}" for note in r.notes]
            lines += [f"  failure: {f}" for f in r.failures[:10]]
        out = "\n".join(lines) + "\n"
    if not all(r.passed for r in results):
        raise VerificationFailed(out)
    return out


def cmd_export(args) -> str:
    return export_generator_matrix(code_from_generator(_spec_from_args(args)))


REPRODUCE_COLUMNS = ("preset", "claimed", "computed", "d_method", "d_certified", "status", "note")


def reproduce_rows(budget: int | None = None) -> list[dict]:
    rows = []
    for name in sorted(PRESETS):
        preset = PRESETS[name]
        spec = preset.spec()
        rep = analyze(spec, budget=budget)
        computed = (rep.n, rep.k, rep.d)
        match = computed == preset.claimed and rep.d_certified
        note = ""
        if match:
            status = "match"
        elif name in KNOWN_DISCREPANCIES:
            status = "documented-discrepancy"
            note = (f"k={rep.k} vs claimed {preset.claimed[1]}; 2(m - deg p) = "
                    f"{2 * (spec.m - spec.generator.degree)}; d={rep.d} vs claimed {preset.claimed[2]}")
        else:
            status = "mismatch"
        rows.append({
            "preset": name, "m": spec.m, "claimed": list(preset.claimed), "computed": list(computed),
            "d_method": rep.d_method, "d_certified": rep.d_certified, "status": status, "note": note,
        })
    return rows


def cmd_reproduce(args) -> str:
    rows = reproduce_rows(args.budget)
    if args.format == "json":
        out = _json({"schema": SCHEMA_VERSION, "rows": rows})
    else:
        text_rows = [{**r, "claimed": _params(r["claimed"]), "computed": _params(r["computed"])} for r in rows]
        out = _table_text(text_rows, REPRODUCE_COLUMNS)
    if any(r["status"] == "mismatch" for r in rows):
        raise VerificationFailed(out)
    return out


def _params(t) -> str:
    return "[" + ",".join(_scalar(x) for x in t) + "]"


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "search": cmd_search,
    "verify": cmd_verify,
    "export": cmd_export,
    "reproduce": cmd_reproduce,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _emit(COMMANDS[args.command](args), args.output)
    except VerificationFailed as exc:
        _emit(exc.document, args.output)
        return EXIT_VERIFY
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DihedralCodesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
