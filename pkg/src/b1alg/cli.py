"""Command line driver: parse .b1a algebra files, run analyses, print reports.

The .b1a format is UTF-8, '#' starts a comment, tokens are whitespace
separated::

    elements 0 z x y u 1
    zero 0
    one 1
    add
    <order rows of order labels>
    mul
    <order rows of order labels>

Row i, column j of a table is (row element) op (column element) in the
``elements`` order; the zero element must be listed first.

Commands: validate, ideals, spectrum, nil, assoc, decompose, laskerian,
evans, audit, builtin.  Reports are deterministic: the same input produces
byte-identical output regardless of --jobs.  Exit codes: 0 success, 1 for a
property verdict the caller asked to assert, 2 for input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .algebra import (
    Algebra,
    AlgebraError,
    AxiomError,
    AxiomReport,
    BUILTIN_NAMES,
    build_algebra,
    builtin,
)
from .decompose import (
    audit,
    evans_report,
    laskerian_check,
    minimalize,
    radical_decomposition,
)
from .ideals import (
    enumerate_ideals,
    enumerate_saturated_ideals,
    full_mask,
    ideal_violation,
    is_saturated,
    mask_of,
    member_labels,
    saturation,
)
from .spectrum import associated_primes, nilradical, spectrum


class ParseError(AlgebraError):
    """Syntax problem in a .b1a file; the message carries the location."""

    def __init__(self, line: int, message: str, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}"
        if column is not None:
            where += f", entry {column}"
        super().__init__(f"{where}: {message}")


def parse_algebra_text(text: str) -> Algebra:
    """Parse .b1a source into a validated algebra."""
    # (line number, tokens) with comments and blanks dropped
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))

    names: tuple[str, ...] | None = None
    zero: str | None = None
    one: str | None = None
    tables: dict[str, list[list[str]]] = {}
    seen_at: dict[str, int] = {}

    pos = 0
    while pos < len(rows):
        lineno, words = rows[pos]
        head = words[0]
        if head in seen_at:
            raise ParseError(lineno, f"duplicate directive {head!r} (first at line {seen_at[head]})")
        if head == "elements":
            if len(words) < 2:
                raise ParseError(lineno, "elements directive needs at least one label")
            names = tuple(words[1:])
            if len(set(names)) != len(names):
                dup = next(n for i, n in enumerate(names) if n in names[:i])
                raise ParseError(lineno, f"duplicate label {dup!r}")
            seen_at[head] = lineno
            pos += 1
        elif head in ("zero", "one"):
            if len(words) != 2:
                raise ParseError(lineno, f"{head} directive needs exactly one label")
            if head == "zero":
                zero = words[1]
            else:
                one = words[1]
            seen_at[head] = lineno
            pos += 1
        elif head in ("add", "mul"):
            if len(words) != 1:
                raise ParseError(lineno, f"{head} directive takes no arguments")
            if names is None:
                raise ParseError(lineno, f"{head} table appears before the elements directive")
            seen_at[head] = lineno
            pos += 1
            table: list[list[str]] = []
            for r in range(len(names)):
                if pos >= len(rows):
                    raise ParseError(
                        lineno, f"{head} table ends after {r} of {len(names)} rows"
                    )
                row_line, row = rows[pos]
                if len(row) != len(names):
                    raise ParseError(
                        row_line,
                        f"{head} table row {r + 1} has {len(row)} entries, "
                        f"expected {len(names)}",
                    )
                for col, entry in enumerate(row, start=1):
                    if entry not in names:
                        raise ParseError(row_line, f"unknown label {entry!r}", column=col)
                table.append(row)
                pos += 1
            tables[head] = table
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")

    for needed in ("elements", "zero", "one", "add", "mul"):
        if needed not in seen_at:
            raise ParseError(len(text.splitlines()) + 1, f"missing directive: {needed}")
    assert names is not None and zero is not None and one is not None
    if zero not in names:
        raise ParseError(seen_at["zero"], f"unknown label {zero!r}")
    if one not in names:
        raise ParseError(seen_at["one"], f"unknown label {one!r}")
    if names[0] != zero:
        raise ParseError(
            seen_at["elements"], f"zero element {zero!r} must be listed first"
        )
    return build_algebra(list(names), tables["add"], tables["mul"], zero, one)


def parse_algebra_file(path: str | Path) -> Algebra:
    return parse_algebra_text(Path(path).read_text(encoding="utf-8"))


def serialize_algebra(algebra: Algebra) -> str:
    """Canonical .b1a text; parsing it back yields an identical algebra."""
    lines = ["elements " + " ".join(algebra.names)]
    lines.append(f"zero {algebra.names[0]}")
    lines.append(f"one {algebra.names[algebra.one]}")
    for directive, table in (("add", algebra.add), ("mul", algebra.mul)):
        lines.append(directive)
        for row in table:
            lines.append(" ".join(algebra.names[e] for e in row))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AnalysisReport:
    command: str
    algebra: str
    result: dict
    engine_version: str = __version__

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "algebra": self.algebra,
            "engine_version": self.engine_version,
            "result": self.result,
        }
        return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Rendering


def _ideal_str(algebra: Algebra, mask: int) -> str:
    return ",".join(member_labels(algebra, mask))


def _ideal_list(algebra: Algebra, masks) -> list[str]:
    return [_ideal_str(algebra, m) for m in masks]


def _render_text(report: AnalysisReport, out) -> None:
    print(f"command: {report.command}", file=out)
    print(f"algebra: {report.algebra}", file=out)
    print(f"engine: b1alg {report.engine_version}", file=out)
    _render_value(report.result, out, indent=0)


def _render_value(value, out, indent: int, key: str | None = None) -> None:
    pad = "  " * indent
    label = f"{key}: " if key is not None else ""
    if isinstance(value, dict):
        if key is not None:
            print(f"{pad}{key}:", file=out)
        for k, v in value.items():
            _render_value(v, out, indent + (key is not None), key=k)
    elif isinstance(value, list):
        print(f"{pad}{key if key is not None else 'items'} ({len(value)}):", file=out)
        for item in value:
            if isinstance(item, (dict, list)):
                print(f"{pad}  -", file=out)
                _render_value(item, out, indent + 2)
            else:
                print(f"{pad}  {item}", file=out)
    else:
        print(f"{pad}{label}{value}", file=out)


def _emit(report: AnalysisReport, fmt: str, out) -> None:
    if fmt == "json":
        out.write(report.to_json())
    else:
        _render_text(report, out)


# ---------------------------------------------------------------------------
# Command plumbing


def _load(args) -> Algebra:
    return parse_algebra_file(args.file)


def _parse_ideal_flag(algebra: Algebra, text: str, *, saturated_required: bool) -> int:
    labels = [t for t in text.split(",") if t]
    unknown = [t for t in labels if t not in algebra.index]
    if unknown:
        raise AlgebraError(f"--ideal contains unknown label {unknown[0]!r}")
    mask = mask_of(algebra.index[t] for t in labels)
    mask |= 1  # zero is implicit; the zero ideal is spelled "0"
    bad = ideal_violation(algebra, mask)
    if bad is not None:
        what, witness = bad
        names = ", ".join(algebra.names[w] for w in witness)
        raise AlgebraError(f"--ideal set {what} (witness: {names})")
    if saturated_required and not is_saturated(algebra, mask):
        extra = saturation(algebra, mask) & ~mask
        raise AlgebraError(
            f"--ideal set is not saturated; its closure adds {_ideal_str(algebra, extra)}"
        )
    return mask


def _axiom_payload(report: AxiomReport, algebra_names: tuple[str, ...]) -> dict:
    return {
        "valid": report.valid,
        "violations": [
            {
                "axiom": v.axiom,
                "witness": [algebra_names[i] for i in v.witness],
            }
            for v in report.violations
        ],
    }


def cmd_validate(args) -> int:
    path = Path(args.file)
    try:
        algebra = parse_algebra_file(path)
    except AxiomError as exc:
        names = _element_names(path)
        payload = _axiom_payload(exc.report, names)
        payload["trivial"] = len(names) == 1
        report = AnalysisReport("validate", str(path), payload)
        _emit(report, args.format, sys.stdout)
        return 2
    payload = {"valid": True, "violations": [], "order": algebra.order,
               "trivial": algebra.is_trivial}
    _emit(AnalysisReport("validate", str(path), payload), args.format, sys.stdout)
    return 0


def _element_names(path: Path) -> tuple[str, ...]:
    """Recover the element labels so axiom witnesses can be named."""
    for raw in path.read_text(encoding="utf-8").splitlines():
        body = raw.split("#", 1)[0].strip()
        if body.startswith("elements"):
            return tuple(body.split()[1:])
    return ()


def cmd_ideals(args) -> int:
    algebra = _load(args)
    masks = (
        enumerate_saturated_ideals(algebra, jobs=args.jobs)
        if args.saturated
        else enumerate_ideals(algebra, jobs=args.jobs)
    )
    payload = {
        "saturated_only": bool(args.saturated),
        "count": len(masks),
        "ideals": _ideal_list(algebra, masks),
    }
    _emit(AnalysisReport("ideals", args.file, payload), args.format, sys.stdout)
    return 0


def cmd_spectrum(args) -> int:
    algebra = _load(args)
    result = spectrum(algebra)
    payload = {
        "primes": _ideal_list(algebra, result.primes),
        "saturated_primes": _ideal_list(algebra, result.saturated_primes),
        "min_primes": _ideal_list(algebra, result.min_primes),
        "min_saturated_primes": _ideal_list(algebra, result.min_saturated_primes),
        "max_saturated": _ideal_list(algebra, result.max_saturated),
        "associated": [
            {"witness": algebra.names[x], "prime": _ideal_str(algebra, p)}
            for x, p in result.associated
        ],
        "nilradical": _ideal_str(algebra, result.nilradical),
        "zero_divisors": list(member_labels(algebra, result.zero_divisors)),
        "standard": result.standard,
        "standard_cover": _ideal_list(algebra, result.standard_cover),
    }
    _emit(AnalysisReport("spectrum", args.file, payload), args.format, sys.stdout)
    return 0


def cmd_nil(args) -> int:
    algebra = _load(args)
    payload = {"nilradical": _ideal_str(algebra, nilradical(algebra))}
    _emit(AnalysisReport("nil", args.file, payload), args.format, sys.stdout)
    return 0


def cmd_assoc(args) -> int:
    algebra = _load(args)
    payload = {
        "associated": [
            {"witness": algebra.names[x], "prime": _ideal_str(algebra, p)}
            for x, p in associated_primes(algebra)
        ]
    }
    _emit(AnalysisReport("assoc", args.file, payload), args.format, sys.stdout)
    return 0


def cmd_decompose(args) -> int:
    algebra = _load(args)
    mask = _parse_ideal_flag(algebra, args.ideal, saturated_required=True)
    if mask == full_mask(algebra):
        raise AlgebraError("--ideal must denote a proper ideal")
    result = radical_decomposition(algebra, mask)
    if args.minimal:
        result = minimalize(result)
    payload = {
        "input": _ideal_str(algebra, result.input),
        "radical": _ideal_str(algebra, result.intersection()),
        "components": _ideal_list(algebra, result.components),
        "irredundant": result.irredundant,
        "split_trace": [
            {
                "ideal": _ideal_str(algebra, node),
                "witness": [algebra.names[u], algebra.names[v]],
            }
            for node, (u, v) in result.split_trace
        ],
    }
    _emit(AnalysisReport("decompose", args.file, payload), args.format, sys.stdout)
    return 0


def cmd_laskerian(args) -> int:
    algebra = _load(args)
    report = laskerian_check(algebra)
    payload = {
        "laskerian": report.laskerian,
        "witness": None if report.witness is None else _ideal_str(algebra, report.witness),
        "saturated_primaries": _ideal_list(algebra, report.saturated_primaries),
        "primaries": _ideal_list(algebra, report.primaries),
        "table": {
            _ideal_str(algebra, ideal): _ideal_list(algebra, parts)
            for ideal, parts in report.table
        },
    }
    _emit(AnalysisReport("laskerian", args.file, payload), args.format, sys.stdout)
    if args.assert_laskerian and not report.laskerian:
        return 1
    return 0


def cmd_evans(args) -> int:
    algebra = _load(args)
    if args.ideal is not None:
        masks = [_parse_ideal_flag(algebra, args.ideal, saturated_required=True)]
        if masks[0] == full_mask(algebra):
            raise AlgebraError("--ideal must denote a proper ideal")
    else:
        full = full_mask(algebra)
        masks = [m for m in enumerate_saturated_ideals(algebra, jobs=args.jobs) if m != full]
    reports = [evans_report(algebra, m) for m in masks]
    payload = {
        "all_passed": all(r.passed for r in reports),
        "reports": [
            {
                "ideal": _ideal_str(algebra, r.ideal),
                "maximal_conductors": [
                    {"witness": algebra.names[y], "conductor": _ideal_str(algebra, c)}
                    for y, c in r.maximal_conductors
                ],
                "all_prime": r.all_prime,
                "all_saturated": r.all_saturated,
                "union_equals_divisor_set": r.union_equals_divisor_set,
                "passed": r.passed,
            }
            for r in reports
        ],
    }
    _emit(AnalysisReport("evans", args.file, payload), args.format, sys.stdout)
    if args.assert_evans and not all(r.passed for r in reports):
        return 1
    return 0


def cmd_audit(args) -> int:
    algebra = _load(args)
    result = audit(algebra)
    payload = {
        "passed": result.passed,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in result.checks
        ],
    }
    _emit(AnalysisReport("audit", args.file, payload), args.format, sys.stdout)
    return 0 if result.passed else 1


def cmd_builtin(args) -> int:
    algebra = builtin(args.name)
    text = serialize_algebra(algebra)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="b1alg",
        description="Analyze finite characteristic-one semirings (.b1a files).",
    )
    parser.add_argument("--version", action="version", version=f"b1alg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ideal_flag=False, assert_flag=None):
        p.add_argument("file", help="algebra definition (.b1a)")
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="report format (default: text)",
        )
        p.add_argument(
            "--jobs", type=int, default=1, metavar="N",
            help="worker threads for enumeration; output is identical for any N",
        )
        if ideal_flag:
            p.add_argument(
                "--ideal", metavar="SET",
                help="comma-separated element labels denoting an ideal",
            )
        if assert_flag:
            p.add_argument(
                assert_flag, action="store_true", dest=assert_flag.strip("-").replace("-", "_"),
                help="exit with status 1 when the property fails",
            )

    p = sub.add_parser("validate", help="check the axioms of an algebra file")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ideals", help="enumerate the ideals")
    common(p)
    p.add_argument("--saturated", action="store_true", help="saturated ideals only")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("spectrum", help="primes, minimal primes, spectra")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("nil", help="the nilradical")
    common(p)
    p.set_defaults(func=cmd_nil)

    p = sub.add_parser("assoc", help="associated primes with witnesses")
    common(p)
    p.set_defaults(func=cmd_assoc)

    p = sub.add_parser("decompose", help="prime decomposition of a saturated ideal's radical")
    common(p, ideal_flag=True)
    p.add_argument("--minimal", action="store_true", help="drop redundant components")
    p.set_defaults(func=cmd_decompose)
    # decompose demands an ideal to work on
    p.set_defaults(_ideal_required=True)

    p = sub.add_parser("laskerian", help="saturated-primary decomposability of all saturated ideals")
    common(p, assert_flag="--assert-laskerian")
    p.set_defaults(func=cmd_laskerian)

    p = sub.add_parser("evans", help="maximal-conductor reports for saturated ideals")
    common(p, ideal_flag=True, assert_flag="--assert-evans")
    p.set_defaults(func=cmd_evans)

    p = sub.add_parser("audit", help="run the full invariant suite; exit 1 on any failure")
    common(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("builtin", help="emit a builtin algebra as .b1a text")
    p.add_argument("name", help=f"one of: {', '.join(BUILTIN_NAMES)}")
    p.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")
    p.set_defaults(func=cmd_builtin)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "_ideal_required", False) and not args.ideal:
        parser.error("decompose requires --ideal")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiomError as exc:
        print(f"error: invalid algebra: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
