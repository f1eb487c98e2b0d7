"""Command-line surface: validate, analyze, encode, decode, iso, scan, dot.

Exit codes: 0 on success, 1 on a domain failure (system not exact, value not
representable, graphs not isomorphic), 2 on malformed input.  ``--json``
prints one machine-readable line; output is deterministic for identical
inputs.  Integer values that can grow without bound (residues, vertices,
decoded values) are rendered as decimal strings in JSON.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .covering import (
    Congruence,
    CoveringSystem,
    ExactnessError,
    SpecParseError,
    parse_system,
    validate_exact,
)
from .digits import DigitString, DigitSystem
from .digraph import Ecsd, same_invariant


def _print_json(data: dict) -> None:
    print(json.dumps(data, separators=(",", ":")))


def _parse_range(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not match:
        raise argparse.ArgumentTypeError(f"range must look like LO..HI, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_digits(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"digits must be comma-separated integers, got {text!r}")


def _lenient_dashes(parser: argparse.ArgumentParser) -> None:
    # System specs like "-2n+1,-2n+4" and digit lists like "-1,0,1" start
    # with '-'; widen argparse's negative-number heuristic so they are read
    # as values, not unknown options.
    try:
        parser._negative_number_matcher = re.compile(r"^-.+$")
    except AttributeError:
        pass


# ----------------------------------------------------------------------
# validate / analyze


def cmd_validate(args: argparse.Namespace) -> int:
    system = parse_system(args.system)
    report = validate_exact(system)
    if args.json:
        _print_json({"system": str(system), "degree": system.degree, **report.to_json_dict()})
    elif report.exact:
        print(f"exact: degree {system.degree}, period {report.period}")
    else:
        print(f"not exact (period {report.period}): "
              f"{len(report.uncovered)} uncovered, "
              f"{len(report.multiply_covered)} multiply covered")
        if report.uncovered:
            print("  uncovered: " + " ".join(str(n) for n in report.uncovered))
        if report.multiply_covered:
            print("  multiply covered: " + " ".join(str(n) for n in report.multiply_covered))
    return 0 if report.exact else 1


def _classification_dict(graph: Ecsd) -> dict:
    shape = graph.classify_degree1()
    info: dict = {"kind": shape.kind}
    if shape.path_count is not None:
        info["path_count"] = shape.path_count
    if shape.loop_at is not None:
        info["loop_at"] = str(shape.loop_at)
    return {"degree": 1, "classification": info}


def cmd_analyze(args: argparse.Namespace) -> int:
    graph = Ecsd(parse_system(args.system))
    if graph.degree == 1:
        if args.json:
            _print_json(_classification_dict(graph))
        else:
            print(f"degree 1: {graph.classify_degree1().describe()}")
        return 0
    analysis = graph.analyze()
    if args.json:
        _print_json(analysis.to_json_dict())
    else:
        print(f"invariant {analysis.invariant_text()}")
        print(f"ancestor bound {analysis.ancestor_bound}")
        print(f"components {analysis.component_count}")
        for cycle in analysis.cycles:
            print("cycle (" + " ".join(str(v) for v in cycle.vertices) + ")")
    return 0


# ----------------------------------------------------------------------
# encode / decode


def cmd_encode(args: argparse.Namespace) -> int:
    system = DigitSystem(args.base, args.digits)
    encoded = system.encode(args.value)
    if encoded is None:
        if args.json:
            _print_json({"base": system.base, "digits": list(system.digits),
                         "value": str(args.value), "representable": False})
        else:
            print(f"{args.value} is not representable in {system}", file=sys.stderr)
        return 1
    if args.json:
        _print_json({**system.string_json_dict(encoded), "value": str(args.value),
                     "representable": True})
    else:
        print(encoded)
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    system = DigitSystem(args.base, args.digits)
    digit_string = DigitString.parse(args.string)
    value = system.decode(digit_string)
    if args.json:
        _print_json({**system.string_json_dict(digit_string), "value": str(value)})
    else:
        print(value)
    return 0


# ----------------------------------------------------------------------
# iso


def _side_dict(graph: Ecsd) -> dict:
    if graph.degree == 1:
        return _classification_dict(graph)
    degree, lengths = graph.analyze().invariant
    return {"degree": degree, "invariant": [degree, list(lengths)]}


def _side_text(graph: Ecsd) -> str:
    if graph.degree == 1:
        return graph.classify_degree1().describe()
    return graph.analyze().invariant_text()


def cmd_iso(args: argparse.Namespace) -> int:
    g1 = Ecsd(parse_system(args.system1))
    g2 = Ecsd(parse_system(args.system2))
    if g1.degree != g2.degree:
        isomorphic = False
    elif g1.degree == 1:
        isomorphic = g1.classify_degree1() == g2.classify_degree1()
    else:
        isomorphic = same_invariant(g1, g2)
    if args.json:
        _print_json({"isomorphic": isomorphic, "left": _side_dict(g1), "right": _side_dict(g2)})
    else:
        verdict = "isomorphic" if isomorphic else "not isomorphic"
        print(f"{verdict}: {_side_text(g1)} vs {_side_text(g2)}")
    return 0 if isomorphic else 1


# ----------------------------------------------------------------------
# scan

_TEMPLATE_TERM_RE = re.compile(r"([+-]?)(\d+|A)?n(?:([+-])(\d+|A))?")


@dataclass(frozen=True)
class _TemplateTerm:
    d_sign: int
    d_part: int | None  # None marks the placeholder A
    a_sign: int
    a_part: int | None
    has_residue: bool

    def congruence(self, value: int) -> Congruence:
        d = self.d_sign * (value if self.d_part is None else self.d_part)
        if d == 0:
            raise ValueError("zero coefficient on n")
        a = 0
        if self.has_residue:
            a = self.a_sign * (value if self.a_part is None else self.a_part)
        return Congruence(a, d)


def _parse_template(text: str) -> list[_TemplateTerm]:
    terms = []
    saw_placeholder = False
    for chunk in text.split(","):
        stripped = re.sub(r"\s+", "", chunk)
        match = _TEMPLATE_TERM_RE.fullmatch(stripped)
        if not match:
            raise ValueError(f"bad template term {chunk.strip()!r}")
        sign, coeff, res_sign, res = match.groups()

        def part(token):
            return None if token == "A" else int(token)

        d_part = 1 if coeff is None or coeff == "" else part(coeff)
        a_part = part(res) if res is not None else 0
        saw_placeholder |= d_part is None or (res is not None and a_part is None)
        terms.append(_TemplateTerm(
            d_sign=-1 if sign == "-" else 1,
            d_part=d_part,
            a_sign=-1 if res_sign == "-" else 1,
            a_part=a_part,
            has_residue=res is not None,
        ))
    if not saw_placeholder:
        raise ValueError("template needs at least one placeholder A")
    return terms


def _parse_invariant(text: str) -> tuple[int, tuple[int, ...]]:
    match = re.fullmatch(r"\[\s*(\d+)\s*;\s*([0-9,\s]+)\]", text.strip())
    if not match:
        raise ValueError(f"invariant must look like '[2; 1,1,2,6]', got {text!r}")
    degree = int(match.group(1))
    lengths = tuple(sorted(int(p) for p in match.group(2).split(",")))
    return degree, lengths


def _scan_row(template: list[_TemplateTerm], value: int, flt: str,
              target_invariant: tuple[int, tuple[int, ...]] | None) -> dict:
    row: dict = {"value": str(value)}
    try:
        system = CoveringSystem(tuple(t.congruence(value) for t in template))
    except ValueError:
        row.update(exact=False, result="invalid", match=False)
        return row
    exact = system.is_exact
    row["exact"] = exact
    if not exact:
        row.update(result="not-exact", match=False)
        return row
    if flt == "exact":
        row.update(result="exact", match=True)
        return row
    graph = Ecsd(system)
    if flt == "single-component":
        if graph.degree == 1:
            shape = graph.classify_degree1()
            single = shape.kind == "infinite_paths" and shape.path_count == 1
            row.update(result=shape.kind, match=single)
        else:
            count = graph.analyze().component_count
            row.update(result=f"components={count}", match=count == 1)
        return row
    if flt == "complete-codec":
        try:
            digit_system = DigitSystem.from_covering_system(system)
        except ValueError:
            row.update(result="not-a-digit-system", match=False)
            return row
        complete = digit_system.is_complete()
        row.update(result="complete" if complete else "incomplete", match=complete)
        return row
    if flt == "invariant-equals":
        if graph.degree == 1:
            row.update(result="degree-1", match=False)
            return row
        invariant = graph.analyze().invariant
        text = graph.analyze().invariant_text()
        row.update(result=text, match=invariant == target_invariant)
        return row
    raise ValueError(f"unknown filter {flt!r}")


def cmd_scan(args: argparse.Namespace) -> int:
    template = _parse_template(args.family)
    target = _parse_invariant(args.invariant) if args.invariant else None
    if args.filter == "invariant-equals" and target is None:
        raise ValueError("--filter invariant-equals needs --invariant '[r; l1,l2,...]'")
    lo, hi = args.range
    rows = [_scan_row(template, value, args.filter, target) for value in range(lo, hi + 1)]
    matches = [row["value"] for row in rows if row["match"]]
    if args.json:
        _print_json({"family": args.family, "range": [str(lo), str(hi)],
                     "filter": args.filter, "rows": rows, "matches": matches})
    else:
        for row in rows:
            marker = " *" if row["match"] else ""
            print(f"A={row['value']}\t{row['result']}{marker}")
        print("matches: " + (" ".join(matches) if matches else "(none)"))
    return 0


# ----------------------------------------------------------------------
# dot


def cmd_dot(args: argparse.Namespace) -> int:
    graph = Ecsd(parse_system(args.system))
    lo, hi = args.range
    text = graph.export_dot(lo, hi)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        print(text, end="")
    return 0


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecsd",
        description="Exact covering systems, the digraphs they generate on the "
                    "integers, and the digit systems they induce.",
    )
    _lenient_dashes(parser)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_text, func):
        p = sub.add_parser(name, help=help_text)
        _lenient_dashes(p)
        p.set_defaults(func=func)
        return p

    p = add("validate", "check that a system covers every integer exactly once", cmd_validate)
    p.add_argument("system", help="comma-separated linear terms, e.g. '2n,2n-9'")
    p.add_argument("--json", action="store_true")

    p = add("analyze", "cycles, components and the isomorphism invariant", cmd_analyze)
    p.add_argument("system")
    p.add_argument("--json", action="store_true")

    p = add("encode", "write an integer in a digit system", cmd_encode)
    p.add_argument("value", type=int)
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--digits", type=_parse_digits, required=True,
                   help="comma-separated digit set, e.g. 0,1 or -1,0,1")
    p.add_argument("--json", action="store_true")

    p = add("decode", "evaluate a digit string", cmd_decode)
    p.add_argument("string", help="digit string, e.g. 141 or 1,-1,-1")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--digits", type=_parse_digits, required=True)
    p.add_argument("--json", action="store_true")

    p = add("iso", "compare two systems' graphs up to isomorphism", cmd_iso)
    p.add_argument("system1")
    p.add_argument("system2")
    p.add_argument("--json", action="store_true")

    p = add("scan", "sweep a one-parameter family of systems", cmd_scan)
    p.add_argument("--family", required=True,
                   help="system template with placeholder A, e.g. '-2n+1,-2n+A'")
    p.add_argument("--range", type=_parse_range, required=True, metavar="LO..HI")
    p.add_argument("--filter", default="exact",
                   choices=["exact", "single-component", "complete-codec", "invariant-equals"])
    p.add_argument("--invariant", help="target for --filter invariant-equals, e.g. '[2; 1,1,2,6]'")
    p.add_argument("--json", action="store_true")

    p = add("dot", "emit the window subgraph as Graphviz DOT", cmd_dot)
    p.add_argument("system")
    p.add_argument("--range", type=_parse_range, required=True, metavar="LO..HI")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExactnessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SpecParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
