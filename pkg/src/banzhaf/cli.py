"""Command-line front end: analyze systems, weigh SOP expressions, differentiate.

Three subcommands:

* ``analyze`` - full power report for a quota-and-weights system, as an
  aligned text table or canonical JSON.
* ``weight`` - weight of an SOP expression by dense table, disjoint-sum,
  and/or inclusion-exclusion, with cross-checking.
* ``derivative`` - the Boolean difference of a system or expression with
  respect to one voter, printed as a disjoint (minterm) SOP plus its weight.

Output is deterministic: identical input produces byte-identical output.
Exit codes: 0 success, 2 malformed input, 3 method/oracle disagreement,
4 constant system (every voter a dummy).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .power import (
    NoDecisiveVoterError,
    OracleDisagreementError,
    PowerReport,
    analyze,
)
from .sop import (
    SopExpr,
    SopSyntaxError,
    make_disjoint,
    parse_sop,
    sop_to_tt,
    sop_weight_disjoint,
    sop_weight_ie,
    tt_to_minterm_sop,
)
from .voting import VotingSystem

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISAGREEMENT = 3
EXIT_CONSTANT = 4


def _decimal(fr: Fraction, places: int = 6) -> str:
    """Fixed-point rendering of a non-negative fraction, half-up, no floats."""
    scale = 10 ** places
    scaled = (fr.numerator * scale * 2 + fr.denominator) // (fr.denominator * 2)
    return f"{scaled // scale}.{scaled % scale:0{places}d}"


@dataclass(frozen=True)
class ReportDocument:
    """Machine-readable power report with a fixed field order.

    Serialization is key-ordered and locale-independent so that reports can
    be diffed and used as fixtures; parsing its own output re-emits the same
    bytes.
    """

    n: int
    quota: int
    weights: tuple[int, ...]
    names: tuple[str, ...]
    tbp: tuple[int, ...]
    ntbp: tuple[Fraction, ...]
    dummies: tuple[str, ...]
    symmetry_classes: tuple[tuple[str, ...], ...]
    monotone: bool
    causal: bool
    constant: bool
    oracle_verified: bool

    @classmethod
    def from_analysis(cls, system: VotingSystem, report: PowerReport) -> "ReportDocument":
        names = system.voter_names
        return cls(
            n=system.n,
            quota=system.quota,
            weights=system.weights,
            names=names,
            tbp=report.tbp,
            ntbp=report.ntbp,
            dummies=tuple(names[i - 1] for i in sorted(report.dummies)),
            symmetry_classes=tuple(
                tuple(names[i - 1] for i in group) for group in report.classes
            ),
            monotone=report.checks.monotone,
            causal=report.checks.causal,
            constant=report.checks.constant,
            oracle_verified=report.oracle_verified,
        )

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "quota": self.quota,
            "weights": list(self.weights),
            "names": list(self.names),
            "tbp": list(self.tbp),
            "ntbp": [
                {"num": fr.numerator, "den": fr.denominator, "decimal": _decimal(fr)}
                for fr in self.ntbp
            ],
            "dummies": list(self.dummies),
            "symmetry_classes": [list(group) for group in self.symmetry_classes],
            "checks": {
                "monotone": self.monotone,
                "causal": self.causal,
                "constant": self.constant,
            },
            "oracle_verified": self.oracle_verified,
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        doc = json.loads(text)
        return cls(
            n=doc["n"],
            quota=doc["quota"],
            weights=tuple(doc["weights"]),
            names=tuple(doc["names"]),
            tbp=tuple(doc["tbp"]),
            ntbp=tuple(Fraction(e["num"], e["den"]) for e in doc["ntbp"]),
            dummies=tuple(doc["dummies"]),
            symmetry_classes=tuple(tuple(g) for g in doc["symmetry_classes"]),
            monotone=doc["checks"]["monotone"],
            causal=doc["checks"]["causal"],
            constant=doc["checks"]["constant"],
            oracle_verified=doc["oracle_verified"],
        )

    def to_text(self) -> str:
        rows = []
        for k, name in enumerate(self.names):
            if self.ntbp:
                frac = self.ntbp[k]
                ntbp = f"{frac.numerator}/{frac.denominator}" if frac else "0"
                share = _decimal(frac)
            else:
                ntbp, share = "-", "-"
            rows.append((name, str(self.weights[k]), str(self.tbp[k]), ntbp, share))
        header = ("voter", "weight", "tbp", "ntbp", "share")
        widths = [max(len(r[c]) for r in [header, *rows]) for c in range(5)]
        lines = [
            f"voting system: quota={self.quota} "
            f"weights={','.join(str(w) for w in self.weights)} "
            f"(n={self.n}, total={sum(self.weights)})"
        ]
        for r in [header, *rows]:
            lines.append("  ".join(r[c].ljust(widths[c]) for c in range(5)).rstrip())
        lines.append(f"dummies: {' '.join(self.dummies) if self.dummies else '(none)'}")
        lines.append(
            "classes: " + " ".join("{" + ",".join(g) + "}" for g in self.symmetry_classes)
        )
        lines.append(
            f"checks: monotone={str(self.monotone).lower()} "
            f"causal={str(self.causal).lower()} constant={str(self.constant).lower()}"
        )
        lines.append(f"oracle: {'verified' if self.oracle_verified else 'not run'}")
        return "\n".join(lines) + "\n"


# -- argument handling -----------------------------------------------------------


def _csv(text: str) -> list[str]:
    return [part.strip() for part in text.split(",")]


def _int_csv(text: str) -> list[int]:
    try:
        return [int(part) for part in _csv(text)]
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}")


def _system_from_args(args: argparse.Namespace) -> VotingSystem:
    if args.input is not None:
        if args.quota is not None or args.weights is not None:
            raise ValueError("give either --input or --quota/--weights, not both")
        with open(args.input, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        quota = doc.get("quota")
        weights = doc.get("weights")
        names = doc.get("names")
        if not isinstance(quota, int) or not isinstance(weights, list):
            raise ValueError("input document needs integer 'quota' and array 'weights'")
        return VotingSystem(quota, tuple(weights), tuple(names) if names else None)
    if args.quota is None or args.weights is None:
        raise ValueError("need --quota and --weights (or --input FILE)")
    names = tuple(_csv(args.names)) if args.names else None
    return VotingSystem(args.quota, tuple(_int_csv(args.weights)), names)


def _names_from_expr(text: str) -> list[str]:
    """Variable names in order of first appearance, for when none are declared."""
    from .sop import _TOKEN, _NAME

    seen: list[str] = []
    for m in _TOKEN.finditer(text):
        tok = m.group(0)
        if _NAME.fullmatch(tok) and tok not in seen:
            seen.append(tok)
    return seen


def format_sop(expr: SopExpr, names: Sequence[str]) -> str:
    """Render cubes as whitespace products joined by ``|``; constants as 0/1."""
    if not expr.cubes:
        return "0"
    parts = []
    for cube in expr.cubes:
        lits = []
        for i in range(1, expr.n + 1):
            if i in cube.pos:
                lits.append(names[i - 1])
            elif i in cube.neg:
                lits.append(names[i - 1] + "'")
        parts.append(" ".join(lits) if lits else "1")
    return " | ".join(parts)


# -- subcommands ---------------------------------------------------------------


def _cmd_analyze(args: argparse.Namespace) -> int:
    system = _system_from_args(args)
    verify = False if args.no_oracle else None
    report = analyze(system, verify=verify)
    doc = ReportDocument.from_analysis(system, report)
    sys.stdout.write(doc.to_json() if args.format == "json" else doc.to_text())
    return EXIT_CONSTANT if report.checks.constant else EXIT_OK


def _cmd_weight(args: argparse.Namespace) -> int:
    names = _csv(args.names) if args.names else _names_from_expr(args.expr)
    expr = parse_sop(args.expr, names)
    methods = ("table", "disjoint", "ie") if args.method == "all" else (args.method,)
    results = {}
    for method in methods:
        if method == "table":
            results[method] = sop_to_tt(expr).weight()
        elif method == "disjoint":
            results[method] = sop_weight_disjoint(make_disjoint(expr))
        else:
            results[method] = sop_weight_ie(expr)
    if len(methods) == 1:
        print(results[methods[0]])
    else:
        for method in methods:
            print(f"{method:<8} {results[method]}")
        if len(set(results.values())) != 1:
            print("error: weight methods disagree", file=sys.stderr)
            return EXIT_DISAGREEMENT
    return EXIT_OK


def _cmd_derivative(args: argparse.Namespace) -> int:
    if args.expr is not None:
        if args.quota is not None or args.weights is not None or args.input is not None:
            raise ValueError("give either --expr or a voting system, not both")
        names = _csv(args.names) if args.names else _names_from_expr(args.expr)
        table = sop_to_tt(parse_sop(args.expr, names))
    else:
        system = _system_from_args(args)
        names = list(system.voter_names)
        table = system.to_table()

    if args.voter not in names:
        raise ValueError(f"unknown voter {args.voter!r}")
    target = names.index(args.voter) + 1

    if table.is_vacuous_in(target):
        print(f"voter {args.voter}: weight 0")
        print("0")
        return EXIT_OK

    # Work in the essential subsystem: drop voters the rule never depends on.
    kept = [i for i in range(1, table.n + 1) if i == target or not table.is_vacuous_in(i)]
    for i in range(table.n, 0, -1):
        if i not in kept:
            table = table.restrict(i, 0)
    kept_names = [names[i - 1] for i in kept]
    position = kept.index(target) + 1

    difference = table.boolean_difference(position)
    remaining = [nm for k, nm in enumerate(kept_names, 1) if k != position]
    print(f"voter {args.voter}: weight {difference.weight()}")
    print(format_sop(tt_to_minterm_sop(difference), remaining))
    return EXIT_OK


def _add_system_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--quota", type=int, help="pass threshold (positive integer)")
    sub.add_argument("--weights", help="comma-separated non-negative voter weights")
    sub.add_argument("--names", help="comma-separated voter names (default X1..Xn)")
    sub.add_argument("--input", help="JSON file with quota/weights[/names] fields")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="banzhaf",
        description="Banzhaf voting-power analysis of weighted yes-no systems.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_analyze = subs.add_parser("analyze", help="full power report for a system")
    _add_system_flags(p_analyze)
    p_analyze.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )
    p_analyze.add_argument(
        "--no-oracle",
        action="store_true",
        help="skip the independent-oracle cross-check",
    )
    p_analyze.set_defaults(func=_cmd_analyze)

    p_weight = subs.add_parser("weight", help="weight of an SOP expression")
    p_weight.add_argument("expr", help="SOP text, e.g. \"X1 X2 | X2 X3 | X1 X3\"")
    p_weight.add_argument("--names", help="declared variable order (default: appearance)")
    p_weight.add_argument(
        "--method",
        choices=("table", "disjoint", "ie", "all"),
        default="all",
        help="weight method; 'all' cross-checks the three",
    )
    p_weight.set_defaults(func=_cmd_weight)

    p_deriv = subs.add_parser(
        "derivative", help="Boolean difference w.r.t. one voter, as a disjoint SOP"
    )
    _add_system_flags(p_deriv)
    p_deriv.add_argument("--expr", help="SOP text instead of a quota/weights system")
    p_deriv.add_argument("--voter", required=True, help="voter name to differentiate by")
    p_deriv.set_defaults(func=_cmd_derivative)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleDisagreementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except (SopSyntaxError, NoDecisiveVoterError, ValueError, OSError) as exc:
        # json.JSONDecodeError is a ValueError, so malformed --input lands here too
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
