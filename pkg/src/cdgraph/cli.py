"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 the descriptor is
not covered by the classification, 3 malformed input, 4 unknown family,
64 command-line usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .classifier import DescriptorError, classify, format_verdict, parse_descriptor
from .degree_graphs import SimpleFamily, UnknownFamilyError, family_graph, parse_family_name
from .graph import connectivity_report, to_canonical, to_dot
from .groups import GroupOverflowError
from .numtheory import factor, zsygmondy, zsygmondy_exception
from .suites import SUITES, run_suite

__all__ = ["EXIT", "main", "run"]

EXIT = {
    "ok": 0,
    "check_failed": 1,
    "not_covered": 2,
    "malformed": 3,
    "unknown_family": 4,
    "usage": 64,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.prog}: error: {message}")


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _family(name: str, params: Sequence[int]) -> SimpleFamily:
    tag = parse_family_name(name)
    if tag in ("PSL2", "SL2"):
        if len(params) == 1:
            fac = factor(params[0]).factors if params[0] >= 2 else ()
            if len(fac) != 1:
                raise ValueError(f"{params[0]} is not a prime power")
            (t, a), = fac
            return SimpleFamily(tag, t, a)
        if len(params) != 2:
            raise ValueError(f"{tag} takes either t a or a prime power q")
        return SimpleFamily(tag, *params)
    if tag == "Sz":
        if len(params) != 1:
            raise ValueError("Sz takes the exponent a")
        return SimpleFamily(tag, 2, params[0])
    if params:
        raise ValueError(f"{tag} takes no parameters")
    return SimpleFamily(tag)


def _cmd_graph(args, out: TextIO) -> int:
    g = family_graph(_family(args.family, args.params))
    rep = connectivity_report(g)
    out.write(to_canonical(g))
    out.write("# report\n")
    out.write("components: " + " ".join(_fmt_set(c) for c in rep.components) + "\n")
    out.write("cut-vertices: " + (" ".join(map(str, sorted(rep.cut_vertices))) or "-") + "\n")
    out.write(f"connectivity-degree: {rep.connectivity_degree}\n")
    out.write("complete-vertices: " + (" ".join(map(str, sorted(rep.complete_vertices))) or "-") + "\n")
    return EXIT["ok"]


def _cmd_export(args, out: TextIO) -> int:
    fam = _family(args.family, args.params)
    text = to_dot(family_graph(fam), fam.label())
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT["ok"]


def _cmd_classify(args, out: TextIO) -> int:
    text = sys.stdin.read() if args.descriptor == "-" else Path(args.descriptor).read_text()
    verdict = classify(parse_descriptor(text))
    out.write(format_verdict(verdict))
    return EXIT["not_covered"] if verdict.outcome == "not_covered" else EXIT["ok"]


def _cmd_verify(args, out: TextIO) -> int:
    results = run_suite(args.suite)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"summary: {len(results) - failed} passed, {failed} failed\n")
    return EXIT["check_failed"] if failed else EXIT["ok"]


def _cmd_zsygmondy(args, out: TextIO) -> int:
    if args.a < 2 or args.n < 2:
        raise ValueError("a and n must be at least 2")
    p = zsygmondy(args.a, args.n)
    if p is None:
        out.write(f"none: exceptional case {zsygmondy_exception(args.a, args.n)}\n")
    else:
        out.write(f"{p}\n")
    return EXIT["ok"]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cdgraph", description="Character degree graphs with a cut-vertex.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    g = sub.add_parser("graph", help="print the degree graph of a simple group and its connectivity")
    g.add_argument("family", help="psl2, sl2, sz, psl3_4, m11 or j1")
    g.add_argument("params", nargs="*", type=int, help="t a (or q) for psl2/sl2, a for sz")
    g.set_defaults(func=_cmd_graph)

    c = sub.add_parser("classify", help="classify a group descriptor file ('-' for stdin)")
    c.add_argument("descriptor")
    c.set_defaults(func=_cmd_classify)

    v = sub.add_parser("verify", help="run a brute-force verification suite")
    v.add_argument("suite", choices=[*SUITES, "all"])
    v.set_defaults(func=_cmd_verify)

    z = sub.add_parser("zsygmondy", help="smallest primitive prime divisor of a^n - 1")
    z.add_argument("a", type=int)
    z.add_argument("n", type=int)
    z.set_defaults(func=_cmd_zsygmondy)

    e = sub.add_parser("export", help="write a degree graph in Graphviz DOT")
    e.add_argument("--dot", action="store_true", required=True, help="DOT output (the only format)")
    e.add_argument("-o", "--output", help="file to write instead of stdout")
    e.add_argument("family")
    e.add_argument("params", nargs="*", type=int)
    e.set_defaults(func=_cmd_export)
    return parser


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Execute one command; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT["usage"]
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UnknownFamilyError as exc:
        err.write(f"error: {exc}\n")
        return EXIT["unknown_family"]
    except DescriptorError as exc:
        err.write(f"error: descriptor field {exc.field}: {exc.message}\n")
        return EXIT["malformed"]
    except (ValueError, OSError, GroupOverflowError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT["malformed"]


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
