"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 disagreement between methods,
3 resource guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .class_algebra import hurwitz_number, trace_product
from .complex import ChamberDisagreement, HurwitzComplex, degree, degree_recursive, format_rational
from .embedding import MetricPoint, canonical_quadruples, embed
from .monodromy import DEFAULT_MAX_WORK, ResourceGuardExceeded, count_monodromy_tuples
from .partitions import PartitionError, genus_from_profile, parse_profile
from .selfcheck import run_selfcheck
from .trees import TreeError, enumerate_trivalent_types, parse_bipartition, tree_from_splits

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2
EXIT_GUARD = 3

METHODS = ("trace", "oracle", "degree", "recursive")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    d: int | None = None
    profile: list[str] = field(default_factory=list)
    method: str = "all"
    out: str | None = None
    max_work: int = DEFAULT_MAX_WORK
    single_chamber: bool = False
    jobs: int = 1
    format: str = "human"
    seed: int = 0

    def parsed_profile(self):
        if self.d is None or not self.profile:
            raise UsageError("--d and --profile are required")
        return parse_profile(";".join(self.profile), self.d)


def cmd_hurwitz(config: RunConfig, stdout=sys.stdout) -> int:
    profile = config.parsed_profile()
    methods = METHODS if config.method == "all" else (config.method,)
    values: dict[str, Fraction] = {}
    for method in methods:
        if method == "trace":
            values[method] = hurwitz_number(profile)
        elif method == "oracle":
            count = count_monodromy_tuples(profile, max_work=config.max_work, jobs=config.jobs)
            values[method] = Fraction(count, math.factorial(profile.d))
        elif method == "degree":
            values[method] = degree(profile, single_chamber=config.single_chamber, jobs=config.jobs)
        elif method == "recursive":
            values[method] = degree_recursive(profile)
    agree = len(set(values.values())) == 1
    genus = genus_from_profile(profile)
    if config.format == "json":
        report = {
            "d": profile.d,
            "profile": [str(p) for p in profile],
            "genus": format_rational(genus),
            "genus_integral": genus.denominator == 1,
            "trace": trace_product(profile),
            "values": {m: format_rational(v) for m, v in values.items()},
            "agree": agree,
        }
        print(json.dumps(report, indent=2), file=stdout)
    elif len(values) == 1:
        print(format_rational(next(iter(values.values()))), file=stdout)
    else:
        for m, v in values.items():
            print(f"{m:>9}: {format_rational(v)}", file=stdout)
        flag = "" if genus.denominator == 1 else " (non-integral: not a connected smooth cover)"
        print(f"    genus: {format_rational(genus)}{flag}", file=stdout)
        if agree:
            print(f"{format_rational(next(iter(values.values())))} (all methods agree)", file=stdout)
        else:
            print("DISAGREEMENT between methods", file=stdout)
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_cells(config: RunConfig, stdout=sys.stdout) -> int:
    profile = config.parsed_profile()
    cx = HurwitzComplex.build(profile)
    data = cx.to_json()
    text = json.dumps(data, indent=2)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {len(cx.cells)} cells, degree {data['degree']['value']} to {config.out}", file=stdout)
    else:
        print(text, file=stdout)
    return EXIT_OK


def cmd_embed(n: int, tree_text: str, lengths_text: str, fmt: str = "human", stdout=sys.stdout) -> int:
    splits = [parse_bipartition(s, n) for s in tree_text.split(";") if s.strip()] if tree_text else []
    tree = tree_from_splits(n, splits)
    if not tree.is_trivalent():
        raise UsageError(f"--tree must describe a trivalent tree with {n - 3} bounded edges")
    given = [Fraction(x) for x in lengths_text.split(",") if x.strip()] if lengths_text else []
    if len(given) != len(splits):
        raise UsageError(f"{len(splits)} splits but {len(given)} lengths")
    point = MetricPoint.from_mapping(tree, dict(zip(splits, given)))
    coords = embed(point)
    quads = canonical_quadruples(n)
    if fmt == "json":
        print(
            json.dumps(
                {
                    "n": n,
                    "quadruples": [str(q) for q in quads],
                    "coordinates": [format_rational(c) for c in coords],
                },
                indent=2,
            ),
            file=stdout,
        )
    else:
        for q, c in zip(quads, coords):
            print(f"{q}\t{format_rational(c)}", file=stdout)
    return EXIT_OK


def cmd_trees(n: int, fmt: str = "human", stdout=sys.stdout) -> int:
    trees = enumerate_trivalent_types(n)
    if fmt == "json":
        print(json.dumps([t.to_json() for t in trees], indent=2), file=stdout)
    else:
        for t in trees:
            print(t, file=stdout)
        print(f"{len(trees)} trivalent types", file=stdout)
    return EXIT_OK


def cmd_selfcheck(max_d: int, max_n: int, seed: int, stdout=sys.stdout) -> int:
    results = run_selfcheck(max_d=max_d, max_n=max_n, seed=seed)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.name}: {r.detail}", file=stdout)
    return EXIT_OK if all(r.passed for r in results) else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tropical-hurwitz", description="Tropical Hurwitz complexes and Hurwitz numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def profile_args(p):
        p.add_argument("--d", type=int, required=True, help="degree of the cover")
        p.add_argument("--profile", required=True, help='partitions separated by ";", e.g. "2,1;2,1;3"')
        p.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("hurwitz", help="Hurwitz number by trace, oracle, degree and recursion")
    profile_args(p)
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.add_argument("--single-chamber", action="store_true", help="skip the chamber-independence check")
    p.add_argument("--max-work", type=int, default=DEFAULT_MAX_WORK)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("cells", help="export the complex as hurwitz-complex/1 JSON")
    profile_args(p)
    p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("embed", help="double-ratio coordinates of a metric tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tree", default="", help='bounded-edge splits separated by ";", e.g. "12|345;123|45"')
    p.add_argument("--lengths", default="", help="comma-separated lengths, one per split")
    p.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("trees", help="list trivalent tree types")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("selfcheck", help="run the bounded verification suite")
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("hurwitz", "cells"):
            config = RunConfig(
                command=args.command,
                d=args.d,
                profile=[args.profile],
                method=getattr(args, "method", "all"),
                out=getattr(args, "out", None),
                max_work=getattr(args, "max_work", DEFAULT_MAX_WORK),
                single_chamber=getattr(args, "single_chamber", False),
                jobs=getattr(args, "jobs", 1),
                format=args.format,
            )
            handler = cmd_hurwitz if args.command == "hurwitz" else cmd_cells
            return handler(config, stdout=stdout)
        if args.command == "embed":
            return cmd_embed(args.n, args.tree, args.lengths, args.format, stdout=stdout)
        if args.command == "trees":
            return cmd_trees(args.n, args.format, stdout=stdout)
        if args.command == "selfcheck":
            return cmd_selfcheck(args.max_d, args.max_n, args.seed, stdout=stdout)
    except (PartitionError, TreeError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardExceeded as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ChamberDisagreement as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
