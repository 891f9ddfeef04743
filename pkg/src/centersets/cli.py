"""Command-line interface: center queries, enumeration, classification,
characterization checks, selection counts, and graph generation.

Exit codes: 0 success, 1 domain error or failed verification (JSON error
object on stderr), 2 usage error. JSON output is canonical: sorted keys, no
spaces, vertex lists ascending.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import generators
from .classify import classify
from .counting import COUNT_FUNCTIONS, center_number_formula, oracle_count
from .errors import BadParamsError, CenterSetError
from .families import CLASS_TAGS, ClassSpec, verify_class
from .graph import format_edge_list, parse_edge_list
from .profiles import DEFAULT_MAX_N, center_number, enumerate_center_sets, profile_center

_GEN_FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete-bipartite",
    "star",
    "wheel",
    "complete-minus-edge",
    "hypercube",
    "random-tree",
    "random-block-graph",
    "random-connected",
)

_CN_TAGS = (
    "complete",
    "tree",
    "complete-bipartite",
    "complete-minus-edge",
    "wheel",
    "even-cycle",
    "odd-cycle",
)


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_profile(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"profile must be comma-separated integers, got {text!r}"
        ) from None


def _load_graph(path: str):
    return parse_edge_list(Path(path).read_text())


def _shift(vertices, one_based: bool) -> list[int]:
    return [v + 1 for v in vertices] if one_based else list(vertices)


def _shift_sets(sets, one_based: bool) -> list[list[int]]:
    return [_shift(s, one_based) for s in sets]


def _effective_max_n(args) -> int:
    if args.max_n is None:
        return DEFAULT_MAX_N
    if args.max_n > DEFAULT_MAX_N:
        print(
            f"warning: enumeration visits 2^n profiles; max-n={args.max_n} may be slow",
            file=sys.stderr,
        )
    return args.max_n


def _cmd_center(args) -> int:
    g = _load_graph(args.graph)
    result = _shift(profile_center(g, args.profile), args.one_based)
    if args.format == "json":
        print(_canonical_json({"center": result}))
    else:
        print(_canonical_json(result))
    return 0


def _cmd_enumerate(args) -> int:
    g = _load_graph(args.graph)
    family = enumerate_center_sets(g, _effective_max_n(args))
    sets = _shift_sets(family.sets, args.one_based)
    if args.format == "json":
        print(_canonical_json(sets))
    else:
        for s in sets:
            print(_canonical_json(s))
        print(f"count {family.count}")
    return 0


def _cmd_classify(args) -> int:
    facts = asdict(classify(_load_graph(args.graph)))
    if args.format == "json":
        print(_canonical_json(facts))
    else:
        for key in sorted(facts):
            print(f"{key}: {'true' if facts[key] else 'false'}")
    return 0


def _instantiate(spec: ClassSpec):
    if spec.n is None:
        raise BadParamsError(f"class {spec.tag!r} needs --n (or use --graph)")
    if spec.tag == "complete":
        return generators.complete(spec.n)
    if spec.tag == "complete-bipartite":
        if spec.m is None:
            raise BadParamsError("complete-bipartite needs --m and --n")
        return generators.complete_bipartite(spec.m, spec.n)
    if spec.tag == "complete-minus-edge":
        return generators.complete_minus_edge(spec.n)
    if spec.tag == "wheel":
        return generators.wheel(spec.n)
    if spec.tag in ("odd-cycle", "even-cycle"):
        return generators.cycle(spec.n)
    raise BadParamsError(f"class {spec.tag!r} needs an explicit --graph")


def _cmd_verify(args) -> int:
    spec = ClassSpec(tag=args.cls, n=args.n, m=args.m)
    if args.graph is not None:
        g = _load_graph(args.graph)
    else:
        g = _instantiate(spec)
    report = verify_class(g, spec, _effective_max_n(args))
    payload = {
        "class": report.tag,
        "n": report.n,
        "predicted_count": report.predicted_count,
        "enumerated_count": report.enumerated_count,
        "missing": _shift_sets(report.missing, args.one_based),
        "unexpected": _shift_sets(report.unexpected, args.one_based),
        "passed": report.passed,
    }
    if args.format == "json":
        print(_canonical_json(payload))
    else:
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{status} {report.tag} n={report.n} "
            f"predicted={report.predicted_count} enumerated={report.enumerated_count}"
        )
        for s in payload["missing"]:
            print(f"missing {_canonical_json(s)}")
        for s in payload["unexpected"]:
            print(f"unexpected {_canonical_json(s)}")
    return 0 if report.passed else 1


def _cmd_count(args) -> int:
    payload: dict = {}
    if args.fn is not None:
        if args.k is None:
            raise BadParamsError("--fn needs both --n and --k")
        value = COUNT_FUNCTIONS[args.fn](args.n, args.k)
        payload = {"kind": "fn", "label": args.fn, "n": args.n, "k": args.k, "value": value}
        if args.oracle:
            payload["oracle"] = oracle_count(args.fn, args.n, args.k)
    else:
        spec = ClassSpec(tag=args.cn, n=args.n, m=args.m)
        value = center_number_formula(spec)
        payload = {"kind": "cn", "label": args.cn, "n": args.n, "value": value}
        if args.m is not None:
            payload["m"] = args.m
        if args.oracle:
            payload["oracle"] = center_number(_instantiate(spec))
    if args.oracle:
        payload["match"] = payload["value"] == payload["oracle"]
    if args.format == "json":
        print(_canonical_json(payload))
    else:
        print(payload["value"])
        if args.oracle:
            print(f"oracle {payload['oracle']}")
            print(f"match {'true' if payload['match'] else 'false'}")
    return 0 if not args.oracle or payload["match"] else 1


def _cmd_gen(args) -> int:
    family = args.family
    if family == "path":
        g = generators.path(args.n)
    elif family == "cycle":
        g = generators.cycle(args.n)
    elif family == "complete":
        g = generators.complete(args.n)
    elif family == "complete-bipartite":
        if args.m is None:
            raise BadParamsError("complete-bipartite needs --m and --n")
        g = generators.complete_bipartite(args.m, args.n)
    elif family == "star":
        g = generators.star(args.n)
    elif family == "wheel":
        g = generators.wheel(args.n)
    elif family == "complete-minus-edge":
        g = generators.complete_minus_edge(args.n)
    elif family == "hypercube":
        g = generators.hypercube(args.n)
    elif family == "random-tree":
        g = generators.random_tree(args.n, args.seed)
    elif family == "random-block-graph":
        if args.blocks is None or args.max_block is None:
            raise BadParamsError("random-block-graph needs --blocks and --max-block")
        g = generators.random_block_graph(args.blocks, args.max_block, args.seed)
    else:
        if args.p is None:
            raise BadParamsError("random-connected needs --p")
        g = generators.random_connected(args.n, args.p, args.seed)
    text = format_edge_list(g)
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return 0


def _add_common(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--one-based", action="store_true",
                     help="display vertices 1-based (display only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centersets",
        description="Profile centers and center-set analysis for connected graphs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("center", help="center of a vertex profile")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--profile", required=True, type=_parse_profile,
                   help="comma-separated vertices, e.g. 0,3,5")
    _add_common(p)
    p.set_defaults(func=_cmd_center)

    p = subs.add_parser("enumerate", help="all center sets of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-n", type=int, default=None,
                   help=f"override the enumeration cap (default {DEFAULT_MAX_N})")
    _add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = subs.add_parser("classify", help="structural predicates as booleans")
    p.add_argument("--graph", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = subs.add_parser("verify", help="check a class characterization against enumeration")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--graph", default=None, help="edge-list file (else built from --n/--m)")
    p.add_argument("--n", type=int, default=None, help="vertex count")
    p.add_argument("--m", type=int, default=None, help="first part size (complete-bipartite)")
    p.add_argument("--max-n", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("count", help="pattern-avoiding selection counts and center numbers")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--fn", choices=tuple(COUNT_FUNCTIONS), default=None)
    which.add_argument("--cn", choices=_CN_TAGS, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--oracle", action="store_true",
                   help="also compute the brute-force value and compare")
    _add_common(p)
    p.set_defaults(func=_cmd_count)

    p = subs.add_parser("gen", help="emit a graph in edge-list format")
    p.add_argument("--family", required=True, choices=_GEN_FAMILIES)
    p.add_argument("--n", type=int, required=True,
                   help="vertex count (hypercube: dimension)")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--blocks", type=int, default=None)
    p.add_argument("--max-block", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write to file instead of stdout")
    _add_common(p)
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CenterSetError, OSError) as exc:
        print(
            _canonical_json({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 1


def entry() -> None:
    sys.exit(main())
