"""Command-line front end.

Exit codes: 0 success, 1 some verdict failed, 2 input failed validation,
3 a size bound was exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings
from pathlib import Path

from .chein import chein
from .errors import BoundExceeded, LoopsmithError, UnknownPreset, ValidationError
from .groups import PRESET_NAMES, preset
from .half import ENUMERATION_BOUND, compute_H, enumerate_automorphisms, enumerate_half_automorphisms
from .io import chein_record, dumps, load_group, load_loop, read_record
from .loops import has_aaip, is_associative, is_diassociative, is_moufang
from .report import analyze

EXIT_OK, EXIT_VERDICT, EXIT_INVALID, EXIT_BOUND = 0, 1, 2, 3


def _default_max_order() -> int:
    env = os.environ.get("LOOPSMITH_MAX_ORDER")
    return int(env) if env else ENUMERATION_BOUND


def _resolve_group(args):
    if args.file:
        return load_group(args.file), Path(args.file).name
    if args.group is None:
        raise ValidationError("one of --group or --file is required")
    if args.group.endswith(".json") or Path(args.group).is_file():
        return load_group(args.group), Path(args.group).name
    return preset(args.group), args.group


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _group_options(p):
    p.add_argument("--group", help=f"preset ({', '.join(PRESET_NAMES)}) or Cayley JSON path")
    p.add_argument("--file", help="group Cayley-table JSON file")
    p.add_argument("--out", help="output path (default: standard output)")
    p.add_argument("--max-order", type=int, default=None,
                   help=f"largest loop order to enumerate (default {ENUMERATION_BOUND}, env LOOPSMITH_MAX_ORDER)")
    p.add_argument("--parallel", type=int, default=1, help="worker processes for enumeration")
    p.add_argument("--format", choices=("json", "text"), default=None)


def _max_order(args) -> int:
    m = args.max_order if args.max_order is not None else _default_max_order()
    if m > ENUMERATION_BOUND:
        warnings.warn(f"enumeration bound raised to {m}; runtime may grow quickly", RuntimeWarning)
    return m


def cmd_analyze(args) -> int:
    G, source = _resolve_group(args)
    report = analyze(G, source, max_order=_max_order(args), parallel=args.parallel)
    fmt = args.format or ("json" if args.out else "text")
    if fmt == "json":
        _emit(dumps(report.to_json(timings=args.timings)), args.out)
    else:
        _emit(report.to_text(timings=args.timings), args.out)
    return EXIT_OK if report.all_pass else EXIT_VERDICT


def cmd_build(args) -> int:
    G, source = _resolve_group(args)
    _emit(dumps(chein_record(chein(G), f"M({source},2)")), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    rec = read_record(args.path)
    L = load_loop(args.path)
    result = {
        "name": rec.get("name"),
        "order": L.order,
        "valid_loop": True,
        "associative": is_associative(L).holds,
        "moufang": is_moufang(L).holds,
        "commutative": L.is_commutative,
        "two_sided_inverses": L.two_sided_inverses is not None,
    }
    if L.order <= 64:
        result["diassociative"] = is_diassociative(L).holds
    if L.two_sided_inverses is not None:
        result["aaip"] = has_aaip(L).holds
    if "embedding" in rec:
        result["embedding"] = rec["embedding"]
    fmt = args.format or "json"
    if fmt == "json":
        _emit(dumps(result), args.out)
    else:
        _emit("".join(f"{k}: {v}\n" for k, v in result.items()), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    G, source = _resolve_group(args)
    max_order = _max_order(args)
    if args.direct:
        L = G
        if args.kind == "h":
            raise ValidationError("--kind h needs the Chein loop; drop --direct")
    else:
        E = chein(G)
        L = E.loop
    if args.kind == "aut":
        found = enumerate_automorphisms(L, bound=max_order, parallel=args.parallel)
    elif args.kind == "half":
        found = enumerate_half_automorphisms(L, bound=max_order, parallel=args.parallel)
    else:
        found = compute_H(E)
    doc = {"kind": args.kind, "source": source, "direct": args.direct, **found.to_json()}
    _emit(dumps(doc), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="loopsmith", description="Chein loops and their half-automorphisms")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full pipeline and verdicts for M(G,2)")
    _group_options(p)
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte identity)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("build", help="write the Cayley table of M(G,2)")
    _group_options(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="validate a Cayley-table file and report predicates")
    p.add_argument("path")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "text"), default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list automorphisms, half-automorphisms or H")
    _group_options(p)
    p.add_argument("--kind", choices=("aut", "half", "h"), required=True)
    p.add_argument("--direct", action="store_true", help="use the group table itself as the loop")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, UnknownPreset) as exc:
        witness = getattr(exc, "witness", None)
        print(f"error: {type(exc).__name__}: {exc}" + (f" (witness {witness})" if witness else ""),
              file=sys.stderr)
        return EXIT_INVALID
    except BoundExceeded as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except LoopsmithError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
