"""Command-line front end: ``egdiff <command> SEQUENCE [...]``.

Sequences are written inline as comma- and/or space-separated integers
(quote them if they contain spaces); an empty string is the empty
sequence.  Every command accepts ``--json``.

Exit codes: 0 success, 2 unparseable input, 3 precondition failure
(e.g. a non-graphical sequence where a graphical one is required), 4 a
desk-scale size cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from typing import Callable, Sequence

from .classes import is_split, is_threshold, is_weakly_threshold, splittance
from .complement import complement_sequence
from .core import (
    DegreeSequence,
    EGDiffError,
    InvalidDegreeError,
    PreconditionError,
    SizeLimitError,
    is_graphical_full,
    modified_durfee,
    principal_differences,
)
from .matrix import difference_matrix, ferrers, format_matrix, sigma_all
from .posets import dominates, muirhead_chain, rao_leq
from .realize import (
    ENUMERATION_LIMIT,
    Graph,
    enumerate_labeled_realizations,
    forcible_pairs,
    havel_hakimi,
)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CAP = 0, 2, 3, 4
HARD_LIMIT = 12
LIMIT_ENV = "EGDIFF_LIMIT"


class ParseError(EGDiffError):
    pass


def parse_sequence(text: str, lineno: int | None = None) -> DegreeSequence:
    """Parse ``"6,5,3"`` / ``"6 5 3"`` into a sequence; blank means empty."""
    where = f"line {lineno}: " if lineno is not None else ""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"{where}cannot parse {text.strip()!r} as integers") from None
    try:
        return DegreeSequence(values)
    except InvalidDegreeError as exc:
        raise ParseError(f"{where}{exc}") from None


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _csv(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def _limit(args: argparse.Namespace, default: int) -> int:
    limit = args.limit
    if limit is None and os.environ.get(LIMIT_ENV):
        try:
            limit = int(os.environ[LIMIT_ENV])
        except ValueError:
            raise ParseError(f"{LIMIT_ENV}={os.environ[LIMIT_ENV]!r} is not an integer")
    if limit is None:
        limit = default
    if limit > HARD_LIMIT:
        raise SizeLimitError(f"limit {limit} exceeds the hard ceiling {HARD_LIMIT}")
    return limit


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u + 1, v + 1] for u, v in g.sorted_edges()]}


# Each command returns (plain text, JSON-able object).
Result = tuple[str, object]


def cmd_delta(d: DegreeSequence, args) -> Result:
    diffs = principal_differences(d)
    m = modified_durfee(d)
    star = max(diffs) if diffs else None
    graphical = is_graphical_full(d)
    text = (
        f"m={m} Δ=({_csv(diffs)}) Δ*={'none' if star is None else star} "
        f"graphical={_flag(graphical)}"
    )
    return text, {"m": m, "delta": list(diffs), "delta_star": star, "graphical": graphical}


def cmd_classify(d: DegreeSequence, args) -> Result:
    res = {
        "split": is_split(d),
        "threshold": is_threshold(d),
        "weakly_threshold": is_weakly_threshold(d),
        "splittance": splittance(d),
    }
    text = " ".join(
        f"{k}={_flag(v) if isinstance(v, bool) else v}" for k, v in res.items()
    )
    return text, res


def cmd_matrix(d: DegreeSequence, args) -> Result:
    which = getattr(args, "which", "M")
    mat = ferrers(d) if which == "F" else difference_matrix(d)
    return format_matrix(mat.entries), {"which": which, "n": mat.n, "entries": mat.tolist()}


def cmd_sigma(d: DegreeSequence, args) -> Result:
    values = [int(x) for x in sigma_all(d)]
    return _csv(values), {"sigma": values}


def cmd_complement(d: DegreeSequence, args) -> Result:
    c = complement_sequence(d)
    return _csv(c), {"complement": list(c)}


def cmd_realize(d: DegreeSequence, args) -> Result:
    g = havel_hakimi(d)
    return g.to_edge_list().rstrip("\n"), _graph_json(g)


def cmd_enumerate(d: DegreeSequence, args) -> Result:
    graphs = enumerate_labeled_realizations(d, _limit(args, ENUMERATION_LIMIT))
    lines = [f"count={len(graphs)}"]
    if not args.quiet:
        lines += [g.to_edge_list() for g in graphs]
    text = "\n".join(lines).rstrip("\n")
    return text, {"count": len(graphs), "graphs": [_graph_json(g) for g in graphs]}


def cmd_forcible(d: DegreeSequence, args) -> Result:
    pairs = forcible_pairs(d, _limit(args, ENUMERATION_LIMIT))
    lines = [
        f"{p.i} {p.j} {p.kind}" + (" trivial" if p.trivial else "")
        for p in pairs
        if not (args.quiet and p.trivial)
    ]
    obj = {
        "pairs": [
            {"i": p.i, "j": p.j, "kind": p.kind, "trivial": p.trivial} for p in pairs
        ]
    }
    return "\n".join(lines) if lines else "none", obj


def cmd_dominance(d: DegreeSequence, e: DegreeSequence, args) -> Result:
    res = dominates(d, e)
    return _flag(res), {"dominates": res}


def cmd_rao(e: DegreeSequence, d: DegreeSequence, args) -> Result:
    res = rao_leq(e, d, vertex_limit=_limit(args, ENUMERATION_LIMIT))
    return _flag(res), {"rao_leq": res}


def cmd_chain(d: DegreeSequence, e: DegreeSequence, args) -> Result:
    chain = muirhead_chain(d, e)
    return "\n".join(_csv(p) for p in chain), {"chain": [list(p) for p in chain]}


SINGLE: dict[str, Callable[[DegreeSequence, argparse.Namespace], Result]] = {
    "delta": cmd_delta,
    "classify": cmd_classify,
    "matrix": cmd_matrix,
    "sigma": cmd_sigma,
    "complement": cmd_complement,
    "realize": cmd_realize,
    "enumerate": cmd_enumerate,
    "forcible": cmd_forcible,
}
PAIR = {"dominance": cmd_dominance, "rao": cmd_rao, "chain": cmd_chain}


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, SizeLimitError):
        return EXIT_CAP
    if isinstance(exc, PreconditionError):
        return EXIT_PRECONDITION
    return EXIT_PARSE


def cmd_batch(args) -> int:
    """One output row per input line, in order; a failing line never stops the batch."""
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc}") from None
    func = SINGLE[args.analysis]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n") if not args.json else None
    if writer:
        writer.writerow(["line", "input", "status", "result"])
    for lineno, raw in enumerate(lines, start=1):
        try:
            d = parse_sequence(raw, lineno)
            text, obj = func(d, args)
            row = {"line": lineno, "input": list(d), "ok": True, "result": obj}
            status = "ok"
        except EGDiffError as exc:
            code = exit_code_for(exc)
            text = str(exc)
            row = {"line": lineno, "input": raw.strip(), "ok": False,
                   "exit_code": code, "error": text}
            status = f"error:{code}"
        if writer:
            writer.writerow([lineno, raw.strip(), status, text])
        else:
            out.write(json.dumps(row, ensure_ascii=False) + "\n")
    sys.stdout.write(out.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true", help="terse output")
    common.add_argument(
        "--limit",
        type=int,
        default=None,
        help=(
            f"vertex cap for brute-force commands (default {ENUMERATION_LIMIT}, "
            f"or ${LIMIT_ENV}); hard ceiling {HARD_LIMIT}"
        ),
    )
    parser = argparse.ArgumentParser(
        prog="egdiff",
        description="Erdős–Gallai difference lists of degree sequences.",
        epilog="exit codes: 0 ok, 2 parse error, 3 precondition failed, 4 size cap exceeded",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "delta": "m(d), the principal differences, their maximum and graphicality",
        "classify": "split / threshold / weakly threshold flags and splittance",
        "matrix": "Ferrers diagram F(d) or difference matrix M(d)",
        "sigma": "row-prefix sums of M(d), i = 0..n",
        "complement": "degree sequence of the complement",
        "realize": "one realization (Havel-Hakimi) as an edge list",
        "enumerate": "all labeled realizations",
        "forcible": "pairs forced adjacent or nonadjacent",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("sequence")
        if name == "matrix":
            p.add_argument("--which", choices=["F", "M"], default="M")
    for name, text, first, second in [
        ("dominance", "does D majorize E", "d", "e"),
        ("rao", "is E below D in Rao's induced-subgraph order", "e", "d"),
        ("chain", "chain of unit transformations from D down to E", "d", "e"),
    ]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument(first)
        p.add_argument(second)
    p = sub.add_parser("batch", parents=[common], help="run one analysis per line of FILE")
    p.add_argument("file")
    p.add_argument("--analysis", choices=sorted(SINGLE), default="delta")
    p.add_argument("--which", choices=["F", "M"], default="M")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "batch":
            return cmd_batch(args)
        if args.command in PAIR:
            names = ("e", "d") if args.command == "rao" else ("d", "e")
            seqs = {k: parse_sequence(getattr(args, k)) for k in names}
            text, obj = PAIR[args.command](seqs[names[0]], seqs[names[1]], args)
        else:
            text, obj = SINGLE[args.command](parse_sequence(args.sequence), args)
    except EGDiffError as exc:
        print(f"egdiff: error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    if args.json:
        print(json.dumps(obj, ensure_ascii=False, separators=(",", ":")))
    else:
        print(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
