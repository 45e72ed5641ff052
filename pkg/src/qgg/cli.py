"""Command line front door.

Commands: rank, girth, classify, reduce, random, verify.  Exit codes:
0 success, 1 mathematical disagreement or falsification (witness files
written next to the report), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys

from .errors import Falsification, FormatError, OracleDisagreement, QggError
from .graph import emit_qgg, girth, with_random_gains
from .qlinalg import left_row_rank_eliminate, rank_both, rank_via_adjoint
from .reduce import reduced_graph_with_trace, trim_pendant_pairs
from .survey import SUITES, run_survey
from . import theorems

_EXIT_OK = 0
_EXIT_DISAGREE = 1
_EXIT_USAGE = 2


def _add_common(parser):
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("-o", "--out", metavar="PATH", help="write the report here")


def _add_tower(parser):
    parser.add_argument("--tower", choices=("exact", "float"), default="exact")
    parser.add_argument("--tol", type=float, default=1e-9)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgg",
        description="Quaternion unit gain graphs: rank, girth, classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="left row rank of a gain graph")
    p_rank.add_argument("input")
    p_rank.add_argument("--method", choices=("elim", "adjoint", "both"), default="elim")
    _add_tower(p_rank)
    _add_common(p_rank)

    p_girth = sub.add_parser("girth", help="girth and one shortest cycle")
    p_girth.add_argument("input")
    _add_common(p_girth)

    p_cls = sub.add_parser("classify", help="rank vs girth classification")
    p_cls.add_argument("input")
    _add_tower(p_cls)
    _add_common(p_cls)

    p_red = sub.add_parser("reduce", help="delete multiple vertices; write the result")
    p_red.add_argument("input")
    _add_common(p_red)

    p_rand = sub.add_parser("random", help="assign seeded random gains to an edge list")
    p_rand.add_argument("input")
    p_rand.add_argument("--gain-set", choices=("lipschitz", "uniform"), default="lipschitz")
    p_rand.add_argument("--seed", type=int, default=1)
    _add_common(p_rand)

    p_ver = sub.add_parser("verify", help="run the verification suites")
    p_ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p_ver.add_argument("--max-n", type=int, default=6)
    p_ver.add_argument("--samples", type=int, default=10)
    p_ver.add_argument("--seed", type=int, default=1)
    p_ver.add_argument("--gain-set", choices=("lipschitz", "uniform"), default="lipschitz")
    _add_common(p_ver)

    return parser


def _load(path, tower="exact"):
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    from .graph import parse_qgg

    return parse_qgg(text, tower=tower)


def _emit_report(args, payload: dict, text_lines: list[str]) -> None:
    if args.output == "json":
        body = json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"
    else:
        body = "\n".join(text_lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _cmd_rank(args) -> int:
    g = _load(args.input, tower=args.tower)
    a = g.adjacency_matrix()
    if args.method == "elim":
        report = left_row_rank_eliminate(a, args.tol)
        payload = {"rank": report.rank, "method": "elimination", "tolerance": report.tolerance}
        _emit_report(args, payload, [f"rank {report.rank} (elimination)"])
        return _EXIT_OK
    if args.method == "adjoint":
        report = rank_via_adjoint(a, args.tol)
        payload = {"rank": report.rank, "method": "adjoint", "tolerance": report.tolerance}
        _emit_report(args, payload, [f"rank {report.rank} (adjoint)"])
        return _EXIT_OK
    elim, adj, agree = rank_both(a, args.tol)
    payload = {
        "rank": elim.rank if agree else None,
        "elimination": elim.rank,
        "adjoint": adj.rank,
        "agree": agree,
    }
    _emit_report(
        args,
        payload,
        [f"elimination {elim.rank}", f"adjoint {adj.rank}", f"agree {agree}"],
    )
    return _EXIT_OK if agree else _EXIT_DISAGREE


def _cmd_girth(args) -> int:
    g = _load(args.input)
    w = girth(g)
    if w is None:
        _emit_report(args, {"girth": None, "cycle": None}, ["acyclic"])
        return _EXIT_OK
    cycle_1idx = [v + 1 for v in w.cycle]
    _emit_report(
        args,
        {"girth": w.length, "cycle": cycle_1idx},
        [f"girth {w.length}", "cycle " + " ".join(map(str, cycle_1idx))],
    )
    return _EXIT_OK


def _cmd_classify(args) -> int:
    g = _load(args.input, tower=args.tower)
    report = theorems.classify(g)
    shape = report.shape
    payload = {
        "girth": report.girth,
        "rank": report.rank,
        "relation": report.relation,
        "matched_case": report.matched_case,
        "prediction_agrees": report.prediction_agrees,
        "sufficient_only": report.sufficient_only,
        "shape": {
            "family": shape.family,
            "params": list(shape.params),
        }
        if shape
        else None,
        "shortest_cycle": [v + 1 for v in report.shortest_cycle]
        if report.shortest_cycle
        else None,
        "shortest_cycle_type": int(report.shortest_cycle_type)
        if report.shortest_cycle_type
        else None,
        "tower": args.tower,
        "approximate_types": args.tower == "float",
    }
    lines = [
        f"girth {report.girth}",
        f"rank {report.rank}",
        f"relation {report.relation}",
        f"case {report.matched_case}",
        f"shape {shape.family}{list(shape.params)}" if shape else "shape ?",
    ]
    _emit_report(args, payload, lines)
    return _EXIT_OK


def _cmd_reduce(args) -> int:
    g = _load(args.input)
    reduced, removed = reduced_graph_with_trace(g)
    trimmed = trim_pendant_pairs(reduced)
    text = emit_qgg(reduced)
    payload = {
        "order_before": g.n,
        "order_after": reduced.n,
        "removed_vertices": [v + 1 for v in removed],
        "pendant_pairs_in_reduced": trimmed.pairs,
        "reduced": text,
    }
    lines = [
        f"order {g.n} -> {reduced.n}",
        "removed " + (" ".join(str(v + 1) for v in removed) or "-"),
        f"pendant pairs in reduced graph: {trimmed.pairs}",
        text.rstrip("\n"),
    ]
    _emit_report(args, payload, lines)
    return _EXIT_OK


def _cmd_random(args) -> int:
    g = _load(args.input)  # only the underlying edge list matters
    rng = random.Random(args.seed)
    out = with_random_gains(g.n, g.edge_pairs(), args.gain_set, rng)
    body = emit_qgg(out)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return _EXIT_OK


def _witness_path(base_dir: str, text: str) -> str:
    digest = hashlib.sha256(text.encode("ascii")).hexdigest()[:16]
    return os.path.join(base_dir, f"witness-{digest}.qgg")


def _cmd_verify(args) -> int:
    report = run_survey(
        max_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        suites=(args.suite,),
        gain_set=args.gain_set,
    )
    payload = report.to_json()
    base_dir = os.path.dirname(os.path.abspath(args.out)) if args.out else os.getcwd()
    witness_files = []
    for item in report.falsifications:
        if item.get("graph"):
            path = _witness_path(base_dir, item["graph"])
            with open(path, "w", encoding="ascii") as fh:
                fh.write(item["graph"])
            witness_files.append(path)
    payload["witness_files"] = witness_files
    lines = [
        f"suites {', '.join(report.suites)}",
        f"checks {sum(report.counts.values())}",
    ]
    for key in sorted(report.counts):
        lines.append(f"  {key}: {report.counts[key]}")
    lines.append(f"unmatched rank-4 girth-4 graphs (open case): {report.unmatched_rank4_girth4}")
    lines.append(f"falsifications {len(report.falsifications)}")
    for path in witness_files:
        lines.append(f"  witness {path}")
    lines.append(f"elapsed {report.elapsed:.2f}s")
    lines.append("PASS" if report.ok else "FAIL")
    _emit_report(args, payload, lines)
    return _EXIT_OK if report.ok else _EXIT_DISAGREE


_COMMANDS = {
    "rank": _cmd_rank,
    "girth": _cmd_girth,
    "classify": _cmd_classify,
    "reduce": _cmd_reduce,
    "random": _cmd_random,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except (Falsification, OracleDisagreement) as exc:
        print(f"falsification: {exc}", file=sys.stderr)
        if isinstance(exc, Falsification) and exc.witness_text:
            path = _witness_path(os.getcwd(), exc.witness_text)
            with open(path, "w", encoding="ascii") as fh:
                fh.write(exc.witness_text)
            print(f"witness written to {path}", file=sys.stderr)
        return _EXIT_DISAGREE
    except QggError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
