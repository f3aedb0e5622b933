"""Command-line interface.

Exit status: 0 on success or a passing claim, 1 when a checked claim or
predicate fails, 2 on usage errors (bad flags, malformed input, composite p).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .graph import DomainError, enumerate_graphs, mask_of, parse_graph, parse_graphs, to_graph6
from .homology import (
    alexander_dual,
    betti_table,
    bicm_report,
    check_prime,
    has_linear_resolution,
    homological_profile,
    is_cohen_macaulay,
)
from .ideal import SquarefreeIdeal, edge_ideal, matching_power, squarefree_power, t_spread_borel
from . import verify as V

CHECKPOINT_ENV = "BICM_CHECKPOINT_DIR"


class UsageError(Exception):
    pass


def _read_source(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    path = Path(value)
    if len(value) < 256 and path.is_file():
        return path.read_text()
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected a list of integers, got {text!r}") from None


def _prime(text: str) -> int:
    try:
        return check_prime(int(text))
    except (ValueError, DomainError):
        raise argparse.ArgumentTypeError(f"--p must be a prime below 2^15, got {text!r}") from None


def _load_graph(args):
    return parse_graph(_read_source(args.graph))


def _load_ideal(args) -> SquarefreeIdeal:
    if getattr(args, "graph", None):
        return edge_ideal(_load_graph(args))
    if getattr(args, "ideal", None):
        try:
            return SquarefreeIdeal.from_json(_read_source(args.ideal))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed ideal JSON: {exc}") from None
    if getattr(args, "borel", None):
        u = _int_list(args.borel)
        t = _int_list(args.t or "")
        n = args.n if args.n is not None else max(u)
        if any(not 1 <= i <= n for i in u):
            raise UsageError("--borel indices must lie in 1..n")
        return t_spread_borel(mask_of(i - 1 for i in u), t, n)
    raise UsageError("give an input with --graph, --ideal or --borel")


def _add_input(p: argparse.ArgumentParser, borel: bool = True) -> None:
    p.add_argument("--graph", help="graph6 string, edge-list file, or - for stdin")
    p.add_argument("--ideal", help='ideal JSON {"n": .., "gens": [[..], ..]} (inline, file, or -)')
    if borel:
        p.add_argument("--borel", help="t-spread generator u as 1-indexed variables, e.g. 2,4")
        p.add_argument("--t", help="spread vector, e.g. 2 or 1,2")
        p.add_argument("--n", type=int, help="ambient variable count for --borel")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _ideal_text(ideal: SquarefreeIdeal) -> str:
    return f"n={ideal.n} {ideal}"


def cmd_gen(args) -> int:
    if args.n is None:
        raise UsageError("gen needs --n")
    for g in enumerate_graphs(args.n, no_isolated=args.no_isolated, up_to_iso=args.canonical):
        print(to_graph6(g))
    return 0


def cmd_ideal(args) -> int:
    ideal = _load_ideal(args)
    _emit(args, ideal.to_json(), _ideal_text(ideal))
    return 0


def cmd_power(args) -> int:
    if args.k is None or args.k < 1:
        raise UsageError("power needs --k >= 1")
    if args.graph:
        ideal = matching_power(_load_graph(args), args.k)
    else:
        ideal = squarefree_power(_load_ideal(args), args.k)
    _emit(args, ideal.to_json(), _ideal_text(ideal))
    return 0


def cmd_dual(args) -> int:
    dual = alexander_dual(_load_ideal(args))
    _emit(args, dual.to_json(), _ideal_text(dual))
    return 0


def cmd_betti(args) -> int:
    table = betti_table(_load_ideal(args), args.p)
    _emit(args, table.to_json(), table.render())
    return 0


def cmd_profile(args) -> int:
    prof = homological_profile(_load_ideal(args), args.p)
    text = "\n".join(f"{k}: {v}" for k, v in prof.items())
    _emit(args, prof, text)
    return 0


def _check_one(ideal: SquarefreeIdeal, predicate: str, p: int) -> tuple[bool, dict]:
    if predicate == "cm":
        ok = is_cohen_macaulay(ideal, p)
        result = {"cohen_macaulay": ok}
    elif predicate == "linres":
        ok = has_linear_resolution(ideal, p, cross_check=True)
        result = {"linear_resolution": ok}
    else:
        report = bicm_report(ideal, p)
        ok = report.bi_cm
        result = report.to_json()
    result["p"] = p
    return ok, result


def cmd_check(args) -> int:
    if args.graph:
        # a graph6 stream checks every graph in turn
        items = [(to_graph6(g), edge_ideal(g)) for g in parse_graphs(_read_source(args.graph))]
    else:
        items = [(None, _load_ideal(args))]
    all_ok = True
    for label, ideal in items:
        ok, result = _check_one(ideal, args.predicate, args.p)
        all_ok &= ok
        if label is not None:
            result["graph6"] = label
        prefix = f"{label} " if label is not None else ""
        _emit(args, result, f"{prefix}{args.predicate}: {'yes' if ok else 'no'}")
    return 0 if all_ok else 1


def _checkpoint_path(args) -> str | None:
    if args.checkpoint:
        return args.checkpoint
    root = os.environ.get(CHECKPOINT_ENV)
    if root:
        return str(Path(root) / f"theorem_n{args.n}_p{args.p}.ckpt")
    return None


def cmd_verify(args) -> int:
    claim = args.claim
    if claim == "theorem":
        if args.n is None:
            raise UsageError("verify theorem needs --n")
        verdicts = [V.verify_main_theorem(args.n, args.p, allow_long=args.allow_long, jobs=args.jobs,
                                          checkpoint=_checkpoint_path(args))]
    elif claim == "prop-kp":
        verdicts = [V.verify_prop_kp(args.n or 6, args.p)]
    elif claim == "notcm":
        if args.d is not None:
            verdicts = [V.verify_lemma_notcm(args.n or 4, args.d, args.p)]
        else:
            n = args.n or 5
            verdicts = [V.verify_lemma_notcm(n, d, args.p) for d in range(2, n)]
    elif claim == "identities":
        verdicts = [V.verify_proof_identities(args.n or 6, args.p)]
    elif claim == "veronese":
        if args.d is not None and args.t is not None:
            verdicts = [V.probe_veronese_conjecture(args.n or 7, args.d, args.t, args.p)]
        else:
            verdicts = V.veronese_grid(args.n or 7, p=args.p)
    else:
        raise UsageError(f"unknown claim {claim!r}")
    if args.format == "json":
        payload = [v.to_json(timings=args.timings) for v in verdicts]
        print(json.dumps(payload if len(payload) > 1 else payload[0], sort_keys=True))
    else:
        for v in verdicts:
            print(_verdict_text(v, verbose=args.verbose))
    if claim == "veronese":
        # the probe reports findings; it never fails the run
        return 0
    return 0 if all(v.passed for v in verdicts) else 1


def _verdict_text(v: V.Verdict, verbose: bool = False) -> str:
    head = "PASS" if v.passed else "FAIL"
    d = v.details
    if "survivors" in d:
        survivors = sorted(d["survivors"], key=lambda s: (not s.startswith("K"), s))
        line = f"{head} {v.claim_id}: {d['classes']} classes, survivors: {', '.join(survivors)}"
    else:
        line = f"{head} {v.claim_id}: {v.instances_checked} instances checked"
    lines = [line]
    for w in v.witnesses if verbose else v.counterexamples:
        lines.append("  " + json.dumps({k: x for k, x in w.items() if k != "kind"}, sort_keys=True)
                     + ("" if w["kind"] == "confirmation" else "  <-- counterexample"))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--p", type=_prime, default=2, help="field characteristic (prime, default 2)")

    parser = argparse.ArgumentParser(prog="bicm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit graph6 stream")
    p.add_argument("--n", type=int)
    p.add_argument("--no-isolated", action="store_true")
    p.add_argument("--canonical", action="store_true", help="one graph per isomorphism class")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("ideal", parents=[common], help="edge ideal or t-spread Borel ideal")
    _add_input(p)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("power", parents=[common], help="matching / squarefree power")
    _add_input(p)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("dual", parents=[common], help="Alexander dual")
    _add_input(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("betti", parents=[common], help="graded Betti table of the ideal")
    _add_input(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("profile", parents=[common], help="depth, dimension, pd, regularity, unmixedness")
    _add_input(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("check", parents=[common], help="test bicm, cm or linres")
    p.add_argument("predicate", choices=("bicm", "cm", "linres"))
    _add_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[common], help="machine-check a claim")
    p.add_argument("claim", choices=("theorem", "prop-kp", "notcm", "identities", "veronese"))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--checkpoint", help=f"checkpoint file (default under ${CHECKPOINT_ENV} when set)")
    p.add_argument("--allow-long", action="store_true", help="enable the n = 7 sweep")
    p.add_argument("--timings", action="store_true", help="include elapsed seconds in JSON")
    p.add_argument("--verbose", action="store_true", help="list every witness in text mode")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"bicm {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
