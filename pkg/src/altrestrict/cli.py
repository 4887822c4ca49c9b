"""Command-line front end.

Exit codes: 0 success; 1 when ``--strict`` is set and the answer is not a
positive one (reducible or undecided verdict, empty reachable set), or when a
verify suite reports failures; 2 usage error; 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .branching import js_truncation, js_truncation_chain, reachable
from .mullineux import mullineux_map, mullineux_symbol
from .partitions import enumerate_p_regular, enumerate_splitting, parse_partition
from .permmod import (
    ModuleKind,
    ModuleSpec,
    Primitive,
    containing_family,
    generators,
    invariant_space,
    parse_descriptor,
    perm_from_cycles,
    perm_sign,
)
from .verdicts import Outcome, RestrictionQuery, Verdict, classify
from .verify import ALIASES, SUITES, verify_suite

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise argparse.ArgumentTypeError(f"not a prime: {p}")
    return p


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _descriptor(text: str):
    try:
        return parse_descriptor(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_generators(text: str, n: int) -> list[tuple[int, ...]]:
    """Semicolon-separated generators in 1-based cycle notation, e.g. ``(1 2 3);(1 2)(3 4)``."""
    gens = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise UsageError(f"malformed generator {chunk!r}")
        cycles = []
        for body in chunk[1:-1].split(")("):
            try:
                cycles.append(tuple(int(x) for x in body.replace(",", " ").split()))
            except ValueError:
                raise UsageError(f"malformed cycle in {chunk!r}") from None
        try:
            gens.append(perm_from_cycles(n, *cycles))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not gens:
        raise UsageError("no generators given")
    return gens


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    out = canonical_json(payload) if args.json else text
    print(out)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(payload) + "\n")


def _verdict_text(v: Verdict) -> str:
    clause = f" [{v.clause}]" if v.clause else ""
    extras = ", ".join(f"{k}={v.evidence[k]}" for k in sorted(v.evidence))
    return f"{v.outcome.value}{clause}" + (f" ({extras})" if extras else "")


# -- verbs -------------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    n = args.lam.n
    if (args.subgroup is None) == (args.generators is None):
        raise UsageError("give exactly one of --subgroup or --generators")
    if args.generators is not None:
        gens = parse_generators(args.generators, n)
        if any(perm_sign(g) == -1 for g in gens):
            raise UsageError("generators must be even permutations")
        family = containing_family(gens, n)
        verdict = classify(RestrictionQuery(args.p, args.lam, family))
        evidence = {"containing_family": str(family)}
        if verdict.outcome is Outcome.REDUCIBLE:
            verdict = Verdict(Outcome.REDUCIBLE, verdict.clause, dict(verdict.evidence, **evidence))
        elif isinstance(family, Primitive):
            verdict = Verdict(Outcome.OUT_OF_SCOPE_PRIMITIVE, "Theorem A(i)", evidence)
        else:
            # irreducibility of an overgroup says nothing about the subgroup
            verdict = Verdict(Outcome.NOT_APPLICABLE, None, dict(evidence, family_outcome=verdict.outcome.value))
    else:
        try:
            query = RestrictionQuery(args.p, args.lam, args.subgroup)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        verdict = classify(query)
    _emit(args, verdict.to_dict(), _verdict_text(verdict))
    if args.strict and verdict.outcome is not Outcome.IRREDUCIBLE:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    found = enumerate_splitting(args.n, args.p) if args.splitting else enumerate_p_regular(args.n, args.p)
    found = sorted(found, reverse=True)
    payload = {"n": args.n, "p": args.p, "splitting": args.splitting, "partitions": [str(x) for x in found]}
    _emit(args, payload, "\n".join(str(x) for x in found))
    if args.strict and not found:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    try:
        spec = ModuleSpec(ModuleKind(args.module), args.n, args.p, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if (args.subgroup is None) == (args.generators is None):
        raise UsageError("give exactly one of --subgroup or --generators")
    if args.generators is not None:
        gens = parse_generators(args.generators, args.n)
        group = args.generators
    else:
        try:
            gens = generators(args.subgroup, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        group = str(args.subgroup)
    basis = invariant_space(spec, gens)
    payload = {
        "module": spec.kind.value,
        "n": spec.n,
        "p": spec.p,
        "k": spec.k,
        "group": group,
        "module_dim": spec.dim,
        "invariant_dim": basis.rows,
        "basis": basis.tolist(),
    }
    _emit(args, payload, str(basis.rows))
    if args.strict and basis.rows == 0:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_mullineux(args: argparse.Namespace) -> int:
    try:
        image = mullineux_map(args.lam, args.p)
        symbol = mullineux_symbol(args.lam, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "lambda": str(args.lam),
        "p": args.p,
        "image": str(image),
        "fixed": image == args.lam,
        "symbol": [list(c) for c in symbol.columns],
    }
    _emit(args, payload, str(image))
    return EXIT_OK


def cmd_jstrunc(args: argparse.Namespace) -> int:
    try:
        chain = js_truncation_chain(args.lam)
        js = js_truncation(args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"lambda": str(args.lam), "truncation": str(js), "size": js.n, "chain": [str(x) for x in chain]}
    _emit(args, payload, str(js))
    return EXIT_OK


def cmd_reachable(args: argparse.Namespace) -> int:
    try:
        found = reachable(args.lam, args.p, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    members = []
    for mu in found:
        steps = [[node.row, node.col] for node, _ in found.witness(mu).steps]
        members.append({"partition": str(mu), "removed": steps})
    payload = {"lambda": str(args.lam), "p": args.p, "m": args.m, "count": len(members), "members": members}
    _emit(args, payload, "\n".join(m["partition"] for m in members))
    if args.strict and not members:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list or args.name is None:
        payload = {name: s.claim for name, s in sorted(SUITES.items())}
        _emit(args, payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))
        return EXIT_OK if args.list else EXIT_USAGE
    names = sorted(SUITES) if args.name == "all" else [ALIASES.get(args.name, args.name)]
    if any(name not in SUITES for name in names):
        raise UsageError(f"unknown suite {args.name!r}; try --list")
    try:
        reports = [
            verify_suite(name, max_n=args.max_n, min_n=args.min_n, primes=args.p or None, threads=args.threads)
            for name in names
        ]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = []
    for r in reports:
        status = "PASS" if r["passed"] else "FAIL"
        lines.append(
            f"{status} {r['suite']}: {r['checked']} checked, {len(r['exceptions'])} listed exceptions, "
            f"{len(r['failures'])} failures"
        )
        lines += [f"  failure: {f}" for f in r["failures"]]
    payload = reports[0] if len(reports) == 1 else {"suites": reports}
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if all(r["passed"] for r in reports) else EXIT_NEGATIVE


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altrestrict", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON")
    common.add_argument("--strict", action="store_true", help="exit 1 on a negative answer")
    common.add_argument("--out", metavar="FILE", help="also write the JSON report to FILE")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", parents=[common], help="decide irreducibility of a restriction")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--subgroup", type=_descriptor)
    p.add_argument("--generators", help="even permutations, e.g. '(1 2 3);(1 2)(3 4)'")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", parents=[common], help="list p-regular or splitting partitions")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--splitting", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("invariants", parents=[common], help="fixed points on M_k, S_1* or S_2*")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--module", choices=[k.value for k in ModuleKind], required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--subgroup", type=_descriptor)
    p.add_argument("--generators")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("mullineux", parents=[common], help="Mullineux image")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.set_defaults(func=cmd_mullineux)

    p = sub.add_parser("jstrunc", parents=[common], help="JS truncation of a 2-regular partition")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.set_defaults(func=cmd_jstrunc)

    p = sub.add_parser("reachable", parents=[common], help="partitions reachable by normal-node removals")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_reachable)

    p = sub.add_parser("verify", parents=[common], help="run a named check suite")
    p.add_argument("name", nargs="?", help="suite name, or 'all'")
    p.add_argument("--list", action="store_true")
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int)
    p.add_argument("--p", type=_prime, action="append")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "threads", 1) < 1:
        print("altrestrict: error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"altrestrict: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RuntimeError, AssertionError) as exc:
        print(f"altrestrict: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


__all__ = ["build_parser", "canonical_json", "main", "parse_generators", "run"]
