"""Command line front end: ``pogp <command> ...``.

Exit status 0 on success, 1 for domain errors (input not an avoider, limits),
2 for usage and parse errors.  Errors are printed to stderr as ``error: ...``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from pogp import bijections as bij
from pogp import enumeration, equivalence, series
from pogp.pattern import Pogp, PatternParseError, canonicalize, count_occurrences, linearize
from pogp.perm import Permutation, PermutationError, psi


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _pattern(text: str) -> Pogp:
    try:
        return Pogp.parse(text)
    except PatternParseError as exc:
        raise UsageError(str(exc)) from None


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except PermutationError as exc:
        raise UsageError(str(exc)) from None


def _terms(seq) -> list[str]:
    return [str(t) for t in seq]


def cmd_parse(args):
    p = _pattern(args.pattern)
    info = {
        "pattern": str(p),
        "letters": list(p.letters),
        "dashes": [i + 1 for i, d in enumerate(p.dashes) if d],
        "segments": ["".join(map(str, s)) for s in p.segments],
        "canonical": str(canonicalize(p)),
    }
    if args.json:
        print(json.dumps(info))
    else:
        print(f"letters={','.join(map(str, p.letters))} "
              f"dashes={','.join(map(str, info['dashes']))} "
              f"segments={'|'.join(info['segments'])} canonical={info['canonical']}")


def cmd_occurrences(args):
    print(count_occurrences(_perm(args.permutation), _pattern(args.pattern)))


def cmd_avoiders(args):
    pats = [_pattern(t) for t in args.patterns]
    if args.list:
        for p in enumeration.avoiders(pats, args.n):
            print(p)
    else:
        print(enumeration.count_avoiders(pats, args.n, workers=args.workers))


def cmd_count_sequence(args):
    pats = [_pattern(t) for t in args.patterns]
    terms = enumeration.count_sequence(pats, args.max_n, workers=args.workers)
    if args.json:
        print(json.dumps({"patterns": [str(p) for p in pats], "terms": _terms(terms)}))
    else:
        print(" ".join(_terms(terms)))


def cmd_witness(args):
    w = enumeration.witness_difference(_pattern(args.first), _pattern(args.second), args.max_n)
    print("none" if w is None else w)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def cmd_egf(args):
    sigma = _pattern(args.sigma)
    if any(sigma.dashes):
        raise ValueError(f"sigma must be contiguous, got {sigma}")
    k = max(sigma.letters) + 1
    segs = [(k,), sigma.letters] + ([(k,)] if args.shape == "k-sigma-k" else [])
    target = Pogp.from_segments(segs)
    lag = 1 if args.shape == "k-sigma" else 2
    if args.f_terms:
        f = tuple(_int_list(args.f_terms))
    else:
        f = enumeration.count_sequence([sigma], max(0, min(args.max_n - lag, enumeration.max_n())))
    if args.max_n - lag >= len(f):
        raise ValueError(f"{args.max_n + 1} terms need f up to index {args.max_n - lag}; "
                         f"only {len(f)} available (use --f-terms)")
    fn = series.exp_integral if args.shape == "k-sigma" else series.k_sigma_k_counts
    terms = fn(f, length=args.max_n + 1)
    if args.json:
        print(json.dumps({"sigma": str(sigma), "shape": args.shape, "pattern": str(target),
                          "f_terms": _terms(f), "terms": _terms(terms)}))
    else:
        print(" ".join(_terms(terms)))


_BIJECTIONS = {
    "set-312": (bij.SetPartition.parse, bij.partition_to_av312, bij.av312_to_partition),
    "set-123r": (bij.SetPartition.parse, bij.partition_to_av123r, bij.av123r_to_partition),
    "bicolored-3123": (bij.BicoloredSetPartition.parse, bij.bicolored_to_av3123,
                       bij.av3123_to_bicolored),
    "dowling-31213": (bij.PartialGPartition.parse, bij.gpartition_to_av31213,
                      bij.av31213_to_gpartition),
}


def cmd_bijection(args):
    parse_obj, fwd, inv = _BIJECTIONS[args.kind]
    text = " ".join(args.input)
    if args.direction == "fwd":
        try:
            obj = parse_obj(text)
        except bij.PartitionParseError as exc:
            raise UsageError(str(exc)) from None
        print(fwd(obj))
    else:
        print(inv(_perm(text)))


def cmd_psi(args):
    print(psi(_perm(" ".join(args.permutation))))


def cmd_equiv(args):
    a, b = _pattern(args.first), _pattern(args.second)
    if args.method == "brute":
        v = equivalence.brute_equivalent(a, b, args.max_n)
    else:
        v = equivalence.equivalent(a, b)
    if args.json:
        print(json.dumps(v.to_json()))
        return
    if v.equivalent:
        print("equivalent" if v.method == "classification" else f"equivalent up-to-n={v.max_n}")
        for src, dst, case in v.case_trace:
            print(f"  {src} -> {dst} case={case}")
    elif v.witness is not None:
        print(f"not-equivalent witness={v.witness}")
    else:
        print("not-equivalent")


def cmd_linearize(args):
    for p in sorted(linearize(_pattern(args.pattern)), key=lambda q: q.letters):
        print(p)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pogp", description=__doc__.splitlines()[0])
    parser.add_argument("--seed-paper-examples", action="store_true", help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("parse", help="show the structure of a pattern")
    p.add_argument("pattern")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("occurrences", help="count occurrences of a pattern")
    p.add_argument("pattern")
    p.add_argument("permutation")
    p.set_defaults(func=cmd_occurrences)

    p = sub.add_parser("avoiders", help="count or list avoiders of length n")
    p.add_argument("patterns", nargs="+")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_avoiders)

    p = sub.add_parser("count-sequence", help="avoider counts for lengths 0..max-n")
    p.add_argument("patterns", nargs="+")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_count_sequence)

    p = sub.add_parser("witness", help="first permutation avoiding exactly one pattern")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("egf", help="k-sigma / k-sigma-k counts from sigma counts")
    p.add_argument("--sigma", required=True)
    p.add_argument("--shape", choices=["k-sigma", "k-sigma-k"], required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--f-terms")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_egf)

    p = sub.add_parser("bijection", help="run one of the partition bijections")
    p.add_argument("kind", choices=sorted(_BIJECTIONS))
    p.add_argument("--direction", choices=["fwd", "inv"], required=True)
    p.add_argument("input", nargs="+")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("psi", help="apply psi")
    p.add_argument("permutation", nargs="+")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("equiv", help="decide whether two patterns share their avoiders")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--method", choices=["classify", "brute"], default="classify")
    p.add_argument("--max-n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("linearize", help="expand a pattern into generalized patterns")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_linearize)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.seed_paper_examples:
            from pogp.smoke import run_all
            return run_all()
        if not args.command:
            parser.print_usage(sys.stderr)
            raise UsageError("a command is required")
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
