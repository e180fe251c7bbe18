"""Command-line front end.

Subcommands: encode, decode, transform, count, stat, dist, verify.
Exit codes: 0 on success (all suites verified), 1 when a verification
suite fails, 2 on invalid input.
"""

import argparse
import json
import sys

from permcodes import codes, core, patterns, statistics, transforms, verify


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcodes",
        description=(
            "Permutation codes (Lehmer, McMahon), code transforms, vincular "
            "pattern counting, Mahonian statistics, and exhaustive verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON instead of plain text")
        return p

    p = command("encode", "compute the Lehmer or McMahon code of a permutation")
    p.add_argument("--code", choices=("lehmer", "mcmahon"), required=True)
    p.add_argument("values", help="permutation, e.g. '5 2 1 6 4 3' (commas also work)")
    p.set_defaults(func=_cmd_encode)

    p = command("decode", "recover the permutation with a given code")
    p.add_argument("--code", choices=("lehmer", "mcmahon"), required=True)
    p.add_argument("values", help="subexcedant digits, e.g. '0 1 2 0 2 3'")
    p.set_defaults(func=_cmd_decode)

    p = command("transform", "apply a code transform (or its inverse) to digits")
    p.add_argument("--name", required=True, help="delta|gamma|theta|lambda|upsilon|psi|id")
    p.add_argument("--inverse", action="store_true", help="apply the inverse transform")
    p.add_argument("values", help="subexcedant digits")
    p.set_defaults(func=_cmd_transform)

    p = command("count", "count pattern occurrences in a permutation")
    p.add_argument("--pattern", required=True, help="pattern text, e.g. '(a-cb)' or 'b-Ac'")
    p.add_argument("--at", type=int, default=None, metavar="I",
                   help="position playing the pointed (upper-case) letter")
    p.add_argument("values", help="permutation")
    p.set_defaults(func=_cmd_count)

    p = command("stat", "evaluate a statistic on a permutation")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--name", help="registry statistic, e.g. maj or conj8-second")
    group.add_argument("--expr", help="pattern expression, e.g. '(a-cb)+(ba)'")
    p.add_argument("values", help="permutation")
    p.set_defaults(func=_cmd_stat)

    p = command("dist", "distribution of a statistic over all permutations of size n")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--name", help="registry statistic name")
    group.add_argument("--expr", help="pattern expression")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_dist)

    p = command("verify", "run the exhaustive verification suites")
    p.add_argument("--suite", choices=("all",) + tuple(verify.SUITES), default="all")
    p.add_argument("--n", type=int, default=None,
                   help="sweep n = 1..N (default: per-suite depth)")
    p.set_defaults(func=_cmd_verify)

    return parser


def _emit(args: argparse.Namespace, plain: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(plain)


def _cmd_encode(args: argparse.Namespace) -> int:
    perm = core.parse_permutation(args.values)
    encode = codes.lehmer_encode if args.code == "lehmer" else codes.mcmahon_code
    digits = encode(perm)
    _emit(args, core.format_sequence(digits), {"code": args.code, "digits": list(digits)})
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    digits = core.parse_digits(args.values)
    decode = codes.lehmer_decode if args.code == "lehmer" else codes.build_from_mcmahon
    perm = decode(digits)
    _emit(args, core.format_sequence(perm), {"code": args.code, "permutation": list(perm)})
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    kind = transforms.TransformKind.from_name(args.name)
    digits = core.parse_digits(args.values)
    out = transforms.invert(kind, digits) if args.inverse else transforms.apply(kind, digits)
    payload = {"transform": kind.value, "inverse": args.inverse, "digits": list(out)}
    _emit(args, core.format_sequence(out), payload)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    pat = patterns.parse_pattern(args.pattern)
    perm = core.parse_permutation(args.values)
    if args.at is not None:
        if not isinstance(pat, patterns.PointedPattern):
            raise ValueError("--at requires a pointed pattern (one upper-case letter)")
        value = patterns.count_pointed_at(pat, perm, args.at)
    else:
        if isinstance(pat, patterns.PointedPattern):
            raise ValueError("pointed pattern requires --at (or write it in lower case)")
        value = patterns.count_occurrences(pat, perm)
    _emit(args, str(value), {"pattern": pat.text(), "at": args.at, "count": value})
    return 0


def _statistic(args: argparse.Namespace) -> statistics.StatisticDef:
    if args.name is not None:
        return statistics.lookup(args.name)
    return statistics.from_expression(args.expr)


def _cmd_stat(args: argparse.Namespace) -> int:
    stat = _statistic(args)
    perm = core.parse_permutation(args.values)
    value = statistics.evaluate(stat, perm)
    _emit(args, str(value), {"statistic": stat.name, "expression": stat.expression, "value": value})
    return 0


def _cmd_dist(args: argparse.Namespace) -> int:
    stat = _statistic(args)
    dist = statistics.distribution(stat, args.n)
    payload = {"statistic": stat.name, "n": dist.n, "counts": list(dist.counts)}
    _emit(args, core.format_sequence(dist.counts), payload)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = [verify.run_suite(name, args.n) for name in names]
    if args.json:
        print(json.dumps([r.as_record() for r in reports], sort_keys=True))
    else:
        for r in reports:
            span = f"n=1..{r.n}" if r.ok and r.n > 1 else f"n={r.n}"
            print(f"{r.suite:<9} {span:<8} {r.status():<5} {r.checked:>8} checks  {r.millis:8.1f} ms")
            if r.counterexample:
                for key, value in r.counterexample.items():
                    print(f"    {key}: {value}")
        passed = sum(1 for r in reports if r.ok)
        print(f"summary: {passed}/{len(reports)} suites passed")
    return 0 if all(r.ok for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
