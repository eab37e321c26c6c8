"""Command-line front end. ``weylcode <subcommand> --help`` lists the flags."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional

from . import verify as verify_mod
from .cosets import (
    CosetCode,
    PositiveImageError,
    construct_w_mu,
    enumerate_coset_codes,
    min_rep,
    parse_columns,
    rl_decomposition,
)
from .orbits import Verdict, attached_orbit_certificate, semiwhittaker_verdict, torus_exponents, u_level
from .partitions import composition, dominance_compare, parse_parts, partition, transpose
from .weyl import (
    DescendingCode,
    Permutation,
    ReducedWord,
    act_on_root,
    decode,
    encode,
    parse_permutation,
    parse_root,
    parse_word,
)


class UsageError(Exception):
    pass


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _element(args) -> Permutation:
    """The group element named by --perm, or by --word with --rank."""
    if args.perm is not None and args.word is not None:
        raise UsageError("give only one of --perm and --word")
    if args.perm is not None:
        w = parse_permutation(args.perm)
        if args.rank is not None and args.rank != w.rank:
            raise UsageError(f"--perm has rank {w.rank}, --rank says {args.rank}")
        return w
    if args.word is not None:
        letters = parse_word(args.word)
        rank = args.rank if args.rank is not None else max(letters, default=0)
        return ReducedWord(rank, letters).evaluate()
    raise UsageError("one of --perm or --word is required")


def _code_json(code: CosetCode) -> dict:
    return dict(code.to_json(), word=list(code.word().letters), rendered=code.render())


# Each handler returns (text, json document, exit status).

def cmd_decode(args):
    _require(args, "rank", "code")
    code = DescendingCode(args.rank, parse_parts(args.code))
    word, perm = decode(code)
    doc = {"rank": code.rank, "code": list(code.entries),
           "word": list(word.letters), "permutation": list(perm.images)}
    return str(word), doc, 0


def cmd_encode(args):
    w = _element(args)
    code = encode(w)
    doc = {"rank": code.rank, "code": list(code.entries), "permutation": list(w.images)}
    return str(code), doc, 0


def cmd_cosets(args):
    _require(args, "parabolic")
    codes = enumerate_coset_codes(composition(args.parabolic))
    text = "\n".join(f"{c}\t{c.render()}" for c in codes)
    return text, [_code_json(c) for c in codes], 0


def cmd_minrep(args):
    _require(args, "parabolic")
    code = min_rep(_element(args), composition(args.parabolic))
    return f"{code}\t{code.render()}", _code_json(code), 0


def cmd_act(args):
    _require(args, "root")
    w = _element(args)
    root = parse_root(args.root)
    if max(root.i, root.j) > w.rank + 1:
        raise ValueError(f"root {root} does not live in rank {w.rank}")
    image = act_on_root(w, root)
    return f"{image.i},{image.j}\t{image}", {"root": root.to_json(), "image": image.to_json()}, 0


def cmd_wmu(args):
    _require(args, "mu")
    code = construct_w_mu(partition(args.mu))
    return code.render(), _code_json(code), 0


def cmd_rl(args):
    _require(args, "lambda_")
    lam = composition(args.lambda_)
    if args.code is not None:
        _require(args, "parabolic")
        code = CosetCode(composition(args.parabolic), parse_columns(args.code))
    elif args.mu is not None:
        code = construct_w_mu(partition(args.mu))
    else:
        raise UsageError("give --mu, or --parabolic with --code")
    try:
        rl = rl_decomposition(code, lam)
    except PositiveImageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return "", {"error": str(exc), "code": code.to_json()}, 1
    doc = rl.to_json()
    text = "\n".join(f"R{l}: {','.join(map(str, idx))}" for l, idx in doc.items())
    return text, doc, 0


def cmd_support(args):
    _require(args, "mu", "lambda_")
    report = semiwhittaker_verdict(partition(args.mu), composition(args.lambda_))
    doc = report.to_json()
    lines = [report.verdict.value]
    if report.violation_index is not None:
        lines[0] += f" (violation at l={report.violation_index})"
    lines += [f"support {c}\t{c.render()}" for c in report.support]
    lines += [f"refined {c}" for c in report.refined_support]
    status = 0
    for problem in report.problems():
        print(f"problem: {problem}", file=sys.stderr)
        status = 1
    if args.expect is not None and report.verdict is not Verdict(args.expect):
        print(f"expected {args.expect}, got {report.verdict.value}", file=sys.stderr)
        status = 1
    return "\n".join(lines), doc, status


def cmd_orbit(args):
    _require(args, "mu")
    cert = attached_orbit_certificate(partition(args.mu))
    lines = [
        f"{row.orbit}\t{row.dominance.relation.value}\t{row.verdict.value}\t"
        f"{row.support_size}\t{'ok' if row.consistent else 'INCONSISTENT'}"
        for row in cert.rows
    ]
    attached = cert.attached_orbit
    lines.append(f"attached orbit: {attached if attached is not None else 'not certified'}")
    doc = {"mu": cert.mu.to_json(), "rows": cert.to_json(),
           "attached_orbit": attached.to_json() if attached is not None else None}
    return "\n".join(lines), doc, 0 if cert.consistent else 1


def cmd_ho(args):
    _require(args, "orbit")
    torus = torus_exponents(partition(args.orbit))
    return str(torus), torus.to_json(), 0


def cmd_ulevel(args):
    _require(args, "orbit", "level")
    roots = u_level(partition(args.orbit), args.level)
    return " ".join(f"{r.i},{r.j}" for r in roots), roots.to_json(), 0


def cmd_transpose(args):
    if (args.mu is None) == (args.lambda_ is None):
        raise UsageError("give exactly one of --mu and --lambda")
    lam = partition(args.mu) if args.mu is not None else composition(args.lambda_)
    t = transpose(lam)
    return str(t), t.to_json(), 0


def cmd_dominance(args):
    _require(args, "orbit", "mu")
    verdict = dominance_compare(partition(args.orbit), partition(args.mu))
    return verdict.relation.value, verdict.to_json(), 0


def cmd_verify(args):
    reports = verify_mod.run_checks(args.checks, max_rank=args.max_rank, max_n=args.max_n,
                                    jobs=args.jobs, mutation_seed=args.mutation_seed)
    lines = [r.summary() for r in reports]
    for r in reports:
        for f in r.failures[:5]:
            lines.append(f"  {r.check}: {f['what']}: {json.dumps(f['inputs'])}")
    status = 0 if all(r.passed for r in reports) else 1
    return "\n".join(lines), [r.to_json() for r in reports], status


COMMANDS: dict[str, tuple[Callable, str]] = {
    "decode": (cmd_decode, "descending code -> reduced word"),
    "encode": (cmd_encode, "permutation or word -> descending code"),
    "cosets": (cmd_cosets, "list the minimal coset representatives of a parabolic"),
    "minrep": (cmd_minrep, "minimal representative of the coset of an element"),
    "act": (cmd_act, "image of a root under an element"),
    "wmu": (cmd_wmu, "the distinguished representative w_mu"),
    "rl": (cmd_rl, "R_l decomposition of Delta_lambda"),
    "support": (cmd_support, "semi-Whittaker vanishing verdict and support"),
    "orbit": (cmd_orbit, "attached-orbit certificate for mu"),
    "ho": (cmd_ho, "torus exponents h_O"),
    "ulevel": (cmd_ulevel, "roots of weight at least --level"),
    "transpose": (cmd_transpose, "conjugate partition"),
    "dominance": (cmd_dominance, "compare --orbit against --mu in dominance order"),
    "verify": (cmd_verify, "run the exhaustive checks"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--rank", type=int)
    common.add_argument("--code")
    common.add_argument("--perm")
    common.add_argument("--word")
    common.add_argument("--parabolic")
    common.add_argument("--mu")
    common.add_argument("--lambda", dest="lambda_")
    common.add_argument("--orbit")
    common.add_argument("--level", type=int)
    common.add_argument("--root")
    common.add_argument("--expect", choices=("vanishes", "nonvanishing"))

    parser = argparse.ArgumentParser(prog="weylcode", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "verify":
            p.add_argument("checks", nargs="*", metavar="CHECK", help="subset of: " + ", ".join(verify_mod.CHECKS))
            p.add_argument("--max-rank", type=int)
            p.add_argument("--max-n", type=int)
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("--mutation-seed", type=int)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.command][0]
    try:
        text, doc, status = handler(args)
    except (UsageError, ValueError, TypeError, KeyError) as exc:
        print(f"weylcode {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        json.dump(doc, sys.stdout, indent=None)
        sys.stdout.write("\n")
    elif text:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
