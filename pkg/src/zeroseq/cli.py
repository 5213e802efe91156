"""Command-line front end.

Exit status: 0 when a witness is found or a check passes, 1 for a negative
result, 2 for usage or input errors.  Payloads go to stdout as JSON (or a
plain table with ``--format text``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import decomp, extremal, numtheory, oracle, search
from .seq import BlockWitness, SequenceError, SignedSeq, parse_seq
from .thresholds import (
    ParameterError,
    block_threshold,
    gap_residue_s,
    gap_threshold,
    residue_s,
)

SCHEMA = "zeroseq/1"
OK, NEGATIVE, USAGE = 0, 1, 2


class Output:
    def __init__(self, args: argparse.Namespace):
        self.pretty = args.pretty
        self.text = args.format == "text"
        self.timing = args.timing
        self.t0 = time.perf_counter()

    def emit(self, payload: dict, text: Optional[str] = None) -> None:
        if self.text and text is not None:
            sys.stdout.write(text.rstrip("\n") + "\n")
            return
        body = {"schema": SCHEMA, **payload}
        if self.timing:
            body["elapsed_s"] = round(time.perf_counter() - self.t0, 3)
        sys.stdout.write(json.dumps(body, indent=2 if self.pretty else None) + "\n")


def _read_seq(args: argparse.Namespace) -> SignedSeq:
    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    return parse_seq(text, args.r, args.s)


def _witness_text(f: SignedSeq, w: Optional[BlockWitness]) -> str:
    if w is None:
        return f"{f.to_text()}\nnone"
    lines = [f.to_text()]
    if f.is_pm1:
        marks = [" "] * f.n
        for i in w.indices:
            marks[i - 1] = "^"
        lines.append("".join(marks).rstrip())
    lines.append(f"indices: {' '.join(map(str, w.indices))}")
    lines.append(f"weight: {w.weight}")
    return "\n".join(lines)


def _emit_witness(out: Output, f: SignedSeq, w: Optional[BlockWitness], **extra) -> int:
    if w is None:
        out.emit({"result": "none", **extra}, _witness_text(f, None))
        return NEGATIVE
    payload = w.to_json()
    if w.kind != "contiguous":
        payload["step"] = w.step
    out.emit({**payload, **extra}, _witness_text(f, w))
    return OK


# -- handlers -----------------------------------------------------------------


def cmd_threshold(args, out: Output) -> int:
    if args.d is not None:
        N = gap_threshold(args.d, args.k)
        payload = {"d": args.d, "k": args.k, "s": gap_residue_s(args.k), "n_threshold": N}
    else:
        if args.t is None or args.q is None:
            raise ParameterError("threshold needs --t and --q, or --d")
        s = residue_s(args.k, args.t, args.q)
        N = block_threshold(args.k, args.t, args.q)
        payload = {"k": args.k, "t": args.t, "q": args.q, "s": s, "n_threshold": N}
    out.emit(payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return OK


def cmd_find_block(args, out: Output) -> int:
    f = _read_seq(args)
    if args.exact:
        w = search.scan_exact_block(f, args.k, args.t)
    else:
        w = search.scan_bounded_block(f, args.k, args.t)
    extra = {}
    if args.q is not None:
        extra["guaranteed"] = bool(
            f.n >= block_threshold(args.k, args.t, args.q) and abs(f.total) <= args.q
        )
    return _emit_witness(out, f, w, **extra)


def cmd_find_gap_block(args, out: Output) -> int:
    f = _read_seq(args)
    return _emit_witness(out, f, search.find_zs_gap_block(f, args.d, args.k))


def cmd_find_ap(args, out: Output) -> int:
    f = _read_seq(args)
    return _emit_witness(out, f, search.find_zs_ap(f, args.k))


def _family_cmd(args, out: Output, gen, check) -> int:
    if args.action == "gen":
        for f in gen():
            sys.stdout.write(f.to_text() + "\n")
        return OK
    f = _read_seq(args)
    member = check(f)
    out.emit({"member": member}, "member" if member else "not a member")
    return OK if member else NEGATIVE


def cmd_extremal(args, out: Output) -> int:
    return _family_cmd(
        args,
        out,
        lambda: extremal.enumerate_block_family(args.k, args.t, args.q),
        lambda f: extremal.is_block_family_member(f, args.k, args.t, args.q),
    )


def cmd_extremal_gap(args, out: Output) -> int:
    return _family_cmd(
        args,
        out,
        lambda: extremal.enumerate_gap_family(args.d, args.k),
        lambda f: extremal.is_gap_family_member(f, args.d, args.k),
    )


def cmd_decompose(args, out: Output) -> int:
    f = _read_seq(args)
    inst = decomp.LayeredInstance.from_values(f.values, args.n, args.m, args.r, args.s)
    dec = decomp.decompose(inst)
    lo, hi = inst.band()
    payload = {
        "paths": [list(p) for p in dec.paths],
        "weights": list(dec.weights),
        "lambda": lo,
        "Lambda": hi,
    }
    rows = [f"band: [{lo}, {hi}]"]
    for p, w in zip(dec.paths, dec.weights):
        cells = " ".join(f"{int(inst.cells[i, c]):>3}" for i, c in enumerate(p))
        rows.append(f"{cells}   | {w}")
    out.emit(payload, "\n".join(rows))
    return OK


def _report_text(rep: numtheory.ZSReport) -> str:
    return (
        f"count: {rep.count}\n"
        f"first_starts: {' '.join(map(str, rep.first_starts))}\n"
        f"partial_sum: {rep.partial_sum}"
    )


def cmd_liouville(args, out: Output) -> int:
    if args.d is not None and args.d != 1:
        rep = numtheory.liouville_ap_zs(args.limit, args.k, args.d)
    else:
        rep = numtheory.liouville_zs_blocks(args.limit, args.k)
    out.emit(rep.to_json(), _report_text(rep))
    return OK if rep.count else NEGATIVE


def cmd_legendre(args, out: Output) -> int:
    rep = numtheory.legendre_zs_blocks(args.p, args.limit, args.k)
    out.emit(rep.to_json(), _report_text(rep))
    return OK if rep.count else NEGATIVE


def cmd_verify(args, out: Output) -> int:
    if args.what == "block":
        rep = oracle.verify_block_threshold(args.k, args.t, args.q, args.budget, args.workers)
    elif args.what == "gap":
        rep = oracle.verify_gap_threshold(args.d, args.k, args.budget, args.workers)
    elif args.what == "decomp":
        rep = oracle.verify_decomposition(args.n, args.m, args.r, args.s, args.trials, args.seed)
    else:
        rep = oracle.verify_ap_proposition(args.k)
    for line in rep.details.get("failures", []):
        print(f"verify {args.what}: {line}", file=sys.stderr)
    for cx in rep.counterexamples:
        print(f"counterexample: {cx}", file=sys.stderr)
    payload = rep.to_json(timing=False)
    text = "\n".join(
        [f"{args.what}: {'PASS' if rep.passed else 'FAIL'}"]
        + [f"{k}: {v}" for k, v in rep.counts.items()]
    )
    out.emit(payload, text)
    return OK if rep.passed else NEGATIVE


# -- parser -------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pretty", action="store_true", help="indent JSON output")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timing", action="store_true", help="add elapsed seconds to the payload")


def _seq_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="sequence file (default: stdin)")
    p.add_argument("--r", type=int, default=1, help="negative value is -r")
    p.add_argument("--s", type=int, default=1, help="positive value is s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeroseq", description="Zero-sum and bounded-weight blocks in +-1 sequences."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "threshold",
        help="sharp length thresholds",
        description="Print the sharp length threshold of the bounded-weight k-block "
        "theorem for (k, t, q), or of the zero-sum (d, k)-block theorem for (d, k).",
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--d", type=int)
    _common(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser(
        "find-block",
        help="leftmost k-block with |weight| <= t",
        description="Leftmost k-block of weight at most t in absolute value (the "
        "bounded-weight k-block theorem); --exact uses the interpolation lemma "
        "search for weight exactly t.",
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--q", type=int, help="report whether the threshold theorem guarantees a hit")
    p.add_argument("--exact", action="store_true")
    _seq_input(p)
    _common(p)
    p.set_defaults(func=cmd_find_block)

    p = sub.add_parser(
        "find-gap-block",
        help="zero-sum (d, k)-block",
        description="Zero-sum d-bounded gap sequence of length k, built by the "
        "residue-class deletion argument of the zero-sum (d, k)-block theorem.",
    )
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _seq_input(p)
    _common(p)
    p.set_defaults(func=cmd_find_gap_block)

    p = sub.add_parser(
        "find-ap",
        help="zero-sum k-term arithmetic progression",
        description="Least zero-sum k-term arithmetic progression (the AP proposition "
        "for k = 2 mod 4 with k/2 composite).",
    )
    p.add_argument("--k", type=int, required=True)
    _seq_input(p)
    _common(p)
    p.set_defaults(func=cmd_find_ap)

    p = sub.add_parser(
        "extremal",
        help="extremal family for k-blocks",
        description="Generate or recognise the extremal family of the k-block "
        "sharpness theorem, one +/- sequence per line.",
    )
    p.add_argument("action", choices=("gen", "check"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    _seq_input(p)
    _common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser(
        "extremal-gap",
        help="extremal family for (d, k)-blocks",
        description="Generate or recognise the extremal family of the (d, k)-block "
        "sharpness theorem, one +/- sequence per line.",
    )
    p.add_argument("action", choices=("gen", "check"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _seq_input(p)
    _common(p)
    p.set_defaults(func=cmd_extremal_gap)

    p = sub.add_parser(
        "decompose",
        help="balanced path decomposition of a layered instance",
        description="Decompose m layers of n cells (values listed layer by layer) "
        "into n transversals with weights in [lambda, Lambda] (the layered "
        "decomposition theorem).",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _seq_input(p)
    _common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser(
        "liouville",
        help="zero-sum blocks of the Liouville function",
        description="Count zero-sum k-blocks of lambda(1..limit), or of "
        "lambda(d), lambda(2d), ... with --d (the Liouville corollaries).",
    )
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int)
    _common(p)
    p.set_defaults(func=cmd_liouville)

    p = sub.add_parser(
        "legendre",
        help="zero-sum blocks of consecutive primes under a Legendre symbol",
        description="Count zero-sum k-blocks of (q/p) over consecutive primes q <= "
        "limit, q != p (the Legendre corollary).",
    )
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_legendre)

    p = sub.add_parser(
        "verify",
        help="brute-force verification",
        description="Exhaustively verify a threshold and its extremal family "
        "(block, gap), the decomposition theorem on random instances (decomp), "
        "or the AP proposition (ap).",
    )
    p.add_argument("what", choices=("block", "gap", "decomp", "ap"))
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                   help="maximum number of enumerated sequences")
    _common(p)
    p.set_defaults(func=cmd_verify)
    return parser


_REQUIRED = {
    "block": ("k", "t", "q"),
    "gap": ("d", "k"),
    "decomp": ("n", "m"),
    "ap": ("k",),
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        missing = [f"--{a}" for a in _REQUIRED[args.what] if getattr(args, a) is None]
        if missing:
            parser.error(f"verify {args.what} needs {' '.join(missing)}")
    out = Output(args)
    try:
        return args.func(args, out)
    except (SequenceError, ParameterError, oracle.BudgetExceeded, OSError) as exc:
        print(f"zeroseq: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
