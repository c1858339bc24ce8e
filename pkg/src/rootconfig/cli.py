"""Command-line front end.

    rootconfig classify --cubic p q r | --quartic p q r s [--cross-check] [--json]
    rootconfig batch [--json] [--cross-check]        (stdin -> stdout)
    rootconfig sample --cubic|--quartic --box AXIS=lo:hi:steps ...
    rootconfig verify constructed|random N --seed S

Exit codes: 0 ok, 2 usage/parse error, 3 verification mismatch, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import random
import re
import sys
from collections import Counter
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .crosscheck import classify, three_way
from .cubic import CubicConfig, CubicReport
from .oracle import ALL_CONFIGS, full_label, random_rational, sample_labeled_instances
from .poly import Poly, rat, sign
from .quartic import QuarticConfig

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_IO = 0, 2, 3, 4

AXES = {3: ("p", "q", "r"), 4: ("p", "q", "r", "s")}


class _Parser(argparse.ArgumentParser):
    # let "-1/2" and "-0.5" through as values rather than option flags
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(?:/\d+|\.\d+)?$")


class ParseError(ValueError):
    pass


def parse_token(token: str) -> Fraction:
    try:
        return rat(token)
    except (ValueError, TypeError):
        raise ParseError(f"bad rational token {token!r}") from None


# -- report serialisation -----------------------------------------------------------

def report_record(coeffs: Sequence[Fraction], cross_check: bool = False) -> dict:
    """Flat, ordered record; every exact value is a rational string."""
    f = Poly.monic(*coeffs)
    rep = classify(f)
    rec: dict = {"degree": f.degree}
    for name, value in zip(AXES[f.degree], coeffs):
        rec[name] = str(value)
    rec["label"] = full_label(rep.config)
    rec["case"] = rep.config.case
    rec["complex_label"] = rep.complex_config.value
    for name, value in rep.invariants.as_dict().items():
        rec[name] = str(value)
    for name, value in rep.invariants.as_dict().items():
        rec["sign_" + name] = sign(value)
    for name in ("double_root", "single_root", "triple_root", "quadruple_root", "single_root_offset"):
        value = getattr(rep, name, None)
        if value is not None:
            rec[name] = str(value)
    if isinstance(rep, CubicReport):
        if rep.positive_single_count is not None:
            rec["positive_single_count"] = rep.positive_single_count
    else:
        if rep.leftover_quadratic is not None:
            rec["leftover_quadratic"] = rep.leftover_quadratic.format("y", compact=True)
        if rep.double_pair_quadratic is not None:
            rec["double_pair_quadratic"] = rep.double_pair_quadratic.format("x", compact=True)
    if cross_check:
        cc = three_way(f)
        rec["sturm_real_roots"] = cc.sturm_real_count
        rec["oracle_label"] = full_label(cc.oracle_config) if cc.oracle_config else "unknown"
        rec["cross_check"] = "agree" if cc.ok else "disagree"
    return rec


def format_record(rec: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(rec, separators=(",", ":"))
    return " ".join(f"{k}={json.dumps(v) if isinstance(v, str) and ' ' in v else v}" for k, v in rec.items())


# -- commands --------------------------------------------------------------------------

def cmd_classify(args, out) -> int:
    tokens = args.cubic if args.cubic is not None else args.quartic
    try:
        coeffs = [parse_token(t) for t in tokens]
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rec = report_record(coeffs, cross_check=args.cross_check)
    out.write(format_record(rec, args.json) + "\n")
    if rec.get("cross_check") == "disagree":
        return EXIT_MISMATCH
    return EXIT_OK


def parse_batch_line(line: str) -> list[Fraction]:
    body = line.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    tokens = [t.strip().strip('"').strip("'") for t in re.split(r"[,\s]+", body.strip()) if t.strip()]
    if len(tokens) not in (3, 4):
        raise ParseError(f"expected 3 or 4 coefficients, got {len(tokens)}")
    return [parse_token(t) for t in tokens]


def cmd_batch(args, inp: Iterable[str], out) -> int:
    status = EXIT_OK
    mismatch = False
    for lineno, line in enumerate(inp, start=1):
        if not line.strip():
            continue
        try:
            coeffs = parse_batch_line(line)
        except ParseError as exc:
            rec = {"line": lineno, "error": str(exc)}
            status = EXIT_USAGE
        else:
            rec = {"line": lineno, **report_record(coeffs, cross_check=args.cross_check)}
            mismatch |= rec.get("cross_check") == "disagree"
        out.write(format_record(rec, args.json) + "\n")
    if mismatch:
        return EXIT_MISMATCH
    return status


def parse_box(items: Sequence[str], degree: int) -> dict[str, list[Fraction]]:
    """AXIS=lo:hi:steps items -> grid values per axis; missing axes are fixed at 0."""
    axes = AXES[degree]
    grid: dict[str, list[Fraction]] = {}
    for item in items:
        m = re.fullmatch(r"([a-z])=([^:]+):([^:]+):(\d+)", item.strip())
        if not m:
            raise ParseError(f"bad box item {item!r}; want AXIS=lo:hi:steps")
        axis, lo_t, hi_t, steps_t = m.groups()
        if axis not in axes:
            raise ParseError(f"unknown axis {axis!r} for degree {degree}")
        if axis in grid:
            raise ParseError(f"axis {axis!r} given twice")
        lo, hi, steps = parse_token(lo_t), parse_token(hi_t), int(steps_t)
        if steps < 1:
            raise ParseError(f"steps must be >= 1 in {item!r}")
        if lo > hi:
            raise ParseError(f"lo > hi in {item!r}")
        if steps == 1:
            grid[axis] = [lo]
        else:
            grid[axis] = [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]
    return {a: grid.get(a, [Fraction(0)]) for a in axes}


def cmd_sample(args, out) -> int:
    degree = 3 if args.cubic else 4
    try:
        grid = parse_box(args.box or [], degree)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    axes = AXES[degree]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([*axes, "label"])
    for point in itertools.product(*(grid[a] for a in axes)):
        label = full_label(classify(Poly.monic(*point)).config)
        writer.writerow([*(str(v) for v in point), label])
    return EXIT_OK


def _describe(f: Poly) -> str:
    return ",".join(str(c) for c in f.monicize().lower_coeffs())


def _verify_one(f: Poly, expected, out, tally: Counter) -> bool:
    cc = three_way(f, expected=expected)
    tally[full_label(cc.config)] += 1
    if not cc.ok:
        out.write(
            f"MISMATCH degree={f.degree} coeffs={_describe(f)} classifier={full_label(cc.config)} "
            f"expected={full_label(expected) if expected else '-'} sturm_real_roots={cc.sturm_real_count} "
            f"oracle={full_label(cc.oracle_config) if cc.oracle_config else 'unknown'}\n"
        )
    return cc.ok


def cmd_verify(args, out) -> int:
    if args.count < 1:
        print("error: count must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    out.write(f"verify {args.mode} count={args.count} seed={args.seed}\n")
    failures = 0
    total = 0
    if args.mode == "constructed":
        for cfg in ALL_CONFIGS:
            tally: Counter = Counter()
            good = 0
            for i, (f, _) in enumerate(sample_labeled_instances(cfg, args.count, args.seed)):
                good += _verify_one(f, cfg, out, tally)
            total += args.count
            failures += args.count - good
            out.write(f"{full_label(cfg)} {good}/{args.count}\n")
    else:
        rng = random.Random(args.seed)
        degenerate = [c for c in ALL_CONFIGS if c.distinct_real_roots < (3 if isinstance(c, CubicConfig) else 4)
                      and c not in (CubicConfig.ONE_REAL_TWO_COMPLEX, QuarticConfig.TWO_REAL_TWO_COMPLEX,
                                    QuarticConfig.FOUR_COMPLEX)]
        for degree in (3, 4):
            pool = [c for c in degenerate if isinstance(c, CubicConfig) == (degree == 3)]
            tally = Counter()
            for i in range(args.count):
                if i % 4 == 3:
                    cfg = pool[(i // 4) % len(pool)]
                    f, _ = sample_labeled_instances(cfg, 1, rng.randrange(2**31), irrational=rng.random() < 0.5)[0]
                    ok = _verify_one(f, cfg, out, tally)
                else:
                    f = Poly.monic(*(random_rational(rng) for _ in range(degree)))
                    ok = _verify_one(f, None, out, tally)
                failures += not ok
                total += 1
            members = CubicConfig if degree == 3 else QuarticConfig
            for cfg in members:
                out.write(f"{full_label(cfg)} {tally[full_label(cfg)]}\n")
    out.write(f"comparisons={total} disagreements={failures}\n")
    return EXIT_MISMATCH if failures else EXIT_OK


# -- entry point ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rootconfig", description="Exact root-configuration classifier for monic cubics and quartics.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify one polynomial")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cubic", nargs=3, metavar=("P", "Q", "R"))
    g.add_argument("--quartic", nargs=4, metavar=("P", "Q", "R", "S"))
    p.add_argument("--cross-check", action="store_true", help="also run the Sturm count and the oracle")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("batch", help="classify line-delimited coefficient records from stdin")
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sample", help="classify a coefficient grid and write CSV")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cubic", action="store_true")
    g.add_argument("--quartic", action="store_true")
    p.add_argument("--box", nargs="+", metavar="AXIS=lo:hi:steps")

    p = sub.add_parser("verify", help="three-way comparison of classifier, Sturm count and oracle")
    p.add_argument("mode", choices=("constructed", "random"))
    p.add_argument("count", type=int)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "classify":
            return cmd_classify(args, stdout)
        if args.command == "batch":
            return cmd_batch(args, stdin, stdout)
        if args.command == "sample":
            return cmd_sample(args, stdout)
        return cmd_verify(args, stdout)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
