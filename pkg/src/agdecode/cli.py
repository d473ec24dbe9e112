"""Command-line interface: ``agdecode {encode,decode,simulate,bounds}``.

Exit status is 0 on success, 2 when ``decode`` produced a word beyond the
guaranteed decoding radius, and 1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys

from . import bounds
from .decoder import decode, decode_trace
from .errors import AGCodeError
from .formats import format_vector, load_config, parse_vector

FIELD_HELP = (
    "Field elements are written as decimal integers: the element sum c_j*alpha^j "
    "is encoded as sum c_j*p^j.  A field is named 'p^k/m', where m is the encoding "
    "of its monic modulus digits (e.g. 3^2/17 is GF(9) with alpha^2 = alpha + 1)."
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_code(path):
    return load_config(_read(path))


def format_trace(records) -> str:
    lines = []
    for r in records:
        pairs = " ".join(f"f{i}-g{ip}" for i, ip in enumerate(r.i_prime))
        line = (
            f"s={r.s} phase={r.phase} pairs={pairs} "
            f"c={','.join(map(str, r.c))} w={format_vector(r.w_i)} chosen={r.chosen}"
        )
        if r.tally:
            line += " tally=" + ",".join(f"{w}:{t}" for w, t in sorted(r.tally.items()))
        line += " cases=" + ",".join(r.cases)
        lines.append(line)
    return "\n".join(lines)


def cmd_encode(args) -> int:
    code = _load_code(args.config)
    msg = parse_vector(_read(args.message))
    print(format_vector(code.encode(msg)))
    return 0


def cmd_decode(args) -> int:
    code = _load_code(args.config)
    v = parse_vector(_read(args.received))
    if args.trace:
        result, records = decode_trace(code, v)
        print(format_trace(records))
    else:
        result = decode(code, v)
    print(format_vector(result.message))
    return 0 if result.within_guarantee else 2


def parse_weights(text: str) -> list:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",")]


def simulate(code, weights, trials: int, seed: int) -> list:
    """Rows (t, trials, successes, failures_within_guarantee)."""
    q, n = code.F.order, code.n
    rows = []
    for t in weights:
        if not 0 <= t <= n:
            raise ValueError(f"error weight {t} outside [0, {n}]")
        ok = bad_inside = 0
        for trial in range(trials):
            rng = random.Random(f"{seed}/{t}/{trial}")
            msg = [rng.randrange(q) for _ in range(code.k)]
            v = code.encode(msg)
            for pos in rng.sample(range(n), t):
                v[pos] = code.F.add(v[pos], rng.randrange(1, q))
            if decode(code, v).message == msg:
                ok += 1
            elif 2 * t < code.du:
                bad_inside += 1
        rows.append((t, trials, ok, bad_inside))
    return rows


def sim_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "trials", "successes", "failures_within_guarantee"])
    w.writerows(rows)
    return buf.getvalue()


def cmd_simulate(args) -> int:
    code = _load_code(args.config)
    if args.trials < 1:
        raise ValueError("--trials must be at least 1")
    rows = simulate(code, parse_weights(args.weights), args.trials, args.seed)
    sys.stdout.write(sim_csv(rows))
    return 0


def cmd_bounds(args) -> int:
    code = _load_code(args.config)
    us = range(code.n) if args.all_u else [code.u]
    sys.stdout.write(bounds.table_csv(bounds.bound_table(code, us)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="agdecode",
        description="Encode and decode evaluation codes on Miura-Kamiya plane curves.",
        epilog=FIELD_HELP,
    )
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("encode", help="encode a message file", epilog=FIELD_HELP)
    e.add_argument("config")
    e.add_argument("message", help="file with k comma-separated elements ('-' for stdin)")
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="decode a received vector", epilog=FIELD_HELP)
    d.add_argument("config")
    d.add_argument("received", help="file with n comma-separated elements ('-' for stdin)")
    d.add_argument("--trace", action="store_true", help="print the per-s pairing/voting records")
    d.set_defaults(func=cmd_decode)

    s = sub.add_parser("simulate", help="Monte-Carlo decoding over random error patterns")
    s.add_argument("config")
    s.add_argument("--weights", required=True, help="error weights, 'lo..hi' or comma list")
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(func=cmd_simulate)

    b = sub.add_parser("bounds", help="order bound table as CSV")
    b.add_argument("config")
    b.add_argument("--all-u", action="store_true", help="every nongap u < n instead of the configured u")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AGCodeError, ValueError, OSError) as exc:
        print(f"agdecode: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
