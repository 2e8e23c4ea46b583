"""Command-line front end.

Exit status is 0 on success, 1 on domain errors (bad prime, limits, invalid
words) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources

from .codec import build_code, decode_single, encode, simulate, verify_perfect
from .errors import LimitExceeded, MannheimError
from .metric import WeightKind, audit_metric, compare_weights
from .residue_field import build_field, check_prime, label_ratio, split_prime

CSV_COMMANDS = ("table", "compare-weights")

# JSON schema (under mannheim/schemas/) describing each subcommand's output
SCHEMAS = {
    "split-prime": "split_prime",
    "table": "table",
    "audit-metric": "metric_audit_report",
    "compare-weights": "weight_comparison_report",
    "encode": "encode",
    "decode": "decode_result",
    "verify-perfect": "perfectness_report",
    "simulate": "channel_stats",
}


def load_schema(command: str) -> dict:
    path = resources.files("mannheim") / "schemas" / f"{SCHEMAS[command]}.schema.json"
    return json.loads(path.read_text(encoding="utf-8"))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_word(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def _probability(text: str) -> float:
    v = float(text)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return v


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return v


def _word(text: str) -> list[int]:
    try:
        return parse_word(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of labels") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mannheim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help, t=False):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--p", type=int, required=True, help="prime p = 1 (mod 6)")
        if t:
            sp.add_argument("--t", type=_non_negative, default=0)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--output", "-o", default="-", help="output path (default stdout)")
        return sp

    command("split-prime", "split p in Z[w] and report the labeling ratio")
    command("table", "label / representative table of A_p[w]")
    sp = command("audit-metric", "audit the metric axioms for a weight kind")
    sp.add_argument("--kind", choices=("wM", "wm", "graph"), required=True)
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--trials", type=_non_negative, default=None)
    sp.add_argument("--seed", type=int, default=0)
    command("compare-weights", "per-label comparison of the three weights")
    sp = command("encode", "encode a message", t=True)
    sp.add_argument("--message", type=_word, required=True)
    sp = command("decode", "correct a single unit error", t=True)
    sp.add_argument("--word", type=_word, required=True)
    command("verify-perfect", "sphere-packing and ball-partition check")
    sp = command("simulate", "random unit-error channel", t=True)
    sp.add_argument("--trials", type=_non_negative, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--epsilon", type=_probability, required=True)
    return parser


def _json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dispatch(args) -> str:
    cmd = args.command
    if args.format == "csv" and cmd not in CSV_COMMANDS:
        raise UsageError(f"argument --format: csv is only valid for {', '.join(CSV_COMMANDS)}")
    if cmd == "audit-metric" and args.exhaustive and args.trials is not None:
        raise UsageError("argument --exhaustive: not allowed with --trials")
    if cmd == "decode" and args.t != 0:
        raise UsageError("argument --t: decoding is only defined for t = 0")

    if cmd == "split-prime":
        check_prime(args.p)
        pi = split_prime(args.p)
        return _json({"p": args.p, "pi": [pi.x, pi.y], "r": label_ratio(args.p, pi)})

    field = build_field(args.p)
    if cmd == "table":
        if args.format == "csv":
            return _csv([("label", "x", "y", "x_bar", "y_bar", "norm"), *field.table_rows()])
        rows = [dict(zip(("label", "x", "y", "x_bar", "y_bar", "norm"), r)) for r in field.table_rows()]
        return _json({**field.summary(), "table": rows})
    if cmd == "audit-metric":
        kind = WeightKind.parse(args.kind)
        if args.exhaustive:
            report = audit_metric(field, kind, exhaustive=True)
        elif args.trials is not None:
            report = audit_metric(field, kind, exhaustive=False, trials=args.trials, seed=args.seed)
        else:
            report = audit_metric(field, kind, seed=args.seed)
        return _json(report.to_dict())
    if cmd == "compare-weights":
        report = compare_weights(field)
        return _csv(report.csv_rows()) if args.format == "csv" else _json(report.to_dict())

    code = build_code(field, getattr(args, "t", 0))
    if cmd == "encode":
        return _json({"p": field.p, "n": code.n, "t": code.t, "message": args.message,
                      "codeword": list(encode(code, _labels(field, args.message)))})
    if cmd == "decode":
        return _json(decode_single(code, _labels(field, args.word)).to_dict())
    if cmd == "verify-perfect":
        try:
            report = verify_perfect(code, exhaustive=True)
        except LimitExceeded as exc:
            report = exc.report
        return _json(report.to_dict())
    if cmd == "simulate":
        return _json(simulate(code, args.trials, args.seed, args.epsilon).to_dict())
    raise AssertionError(cmd)  # pragma: no cover


def _labels(field, word):
    for l in word:
        field.rep(l)
    return word


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text = _dispatch(args)
    except UsageError as exc:
        print(f"mannheim: usage error: {exc}", file=stderr)
        return 2
    except MannheimError as exc:
        print(f"mannheim: error: {exc}", file=stderr)
        return 1
    if args.output == "-":
        stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return 0


def main() -> None:
    sys.exit(run())
