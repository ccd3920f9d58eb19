"""Command line front end: ``fibq encode|decode|table|simulate``."""
from __future__ import annotations

import argparse
import math
import re
import sys
from typing import TextIO

from . import alphabet
from .codec import D_MAX, SYMBOL_MAX, Codeword, CodedRow, decode, encode
from .errors import CodewordFormatError, FibQError
from .integrity import detection_sweep

MAGIC = "FIBQ1"
_HEADER = re.compile(r"FIBQ1 b=(0|[1-9][0-9]*)")
_INT = re.compile(r"-?(0|[1-9][0-9]*)")


def format_codeword(c: Codeword) -> str:
    lines = [f"{MAGIC} b={c.b}"]
    lines += [f"{r.d} {r.b1} {r.b2} {r.b4}" for r in c.rows]
    return "\n".join(lines) + "\n"


def parse_codeword(text: str) -> Codeword:
    """Parse a codeword file, raising ``CodewordFormatError`` with a specific reason."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CodewordFormatError("bad header", "file is empty")
    header = _HEADER.fullmatch(lines[0])
    if header is None:
        raise CodewordFormatError("bad header", f"expected '{MAGIC} b=<rows>', got {lines[0]!r}")
    declared = int(header.group(1))
    body = lines[1:]
    if declared != len(body):
        raise CodewordFormatError("row count mismatch", f"header declares b={declared}, found {len(body)} rows")
    if declared == 0:
        raise CodewordFormatError("empty codeword", "b=0")
    if math.isqrt(declared) ** 2 != declared:
        raise CodewordFormatError("non-square b", f"{declared} is not a perfect square")

    rows = []
    for i, line in enumerate(body):
        parts = line.split(" ")
        if len(parts) != 4 or not all(_INT.fullmatch(p) for p in parts):
            raise CodewordFormatError("malformed row", f"{line!r}, expected 4 integers", i)
        row = CodedRow(*map(int, parts))
        if not -D_MAX <= row.d <= D_MAX:
            raise CodewordFormatError("out-of-range field", f"d={row.d}, must be in -{D_MAX}..{D_MAX}", i)
        for name in ("b1", "b2", "b4"):
            v = getattr(row, name)
            if not 0 <= v <= SYMBOL_MAX:
                raise CodewordFormatError("out-of-range field", f"{name}={v}, must be in 0..{SYMBOL_MAX}", i)
        rows.append(row)
    return Codeword(tuple(rows))


def _strip_newline(text: str) -> str:
    if text.endswith("\r\n"):
        return text[:-2]
    if text.endswith("\n"):
        return text[:-1]
    return text


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path) as f:
        return f.read()


def _write(path: str, payload: str, stdout: TextIO) -> None:
    if path == "-":
        stdout.write(payload)
    else:
        with open(path, "w") as f:
            f.write(payload)


def cmd_encode(args, stdin: TextIO, stdout: TextIO) -> int:
    c = encode(_strip_newline(_read(args.input, stdin)))
    _write(args.output, format_codeword(c), stdout)
    return 0


def cmd_decode(args, stdin: TextIO, stdout: TextIO) -> int:
    c = parse_codeword(_read(args.input, stdin))
    _write(args.output, decode(c) + "\n", stdout)
    return 0


def cmd_table(args, stdin: TextIO, stdout: TextIO) -> int:
    if args.n < 3:
        raise FibQError(f"table shift must be >= 3, got {args.n}")
    stdout.write("".join(f"{s} {v}\n" for s, v in alphabet.table(args.n)))
    return 0


def cmd_simulate(args, stdin: TextIO, stdout: TextIO) -> int:
    if args.seed is not None and args.mode == "exhaustive":
        raise FibQError("--seed only applies to sampled mode")
    if args.text is not None:
        message = args.text
    else:
        message = _strip_newline(_read(args.input, stdin))
    report = detection_sweep(
        encode(message), message, mode=args.mode, seed=args.seed or 0, samples=args.samples
    )
    stdout.write(report.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibq", description="Fibonacci Q-matrix blocking codec")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p, in_help, out_help):
        p.add_argument("--in", dest="input", default="-", help=in_help)
        p.add_argument("--out", dest="output", default="-", help=out_help)

    p = sub.add_parser("encode", help="encode a text message into a codeword file")
    io_flags(p, "message text (default: stdin)", "codeword file (default: stdout)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a codeword file back to text")
    io_flags(p, "codeword file (default: stdin)", "decoded text (default: stdout)")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("table", help="print the letter table for shift n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("simulate", help="measure detection of single-field corruptions")
    p.add_argument("text", nargs="?", help="message (default: read --in)")
    p.add_argument("--in", dest="input", default="-")
    p.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=5000)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None, stdin: TextIO | None = None, stdout: TextIO | None = None,
         stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, stdin, stdout)
    except (FibQError, OSError) as exc:
        stderr.write(f"fibq {args.command}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
