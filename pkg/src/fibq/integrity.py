"""Channel corruption and error-detection measurement for codewords.

The channel overwrites single codeword fields with other legal values:
b-fields stay in 0..26 and d stays in -676..676. Detection relies only on
what the decoder itself can observe (vanishing x term, fractional x, x out
of range).
"""
from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import alphabet
from .blocking import split_blocks
from .codec import (
    D_MAX,
    SYMBOL_MAX,
    Codeword,
    decode_matrix,
    decode_row,
    decode_symbols,
    encode,
    strip_padding,
)
from .errors import DecodeError
from .fibonacci import q_power

FIELDS = ("d", "b1", "b2", "b4")
# candidates per row: every other d, plus every other value of each b-field
_PER_ROW = (2 * D_MAX) + 3 * SYMBOL_MAX
EXHAUSTIVE_MAX_ROWS = 16
DEFAULT_SAMPLES = 5_000


@dataclass(frozen=True)
class Corruption:
    row_index: int
    field: str
    new_value: int


class Outcome(str, enum.Enum):
    OK = "ok"
    OK_UNVERIFIED = "ok-unverified"
    DETECTED = "detected"
    SILENT = "silent_miscorrection"


@dataclass(frozen=True)
class DecodeOutcome:
    kind: Outcome
    detail: str
    reason: str | None = None


def field_range(name: str) -> range:
    if name == "d":
        return range(-D_MAX, D_MAX + 1)
    if name in FIELDS:
        return range(0, SYMBOL_MAX + 1)
    raise ValueError(f"unknown codeword field {name!r}")


def corrupt(c: Codeword, corruptions: Sequence[Corruption]) -> Codeword:
    """Return a copy of ``c`` with the listed fields overwritten, in order."""
    rows = list(c.rows)
    for k in corruptions:
        if not 0 <= k.row_index < len(rows):
            raise IndexError(f"row {k.row_index} out of bounds for {len(rows)} rows")
        if k.new_value not in field_range(k.field):
            raise ValueError(f"{k.field}={k.new_value} outside the legal range")
        row = rows[k.row_index]
        if getattr(row, k.field) == k.new_value:
            raise ValueError(f"row {k.row_index}: {k.field} already equals {k.new_value}")
        rows[k.row_index] = row._replace(**{k.field: k.new_value})
    return Codeword(tuple(rows))


def _reference_symbols(reference: str) -> list[str]:
    return strip_padding(alphabet.normalize_text(reference))


def decode_checked(c: Codeword, reference: str | None = None) -> DecodeOutcome:
    """Decode ``c`` and classify the result; decode errors become ``DETECTED``."""
    try:
        symbols = strip_padding(decode_symbols(c))
    except DecodeError as exc:
        return DecodeOutcome(Outcome.DETECTED, str(exc), exc.reason)
    text = "".join(symbols)
    if reference is None:
        return DecodeOutcome(Outcome.OK_UNVERIFIED, text)
    if symbols == _reference_symbols(reference):
        return DecodeOutcome(Outcome.OK, text)
    return DecodeOutcome(Outcome.SILENT, text)


@dataclass
class SweepReport:
    total: int
    detected: int
    silent: int
    ok: int
    mode: str
    reasons: Counter = field(default_factory=Counter)

    @property
    def fraction(self) -> float:
        return self.detected / self.total if self.total else 0.0

    def to_text(self) -> str:
        return (
            f"total={self.total}\n"
            f"detected={self.detected}\n"
            f"silent={self.silent}\n"
            f"fraction={self.fraction:.4f}\n"
        )


def candidate_count(c: Codeword) -> int:
    return c.b * _PER_ROW


def candidate(c: Codeword, index: int) -> Corruption:
    """The ``index``-th single-field corruption in enumeration order."""
    row_index, k = divmod(index, _PER_ROW)
    row = c.rows[row_index]
    for name in FIELDS:
        width = len(field_range(name)) - 1
        if k < width:
            lo = field_range(name).start
            value = lo + k
            # skip over the original value
            if value >= getattr(row, name):
                value += 1
            return Corruption(row_index, name, value)
        k -= width
    raise IndexError(index)


def iter_candidates(c: Codeword) -> Iterator[Corruption]:
    for i in range(candidate_count(c)):
        yield candidate(c, i)


def detection_sweep(
    c: Codeword,
    reference: str,
    mode: str = "auto",
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
) -> SweepReport:
    """Classify single-field corruptions of ``c``.

    ``mode="auto"`` enumerates every candidate when the codeword has at most
    16 rows and otherwise draws ``samples`` distinct candidates with a
    generator seeded by ``seed``.
    """
    if encode(reference) != c:
        raise ValueError("reference message does not encode to the given codeword")
    if mode == "auto":
        mode = "exhaustive" if c.b <= EXHAUSTIVE_MAX_ROWS else "sampled"
    total = candidate_count(c)
    if mode == "exhaustive":
        indices: Sequence[int] = range(total)
    elif mode == "sampled":
        indices = sorted(random.Random(seed).sample(range(total), min(samples, total)))
    else:
        raise ValueError(f"unknown sweep mode {mode!r}")

    # rows decode independently, so only the touched row needs re-solving
    clean = split_blocks(decode_matrix(c))
    q = q_power(c.n)
    counts: Counter = Counter()
    reasons: Counter = Counter()
    for i in indices:
        k = candidate(c, i)
        row = c.rows[k.row_index]._replace(**{k.field: k.new_value})
        try:
            block = decode_row(row, q)
        except DecodeError as exc:
            counts[Outcome.DETECTED] += 1
            reasons[exc.reason] += 1
            continue
        counts[Outcome.OK if block == clean[k.row_index] else Outcome.SILENT] += 1
    return SweepReport(
        total=len(indices),
        detected=counts[Outcome.DETECTED],
        silent=counts[Outcome.SILENT],
        ok=counts[Outcome.OK],
        mode=mode,
        reasons=reasons,
    )
