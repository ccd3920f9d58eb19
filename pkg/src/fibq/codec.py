"""Fibonacci blocking codec.

Each 2x2 block [[b1, b2], [b3, b4]] of the valued message matrix is sent as
the row (det, b1, b2, b4). The receiver rebuilds b3 from the row alone by
solving the linear equation

    (-1)**n * d = e1 * (q2*x + q4*b4) - e2 * (q1*x + q3*b4)

where e1 = q1*b1 + q3*b2, e2 = q2*b1 + q4*b2 and (q1, q2, q3, q4) = Q**n.
The shift n is never transmitted: it follows from the row count.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import alphabet
from .blocking import Block, MessageMatrix, build_matrix, choose_n, join_blocks, split_blocks
from .errors import (
    DecodeError,
    DegenerateEquationError,
    EncodabilityError,
    NonIntegerSolutionError,
    OutOfRangeError,
    ShapeError,
)
from .fibonacci import QMatrix, q_power

SYMBOL_MAX = alphabet.SIZE - 1
D_MAX = SYMBOL_MAX * SYMBOL_MAX


class CodedRow(NamedTuple):
    d: int
    b1: int
    b2: int
    b4: int


@dataclass(frozen=True)
class Codeword:
    rows: tuple[CodedRow, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(CodedRow(*r) for r in self.rows))

    @property
    def b(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        m = math.isqrt(self.b)
        if m < 1 or m * m != self.b:
            raise ShapeError(f"row count {self.b} is not a positive perfect square")
        return m

    @property
    def n(self) -> int:
        return choose_n(self.b)


@dataclass(frozen=True)
class DecodeIntermediates:
    e1: int
    e2: int
    x: Fraction


def encode_block(B: Block) -> CodedRow:
    return CodedRow(B.det, B.b1, B.b2, B.b4)


def encode(raw: str) -> Codeword:
    symbols = build_matrix(alphabet.normalize_text(raw))
    n = choose_n(symbols.m ** 2)
    valued = symbols.map(lambda s: alphabet.value_of(s, n))
    rows = []
    for i, (block, sym_block) in enumerate(zip(split_blocks(valued), split_blocks(symbols))):
        if block.b2 == 0:
            raise EncodabilityError(i, sym_block.b2)
        rows.append(encode_block(block))
    return Codeword(tuple(rows))


def solve_row(r: CodedRow, q: QMatrix) -> DecodeIntermediates:
    """Solve the decoding equation for x exactly. Raises on a vanishing x term."""
    q1, q2, q3, q4 = q.q1, q.q2, q.q3, q.q4
    e1 = q1 * r.b1 + q3 * r.b2
    e2 = q2 * r.b1 + q4 * r.b2
    coeff = e1 * q2 - e2 * q1
    const = e1 * q4 * r.b4 - e2 * q3 * r.b4
    if coeff == 0:
        raise DegenerateEquationError("b2 = 0, x term vanishes")
    lhs = r.d if q.n % 2 == 0 else -r.d
    return DecodeIntermediates(e1, e2, Fraction(lhs - const, coeff))


def decode_row(r: CodedRow, q: QMatrix) -> Block:
    x = solve_row(r, q).x
    if x.denominator != 1:
        raise NonIntegerSolutionError(f"x = {x}")
    x = int(x)
    if not 0 <= x <= SYMBOL_MAX:
        raise OutOfRangeError(f"x = {x} outside 0..{SYMBOL_MAX}")
    return Block(r.b1, r.b2, x, r.b4)


def decode_matrix(c: Codeword) -> MessageMatrix:
    """Rebuild the valued message matrix from a codeword."""
    m = c.m
    q = q_power(c.n)
    blocks = []
    for i, row in enumerate(c.rows):
        try:
            blocks.append(decode_row(row, q))
        except DecodeError as exc:
            raise exc.at_row(i)
    return join_blocks(blocks, m)


def decode_symbols(c: Codeword) -> list[str]:
    """Decoded symbols in reading order, padding included."""
    n = c.n
    M = decode_matrix(c)
    out = []
    for pos, v in enumerate(M.flat()):
        try:
            out.append(alphabet.symbol_of(v, n))
        except DecodeError as exc:
            raise exc.at_row(_row_of_cell(pos, M.m))
    return out


def _row_of_cell(pos: int, m: int) -> int:
    r, col = divmod(pos, 2 * m)
    return (r // 2) * m + col // 2


def render(symbols: Sequence[str]) -> str:
    """Drop trailing padding and show the remaining '0' symbols as spaces."""
    return "".join(symbols).rstrip(alphabet.PAD).replace(alphabet.PAD, " ")


def decode(c: Codeword) -> str:
    return render(decode_symbols(c))


def strip_padding(symbols: Sequence[str]) -> list[str]:
    out = list(symbols)
    while out and out[-1] == alphabet.PAD:
        out.pop()
    return out
