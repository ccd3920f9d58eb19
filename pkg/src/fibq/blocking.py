"""Square message matrices and their 2x2 tiling."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Generic, NamedTuple, Sequence, TypeVar

from .alphabet import PAD
from .errors import EmptyMessageError, ShapeError

T = TypeVar("T")


@dataclass(frozen=True)
class MessageMatrix(Generic[T]):
    """A 2m x 2m grid, row major. Cells hold symbols or their table values."""

    cells: tuple[tuple[T, ...], ...]

    def __post_init__(self):
        side = len(self.cells)
        if side == 0 or side % 2 or any(len(r) != side for r in self.cells):
            raise ShapeError(f"message matrix must be a nonempty even square, got {side} rows")

    @property
    def side(self) -> int:
        return len(self.cells)

    @property
    def m(self) -> int:
        return self.side // 2

    def flat(self) -> list[T]:
        return [c for row in self.cells for c in row]

    def map(self, f: Callable[[T], object]) -> "MessageMatrix":
        return MessageMatrix(tuple(tuple(f(c) for c in row) for row in self.cells))


class Block(NamedTuple):
    """[[b1, b2], [b3, b4]]"""

    b1: int
    b2: int
    b3: int
    b4: int

    @property
    def det(self) -> int:
        return self.b1 * self.b4 - self.b2 * self.b3


def side_for(length: int) -> int:
    """Smallest even side 2m with (2m)**2 >= length."""
    root = math.isqrt(length - 1) + 1 if length > 0 else 1  # ceil(sqrt(length))
    return 2 * ((root + 1) // 2)


def build_matrix(symbols: Sequence[str], pad: str = PAD) -> MessageMatrix:
    """Fill the smallest even square row by row, padding the tail with ``pad``."""
    if not symbols:
        raise EmptyMessageError()
    side = side_for(len(symbols))
    flat = list(symbols) + [pad] * (side * side - len(symbols))
    return MessageMatrix(tuple(tuple(flat[r * side:(r + 1) * side]) for r in range(side)))


def split_blocks(M: MessageMatrix) -> list[Block]:
    c = M.cells
    return [
        Block(c[2 * r][2 * k], c[2 * r][2 * k + 1], c[2 * r + 1][2 * k], c[2 * r + 1][2 * k + 1])
        for r in range(M.m)
        for k in range(M.m)
    ]


def join_blocks(blocks: Sequence[Block], m: int) -> MessageMatrix:
    if m < 1 or len(blocks) != m * m:
        raise ShapeError(f"expected {m * m} blocks for m={m}, got {len(blocks)}")
    side = 2 * m
    grid = [[None] * side for _ in range(side)]
    for i, (b1, b2, b3, b4) in enumerate(blocks):
        r, k = divmod(i, m)
        grid[2 * r][2 * k], grid[2 * r][2 * k + 1] = b1, b2
        grid[2 * r + 1][2 * k], grid[2 * r + 1][2 * k + 1] = b3, b4
    return MessageMatrix(tuple(tuple(row) for row in grid))


def choose_n(b: int) -> int:
    """Table shift / Q exponent for a message of ``b`` blocks."""
    if b < 1:
        raise ValueError(f"block count must be positive, got {b}")
    return 3 if b <= 3 else b
