"""Exception types raised by the codec."""


class FibQError(Exception):
    """Base class for every error raised by this package."""


class UnsupportedCharacterError(FibQError, ValueError):
    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"unsupported character {char!r} at position {position}")


class EmptyMessageError(FibQError, ValueError):
    def __init__(self, msg: str = "empty message"):
        super().__init__(msg)


class EncodabilityError(FibQError, ValueError):
    """A block would carry value 0 in its b2 cell, making b3 unrecoverable."""

    def __init__(self, block_index: int, symbol: str):
        self.block_index = block_index
        self.symbol = symbol
        super().__init__(
            f"block {block_index}: symbol {symbol!r} takes value 0 in the b2 cell; "
            "b3 would be unrecoverable"
        )


class ShapeError(FibQError, ValueError):
    pass


class DecodeError(FibQError, ValueError):
    """A coded row failed to decode. ``row`` is filled in by the codeword decoder."""

    reason = "decode error"

    def __init__(self, detail: str = "", row: int | None = None):
        self.detail = detail
        self.row = row
        super().__init__(self._render())

    def _render(self) -> str:
        msg = self.reason + (f" ({self.detail})" if self.detail else "")
        if self.row is not None:
            msg = f"row {self.row}: {msg}"
        return msg

    def at_row(self, row: int) -> "DecodeError":
        self.row = row
        self.args = (self._render(),)
        return self

    def __str__(self) -> str:
        return self._render()


class DegenerateEquationError(DecodeError):
    reason = "degenerate equation"


class NonIntegerSolutionError(DecodeError):
    reason = "non-integer solution"


class OutOfRangeError(DecodeError):
    reason = "out of range"


class CodewordFormatError(FibQError, ValueError):
    """Malformed codeword file. ``kind`` names the violated rule."""

    def __init__(self, kind: str, detail: str, row: int | None = None):
        self.kind = kind
        self.row = row
        prefix = f"row {row}: " if row is not None else ""
        super().__init__(f"{prefix}{kind}: {detail}")
