"""The 27-symbol letter table A..Z plus '0', shifted by n and reduced mod 27."""
from __future__ import annotations

import string

from .errors import EmptyMessageError, OutOfRangeError, UnsupportedCharacterError

SYMBOLS = string.ascii_uppercase + "0"
PAD = "0"
SIZE = len(SYMBOLS)

_INDEX = {s: i for i, s in enumerate(SYMBOLS)}


def index_of(s: str) -> int:
    try:
        return _INDEX[s]
    except KeyError:
        raise UnsupportedCharacterError(s, 0) from None


def value_of(s: str, n: int) -> int:
    """Table value of symbol ``s`` when the table starts at ``n``."""
    return (n + index_of(s)) % SIZE


def symbol_of(v: int, n: int) -> str:
    if not 0 <= v < SIZE:
        raise OutOfRangeError(f"symbol value {v} outside 0..26")
    return SYMBOLS[(v - n) % SIZE]


def normalize_text(raw: str) -> list[str]:
    """Uppercase ASCII letters, turn spaces into '0', reject anything else."""
    if not raw:
        raise EmptyMessageError()
    out = []
    for pos, ch in enumerate(raw):
        if ch == " ":
            out.append(PAD)
        elif ch == PAD or ch in string.ascii_letters:
            out.append(ch.upper())
        else:
            raise UnsupportedCharacterError(ch, pos)
    return out


def table(n: int) -> list[tuple[str, int]]:
    return [(s, value_of(s, n)) for s in SYMBOLS]
