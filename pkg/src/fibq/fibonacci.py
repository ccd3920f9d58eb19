"""Exact Fibonacci numbers and powers of the Fibonacci Q-matrix."""
from __future__ import annotations

from dataclasses import dataclass


def fib(n: int) -> int:
    """Return F(n) with F(0)=0, F(1)=1, using fast doubling."""
    if n < 0:
        raise ValueError(f"fib requires n >= 0, got {n}")
    return _fib_pair(n)[0]


def _fib_pair(n: int) -> tuple[int, int]:
    # (F(n), F(n+1)), iterating over the bits of n from the top
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        a, b = (d, c + d) if bit == "1" else (c, d)
    return a, b


@dataclass(frozen=True)
class QMatrix:
    """Q**n laid out as [[q1, q2], [q3, q4]]."""

    n: int
    q1: int
    q2: int
    q3: int
    q4: int

    @property
    def det(self) -> int:
        return self.q1 * self.q4 - self.q2 * self.q3

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.q1, self.q2), (self.q3, self.q4)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(
            self.n + other.n,
            self.q1 * other.q1 + self.q2 * other.q3,
            self.q1 * other.q2 + self.q2 * other.q4,
            self.q3 * other.q1 + self.q4 * other.q3,
            self.q3 * other.q2 + self.q4 * other.q4,
        )


Q = QMatrix(1, 1, 1, 1, 0)


def q_power(n: int) -> QMatrix:
    """Return Q**n = [[F(n+1), F(n)], [F(n), F(n-1)]] for n >= 1."""
    if n < 1:
        raise ValueError(f"q_power requires n >= 1, got {n}")
    fn_minus_1, fn = _fib_pair(n - 1)
    return QMatrix(n, fn + fn_minus_1, fn, fn, fn_minus_1)
