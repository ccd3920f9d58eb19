"""Fibonacci Q-matrix blocking codec with a corruption-detection harness."""
from .alphabet import normalize_text, symbol_of, value_of
from .blocking import Block, MessageMatrix, build_matrix, choose_n, join_blocks, split_blocks
from .codec import CodedRow, Codeword, decode, decode_matrix, decode_row, encode, encode_block, solve_row
from .fibonacci import QMatrix, fib, q_power
from .integrity import Corruption, Outcome, corrupt, decode_checked, detection_sweep

__all__ = [
    "Block", "CodedRow", "Codeword", "Corruption", "MessageMatrix", "Outcome", "QMatrix",
    "build_matrix", "choose_n", "corrupt", "decode", "decode_checked", "decode_matrix",
    "decode_row", "detection_sweep", "encode", "encode_block", "fib", "join_blocks",
    "normalize_text", "q_power", "solve_row", "split_blocks", "symbol_of", "value_of",
]
