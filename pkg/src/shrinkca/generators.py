"""Shift-register keystream generation and bit-sequence utilities.

Sequences are plain lists of 0/1 ints, index 0 first emitted; the text
form is ``^[01]+$`` with index 0 leftmost.  A register's characteristic
polynomial annihilates its stream: with P of degree r, every output bit
satisfies a_n = sum of a_(n-r+j) over the set coefficients j < r of P.
The seed is the first r emitted bits, so (1,0,0) starts the stream
1,0,0,...  (The reciprocal-polynomial convention, where taps read from
the other end, is deliberately not used.)
"""

from __future__ import annotations

import re
from math import gcd
from typing import Sequence

from .gf2poly import Gf2Poly

__all__ = [
    "Lfsr",
    "ShrinkingGenerator",
    "parse_bits",
    "format_bits",
    "sequence_period",
    "decimate_by_stride",
]

_BITS = re.compile(r"[01]+")


def parse_bits(text: str) -> list[int]:
    """Parse ``^[01]+$`` into a bit list, index 0 leftmost."""
    s = text.strip()
    if not _BITS.fullmatch(s):
        raise ValueError(f"not a bit string: {text!r}")
    return [int(c) for c in s]


def format_bits(bits: Sequence[int]) -> str:
    return "".join("1" if b else "0" for b in bits)


class Lfsr:
    """Linear feedback shift register in Fibonacci form.

    `state` holds the first `degree` output bits; generation is pure and
    never mutates the register.
    """

    __slots__ = ("charpoly", "state", "_taps")

    def __init__(self, charpoly: Gf2Poly, state: Sequence[int]):
        r = charpoly.degree
        if r < 1:
            raise ValueError("characteristic polynomial must have degree >= 1")
        state = tuple(int(b) for b in state)
        if len(state) != r:
            raise ValueError(f"seed must supply exactly {r} bits")
        if any(b not in (0, 1) for b in state):
            raise ValueError("seed bits must be 0 or 1")
        self.charpoly = charpoly
        self.state = state
        self._taps = tuple(j for j in range(r) if charpoly.coeff(j))

    @property
    def length(self) -> int:
        return self.charpoly.degree

    def sequence(self, n: int) -> list[int]:
        """First n output bits."""
        if n < 0:
            raise ValueError("count must be nonnegative")
        r = self.length
        out = list(self.state[:n])
        for k in range(r, n):
            v = 0
            for j in self._taps:
                v ^= out[k - r + j]
            out.append(v)
        return out

    def __repr__(self):
        return f"Lfsr({self.charpoly!r}, {list(self.state)!r})"


class ShrinkingGenerator:
    """Control register r1 gates data register r2: output bits of r2 where
    the simultaneous r1 bit is 1, discard the rest.  Register lengths must
    be coprime."""

    __slots__ = ("r1", "r2")

    def __init__(self, r1: Lfsr, r2: Lfsr):
        if gcd(r1.length, r2.length) != 1:
            raise ValueError(
                f"register lengths {r1.length} and {r2.length} must be coprime"
            )
        self.r1 = r1
        self.r2 = r2

    def shrunken_sequence(self, n: int) -> list[int]:
        """First n kept bits of the data stream."""
        if n < 0:
            raise ValueError("count must be nonnegative")
        if n == 0:
            return []
        if not any(self.r1.state):
            raise ValueError("control register produces no ones")
        # A control cycle visits at most 2**L1 states, so needing more
        # than (n + 1) << L1 raw bits means the ones have run out.
        cap = (n + 1) << self.r1.length
        m = 4 * n + 4 * self.r2.length
        while True:
            kept = [
                b
                for a, b in zip(self.r1.sequence(m), self.r2.sequence(m))
                if a
            ]
            if len(kept) >= n:
                return kept[:n]
            if m > cap:
                raise RuntimeError("control register ran out of ones")
            m *= 2

    def __repr__(self):
        return f"ShrinkingGenerator({self.r1!r}, {self.r2!r})"


def sequence_period(seq: Sequence[int]) -> int:
    """Smallest T >= 1 with seq[i + T] == seq[i] for all valid i.

    Window-relative: supply at least two full periods to claim a true
    period.  Computed via the prefix function in O(len).
    """
    n = len(seq)
    if n == 0:
        raise ValueError("period of an empty window is undefined")
    pi = [0] * n
    k = 0
    for i in range(1, n):
        while k and seq[i] != seq[k]:
            k = pi[k - 1]
        if seq[i] == seq[k]:
            k += 1
        pi[i] = k
    return n - pi[-1]


def decimate_by_stride(seq: Sequence[int], stride: int, offset: int = 0) -> list[int]:
    """Subsequence seq[offset], seq[offset + stride], ..."""
    if stride < 1:
        raise ValueError("stride must be >= 1")
    if not 0 <= offset < stride:
        raise ValueError("offset must satisfy 0 <= offset < stride")
    return list(seq[offset::stride])
