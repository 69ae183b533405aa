"""Exact polynomial arithmetic over GF(2).

A polynomial is stored as a nonnegative int whose bit i holds the
coefficient of x^i, so addition is XOR and the canonical form (no
trailing zero coefficients) is automatic.  Two text forms are accepted:
ascending coefficient strings like ``"101001"`` (= 1 + x^2 + x^5) and
term sums like ``"1+x^2+x^5"``, where duplicate terms cancel.  The
canonical output form is the ascending bit string.
"""

from __future__ import annotations

import re

__all__ = [
    "Gf2Poly",
    "ZERO",
    "ONE",
    "X",
    "poly_gcd",
    "poly_powmod",
    "is_irreducible",
    "is_primitive",
]

_BITSTRING = re.compile(r"[01]+")
_TERM = re.compile(r"1|x(\^\d+)?")


def _mul_bits(a: int, b: int) -> int:
    """Carry-less product of two coefficient masks."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def _divmod_bits(a: int, m: int) -> tuple[int, int]:
    if m == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dm = m.bit_length() - 1
    q = 0
    while a.bit_length() - 1 >= dm and a:
        shift = a.bit_length() - 1 - dm
        q |= 1 << shift
        a ^= m << shift
    return q, a


class Gf2Poly:
    """Immutable polynomial over GF(2), coefficient of x^i at bit i."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if not isinstance(bits, int) or bits < 0:
            raise ValueError("coefficient mask must be a nonnegative int")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    @classmethod
    def from_coeffs(cls, coeffs) -> "Gf2Poly":
        """Build from an ascending coefficient iterable of 0/1 values."""
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError("coefficients must be 0 or 1")
            bits |= c << i
        return cls(bits)

    @classmethod
    def parse(cls, text: str) -> "Gf2Poly":
        """Parse an ascending bit string or a ``1+x^2+x^5`` term sum."""
        s = text.strip()
        if _BITSTRING.fullmatch(s):
            return cls(int(s[::-1], 2))
        s = "".join(s.split())
        if not s:
            raise ValueError("empty polynomial text")
        bits = 0
        for term in s.split("+"):
            if not _TERM.fullmatch(term):
                raise ValueError(f"bad polynomial term {term!r}")
            if term == "1":
                bits ^= 1
            elif term == "x":
                bits ^= 2
            else:
                bits ^= 1 << int(term[2:])
        return cls(bits)

    @property
    def degree(self) -> int:
        """Index of the highest set coefficient; -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    def coeff(self, i: int) -> int:
        return (self.bits >> i) & 1

    def to_bitstring(self) -> str:
        """Canonical ascending-coefficient text form."""
        if self.bits == 0:
            return "0"
        return format(self.bits, "b")[::-1]

    def to_terms(self) -> str:
        """Human form, ascending: ``1+x^2+x^5``."""
        if self.bits == 0:
            return "0"
        parts = []
        for i in range(self.bits.bit_length()):
            if (self.bits >> i) & 1:
                parts.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(parts)

    def __add__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_mul_bits(self.bits, other.bits))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        acc, base = 1, self.bits
        while k:
            if k & 1:
                acc = _mul_bits(acc, base)
            base = _mul_bits(base, base)
            k >>= 1
        return Gf2Poly(acc)

    def __divmod__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        q, r = _divmod_bits(self.bits, other.bits)
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_divmod_bits(self.bits, other.bits)[0])

    def __mod__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_divmod_bits(self.bits, other.bits)[1])

    def __eq__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self):
        return hash((Gf2Poly, self.bits))

    def __bool__(self):
        return bool(self.bits)

    def __str__(self):
        return self.to_bitstring()

    def __repr__(self):
        return f"Gf2Poly({self.to_bitstring()!r})"


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)


def poly_gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Greatest common divisor over GF(2)."""
    x, y = a.bits, b.bits
    while y:
        x, y = y, _divmod_bits(x, y)[1]
    return Gf2Poly(x)


def poly_powmod(base: Gf2Poly, k: int, m: Gf2Poly) -> Gf2Poly:
    """base**k reduced modulo m, by square-and-multiply."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if m.bits == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    acc = _divmod_bits(1, m.bits)[1]
    b = _divmod_bits(base.bits, m.bits)[1]
    while k:
        if k & 1:
            acc = _divmod_bits(_mul_bits(acc, b), m.bits)[1]
        b = _divmod_bits(_mul_bits(b, b), m.bits)[1]
        k >>= 1
    return Gf2Poly(acc)


def is_irreducible(p: Gf2Poly) -> bool:
    """True iff p has no nontrivial factor over GF(2).

    Uses the gcd(x^(2^i) - x, p) filter: a reducible polynomial of
    degree r has an irreducible factor of degree at most r // 2, and
    every such factor divides x^(2^i) - x for its own degree i.
    """
    r = p.degree
    if r < 1:
        raise ValueError("irreducibility is undefined for constant polynomials")
    b = 2  # x
    for _ in range(r // 2):
        b = _divmod_bits(_mul_bits(b, b), p.bits)[1]
        g = poly_gcd(Gf2Poly(b ^ 2), p)
        if g.degree != 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_primitive(p: Gf2Poly) -> bool:
    """True iff p is irreducible and x has full order 2^degree - 1 mod p."""
    r = p.degree
    if r < 1:
        raise ValueError("primitivity is undefined for constant polynomials")
    if not is_irreducible(p):
        return False
    order = (1 << r) - 1
    if poly_powmod(X, order, p) != ONE:
        return False
    return all(poly_powmod(X, order // q, p) != ONE for q in _prime_factors(order))
