"""Shared golden vectors and independent oracles for the test suite.

The oracles deliberately avoid the library's fast paths: list-based long
division, trial-division factor search, exact integer characteristic
polynomials, linear-system recurrence search, and a literal
generate-then-filter keystream.  Tests compare the production code
against these slower routes.
"""

from __future__ import annotations

import random

import sympy

from shrinkca import (
    Gf2Poly,
    Lfsr,
    RuleVector,
    ShrinkingGenerator,
    is_primitive,
    transition_matrix,
)

# --- golden vectors (hand-checked reference data) -------------------------

R1_POLY = "1011"  # 1 + x^2 + x^3
R1_SEED = "100"
R1_STREAM = "1001110"

R2A_POLY = "11001"  # 1 + x + x^4
R2A_SEED = "1000"
R2A_STREAM = "100010011010111"

KEYSTREAM_A_13 = "1010110110010"  # first 13 kept bits of generator A

R2B_POLY = "111011"  # 1 + x + x^2 + x^4 + x^5
R2B_SEED = "10000"

BASE5 = "101001"  # 1 + x^2 + x^5
PAIR5 = ("01111", "11110")
PAIR5_DOUBLED = ("0111001110", "1111111111")
PAIR20 = ("01110011111111001110", "11111111100111111111")

ORBIT_RULES = "0111001110"
ORBIT_ROWS = [
    "0001110110",
    "0010010001",
    "0111101010",
    "1011101011",
    "0001101001",
    "0010101110",
]
ORBIT_PERIOD = 62


def make_lfsr(poly: str, seed: str) -> Lfsr:
    return Lfsr(Gf2Poly.parse(poly), [int(c) for c in seed])


def gen_a() -> ShrinkingGenerator:
    """Reference generator A: control degree 3, data degree 4, period 60."""
    return ShrinkingGenerator(make_lfsr(R1_POLY, R1_SEED), make_lfsr(R2A_POLY, R2A_SEED))


def gen_b() -> ShrinkingGenerator:
    """Reference generator B: control degree 3, data degree 5, period 124."""
    return ShrinkingGenerator(make_lfsr(R1_POLY, R1_SEED), make_lfsr(R2B_POLY, R2B_SEED))


# --- independent oracles ---------------------------------------------------


def long_division_lists(a: Gf2Poly, m: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Schoolbook polynomial division on coefficient lists."""
    if not m:
        raise ZeroDivisionError
    ac = [(a.bits >> i) & 1 for i in range(max(a.degree + 1, 1))]
    dm = m.degree
    q = [0] * max(len(ac) - dm, 1)
    for k in range(len(ac) - 1, dm - 1, -1):
        if ac[k]:
            q[k - dm] = 1
            for i in range(dm + 1):
                ac[k - dm + i] ^= (m.bits >> i) & 1
    return Gf2Poly.from_coeffs(q), Gf2Poly.from_coeffs(ac)


def trial_division_irreducible(p: Gf2Poly) -> bool:
    """Factor search over every candidate divisor of degree <= deg/2."""
    r = p.degree
    assert r >= 1
    for bits in range(2, 1 << (r // 2 + 1)):
        d = Gf2Poly(bits)
        if d.degree >= 1 and not (p % d):
            return False
    return True


def brute_min_recurrence(window: list[int]) -> tuple[int, Gf2Poly | None]:
    """Smallest recurrence length generating the window, by linear solving.

    Returns (lc, charpoly); the polynomial is None when the window is too
    short to pin it down uniquely (shorter than twice the complexity).
    """
    n = len(window)
    for lc in range(n + 1):
        if lc == 0:
            if all(b == 0 for b in window):
                return 0, Gf2Poly(1)
            continue
        rows = []
        for k in range(lc, n):
            mask = 0
            for i in range(1, lc + 1):
                mask |= window[k - i] << (i - 1)
            rows.append(mask | (window[k] << lc))
        basis: dict[int, int] = {}
        ok = True
        free = lc
        for row in rows:
            cur = row
            while True:
                low = cur & ((1 << lc) - 1)
                if low == 0:
                    ok = cur >> lc == 0
                    break
                col = (low & -low).bit_length() - 1
                if col in basis:
                    cur ^= basis[col]
                else:
                    basis[col] = cur
                    free -= 1
                    break
            if not ok:
                break
        if not ok:
            continue
        taps = 0
        for col in sorted(basis, reverse=True):
            row = basis[col]
            val = (row >> lc) ^ ((row & ((1 << lc) - 1) & taps).bit_count() & 1)
            if val & 1:
                taps |= 1 << col
        if n < 2 * lc or free:
            return lc, None
        # charpoly x^lc + sum c_i x^(lc - i), tap bit i-1 = c_i
        poly = 1 << lc
        for i in range(1, lc + 1):
            if (taps >> (i - 1)) & 1:
                poly |= 1 << (lc - i)
        return lc, Gf2Poly(poly)
    raise AssertionError("unreachable: lc = n always consistent")


def exact_char_poly_mod2(rules: RuleVector) -> Gf2Poly:
    """det(xI - M) over the integers (sympy), reduced mod 2."""
    m = sympy.Matrix(transition_matrix(rules).tolist())
    coeffs = m.charpoly().all_coeffs()  # descending, exact ints
    return Gf2Poly.from_coeffs([int(c) % 2 for c in reversed(coeffs)])


def brute_shrunken(gen: ShrinkingGenerator, n: int) -> list[int]:
    """Generate a big block of register pairs and filter literally."""
    m = 4 * n + 64
    a = gen.r1.sequence(m)
    b = gen.r2.sequence(m)
    kept = [y for x, y in zip(a, b) if x == 1]
    assert len(kept) >= n
    return kept[:n]


def naive_period(seq) -> int:
    """Direct definition scan; quadratic, small windows only."""
    n = len(seq)
    for t in range(1, n + 1):
        if all(seq[i] == seq[i + t] for i in range(n - t)):
            return t
    raise AssertionError


def first_primitive(degree: int) -> Gf2Poly:
    """Smallest-mask primitive polynomial of the given degree."""
    for bits in range(1 << degree, 1 << (degree + 1)):
        p = Gf2Poly(bits)
        if is_primitive(p):
            return p
    raise AssertionError(f"no primitive polynomial of degree {degree}")


def random_nonzero_seed(rng: random.Random, length: int) -> list[int]:
    value = rng.randrange(1, 1 << length)
    return [(value >> i) & 1 for i in range(length)]
