"""Construction of linear automata that mimic a shrinking generator.

Pipeline: the control length L1 and data polynomial P2 determine the
minimal polynomial P of alpha^(2^L1 - 1); a pair of 90/150 automata with
characteristic polynomial P is synthesized by exhaustive search; the
doubling construction (flip the last rule, append the mirror image) is
applied L1 - 1 times, squaring the characteristic polynomial each time.
The control polynomial itself is never consulted, so all generators
sharing (L1, P2) map to the same pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import RuleVector, _char_poly_bits
from .gf2field import minimal_polynomial_of_power
from .gf2poly import Gf2Poly, is_irreducible, is_primitive

__all__ = [
    "LinearizationResult",
    "concat_double",
    "synthesize_ca_pair",
    "linearize_shrinking_generator",
]


@dataclass(frozen=True)
class LinearizationResult:
    """Pair of rule vectors plus the parameters that produced them.

    Both vectors have characteristic polynomial base_poly**multiplicity
    and length = degree(base_poly) * multiplicity.  `degenerate` marks
    the collapsed degree-1 case where only one vector exists.
    """

    rules_a: RuleVector
    rules_b: RuleVector
    base_poly: Gf2Poly
    multiplicity: int
    length: int
    coset_n: int
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "rules_a": str(self.rules_a),
            "rules_b": str(self.rules_b),
            "base_poly": self.base_poly.to_bitstring(),
            "p": self.multiplicity,
            "L": self.length,
            "N": self.coset_n,
        }


def concat_double(rules: RuleVector) -> RuleVector:
    """Flip the last rule, then append the mirror image; length doubles.

    The characteristic polynomial of the result is the square of the
    input's.
    """
    head = rules.delta[:-1] + (rules.delta[-1] ^ 1,)
    return RuleVector(head + head[::-1])


def synthesize_ca_pair(p: Gf2Poly) -> tuple[RuleVector, ...]:
    """All rule vectors of length degree(p) with characteristic polynomial p.

    p must be irreducible.  Exhaustive search over the 2^degree
    candidates (fine up to degree ~20); normally two mutually reversed
    vectors come back, in lexicographic order, collapsing to one for
    degree 1.
    """
    if not is_irreducible(p):
        raise ValueError(f"{p} is reducible; no irreducible-power automaton exists")
    r = p.degree
    target = p.bits
    found = []
    for m in range(1 << r):
        delta = [(m >> i) & 1 for i in range(r)]
        if _char_poly_bits(delta) == target:
            found.append(RuleVector(delta))
    found.sort()
    if not 1 <= len(found) <= 2:
        raise RuntimeError(
            f"expected one or two automata for {p}, found {len(found)}: "
            + ", ".join(str(v) for v in found)
        )
    return tuple(found)


def linearize_shrinking_generator(l1: int, p2: Gf2Poly) -> LinearizationResult:
    """Build the automaton pair for a shrinking generator with control
    length l1 and primitive data polynomial p2.

    Coprimality of the register lengths is a property of the generator,
    not of this pipeline; with coprime lengths the base polynomial has
    full degree and the result length is degree(p2) * 2^(l1 - 1).
    """
    if l1 < 1:
        raise ValueError("control length must be >= 1")
    if not is_primitive(p2):
        raise ValueError(f"data polynomial {p2} must be primitive")
    n = (1 << l1) - 1
    base = minimal_polynomial_of_power(p2, n)
    pair = synthesize_ca_pair(base)
    degenerate = len(pair) == 1
    rules_a, rules_b = (pair[0], pair[0]) if degenerate else pair
    for _ in range(l1 - 1):
        rules_a = concat_double(rules_a)
        rules_b = concat_double(rules_b)
    return LinearizationResult(
        rules_a=rules_a,
        rules_b=rules_b,
        base_poly=base,
        multiplicity=1 << (l1 - 1),
        length=base.degree << (l1 - 1),
        coset_n=n,
        degenerate=degenerate,
    )
