"""Simulate a shrinking generator and watch the decimation rule at work.

Two registers run in lockstep: wherever the control register emits 1,
the simultaneous data bit is kept; wherever it emits 0, the data bit is
thrown away.  The survivors form the keystream.
"""

from shrinkca import Gf2Poly, Lfsr, ShrinkingGenerator, format_bits, sequence_period

control = Lfsr(Gf2Poly.parse("1011"), [1, 0, 0])       # 1 + x^2 + x^3
data = Lfsr(Gf2Poly.parse("11001"), [1, 0, 0, 0])      # 1 + x + x^4

print("control stream:", format_bits(control.sequence(21)))
print("data stream:   ", format_bits(data.sequence(21)))

# Mark each data bit kept (^) or dropped (.) by the control bit above it.
marks = "".join("^" if a else "." for a in control.sequence(21))
print("kept?          ", marks)

gen = ShrinkingGenerator(control, data)
keystream = gen.shrunken_sequence(24)
print("keystream:     ", format_bits(keystream))

# Register periods are 2^3 - 1 = 7 and 2^4 - 1 = 15; the keystream period
# is (2^4 - 1) * 2^(3-1) = 60.
print("control period:", sequence_period(control.sequence(28)))
print("data period:   ", sequence_period(data.sequence(60)))
print("keystream period:", sequence_period(gen.shrunken_sequence(180)))

# Half of all control bits are 1, so the keystream is a balanced sample
# of the data stream.
window = gen.shrunken_sequence(60)
print("ones per keystream period:", sum(window), "of", len(window))
