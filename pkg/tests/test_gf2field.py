import random
from math import gcd

import pytest

import conftest as cf
from shrinkca import (
    FieldContext,
    Gf2Poly,
    Lfsr,
    berlekamp_massey,
    check_annihilation,
    cyclotomic_coset,
    decimate_by_stride,
    evaluate_solution,
    is_irreducible,
    minimal_polynomial_of_power,
    poly_powmod,
    X,
    ONE,
)


class TestCyclotomicCoset:
    def test_golden_cosets(self):
        assert cyclotomic_coset(7, 31) == [7, 14, 28, 25, 19]
        assert cyclotomic_coset(1, 15) == [1, 2, 4, 8]
        assert cyclotomic_coset(7, 15) == [7, 14, 13, 11]

    def test_zero_orbit(self):
        assert cyclotomic_coset(0, 15) == [0]

    def test_size_divides_degree(self):
        for r in range(1, 13):
            order = (1 << r) - 1
            for n in range(order):
                assert r % len(cyclotomic_coset(n, order)) == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            cyclotomic_coset(3, 14)  # not 2^r - 1
        with pytest.raises(ValueError):
            cyclotomic_coset(15, 15)


class TestFieldElements:
    def test_alpha_has_full_order(self):
        ctx = FieldContext(Gf2Poly.parse("11001"))
        a = ctx.alpha()
        assert a ** ctx.order == ctx.one()
        seen = {(a**k).bits for k in range(ctx.order)}
        assert len(seen) == ctx.order

    def test_contexts_do_not_mix(self):
        ctx1 = FieldContext(Gf2Poly.parse("11001"))
        ctx2 = FieldContext(Gf2Poly.parse("101001"))
        with pytest.raises(ValueError, match="different field"):
            ctx1.alpha() + ctx2.alpha()

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ValueError, match="reducible"):
            FieldContext(Gf2Poly.parse("101"))  # (1+x)^2

    def test_element_reduction(self):
        ctx = FieldContext(Gf2Poly.parse("11001"))
        assert ctx.element(Gf2Poly.parse("x^7")) == ctx.element(0b1011)  # x^3+x+1

    def test_trace_is_binary_and_additive(self):
        ctx = FieldContext(Gf2Poly.parse("101001"))
        rng = random.Random(3)
        for _ in range(50):
            u = ctx.element(rng.randrange(1 << ctx.r))
            v = ctx.element(rng.randrange(1 << ctx.r))
            assert u.trace() in (0, 1)
            assert (u + v).trace() == u.trace() ^ v.trace()


class TestMinimalPolynomial:
    def test_golden_degree5(self):
        p2 = Gf2Poly.parse(cf.R2B_POLY)
        assert minimal_polynomial_of_power(p2, 7) == Gf2Poly.parse(cf.BASE5)

    def test_power_one_returns_modulus(self):
        p2 = Gf2Poly.parse(cf.R2B_POLY)
        assert minimal_polynomial_of_power(p2, 1) == p2

    def test_degree4_stride7(self):
        got = minimal_polynomial_of_power(Gf2Poly.parse(cf.R2A_POLY), 7)
        assert got == Gf2Poly.parse("10011")  # x^4 + x^3 + 1
        # Cross-check: the stride-7 decimation of the degree-4 register
        # stream must be annihilated by exactly this polynomial.
        reg = Lfsr(Gf2Poly.parse(cf.R2A_POLY), [1, 0, 0, 0])
        decimated = decimate_by_stride(reg.sequence(7 * 16), 7)
        assert berlekamp_massey(decimated).connection_poly == got

    def test_requires_primitive(self):
        with pytest.raises(ValueError, match="primitive"):
            minimal_polynomial_of_power(Gf2Poly.parse("11111"), 3)

    def test_output_is_irreducible_with_coset_degree(self):
        for r in (4, 5, 6):
            p2 = cf.first_primitive(r)
            order = (1 << r) - 1
            for n in range(1, order):
                q = minimal_polynomial_of_power(p2, n)
                assert is_irreducible(q)
                assert q.degree == len(cyclotomic_coset(n, order))
                # Roots live in GF(2^r): x^(2^r - 1) = 1 mod q.
                assert poly_powmod(X, order, q) == ONE

    def test_matches_stride_decimation_sweep(self):
        # For coprime register lengths, the data stream decimated at the
        # control period is a register stream whose polynomial is the
        # minimal polynomial of that power.
        for l1 in range(1, 5):
            for l2 in range(2, 9):
                if gcd(l1, l2) != 1:
                    continue
                stride = (1 << l1) - 1
                p2 = cf.first_primitive(l2)
                reg = Lfsr(p2, [1] + [0] * (l2 - 1))
                window = decimate_by_stride(reg.sequence(stride * 4 * l2), stride)
                got = berlekamp_massey(window)
                assert got.connection_poly == minimal_polynomial_of_power(p2, stride)
                assert got.linear_complexity == l2


class TestRecurrenceSolutions:
    def test_trace_solution_annihilated(self):
        base = Gf2Poly.parse(cf.BASE5)
        ctx = FieldContext(base)
        seq = [evaluate_solution(ctx, 1, [ctx.one()], n) for n in range(80)]
        assert check_annihilation(base, 1, seq)
        assert any(seq)

    def test_zero_coefficients_zero_sequence(self):
        ctx = FieldContext(Gf2Poly.parse("11001"))
        zeros = [ctx.zero()] * 3
        assert [evaluate_solution(ctx, 3, zeros, n) for n in range(30)] == [0] * 30

    def test_multiplicity_two_needs_squared_operator(self):
        base = Gf2Poly.parse("111")  # x^2 + x + 1
        ctx = FieldContext(base)
        coeffs = [ctx.zero(), ctx.alpha()]
        seq = [evaluate_solution(ctx, 2, coeffs, n) for n in range(60)]
        assert check_annihilation(base, 2, seq)
        assert not check_annihilation(base, 1, seq)

    def test_solution_map_is_additive(self):
        base = Gf2Poly.parse("1011")
        ctx = FieldContext(base)
        rng = random.Random(11)
        for _ in range(20):
            p = rng.randrange(1, 5)
            a = [ctx.element(rng.randrange(1 << ctx.r)) for _ in range(p)]
            b = [ctx.element(rng.randrange(1 << ctx.r)) for _ in range(p)]
            both = [x + y for x, y in zip(a, b)]
            for n in range(40):
                assert evaluate_solution(ctx, p, both, n) == evaluate_solution(
                    ctx, p, a, n
                ) ^ evaluate_solution(ctx, p, b, n)

    def test_every_solution_annihilated_by_power(self):
        base = Gf2Poly.parse("1011")
        ctx = FieldContext(base)
        rng = random.Random(12)
        for _ in range(15):
            p = rng.randrange(1, 4)
            a = [ctx.element(rng.randrange(1 << ctx.r)) for _ in range(p)]
            seq = [evaluate_solution(ctx, p, a, n) for n in range(3 * base.degree * p + 10)]
            assert check_annihilation(base, p, seq)

    def test_wrong_coefficient_count_raises(self):
        ctx = FieldContext(Gf2Poly.parse("111"))
        with pytest.raises(ValueError, match="coefficients"):
            evaluate_solution(ctx, 2, [ctx.one()], 0)

    def test_foreign_coefficient_raises(self):
        ctx = FieldContext(Gf2Poly.parse("111"))
        other = FieldContext(Gf2Poly.parse("1011"))
        with pytest.raises(ValueError, match="different field"):
            evaluate_solution(ctx, 1, [other.one()], 0)
