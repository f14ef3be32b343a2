"""Exact cyclotomic arithmetic."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from vpf import (
    Cyclotomic,
    LevelMismatch,
    LevelOverflow,
    NotRational,
    cyc_from_phase,
    cyclotomic_polynomial,
    get_level_cap,
    set_level_cap,
)


def F(p, q=1):
    return Fraction(p, q)


class TestCyclotomicPolynomial:
    def test_small(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_product_over_divisors_is_xn_minus_1(self):
        # prod_{d | n} Phi_d = x^n - 1
        for n in (1, 2, 6, 12, 30):
            prod = [1]
            for d in range(1, n + 1):
                if n % d:
                    continue
                phi = cyclotomic_polynomial(d)
                out = [0] * (len(prod) + len(phi) - 1)
                for i, a in enumerate(prod):
                    for j, b in enumerate(phi):
                        out[i + j] += a * b
                prod = out
            expect = [-1] + [0] * (n - 1) + [1]
            assert prod == expect


class TestFromPhase:
    def test_phase_zero(self):
        x = cyc_from_phase(0)
        assert x.level == 1 and x == 1

    def test_phase_half(self):
        x = cyc_from_phase(F(1, 2))
        assert x.level == 2 and x == -1

    def test_phase_quarter(self):
        x = cyc_from_phase(F(1, 4))
        assert x.level == 4
        assert x.coeffs == (F(0), F(1))

    def test_phase_mod_one(self):
        assert cyc_from_phase(F(5, 4)) == cyc_from_phase(F(1, 4))
        assert cyc_from_phase(F(-1, 4)) == cyc_from_phase(F(3, 4))


class TestArithmetic:
    def test_cube_roots_sum(self):
        assert cyc_from_phase(F(1, 3)) + cyc_from_phase(F(2, 3)) == -1

    def test_i_squared(self):
        i = cyc_from_phase(F(1, 4))
        assert i * i == -1

    def test_one_plus_i_times_one_minus_i(self):
        i = cyc_from_phase(F(1, 4))
        assert (1 + i) * (1 - i) == 2

    def test_all_roots_sum_to_zero(self):
        for n in (2, 3, 5, 6, 8):
            total = Cyclotomic.zero()
            for k in range(n):
                total = total + cyc_from_phase(F(k, n))
            assert total.is_zero()

    def test_pow(self):
        z = cyc_from_phase(F(1, 5))
        assert z**5 == 1
        assert z**-1 == cyc_from_phase(F(4, 5))
        assert z**0 == 1


class TestInverse:
    def test_identity(self):
        assert Cyclotomic.one().inv() == 1

    def test_root_inverse_is_conjugate_power(self):
        assert cyc_from_phase(F(1, 3)).inv() == cyc_from_phase(F(2, 3))

    def test_one_plus_i(self):
        i = cyc_from_phase(F(1, 4))
        inv = (1 + i).inv()
        assert inv == (1 - i) * F(1, 2)
        assert (1 + i) * inv == 1

    def test_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            Cyclotomic.zero().inv()

    def test_random_inverse_roundtrip(self):
        rng = random.Random(17)
        for _ in range(60):
            n = rng.choice([1, 2, 3, 4, 5, 6, 8, 12])
            x = Cyclotomic.zero()
            while x.is_zero():
                x = sum(
                    (cyc_from_phase(F(rng.randrange(n), n)) * rng.randint(-3, 3)
                     for _ in range(3)),
                    Cyclotomic.zero())
            assert x * x.inv() == 1

    def test_truediv(self):
        i = cyc_from_phase(F(1, 4))
        assert (2 / (1 + i)) == (1 - i)
        assert ((1 + i) / (1 + i)) == 1


class TestRaiseLevel:
    def test_minus_one_to_level_six(self):
        x = cyc_from_phase(F(1, 2)).raise_level(6)
        assert x.level == 6 and x == -1
        assert abs(x.approx() - (-1)) < 1e-12

    def test_same_level_identity(self):
        x = cyc_from_phase(F(1, 3))
        assert x.raise_level(3) is x

    def test_rational_embeds_as_constant(self):
        x = Cyclotomic.one().raise_level(12)
        assert x.level == 12 and x == 1

    def test_non_divisor_rejected(self):
        with pytest.raises(LevelMismatch):
            cyc_from_phase(F(1, 4)).raise_level(6)

    def test_preserves_equality_and_approx(self):
        x = cyc_from_phase(F(1, 3))
        y = x.raise_level(12)
        assert x == y
        assert abs(x.approx() - y.approx()) < 1e-12


class TestToRational:
    def test_one_plus_minus_one(self):
        assert (1 + cyc_from_phase(F(1, 2))).to_rational() == 0

    def test_primitive_root_is_irrational(self):
        with pytest.raises(NotRational):
            cyc_from_phase(F(1, 3)).to_rational()

    def test_cube_roots_and_one(self):
        x = cyc_from_phase(F(1, 3)) + cyc_from_phase(F(2, 3)) + 1
        assert x.to_rational() == 0


class TestApprox:
    def test_values(self):
        assert abs(Cyclotomic.one().approx() - 1) < 1e-12
        assert abs(cyc_from_phase(F(1, 4)).approx() - 1j) < 1e-12
        x = cyc_from_phase(F(1, 3)) + cyc_from_phase(F(2, 3))
        assert abs(x.approx() - (-1)) < 1e-12


class TestFieldAxioms:
    def _sample(self, rng):
        n = rng.choice([1, 2, 3, 4, 6, 12])
        return sum(
            (cyc_from_phase(F(rng.randrange(n), n)) * F(rng.randint(-2, 2))
             for _ in range(2)),
            Cyclotomic.zero())

    def test_random_axioms(self):
        rng = random.Random(5)
        for _ in range(40):
            x, y, z = (self._sample(rng) for _ in range(3))
            assert x + y == y + x
            assert x * y == y * x
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z

    def test_construction_order_canonical(self):
        rng = random.Random(9)
        for _ in range(30):
            x, y = self._sample(rng), self._sample(rng)
            a = x + y
            b = y + x
            assert a.level == b.level and a.coeffs == b.coeffs


class TestLevelCap:
    def test_cap_enforced(self):
        old = get_level_cap()
        try:
            set_level_cap(10)
            with pytest.raises(LevelOverflow):
                cyc_from_phase(F(1, 11))
            with pytest.raises(LevelOverflow):
                cyc_from_phase(F(1, 3)) + cyc_from_phase(F(1, 7))
        finally:
            set_level_cap(old)

    def test_bad_cap(self):
        with pytest.raises(ValueError):
            set_level_cap(0)
