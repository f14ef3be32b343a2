"""Symbolic parameter algebra: affine forms, phases, polynomials, terms."""
from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from vpf import (
    AffineForm,
    Cyclotomic,
    DimensionMismatch,
    Guard,
    ParamPoly,
    PhaseForm,
    Term,
    binom_poly,
    cyc_from_phase,
)
from vpf.params import EQ_ZERO, GE_ZERO


def F(p, q=1):
    return Fraction(p, q)


class TestAffineForm:
    def test_eval_examples(self):
        assert AffineForm((1, -1), -1).eval((3, 1)) == 1
        assert AffineForm.zero(2).eval((9, -7)) == 0
        assert AffineForm((3, -1), 0).eval((2, 4)) == 2

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            AffineForm((1, 1), 0).eval((1,))

    def test_algebra(self):
        f = AffineForm((1, 0), 2)
        g = AffineForm((0, 3), -1)
        assert (f + g).eval((2, 2)) == f.eval((2, 2)) + g.eval((2, 2))
        assert (f - g).eval((2, 2)) == f.eval((2, 2)) - g.eval((2, 2))
        assert (3 * f).eval((2, 2)) == 3 * f.eval((2, 2))
        assert (f + 5).eval((2, 2)) == f.eval((2, 2)) + 5
        assert (-f).eval((2, 2)) == -f.eval((2, 2))

    def test_unit(self):
        assert AffineForm.unit(3, 1).eval((4, 5, 6)) == 5


class TestPhaseForm:
    def test_coeffs_reduced(self):
        p = PhaseForm((F(1, 4), F(0)))
        assert p.eval((5, 100)) == F(1, 4)

    def test_mod_one_reduction_agrees(self):
        # e(phase(b)) before/after coefficient reduction agree on a box.
        raw = F(7, 4)
        red = raw % 1
        for b in range(-5, 6):
            assert (raw * b) % 1 == (red * b) % 1

    def test_add_and_shift(self):
        p = PhaseForm((F(1, 3),))
        q = p + PhaseForm((F(2, 3),))
        assert q.is_zero()
        s = p.shifted(F(1, 2), AffineForm((1,), 7))
        assert s.coeffs == (F(5, 6),)


class TestParamPoly:
    def test_from_affine_roundtrip(self):
        f = AffineForm((2, -1), 3)
        p = ParamPoly.from_affine(f)
        for b in ((0, 0), (1, 5), (-2, 3)):
            assert p.eval(b) == f.eval(b)

    def test_mul_add(self):
        f = ParamPoly.from_affine(AffineForm((1,), 1))
        g = ParamPoly.from_affine(AffineForm((1,), -1))
        h = f * g  # b^2 - 1
        for b in range(-3, 4):
            assert h.eval((b,)) == b * b - 1
        assert (f + g).eval((5,)) == 10

    def test_zero_coeffs_dropped(self):
        p = ParamPoly(1, {(1,): Cyclotomic.zero(), (0,): 2})
        assert list(p.items()) == [((0,), Cyclotomic.from_rational(2))]

    def test_constant(self):
        p = ParamPoly.constant(2, F(1, 8))
        assert p.is_constant()
        assert p.constant_value() == F(1, 8)

    def test_key_is_structural(self):
        p = ParamPoly(1, {(1,): 2, (0,): 1})
        q = ParamPoly(1, {(0,): 1, (1,): 2})
        assert p.key() == q.key() and p == q


class TestBinomPoly:
    def test_j_zero_is_one(self):
        beta = AffineForm((1,), 0)
        assert binom_poly(0, beta) == ParamPoly.one(1)

    def test_j_one_is_beta(self):
        beta = AffineForm((1,), 0)
        assert binom_poly(1, beta) == ParamPoly.from_affine(beta)

    def test_j_two(self):
        beta = AffineForm((1,), 0)
        p = binom_poly(2, beta)
        for b in range(-4, 8):
            assert p.eval((b,)) == F(b * (b + 1), 2)

    def test_matches_binomial_coefficients(self):
        beta = AffineForm((1,), 0)
        for j in range(5):
            p = binom_poly(j, beta)
            for b in range(1, 10):
                assert p.eval((b,)) == comb(b + j - 1, j)


class TestGuard:
    def test_satisfied(self):
        g = Guard(AffineForm((1,), 0), GE_ZERO)
        assert g.satisfied((0,)) and g.satisfied((3,))
        assert not g.satisfied((-1,))
        e = Guard(AffineForm((1,), 0), EQ_ZERO)
        assert e.satisfied((0,)) and not e.satisfied((1,))

    def test_trivial(self):
        assert Guard(AffineForm((0,), 5), GE_ZERO).is_trivial()
        assert Guard(AffineForm((0,), 0), EQ_ZERO).is_trivial()
        assert not Guard(AffineForm((1,), 5), GE_ZERO).is_trivial()
        assert not Guard(AffineForm((0,), -1), GE_ZERO).is_trivial()


class TestTerm:
    def test_guard_failure_yields_zero(self):
        t = Term.one(1).with_guard(Guard(AffineForm((1,), 0), GE_ZERO))
        assert t.value((-1,)).is_zero()

    def test_a2_leaf(self):
        # a+1 under a >= 0, evaluated at a=3.
        t = Term(Cyclotomic.one(), PhaseForm.zero(2),
                 ParamPoly.from_affine(AffineForm((1, 0), 1)),
                 (Guard(AffineForm((1, 0), 0), GE_ZERO),))
        assert t.value((3, 0)).to_rational() == 4

    def test_eighth_scalar_phase(self):
        # (1/8) e(b/4) at b=2 is -1/8.
        t = Term(Cyclotomic.from_rational(F(1, 8)),
                 PhaseForm((F(1, 4),)), ParamPoly.one(1))
        assert t.value((2,)).to_rational() == F(-1, 8)

    def test_linear_in_scalar(self):
        t = Term(Cyclotomic.from_rational(2), PhaseForm((F(1, 3),)),
                 ParamPoly.from_affine(AffineForm((1,), 1)))
        for b in range(4):
            assert t.scaled(3).value((b,)) == t.value((b,)) * 3

    def test_always_true_guard_changes_nothing(self):
        t = Term.one(2)
        t2 = t.with_guard(Guard(AffineForm((0, 0), 1), GE_ZERO))
        assert t2 == t
        for b in ((0, 0), (4, -2)):
            assert t2.value(b) == t.value(b)

    def test_shift_phase_constant_goes_to_scalar(self):
        t = Term.one(1).shift_phase(F(1, 4), AffineForm((1,), 2))
        assert t.scalar == cyc_from_phase(F(1, 2))
        assert t.phase.coeffs == (F(1, 4),)

    def test_duplicate_guard_dropped(self):
        g = Guard(AffineForm((1,), 0), GE_ZERO)
        t = Term.one(1).with_guard(g).with_guard(g)
        assert t.guards == (g,)
