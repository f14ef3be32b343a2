"""Symbolic objects formal in the parameter vector b.

Affine forms (integer exponents and guards), phase forms e(rho . b),
parameter polynomials with cyclotomic coefficients, guards, and closed
Terms.  Everything is immutable and freely shareable between threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cyclotomic import Cyclotomic, cyc_from_phase
from .errors import DimensionMismatch


@dataclass(frozen=True)
class AffineForm:
    """Integer-coefficient affine function of the parameter vector."""

    coeffs: tuple[int, ...]
    const: int = 0

    @classmethod
    def zero(cls, m: int) -> "AffineForm":
        return cls((0,) * m, 0)

    @classmethod
    def constant(cls, m: int, c: int) -> "AffineForm":
        return cls((0,) * m, c)

    @classmethod
    def unit(cls, m: int, i: int) -> "AffineForm":
        return cls(tuple(1 if j == i else 0 for j in range(m)), 0)

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def eval(self, b) -> int:
        if len(b) != len(self.coeffs):
            raise DimensionMismatch(
                f"expected {len(self.coeffs)} parameters, got {len(b)}")
        return sum(c * x for c, x in zip(self.coeffs, b)) + self.const

    def is_zero(self) -> bool:
        return self.const == 0 and not any(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            return AffineForm(self.coeffs, self.const + other)
        if isinstance(other, AffineForm):
            return AffineForm(
                tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                self.const + other.const)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return AffineForm(tuple(-c for c in self.coeffs), -self.const)

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        if isinstance(other, AffineForm):
            return self + (-other)
        return NotImplemented

    def __mul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return AffineForm(tuple(n * c for c in self.coeffs), n * self.const)

    __rmul__ = __mul__


@dataclass(frozen=True)
class PhaseForm:
    """Phase e(coeffs . b) with rational coefficients reduced mod 1.

    The constant part of a phase is always folded into a Term's scalar, so
    only the b-dependent coefficients live here.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        assert all(0 <= c < 1 for c in self.coeffs)

    @classmethod
    def zero(cls, m: int) -> "PhaseForm":
        return cls((Fraction(0),) * m)

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def eval(self, b) -> Fraction:
        if len(b) != len(self.coeffs):
            raise DimensionMismatch(
                f"expected {len(self.coeffs)} parameters, got {len(b)}")
        return sum((c * x for c, x in zip(self.coeffs, b)), Fraction(0)) % 1

    def __add__(self, other: "PhaseForm") -> "PhaseForm":
        return PhaseForm(tuple((a + b) % 1 for a, b in zip(self.coeffs, other.coeffs)))

    def shifted(self, q: Fraction, f: AffineForm) -> "PhaseForm":
        """Add q times the linear part of f (the constant goes to the scalar)."""
        return PhaseForm(tuple((a + q * c) % 1 for a, c in zip(self.coeffs, f.coeffs)))


class ParamPoly:
    """Polynomial in the parameters with Cyclotomic coefficients.

    Stored as a map from exponent vectors to nonzero coefficients.
    """

    __slots__ = ("arity", "_monos")

    def __init__(self, arity: int, monos=None):
        self.arity = arity
        clean = {}
        if monos:
            for exps, coeff in monos.items():
                if not isinstance(coeff, Cyclotomic):
                    coeff = Cyclotomic.from_rational(coeff)
                if not coeff.is_zero():
                    clean[tuple(exps)] = coeff
        self._monos = clean

    @classmethod
    def constant(cls, arity: int, coeff) -> "ParamPoly":
        return cls(arity, {(0,) * arity: coeff})

    @classmethod
    def one(cls, arity: int) -> "ParamPoly":
        return cls.constant(arity, 1)

    @classmethod
    def zero(cls, arity: int) -> "ParamPoly":
        return cls(arity)

    @classmethod
    def from_affine(cls, f: AffineForm) -> "ParamPoly":
        m = f.arity
        monos = {}
        for i, c in enumerate(f.coeffs):
            if c:
                monos[tuple(1 if j == i else 0 for j in range(m))] = c
        if f.const:
            monos[(0,) * m] = f.const
        return cls(m, monos)

    def items(self):
        return self._monos.items()

    def is_zero(self) -> bool:
        return not self._monos

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._monos)

    def constant_value(self) -> Cyclotomic:
        assert self.is_constant()
        return self._monos.get((0,) * self.arity, Cyclotomic.zero())

    def eval(self, b) -> Cyclotomic:
        if len(b) != self.arity:
            raise DimensionMismatch(
                f"expected {self.arity} parameters, got {len(b)}")
        total = Cyclotomic.zero()
        for exps, coeff in self._monos.items():
            v = 1
            for x, e in zip(b, exps):
                v *= x**e
            total = total + coeff * v
        return total

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        monos = dict(self._monos)
        for e, c in other._monos.items():
            monos[e] = monos[e] + c if e in monos else c
        return ParamPoly(self.arity, monos)

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        monos = {}
        for e1, c1 in self._monos.items():
            for e2, c2 in other._monos.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                monos[e] = monos[e] + c if e in monos else c
        return ParamPoly(self.arity, monos)

    def scale(self, c) -> "ParamPoly":
        return ParamPoly(self.arity, {e: v * c for e, v in self._monos.items()})

    def __eq__(self, other):
        if not isinstance(other, ParamPoly):
            return NotImplemented
        if self.arity != other.arity or set(self._monos) != set(other._monos):
            return False
        return all(c == other._monos[e] for e, c in self._monos.items())

    __hash__ = None

    def key(self):
        """Deterministic, hashable structural key (used for term merging)."""
        return tuple(sorted(
            (e, c.level, c.coeffs) for e, c in self._monos.items()))

    def __str__(self):
        if not self._monos:
            return "0"
        parts = []
        for exps, coeff in sorted(self._monos.items(), reverse=True):
            mono = "*".join(
                (f"x{i}" if e == 1 else f"x{i}^{e}")
                for i, e in enumerate(exps) if e)
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            else:
                parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ParamPoly({self.arity}, '{self}')"


def binom_poly(j: int, beta: AffineForm) -> ParamPoly:
    """binom(j + beta - 1, j) = beta(beta+1)...(beta+j-1)/j! as a ParamPoly."""
    m = beta.arity
    out = ParamPoly.one(m)
    for i in range(j):
        out = out * ParamPoly.from_affine(beta + i)
    return out.scale(Fraction(1, factorial(j)))


GE_ZERO = "ge"
EQ_ZERO = "eq"


@dataclass(frozen=True)
class Guard:
    """Affine branch condition on b: form >= 0 or form = 0."""

    form: AffineForm
    sense: str = GE_ZERO

    def __post_init__(self):
        assert self.sense in (GE_ZERO, EQ_ZERO)

    def satisfied(self, b) -> bool:
        v = self.form.eval(b)
        return v == 0 if self.sense == EQ_ZERO else v >= 0

    def is_trivial(self) -> bool:
        # Constant-only guards that always hold.
        if any(self.form.coeffs):
            return False
        c = self.form.const
        return c == 0 if self.sense == EQ_ZERO else c >= 0


@dataclass(frozen=True)
class Term:
    """Closed summand scalar * e(phase(b)) * poly(b) under affine guards."""

    scalar: Cyclotomic
    phase: PhaseForm
    poly: ParamPoly
    guards: tuple[Guard, ...] = ()

    @classmethod
    def one(cls, m: int) -> "Term":
        return cls(Cyclotomic.one(), PhaseForm.zero(m), ParamPoly.one(m))

    @property
    def arity(self) -> int:
        return self.phase.arity

    def is_zero(self) -> bool:
        return self.scalar.is_zero() or self.poly.is_zero()

    def value(self, b) -> Cyclotomic:
        """0 if any guard fails, else scalar * e(phase(b)) * poly(b)."""
        if len(b) != self.arity:
            raise DimensionMismatch(
                f"expected {self.arity} parameters, got {len(b)}")
        if not all(g.satisfied(b) for g in self.guards):
            return Cyclotomic.zero()
        return self.scalar * cyc_from_phase(self.phase.eval(b)) * self.poly.eval(b)

    def scaled(self, c) -> "Term":
        if not isinstance(c, Cyclotomic):
            c = Cyclotomic.from_rational(c)
        return Term(self.scalar * c, self.phase, self.poly, self.guards)

    def times_poly(self, p: ParamPoly) -> "Term":
        return Term(self.scalar, self.phase, self.poly * p, self.guards)

    def with_guard(self, g: Guard) -> "Term":
        if g.is_trivial() or g in self.guards:
            return self
        return Term(self.scalar, self.phase, self.poly, self.guards + (g,))

    def shift_phase(self, q: Fraction, beta: AffineForm) -> "Term":
        """Multiply by e(q * beta(b)): linear part into the phase, constant
        part into the scalar."""
        scalar = self.scalar
        if q * beta.const % 1:
            scalar = scalar * cyc_from_phase(q * beta.const)
        return Term(scalar, self.phase.shifted(q, beta), self.poly, self.guards)
