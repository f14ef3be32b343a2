"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is a polynomial in zeta_N of degree < phi(N), reduced modulo the
N-th cyclotomic polynomial Phi_N.  This canonical form makes equality
decidable, which the elimination engine relies on for pole-collision
detection.  All coefficients are `fractions.Fraction`; nothing here ever
rounds.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import LevelMismatch, LevelOverflow, NotRational

#: Ground-ring scalar: arbitrary-precision rational, always in lowest terms
#: with positive denominator.
Rat = Fraction

DEFAULT_LEVEL_CAP = 10**6
_level_cap = DEFAULT_LEVEL_CAP


def get_level_cap() -> int:
    return _level_cap


def set_level_cap(cap: int) -> None:
    """Set the maximal allowed cyclotomic level (lcm blow-up fails loudly)."""
    if cap < 1:
        raise ValueError("level cap must be positive")
    global _level_cap
    _level_cap = cap


def _check_level(n: int) -> None:
    if n < 1:
        raise ValueError(f"level must be positive, got {n}")
    if n > _level_cap:
        raise LevelOverflow(f"cyclotomic level {n} exceeds cap {_level_cap}")


# ---------------------------------------------------------------------------
# Integer / rational polynomial helpers (dense, ascending coefficients).

def _trim(p):
    end = len(p)
    while end > 0 and p[end - 1] == 0:
        end -= 1
    return tuple(p[:end])


def _int_divexact(num, den):
    # Exact division of integer polynomials; den is monic up to sign.
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % lead == 0
        q[i] = c // lead
        for j, d in enumerate(den):
            num[i + j] -= q[i] * d
    assert not any(num)
    return tuple(q)


def _divisors(n: int):
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def _cyclo_poly(n: int) -> tuple[int, ...]:
    if n == 1:
        return (-1, 1)
    # x^n - 1 divided by Phi_d over all proper divisors d of n.
    p = tuple([-1] + [0] * (n - 1) + [1])
    for d in _divisors(n):
        if d < n:
            p = _int_divexact(p, _cyclo_poly(d))
    return p


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """The n-th cyclotomic polynomial Phi_n, ascending integer coefficients."""
    _check_level(n)
    return _cyclo_poly(n)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _to_int_poly(p):
    """Scale a Fraction polynomial to integers; returns (coeffs, denominator)."""
    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    return [int(c * den) for c in p], den


def _poly_mod(p, modulus):
    # Remainder of a Fraction polynomial modulo a monic int polynomial.
    # Denominators are cleared once so the loop runs in pure integers.
    assert modulus[-1] == 1
    deg = len(modulus) - 1
    if len(p) <= deg:
        return _trim(p)
    num, den = _to_int_poly([Fraction(c) for c in p])
    for i in range(len(num) - 1, deg - 1, -1):
        c = num[i]
        if c:
            num[i] = 0
            for j in range(deg):
                num[i - deg + j] -= c * modulus[j]
    return _trim([Fraction(v, den) for v in num[:deg]])


def _poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _poly_sub(p, q):
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    for j, b in enumerate(q):
        p[j] -= b
    return _trim(p)


def _poly_divmod(p, q):
    p = list(p)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    out = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    lead = q[-1]
    for i in range(len(out) - 1, -1, -1):
        c = p[i + len(q) - 1] / lead
        if c:
            out[i] = c
            for j, d in enumerate(q):
                p[i + j] -= c * d
    return _trim(out), _trim(p[: len(q) - 1])


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Cyclotomic:
    """Exact element of Q(zeta_N): coefficient vector of length phi(N)."""

    level: int
    coeffs: tuple[Fraction, ...]

    # Canonical form means equality at a common level is coefficient equality;
    # values at different levels are compared after embedding into the lcm.
    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def _reduce(cls, level: int, poly) -> "Cyclotomic":
        phi = cyclotomic_polynomial(level)
        deg = len(phi) - 1
        red = list(_poly_mod(tuple(Fraction(c) for c in poly), phi))
        red += [Fraction(0)] * (deg - len(red))
        return cls(level, tuple(red))

    @classmethod
    def from_rational(cls, q) -> "Cyclotomic":
        q = Fraction(q)
        return cls._reduce(1, (q,))

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls.from_rational(0)

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls.from_rational(1)

    @classmethod
    def from_phase(cls, q) -> "Cyclotomic":
        """The root of unity e(q) = exp(2*pi*i*q) for rational q."""
        q = Fraction(q) % 1
        n = q.denominator
        _check_level(n)
        poly = [Fraction(0)] * q.numerator + [Fraction(1)]
        return cls._reduce(n, poly)

    # -- representation changes ------------------------------------------

    def raise_level(self, m: int) -> "Cyclotomic":
        """Same field element represented at level m (level must divide m)."""
        if m % self.level:
            raise LevelMismatch(f"level {self.level} does not divide {m}")
        _check_level(m)
        if m == self.level:
            return self
        step = m // self.level
        poly = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * step] = c
        return Cyclotomic._reduce(m, poly)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        """The rational value, if the element lies in Q."""
        if not self.is_rational():
            raise NotRational(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def approx(self) -> complex:
        """Double-precision value with zeta_N -> exp(2*pi*i/N). Testing only."""
        z = cmath.exp(2j * cmath.pi / self.level)
        return sum((complex(c) * z**i for i, c in enumerate(self.coeffs)), 0j)

    # -- field arithmetic --------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        return None

    def _common(self, other):
        n = lcm(self.level, other.level)
        return self.raise_level(n), other.raise_level(n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return Cyclotomic(a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.level == 1:  # scalar fast path
            q = other.coeffs[0]
            return Cyclotomic(self.level, tuple(c * q for c in self.coeffs))
        if self.level == 1:
            q = self.coeffs[0]
            return Cyclotomic(other.level, tuple(c * q for c in other.coeffs))
        a, b = self._common(other)
        # Integer convolution and monic reduction; Fractions only at the end.
        pa, da = _to_int_poly(a.coeffs)
        pb, db = _to_int_poly(b.coeffs)
        out = [0] * (len(pa) + len(pb) - 1)
        for i, x in enumerate(pa):
            if x:
                for j, y in enumerate(pb):
                    out[i + j] += x * y
        phi = cyclotomic_polynomial(a.level)
        deg = len(phi) - 1
        for i in range(len(out) - 1, deg - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(deg):
                    out[i - deg + j] -= c * phi[j]
        den = da * db
        coeffs = [Fraction(v, den) for v in out[:deg]]
        coeffs += [Fraction(0)] * (deg - len(coeffs))
        return Cyclotomic(a.level, tuple(coeffs))

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        """Multiplicative inverse via extended Euclid against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        phi = tuple(Fraction(c) for c in cyclotomic_polynomial(self.level))
        # Extended Euclid: u*self + v*phi = gcd; Phi_N irreducible over Q,
        # so the gcd is a nonzero constant.
        r0, r1 = phi, _trim(self.coeffs)
        u0, u1 = (), (Fraction(1),)
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        g = r1[0]
        return Cyclotomic._reduce(self.level, tuple(c / g for c in u1))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self.inv() if n < 0 else self
        n = abs(n)
        out = Cyclotomic.one()
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.level == other.level:
            return self.coeffs == other.coeffs
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.is_rational():
            return str(self.to_rational())
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if i == 0 else (f"z{self.level}" if i == 1 else f"z{self.level}^{i}")
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Cyclotomic({self.level}, '{self}')"


def cyc_from_phase(q) -> Cyclotomic:
    return Cyclotomic.from_phase(q)
