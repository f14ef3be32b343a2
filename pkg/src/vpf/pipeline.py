"""End-to-end driver.

Validates the input matrix, certifies pointedness, normalizes to nonnegative
entries by a unimodular change of coordinates, runs the iterated elimination,
merges terms, and verifies closed forms against the brute-force oracle.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .errors import NotPointed, NotRational, SanityFailure
from .genfun import Factor, GenFunState, eliminate_last_var, final_univariate
from .matrixops import (
    fm_certificate,
    mat_mul_int,
    mat_vec_int,
    primitive_integer,
    unimodular_with_last_row,
)
from .oracle import count_points
from .params import AffineForm, Term


@dataclass(frozen=True)
class ProblemSpec:
    """Input matrix A with optional rational phases per column."""

    entries: tuple[tuple[int, ...], ...]
    phases: tuple[Fraction, ...] = ()
    label: str = ""

    def __post_init__(self):
        m = len(self.entries)
        if m == 0 or len(set(len(r) for r in self.entries)) != 1:
            raise ValueError("matrix must be rectangular and nonempty")
        d = len(self.entries[0])
        if d == 0:
            raise ValueError("matrix needs at least one column")
        if not self.phases:
            object.__setattr__(self, "phases", (Fraction(0),) * d)
        elif len(self.phases) != d:
            raise ValueError("need one phase per column")
        object.__setattr__(
            self, "phases", tuple(Fraction(q) % 1 for q in self.phases))
        for k in range(d):
            if self.phases[k] == 0 and not any(row[k] for row in self.entries):
                # A zero column puts e_k in ker(A) Z_{>=0}^d, so the cone
                # condition fails no matter what the other columns are.
                raise NotPointed(f"column {k} is zero")

    @classmethod
    def from_rows(cls, rows, phases=(), label="") -> "ProblemSpec":
        return cls(tuple(tuple(int(x) for x in r) for r in rows),
                   tuple(phases), label)

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def d(self) -> int:
        return len(self.entries[0])

    @property
    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(row[k] for row in self.entries) for k in range(self.d)]


@dataclass(frozen=True)
class PreprocessReport:
    """Pointedness certificate and unimodular nonnegativization U A >= 0."""

    certificate: tuple[Fraction, ...]
    unimodular: tuple[tuple[int, ...], ...]
    normalized: tuple[tuple[int, ...], ...]

    def transform(self, b) -> tuple[int, ...]:
        return mat_vec_int(self.unimodular, tuple(b))

    @property
    def is_identity(self) -> bool:
        m = len(self.unimodular)
        return all(
            self.unimodular[i][j] == (1 if i == j else 0)
            for i in range(m) for j in range(m))


@dataclass(frozen=True)
class ResultExpr:
    """Closed form: sum of guarded Terms, in the normalized coordinates."""

    m: int
    terms: tuple[Term, ...]
    spec: ProblemSpec | None = None
    report: PreprocessReport | None = None


@dataclass
class VerifyReport:
    points_checked: int = 0
    mismatches: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_pointed(spec: ProblemSpec) -> tuple[Fraction, ...]:
    """A rational y with y . c_k >= 1 for every column; NotPointed otherwise."""
    return fm_certificate(spec.columns)


def nonnegativize(spec: ProblemSpec, y) -> PreprocessReport:
    """Unimodular U with last row a primitive multiple of y and U A >= 0.

    Counts are preserved: phi_A(b) = phi_{UA}(Ub).
    """
    y0 = primitive_integer(y)
    u = unimodular_with_last_row(y0)
    a = [list(row) for row in spec.entries]
    ua = mat_mul_int(u, a)
    # y0 . c_k >= 1, so adding enough y0-row to any row clears its negatives.
    ylast = [sum(y0i * col for y0i, col in zip(y0, colvals))
             for colvals in zip(*a)]
    for i in range(len(u) - 1):
        t = 0
        for k, v in enumerate(ua[i]):
            if v < 0:
                need = (-v + ylast[k] - 1) // ylast[k]  # ceil(-v / y0.c_k)
                t = max(t, need)
        if t:
            u[i] = [ui + t * y0i for ui, y0i in zip(u[i], y0)]
            ua[i] = [v + t * yk for v, yk in zip(ua[i], ylast)]
    assert all(v >= 0 for row in ua for v in row)
    return PreprocessReport(
        tuple(Fraction(v) for v in y),
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in ua))


def preprocess(spec: ProblemSpec) -> PreprocessReport:
    y = check_pointed(spec)
    if all(v >= 0 for row in spec.entries for v in row):
        m = spec.m
        ident = tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))
        return PreprocessReport(y, ident, spec.entries)
    return nonnegativize(spec, y)


def _initial_state(normalized, phases, order) -> GenFunState:
    m = len(normalized)
    d = len(normalized[0])
    exps = tuple(AffineForm.unit(m, order[j]) for j in range(m))
    factors = tuple(
        Factor(phases[k], tuple(normalized[order[j]][k] for j in range(m)))
        for k in range(d))
    return GenFunState(exps, factors, Term.one(m))


def _merge_terms(terms) -> tuple[Term, ...]:
    """Exact structural merging: identical guards/phase/poly shape add scalars."""
    buckets: dict = {}
    order: list = []
    for t in terms:
        if t.is_zero():
            continue
        guards = tuple(sorted(
            t.guards, key=lambda g: (g.sense, g.form.coeffs, g.form.const)))
        lead = max(t.poly.items(), key=lambda kv: kv[0])[1]
        poly = t.poly.scale(lead.inv())
        scalar = t.scalar * lead
        key = (guards, t.phase.coeffs, poly.key())
        if key in buckets:
            prev = buckets[key]
            buckets[key] = Term(prev.scalar + scalar, prev.phase, prev.poly, prev.guards)
        else:
            buckets[key] = Term(scalar, t.phase, poly, guards)
            order.append(key)
    out = []
    for key in sorted(order, key=_term_sort_key):
        t = buckets[key]
        if not t.scalar.is_zero():
            out.append(t)
    return tuple(out)


def _term_sort_key(key):
    guards, phase, poly = key
    gk = tuple((g.sense, g.form.coeffs, g.form.const) for g in guards)
    return (gk, phase, poly)


def compute(spec: ProblemSpec, order=None) -> ResultExpr:
    """Closed-form expression with evaluate(expr, b) = phi_A(b) for integer b.

    `order` optionally permutes the rows (elimination runs last-to-first);
    it affects branch count, never values.
    """
    report = preprocess(spec)
    m = spec.m
    if order is None:
        order = tuple(range(m))
    else:
        order = tuple(order)
        if sorted(order) != list(range(m)):
            raise ValueError(f"order must be a permutation of 0..{m - 1}")
    state = _initial_state(report.normalized, spec.phases, order)
    terms: list[Term] = []
    stack = [state]
    while stack:
        st = stack.pop()
        if st.active == 1:
            terms.extend(final_univariate(st))
        else:
            stack.extend(reversed(eliminate_last_var(st)))
    return ResultExpr(m, _merge_terms(terms), spec, report)


def evaluate(expr: ResultExpr, b) -> Fraction:
    """phi_A(b); rejects non-integer or negative totals loudly."""
    b = tuple(int(x) for x in b)
    if len(b) != expr.m:
        raise SanityFailure(f"b must have length {expr.m}")
    if expr.report is not None and not expr.report.is_identity:
        b = expr.report.transform(b)
    total = Cyclotomic.zero()
    for t in expr.terms:
        total = total + t.value(b)
    try:
        value = total.to_rational()
    except NotRational as exc:
        raise SanityFailure(f"evaluation at {b} is not rational: {total}") from exc
    if value.denominator != 1 or value < 0:
        raise SanityFailure(
            f"evaluation at {b} is not a nonnegative integer: {value}")
    return value


def verify_box(spec: ProblemSpec, expr: ResultExpr, lo, hi) -> VerifyReport:
    """Compare evaluate against the oracle on every integer b in the box."""
    lo = tuple(int(x) for x in lo)
    hi = tuple(int(x) for x in hi)
    assert len(lo) == len(hi) == spec.m
    assert all(a <= b for a, b in zip(lo, hi))
    y = check_pointed(spec)
    report = VerifyReport()
    start = time.perf_counter()

    def boxes(i):
        if i == len(lo):
            yield ()
            return
        for rest in boxes(i + 1):
            for v in range(lo[i], hi[i] + 1):
                yield (v,) + rest

    for b in boxes(0):
        expected = count_points(spec, b, certificate=y)
        got = evaluate(expr, b)
        report.points_checked += 1
        if got != expected:
            report.mismatches.append((b, expected, got))
    report.seconds = time.perf_counter() - start
    return report
