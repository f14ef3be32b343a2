"""The elimination engine.

A GenFunState is a guarded slice z^{-beta(b)} * prod 1/(1 - e(q_k) z^{v_k})
mid-recursion, together with an accumulated Term.  One variable-elimination
step rewrites the constant-term functional over the last active variable as
a sum of child states with one variable fewer; the final univariate stage
resolves arbitrary pole multiplicities and emits closed Terms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic, cyc_from_phase
from .errors import DimensionMismatch, NotCoprime, UnsupportedMultiplePole
from .params import (
    EQ_ZERO,
    GE_ZERO,
    AffineForm,
    Guard,
    ParamPoly,
    PhaseForm,
    Term,
    binom_poly,
)


@dataclass(frozen=True)
class Factor:
    """Denominator factor 1 - e(phase) * z^exps over the active variables."""

    phase: Fraction
    exps: tuple[int, ...]

    def __post_init__(self):
        assert 0 <= self.phase < 1
        if self.phase == 0 and not any(self.exps):
            raise ValueError("factor 1 - 1 is the zero denominator")


@dataclass(frozen=True)
class GenFunState:
    """Product-form slice with an accumulated Term.

    `exps` are the affine exponents beta of z^{-beta(b)}, one per active
    variable; affine forms and the accumulated Term always refer to the full
    original parameter count.
    """

    exps: tuple[AffineForm, ...]
    factors: tuple[Factor, ...]
    acc: Term

    @property
    def active(self) -> int:
        return len(self.exps)

    def dump(self) -> str:
        lines = [f"exps: {[f'{f.coeffs}+{f.const}' for f in self.exps]}"]
        for f in self.factors:
            lines.append(f"1 - e({f.phase}) z^{list(f.exps)}")
        return "\n".join(lines)


def flip(state: GenFunState, k: int) -> GenFunState:
    """Replace factor k via 1/(1-e(q)z^v) = -e(-q) z^{-v} / (1-e(-q)z^{-v})."""
    f = state.factors[k]
    q = (-f.phase) % 1
    new_factor = Factor(q, tuple(-e for e in f.exps))
    factors = state.factors[:k] + (new_factor,) + state.factors[k + 1:]
    exps = tuple(beta + v for beta, v in zip(state.exps, f.exps))
    acc = state.acc.scaled(-cyc_from_phase(q))
    return GenFunState(exps, factors, acc)


def substitute_power(state: GenFunState, j: int, n: int) -> GenFunState:
    """Substitute z_j -> z_j^n; the constant term is unchanged."""
    assert n >= 1 and 0 <= j < state.active
    if n == 1:
        return state
    exps = tuple(f * n if i == j else f for i, f in enumerate(state.exps))
    factors = tuple(
        Factor(f.phase, tuple(e * n if i == j else e for i, e in enumerate(f.exps)))
        for f in state.factors)
    return GenFunState(exps, factors, state.acc)


def _normalize_last(state: GenFunState) -> GenFunState:
    """Flip factors until the last variable's exponents are all >= 0."""
    w = state.active - 1
    while True:
        for k, f in enumerate(state.factors):
            if f.exps[w] < 0:
                state = flip(state, k)
                break
        else:
            return state


def eliminate_last_var(state: GenFunState) -> list[GenFunState]:
    """One elimination step: constant term over the last active variable.

    The children sum to the parent's contribution for every integer b.  The
    power substitution z_j -> z_j^{n_k} is fused into child construction, so
    rational exponents never materialize.
    """
    if state.active < 2:
        raise DimensionMismatch("eliminate_last_var needs at least 2 variables")
    state = _normalize_last(state)
    w = state.active - 1
    beta_w = state.exps[w]
    chosen = [k for k, f in enumerate(state.factors) if f.exps[w] > 0]

    if not chosen:
        # No factor involves the variable: const of z^{-beta_w} alone.
        acc = state.acc.with_guard(Guard(beta_w, EQ_ZERO))
        factors = tuple(Factor(f.phase, f.exps[:w]) for f in state.factors)
        return [GenFunState(state.exps[:w], factors, acc)]

    children = []
    for k in chosen:
        fk = state.factors[k]
        n = fk.exps[w]
        for l in range(n):
            acc = state.acc.with_guard(Guard(beta_w, GE_ZERO))
            acc = acc.scaled(Fraction(1, n))
            acc = acc.shift_phase(Fraction(fk.phase - l, n), beta_w)
            exps = tuple(
                n * state.exps[j] - fk.exps[j] * beta_w for j in range(w))
            factors = []
            for t, ft in enumerate(state.factors):
                if t == k:
                    continue
                vw = ft.exps[w]
                q2 = (ft.phase + vw * Fraction(l - fk.phase, n)) % 1
                v2 = tuple(n * ft.exps[j] - vw * fk.exps[j] for j in range(w))
                if not any(v2):
                    if q2 == 0:
                        raise UnsupportedMultiplePole(
                            "two denominator factors share a root at a "
                            "multivariate stage")
                    acc = acc.scaled((1 - cyc_from_phase(q2)).inv())
                else:
                    factors.append(Factor(q2, v2))
            children.append(GenFunState(exps, tuple(factors), acc))
    return children


@dataclass(frozen=True)
class FactorGroup:
    """A group of linear factors (1 - e(theta) w)^mult sharing a root phase."""

    theta: Fraction
    mult: int


@dataclass(frozen=True)
class PfdNumerator:
    """Numerator of one factor group, formal in b.

    `local_coeffs[j]` is the ParamPoly coefficient of t^j in the local
    coordinate t = w - alpha^{-1} (alpha = e(theta)); the phase factor
    alpha^{beta(b)} is kept separate so the coefficients stay polynomial.
    """

    theta: Fraction
    mult: int
    beta: AffineForm
    local_coeffs: tuple[ParamPoly, ...]

    def constant_poly(self) -> ParamPoly:
        """A(b; 0) without the alpha^beta phase: evaluate at t = -alpha^{-1}."""
        m = self.beta.arity
        out = ParamPoly.zero(m)
        point = -cyc_from_phase((-self.theta) % 1)  # -alpha^{-1}
        power = Cyclotomic.one()
        for c in self.local_coeffs:
            out = out + c.scale(power)
            power = power * point
        return out

    def constant_at(self, b) -> Cyclotomic:
        """A(b; 0) at concrete b, including the alpha^beta phase."""
        phase = (self.theta * self.beta.eval(b)) % 1
        return cyc_from_phase(phase) * self.constant_poly().eval(b)

    def w_coeffs_at(self, b) -> list[Cyclotomic]:
        """Coefficients of the numerator polynomial in w at concrete b."""
        phase = cyc_from_phase((self.theta * self.beta.eval(b)) % 1)
        # Expand sum_j N_j(b) (w - alpha^{-1})^j.
        alpha_inv = cyc_from_phase((-self.theta) % 1)
        out = [Cyclotomic.zero() for _ in range(self.mult)]
        base = [Cyclotomic.one()]  # (w - alpha^{-1})^j, ascending in w
        for j, c in enumerate(self.local_coeffs):
            cj = c.eval(b) * phase
            for i, bc in enumerate(base):
                out[i] = out[i] + cj * bc
            # next power: multiply by (w - alpha^{-1})
            nxt = [-(alpha_inv * base[0])]
            for i in range(1, j + 2):
                prev = base[i] if i < len(base) else Cyclotomic.zero()
                nxt.append(base[i - 1] - alpha_inv * prev)
            base = nxt
        return out


def pfd_numerator(target: FactorGroup, others, beta: AffineForm) -> PfdNumerator:
    """Numerator of `target` in the decomposition of 1/(prod factors * w^beta).

    `others` lists the root phases of all remaining linear factors, with
    multiplicity.  Computed by inversion in the truncated local ring at
    w = alpha^{-1}, truncation t^mult.
    """
    theta, mu = target.theta, target.mult
    if any(th == theta for th in others):
        raise NotCoprime(f"root phase {theta} appears among the other factors")
    m = beta.arity
    alpha = cyc_from_phase(theta)

    # Product of the inverses of the other linear factors, mod t^mu.
    # (1 - e(th) w) = u0 + u1 t with u0 = 1 - e(th - theta), u1 = -e(th);
    # its inverse is (1/u0) sum_j (e(th)/u0)^j t^j.
    prod = [Cyclotomic.one()] + [Cyclotomic.zero()] * (mu - 1)
    for th in others:
        u0_inv = (1 - cyc_from_phase((th - theta) % 1)).inv()
        ratio = cyc_from_phase(th % 1) * u0_inv
        series = []
        power = u0_inv
        for _ in range(mu):
            series.append(power)
            power = power * ratio
        prod = [
            sum((prod[i] * series[j - i] for i in range(j + 1)),
                Cyclotomic.zero())
            for j in range(mu)]

    # Inverse of w^beta, local part: alpha^beta (kept as phase) times
    # (1 + alpha t)^{-beta} = sum_j binom(j+beta-1, j) (-alpha)^j t^j.
    coeffs = []
    neg_alpha_pow = Cyclotomic.one()
    for j in range(mu):
        h = binom_poly(j, beta).scale(neg_alpha_pow)
        # multiply by prod, truncated
        coeffs.append(h)
        neg_alpha_pow = neg_alpha_pow * (-alpha)
    local = []
    for j in range(mu):
        acc = ParamPoly.zero(m)
        for i in range(j + 1):
            acc = acc + coeffs[i].scale(prod[j - i])
        local.append(acc)
    return PfdNumerator(theta, mu, beta, tuple(local))


def final_univariate(state: GenFunState) -> list[Term]:
    """Resolve the last variable, arbitrary multiplicities, into closed Terms."""
    if state.active != 1:
        raise DimensionMismatch("final_univariate needs exactly 1 variable")
    state = _normalize_last(state)
    acc = state.acc
    beta = state.exps[0]

    # Scalar-only factors fold into the accumulated scalar.
    groups: dict[Fraction, int] = {}
    for f in state.factors:
        n = f.exps[0]
        if n == 0:
            acc = acc.scaled((1 - cyc_from_phase(f.phase)).inv())
            continue
        for l in range(n):
            theta = Fraction(f.phase - l, n) % 1
            groups[theta] = groups.get(theta, 0) + 1

    if not groups:
        term = acc.with_guard(Guard(beta, EQ_ZERO))
        return [] if term.is_zero() else [term]

    ordered = sorted(groups.items())
    terms = []
    for theta, mu in ordered:
        others = [th for th, m2 in ordered if th != theta for _ in range(m2)]
        num = pfd_numerator(FactorGroup(theta, mu), others, beta)
        a0 = num.constant_poly()
        t = acc.with_guard(Guard(beta, GE_ZERO)).shift_phase(theta, beta)
        if a0.is_constant():
            t = t.scaled(a0.constant_value())
        else:
            t = t.times_poly(a0)
        if not t.is_zero():
            terms.append(t)
    return terms


def dedekind_sum(n: int, a_phase: Fraction, f, beta: int) -> Cyclotomic:
    """Generalized Dedekind sum (1/n) sum_{alpha^n = e(a)} alpha^beta / f(alpha^{-1}).

    `f` lists the cyclotomic coefficients c_i of linear factors (1 - c_i w).
    By the constant-term lemma this equals the numerator constant A(0) of the
    group 1 - e(a_phase) w^n in the decomposition of 1/(f(w) (1-e(a)w^n) w^beta).
    """
    assert n >= 1
    total = Cyclotomic.zero()
    for l in range(n):
        alpha = cyc_from_phase((Fraction(a_phase) + l) / n % 1)
        alpha_inv = alpha.inv()
        val = Cyclotomic.one()
        for c in f:
            if not isinstance(c, Cyclotomic):
                c = Cyclotomic.from_rational(c)
            val = val * (1 - c * alpha_inv)
        if val.is_zero():
            raise ZeroDivisionError(
                f"f vanishes at the root alpha^-1 for l={l}")
        total = total + alpha**beta * val.inv()
    return total * Fraction(1, n)
