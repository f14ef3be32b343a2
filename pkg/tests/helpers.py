"""Shared test machinery.

The truncated-series oracle here re-derives the constant-term semantics of a
GenFunState directly from geometric series, independently of the elimination
engine, so engine steps can be checked against it.
"""
from __future__ import annotations

from fractions import Fraction

from vpf import Cyclotomic, GenFunState, cyc_from_phase


def _last_nonzero(u):
    return max(i for i, v in enumerate(u) if v)


def _phase_counts(factors, goal):
    """Counts, keyed by accumulated phase, of ways to write `goal` as a
    nonnegative combination sum t_k * u_k of the given directions."""
    if not factors:
        return {Fraction(0): 1} if not any(goal) else {}
    p = max(_last_nonzero(u) for _, u in factors)
    if any(goal[i] for i in range(p + 1, len(goal))):
        return {}
    group = [(q, u) for q, u in factors if _last_nonzero(u) == p]
    rest = [(q, u) for q, u in factors if _last_nonzero(u) != p]
    out: dict[Fraction, int] = {}

    def assign(i, remaining, vec, phase):
        if i == len(group):
            if remaining:
                return
            sub = [g - a for g, a in zip(goal, vec)]
            for ph, cnt in _phase_counts(rest, sub).items():
                key = (phase + ph) % 1
                out[key] = out.get(key, 0) + cnt
            return
        q, u = group[i]
        step = u[p]
        t = 0
        while t * step <= remaining:
            assign(i + 1, remaining - t * step,
                   [a + t * v for a, v in zip(vec, u)], (phase + t * q) % 1)
            t += 1

    if goal[p] >= 0:
        assign(0, goal[p], [0] * len(goal), Fraction(0))
    return out


def series_value(state: GenFunState, b) -> Cyclotomic:
    """Constant-term contribution of a state at concrete b, by expanding every
    factor as a geometric series in its standard-expansion direction."""
    goal = [f.eval(b) for f in state.exps]
    sign = 1
    phase_const = Fraction(0)
    dirs = []
    for f in state.factors:
        u = list(f.exps)
        q = f.phase
        if u[_last_nonzero(u)] < 0:
            # 1/(1-e(q)z^v) = -e(-q) z^{-v} / (1 - e(-q) z^{-v})
            sign = -sign
            q = (-q) % 1
            u = [-v for v in u]
            phase_const = (phase_const + q) % 1
            goal = [g - v for g, v in zip(goal, u)]
        dirs.append((q, tuple(u)))
    total = Cyclotomic.zero()
    for ph, cnt in _phase_counts(dirs, goal).items():
        total = total + cyc_from_phase(ph) * cnt
    return state.acc.value(b) * cyc_from_phase(phase_const) * total * sign


def terms_value(terms, b) -> Cyclotomic:
    total = Cyclotomic.zero()
    for t in terms:
        total = total + t.value(b)
    return total


# -- dense univariate polynomials with Cyclotomic coefficients (ascending) --

CZERO = Cyclotomic.zero()
CONE = Cyclotomic.one()


def cp_trim(p):
    end = len(p)
    while end and p[end - 1].is_zero():
        end -= 1
    return list(p[:end])


def cp_mul(p, q):
    if not p or not q:
        return []
    out = [CZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, c in enumerate(q):
            out[i + j] = out[i + j] + a * c
    return cp_trim(out)


def cp_add(p, q):
    out = [CZERO] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] = out[i] + a
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return cp_trim(out)


def cp_sub(p, q):
    return cp_add(p, [-c for c in q])


def cp_divmod(p, q):
    p = list(p)
    q = cp_trim(q)
    assert q
    lead_inv = q[-1].inv()
    out = [CZERO] * max(0, len(p) - len(q) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = p[i + len(q) - 1] * lead_inv
        if not c.is_zero():
            out[i] = c
            for j, d in enumerate(q):
                p[i + j] = p[i + j] - c * d
    return cp_trim(out), cp_trim(p[: len(q) - 1])


def cp_linear(theta) -> list:
    """1 - e(theta) w."""
    return [CONE, -cyc_from_phase(theta)]


def cp_pow(p, n):
    out = [CONE]
    for _ in range(n):
        out = cp_mul(out, p)
    return out


def cp_series_inv(p, order):
    """Inverse of p as a power series, truncated below w^order."""
    assert not p[0].is_zero()
    inv0 = p[0].inv()
    out = [inv0]
    for k in range(1, order):
        acc = CZERO
        for j in range(1, min(k, len(p) - 1) + 1):
            acc = acc + p[j] * out[k - j]
        out.append(-inv0 * acc)
    return out


def phase_fraction(num, den):
    return Fraction(num, den) % 1
