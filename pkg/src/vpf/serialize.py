"""JSON encoding/decoding of results.

Rationals serialize as decimal strings "p/q" (or "p" when q = 1);
cyclotomics as {"level": N, "coeffs": [...]}.
"""
from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic
from .params import AffineForm, Guard, ParamPoly, PhaseForm, Term
from .pipeline import PreprocessReport, ResultExpr


def rat_to_json(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rat_from_json(s) -> Fraction:
    return Fraction(s)


def cyc_to_json(x: Cyclotomic) -> dict:
    return {"level": x.level, "coeffs": [rat_to_json(c) for c in x.coeffs]}


def cyc_from_json(obj) -> Cyclotomic:
    return Cyclotomic(int(obj["level"]),
                      tuple(rat_from_json(c) for c in obj["coeffs"]))


def guard_to_json(g: Guard) -> dict:
    return {"coeffs": list(g.form.coeffs), "const": g.form.const, "sense": g.sense}


def guard_from_json(obj) -> Guard:
    return Guard(AffineForm(tuple(int(c) for c in obj["coeffs"]),
                            int(obj["const"])), obj["sense"])


def phase_to_json(p: PhaseForm) -> dict:
    return {"coeffs": [rat_to_json(c) for c in p.coeffs]}


def phase_from_json(obj) -> PhaseForm:
    return PhaseForm(tuple(rat_from_json(c) for c in obj["coeffs"]))


def poly_to_json(p: ParamPoly) -> list:
    return [{"exps": list(e), "coeff": cyc_to_json(c)}
            for e, c in sorted(p.items(), key=lambda kv: kv[0])]


def poly_from_json(obj, arity: int) -> ParamPoly:
    return ParamPoly(arity, {
        tuple(int(e) for e in mono["exps"]): cyc_from_json(mono["coeff"])
        for mono in obj})


def term_to_json(t: Term) -> dict:
    return {
        "scalar": cyc_to_json(t.scalar),
        "phase": phase_to_json(t.phase),
        "poly": poly_to_json(t.poly),
        "guards": [guard_to_json(g) for g in t.guards],
    }


def term_from_json(obj, arity: int) -> Term:
    return Term(
        cyc_from_json(obj["scalar"]),
        phase_from_json(obj["phase"]),
        poly_from_json(obj["poly"], arity),
        tuple(guard_from_json(g) for g in obj["guards"]),
    )


def expr_to_json(expr: ResultExpr) -> dict:
    out = {"m": expr.m, "terms": [term_to_json(t) for t in expr.terms]}
    if expr.spec is not None:
        out["matrix"] = [list(r) for r in expr.spec.entries]
    if expr.report is not None:
        out["certificate"] = [rat_to_json(c) for c in expr.report.certificate]
        out["unimodular"] = [list(r) for r in expr.report.unimodular]
        out["normalized"] = [list(r) for r in expr.report.normalized]
    return out


def expr_from_json(obj) -> ResultExpr:
    m = int(obj["m"])
    terms = tuple(term_from_json(t, m) for t in obj["terms"])
    report = None
    if "unimodular" in obj:
        report = PreprocessReport(
            tuple(rat_from_json(c) for c in obj.get("certificate", [])),
            tuple(tuple(int(v) for v in r) for r in obj["unimodular"]),
            tuple(tuple(int(v) for v in r) for r in obj.get("normalized", [])),
        )
    return ResultExpr(m, terms, None, report)
