"""Exact closed forms for vector partition functions.

phi_A(b) counts nonnegative integer solutions of A x = b.  This package
computes piecewise quasi-polynomial expressions for phi_A by iterated
partial fraction decomposition of the generating function, with all
arithmetic exact in cyclotomic fields, and verifies them against a
brute-force lattice-point oracle.
"""
from .cyclotomic import (
    Cyclotomic,
    Rat,
    cyc_from_phase,
    cyclotomic_polynomial,
    get_level_cap,
    set_level_cap,
)
from .errors import (
    DimensionMismatch,
    LevelMismatch,
    LevelOverflow,
    MatrixParseError,
    NotCoprime,
    NotPointed,
    NotRational,
    SanityFailure,
    UnsupportedMultiplePole,
    VpfError,
)
from .genfun import (
    Factor,
    FactorGroup,
    GenFunState,
    dedekind_sum,
    eliminate_last_var,
    final_univariate,
    flip,
    pfd_numerator,
    substitute_power,
)
from .oracle import EnumBound, count_points
from .params import AffineForm, Guard, ParamPoly, PhaseForm, Term, binom_poly
from .pipeline import (
    PreprocessReport,
    ProblemSpec,
    ResultExpr,
    VerifyReport,
    check_pointed,
    compute,
    evaluate,
    nonnegativize,
    verify_box,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
