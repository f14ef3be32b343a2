"""Brute-force lattice-point counter, ground truth for everything else.

Counts {x in Z_{>=0}^d : Ax = b} by depth-first search with residual
feasibility pruning.  Deliberately simple: it must be easy to trust, and it
shares nothing with the generating-function engine beyond the pointedness
certificate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPointed
from .matrixops import fm_certificate


@dataclass(frozen=True)
class EnumBound:
    """Per-variable upper bounds x_i <= y.b / (y.c_i) from a certificate y."""

    bounds: tuple[int, ...]

    @classmethod
    def from_certificate(cls, y, columns, b) -> "EnumBound":
        yb = sum(yi * bi for yi, bi in zip(y, b))
        out = []
        for c in columns:
            yc = sum(yi * ci for yi, ci in zip(y, c))
            out.append(max(0, int(Fraction(yb) / yc)) if yb >= 0 else 0)
        return cls(tuple(out))


def count_points(spec, b, certificate=None) -> int:
    """Exact number of nonnegative integer solutions of A x = b."""
    columns = spec.columns
    if certificate is None:
        try:
            certificate = fm_certificate(columns)
        except NotPointed:
            raise
    y = certificate
    m = spec.m
    d = spec.d
    yc = [sum(yi * ci for yi, ci in zip(y, c)) for c in columns]
    # nonneg_prefix[k]: all columns 0..k are entrywise nonnegative.
    nonneg_prefix = []
    flag = True
    for c in columns:
        flag = flag and all(e >= 0 for e in c)
        nonneg_prefix.append(flag)

    def rec(k: int, r) -> int:
        if k < 0:
            return 1 if not any(r) else 0
        yr = sum(yi * ri for yi, ri in zip(y, r))
        if yr < 0:
            return 0
        if nonneg_prefix[k] and any(ri < 0 for ri in r):
            return 0
        c = columns[k]
        bound = int(yr / yc[k])
        total = 0
        for x in range(bound + 1):
            total += rec(k - 1, tuple(ri - x * ci for ri, ci in zip(r, c)))
        return total

    if len(b) != m:
        raise ValueError(f"b must have length {m}")
    return rec(d - 1, tuple(b))
