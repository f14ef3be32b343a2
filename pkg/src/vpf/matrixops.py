"""Exact integer/rational matrix utilities.

Fourier-Motzkin feasibility for the pointedness certificate, primitivization,
unimodular completion of a primitive row, and an exact determinant.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import NotPointed


def fm_certificate(columns) -> tuple[Fraction, ...]:
    """Solve y . c >= 1 for all columns c by Fourier-Motzkin elimination.

    Existence of a solution is equivalent to the columns lying in an open
    half-space (pointedness).  Raises NotPointed when infeasible.
    """
    m = len(columns[0])
    # Rows (a, rhs) encode a . y >= rhs.
    rows = [(tuple(Fraction(x) for x in c), Fraction(1)) for c in columns]
    stages = []
    for v in range(m - 1, -1, -1):
        pos = [r for r in rows if r[0][v] > 0]
        neg = [r for r in rows if r[0][v] < 0]
        zero = [r for r in rows if r[0][v] == 0]
        stages.append((v, pos, neg))
        rows = list(zero)
        for ap, cp in pos:
            for an, cn in neg:
                sp, sn = -an[v], ap[v]
                coeffs = tuple(sp * x + sn * y for x, y in zip(ap, an))
                rows.append((coeffs, sp * cp + sn * cn))
    if any(rhs > 0 for _, rhs in rows):
        raise NotPointed("columns do not lie in an open half-space")

    y: list[Fraction | None] = [None] * m
    for v, pos, neg in reversed(stages):
        lowers = []
        uppers = []
        for a, c in pos:
            rest = sum(a[j] * y[j] for j in range(m) if j != v and a[j])
            lowers.append((c - rest) / a[v])
        for a, c in neg:
            rest = sum(a[j] * y[j] for j in range(m) if j != v and a[j])
            uppers.append((c - rest) / a[v])
        if lowers and uppers:
            lo, hi = max(lowers), min(uppers)
            assert lo <= hi
            y[v] = (lo + hi) / 2
        elif lowers:
            y[v] = max(lowers)
        elif uppers:
            y[v] = min(uppers)
        else:
            y[v] = Fraction(0)
    return tuple(y)  # type: ignore[return-value]


def primitive_integer(y) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector."""
    fracs = [Fraction(v) for v in y]
    denom = lcm(*(f.denominator for f in fracs))
    ints = [int(f * denom) for f in fracs]
    g = gcd(*ints)
    assert g > 0
    return tuple(v // g for v in ints)


def det_int(mat) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(mat)
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def unimodular_with_last_row(y0) -> list[list[int]]:
    """An integer matrix U with |det U| = 1 whose last row is the primitive y0.

    Column-reduces the 1 x m matrix y0 to e_1 while mirroring inverse row
    operations on an identity matrix; the first row of the mirror is y0, and
    rows are rotated so it ends up last.
    """
    m = len(y0)
    yrow = list(y0)
    inv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def col_add(j, i, f):
        # Column op col_j += f * col_i on yrow; inverse row op on inv.
        yrow[j] += f * yrow[i]
        for c in range(m):
            inv[i][c] -= f * inv[j][c]

    def col_swap(i, j):
        yrow[i], yrow[j] = yrow[j], yrow[i]
        inv[i], inv[j] = inv[j], inv[i]

    def col_neg(i):
        yrow[i] = -yrow[i]
        for c in range(m):
            inv[i][c] = -inv[i][c]

    # Gather the gcd into position 0.
    for j in range(1, m):
        while yrow[j]:
            if yrow[0] == 0:
                col_swap(0, j)
                continue
            q = yrow[j] // yrow[0]
            col_add(j, 0, -q)
            if yrow[j]:
                col_swap(0, j)
    if yrow[0] < 0:
        col_neg(0)
    assert yrow[0] == 1 and not any(yrow[1:])
    # Row 0 of inv is y0; rotate it to the bottom.
    u = inv[1:] + inv[:1]
    assert abs(det_int(u)) == 1
    return u


def mat_mul_int(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    assert all(len(r) == inner for r in a)
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(rows)]


def mat_vec_int(a, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in a)
