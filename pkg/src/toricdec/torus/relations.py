"""Multiplicative-relation lattices of rotation-step vectors.

A relation of the step vector (s_1, ..., s_d) is an integer vector a
with a . s in Z.  Writing each step as c0_i + sum_j m_ij * beta_j over
the certified-independent base constants beta_j, the relation condition
splits exactly into  a . M = 0  (over Q)  and  a . c0 in Z,  so the
lattice is computed by exact integer linear algebra.

Only relation structures confined to the rational block are supported
downstream; a computed relation touching an irrational coordinate is
reported as an unsupported structure (the coverage geometry assumes
full subtori on the free coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Rat
from math import gcd, lcm

from ..errors import InputError
from .angles import AngleExpr


def _xgcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _row_kernel(row: list[int]) -> list[list[int]]:
    """Basis of the integer kernel of a single integer row vector."""
    m = len(row)
    v = list(row)
    cols = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    pivot = None
    for j in range(m):
        if v[j] != 0:
            pivot = j
            break
    if pivot is None:
        return cols
    if pivot != 0:
        v[0], v[pivot] = v[pivot], v[0]
        cols[0], cols[pivot] = cols[pivot], cols[0]
    for j in range(1, m):
        if v[j] == 0:
            continue
        g, x, y = _xgcd(v[0], v[j])
        a0, aj = v[0] // g, v[j] // g
        c0, cj = cols[0], cols[j]
        cols[0] = [x * c0[i] + y * cj[i] for i in range(m)]
        cols[j] = [-aj * c0[i] + a0 * cj[i] for i in range(m)]
        v[0], v[j] = g, 0
    return cols[1:]


def _int_kernel(rows_as_columns: list[list[Rat]], d: int) -> list[list[int]]:
    """Integer solutions a in Z^d of a . column = 0 for every column."""
    basis = [[1 if i == j else 0 for i in range(d)] for j in range(d)]
    for col in rows_as_columns:
        if not basis:
            break
        den = lcm(*[c.denominator for c in col]) if col else 1
        icol = [int(c * den) for c in col]
        w = [sum(b[i] * icol[i] for i in range(d)) for b in basis]
        if all(x == 0 for x in w):
            continue
        combos = _row_kernel(w)
        basis = [
            [sum(c[k] * basis[k][i] for k in range(len(basis))) for i in range(d)]
            for c in combos
        ]
    return [b for b in basis if any(b)]


def _hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form (positive pivots), zero rows dropped."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    m = len(rows[0])
    out = []
    col = 0
    while rows and col < m:
        pivot_rows = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not pivot_rows:
            col += 1
            continue
        while len(pivot_rows) > 1:
            pivot_rows.sort(key=lambda r: abs(r[col]))
            p = pivot_rows[0]
            new = [p]
            for r in pivot_rows[1:]:
                q = r[col] // p[col]
                rr = [r[i] - q * p[i] for i in range(m)]
                if rr[col] != 0:
                    new.append(rr)
                elif any(rr):
                    rest.append(rr)
            pivot_rows = new
        p = pivot_rows[0]
        if p[col] < 0:
            p = [-x for x in p]
        out.append(p)
        rows = rest
        col += 1
    return out


@dataclass(frozen=True)
class RelationBasis:
    """Basis rows of the multiplicative-relation lattice."""

    rows: tuple[tuple[int, ...], ...]
    dimension: int
    provenance: str  # 'exact' (all-rational steps) or 'certified'

    def satisfied_exactly(self, steps: list[AngleExpr]) -> bool:
        for row in self.rows:
            val = AngleExpr.rational(0)
            for a, s in zip(row, steps):
                val = val + s * a
            if not (val.is_rational and val.c0.denominator == 1):
                return False
        return True


def relation_lattice(steps) -> RelationBasis:
    """Exact relation lattice of a step vector.

    Raises InputError("unsupported relation structure") when a relation
    involves an irrational coordinate (e.g. theta and 2*theta supplied
    together): such lattices are real but outside the supported
    coverage geometry.
    """
    steps = [s if isinstance(s, AngleExpr) else AngleExpr.rational(s) for s in steps]
    d = len(steps)
    if d == 0:
        return RelationBasis((), 0, "exact")
    names = sorted({n for s in steps for n, _ in s.coeffs})
    columns = [[dict(s.coeffs).get(n, Rat(0)) for s in steps] for n in names]
    kernel = _int_kernel(columns, d)
    # inside the coefficient kernel, impose a . c0 in Z
    c0 = [s.c0 for s in steps]
    if kernel:
        w = [sum(Rat(b[i]) * c0[i] for i in range(d)) for b in kernel]
        den = lcm(*[x.denominator for x in w]) if w else 1
        iw = [int(x * den) for x in w] + [den]
        combos = _row_kernel(iw)
        rows = []
        for c in combos:
            vec = [sum(c[k] * kernel[k][i] for k in range(len(kernel))) for i in range(d)]
            if any(vec):
                rows.append(vec)
        rows = _hnf_rows(rows)
    else:
        rows = []
    irrational = [i for i, s in enumerate(steps) if s.coeffs]
    for row in rows:
        if any(row[i] for i in irrational):
            raise InputError(
                "unsupported relation structure: relation "
                f"{tuple(row)} involves an irrational coordinate"
            )
    provenance = "exact" if not names else "certified"
    basis = RelationBasis(tuple(tuple(r) for r in rows), d, provenance)
    if provenance == "exact" and not basis.satisfied_exactly(steps):
        raise InputError("relation basis failed exact verification")
    return basis
