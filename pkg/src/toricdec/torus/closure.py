"""Orbit closures on tori for the supported step regimes.

In the supported regime (rational block plus certified jointly
independent irrational block) the closure of the orbit of the step
point is a disjoint union of L translates of the full subtorus spanned
by the irrational coordinates, where L is the cyclic order of the
rational part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Rat
from math import lcm

from ..errors import InputError
from .angles import AngleExpr
from .relations import RelationBasis, relation_lattice


def _det(rows: list[list[int]]) -> Rat:
    n = len(rows)
    m = [[Rat(x) for x in r] for r in rows]
    det = Rat(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Rat(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [m[r][i] - f * m[col][i] for i in range(n)]
    return det


@dataclass(frozen=True)
class OrbitClosure:
    """Finite cyclic order, free subtorus data, and (when steps are
    supplied) the explicit points of the finite component."""

    order: int                       # L: cyclic order of the rational part
    free_rank: int
    free_coords: tuple[int, ...]     # indices of dense coordinates
    annihilator: tuple[tuple[int, ...], ...]  # basis of the relation lattice
    points: tuple[tuple[Rat, ...], ...] = ()  # rational-part orbit (L points)


def orbit_closure(basis: RelationBasis, d: int, steps=None) -> OrbitClosure:
    """Closure data from a relation basis (and optionally the steps, to
    enumerate the finite component)."""
    if basis.dimension != d:
        raise InputError("relation basis dimension mismatch")
    support = sorted({i for row in basis.rows for i, x in enumerate(row) if x})
    free = tuple(i for i in range(d) if i not in support)
    if len(basis.rows) != len(support):
        raise InputError("relation basis is not full rank on its support")
    if support:
        sub = [[row[i] for i in support] for row in basis.rows]
        order = abs(int(_det(sub)))
        if order == 0:
            raise InputError("degenerate relation basis")
    else:
        order = 1
    points: tuple = ()
    if steps is not None:
        steps = [s if isinstance(s, AngleExpr) else AngleExpr.rational(s) for s in steps]
        rat = [i for i, s in enumerate(steps) if s.is_rational]
        if set(support) <= set(rat):
            L = order
            pts = []
            for n in range(L):
                pts.append(tuple((steps[i].c0 * n) % 1 for i in rat))
            points = tuple(pts)
    return OrbitClosure(order, len(free), free, basis.rows, points)


def closure_of_steps(steps) -> OrbitClosure:
    steps = [s if isinstance(s, AngleExpr) else AngleExpr.rational(s) for s in steps]
    basis = relation_lattice(steps)
    clo = orbit_closure(basis, len(steps), steps)
    # cross-check the cyclic order against denominators of rational steps
    dens = [s.c0.denominator for s in steps if s.is_rational]
    expected = lcm(*dens) if dens else 1
    if clo.order != expected:
        raise InputError(
            f"cyclic order {clo.order} disagrees with denominator lcm {expected}"
        )
    return clo
