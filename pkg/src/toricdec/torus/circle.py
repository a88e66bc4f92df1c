"""Exact subsets of the circle and open boxes on tori.

A circle subset is kept as disjoint open line segments inside (0,1)
plus a flag recording whether the point 0 belongs to the set.  All
machinery here works on open sets only (targets are open boxes; the
half-open conventions of word generators are confined to certified
transient prefixes and never reach this layer).

Arcs are pairs (lo, hi) of AngleExpr with lo in [0,1) and
lo < hi <= lo + 1; hi may exceed 1, meaning the arc wraps through 0.
``None`` stands for a full-circle coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Rat

from ..errors import CertificateError
from .angles import AngleExpr

ZERO = AngleExpr.rational(0)
ONE = AngleExpr.rational(1)

Arc = tuple  # (AngleExpr, AngleExpr) with 0 <= lo < 1, lo < hi <= lo+1; or None = full
Box = tuple  # tuple of Arc per coordinate


def make_arc(start, end) -> Arc:
    """Open arc from start to end (counter-clockwise); exprs or rationals."""
    if not isinstance(start, AngleExpr):
        start = AngleExpr.rational(start)
    if not isinstance(end, AngleExpr):
        end = AngleExpr.rational(end)
    length = end - start
    if length.sign() <= 0:
        raise ValueError("empty arc")
    if (length - 1).sign() > 0:
        return None
    s = start.rep()
    return (s, s + length)


def arc_length(arc: Arc) -> AngleExpr:
    return ONE if arc is None else arc[1] - arc[0]


def shift_arc(arc: Arc, delta) -> Arc:
    if arc is None:
        return None
    s = (arc[0] + delta).rep()
    return (s, s + (arc[1] - arc[0]))


def point_in_arc(x: AngleExpr, arc: Arc):
    """Strict membership of circle point x (rep'd) in the open arc.

    Returns True/False; raises CertificateError if x coincides with an
    endpoint (the caller decides whether that is allowed).
    """
    if arc is None:
        return True
    x = x.rep()
    lo, hi = arc
    for shift in (0, 1):
        xs = x + shift
        if (xs - lo).is_rational and (xs - lo).c0 == 0:
            raise CertificateError("point on arc boundary")
        if (xs - hi).is_rational and (xs - hi).c0 == 0:
            raise CertificateError("point on arc boundary")
    if (x - lo).sign() > 0 and (hi - x).sign() > 0:
        return True
    x1 = x + 1
    if (x1 - lo).sign() > 0 and (hi - x1).sign() > 0:
        return True
    return False


def arcs_intersect(a: Arc, b: Arc) -> list[Arc]:
    """Exact intersection of two open arcs: zero, one or two arcs."""
    if a is None:
        return [b]
    if b is None:
        return [a]
    out = []
    alo, ahi = a
    # translate b by integers so pieces overlap the window [alo, ahi]
    for shift in (-1, 0, 1):
        blo, bhi = b[0] + shift, b[1] + shift
        lo = blo if (blo - alo).sign() > 0 else alo
        hi = bhi if (ahi - bhi).sign() > 0 else ahi
        if (hi - lo).sign() > 0:
            out.append((lo.rep(), lo.rep() + (hi - lo)))
    return out


def box_intersect(a: Box, b: Box) -> list[Box]:
    """Intersection of two boxes as a union of boxes."""
    parts = [()]
    for ca, cb in zip(a, b):
        pieces = arcs_intersect(ca, cb)
        if not pieces:
            return []
        parts = [p + (piece,) for p in parts for piece in pieces]
    return parts


def regions_intersect(r1: list[Box], r2: list[Box]) -> list[Box]:
    out = []
    for a in r1:
        for b in r2:
            out.extend(box_intersect(a, b))
    return out


# ---------------------------------------------------------------------------
# line-segment sweeps for one circle coordinate


def _rep_key(values):
    """Sort distinct circle points (AngleExpr reps) exactly; returns the
    sorted list with symbolic duplicates removed."""
    reps = []
    for v in values:
        r = v.rep()
        if not any((r - s).is_rational and (r - s).c0 == 0 for s in reps):
            reps.append(r)
    reps.sort(key=_SortKey)
    return reps


class _SortKey:
    """Total-order adapter using exact comparisons."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return self.v.compare(other.v) < 0


def _arc_segments(arc: Arc):
    """Line segments of the arc within [0,1], plus contains-zero flag."""
    if arc is None:
        return [(ZERO, ONE)], True
    lo, hi = arc
    if (hi - 1).sign() <= 0:
        return [(lo, hi)], False
    return [(lo, ONE), (ZERO, hi - 1)], True


def circle_union_complement(arcs: list[Arc]) -> list[tuple[AngleExpr, AngleExpr]]:
    """Closed complement of a union of open arcs.

    Returns closed pieces as (start, end) with start <= end (end may
    exceed 1 for the piece wrapping through 0).  A zero-length piece
    (start == end) is an isolated uncovered point.  Empty list means
    the union covers the whole circle.
    """
    if any(a is None for a in arcs):
        return []
    segs = []
    zero_covered = False
    for a in arcs:
        ss, z = _arc_segments(a)
        segs.extend(ss)
        zero_covered = zero_covered or z
    if not segs:
        return [(ZERO, ONE)]
    # merge open segments on the line [0,1]
    segs.sort(key=lambda s: _SortKey(s[0]))
    merged = []
    cur_lo, cur_hi = segs[0]
    for lo, hi in segs[1:]:
        if (lo - cur_hi).sign() < 0:  # strict overlap keeps openness
            if (hi - cur_hi).sign() > 0:
                cur_hi = hi
        else:
            merged.append((cur_lo, cur_hi))
            cur_lo, cur_hi = lo, hi
    merged.append((cur_lo, cur_hi))
    # complement within [0,1], then stitch at 0
    gaps = []
    prev = ZERO
    for lo, hi in merged:
        if (lo - prev).sign() >= 0:
            gaps.append((prev, lo))
        prev = hi
    if (ONE - prev).sign() >= 0:
        gaps.append((prev, ONE))
    if not gaps:
        return [] if zero_covered else [(ZERO, ZERO)]
    out = list(gaps)
    first, last = out[0], out[-1]
    zero_at_ends = (first[0].is_rational and first[0].c0 == 0) and (
        last[1].is_rational and last[1].c0 == 1
    )
    if zero_at_ends and not zero_covered:
        if len(out) == 1:
            return [(ZERO, ONE)]
        out = out[1:-1] + [(last[0], first[1] + 1)]
    elif zero_covered:
        # drop pieces collapsing onto the covered point 0
        out = [
            (lo, hi)
            for lo, hi in out
            if not (
                (hi - lo).is_rational
                and (hi - lo).c0 == 0
                and lo.rep().is_rational
                and lo.rep().c0 == 0
            )
        ]
    return out


def circle_covered_probe(arcs: list[Arc]) -> bool:
    """Primal coverage check by probing endpoints and gap midpoints.

    The boundary of the union is contained in the endpoint set, so the
    union covers the circle iff every endpoint and every midpoint of
    consecutive endpoints lies strictly inside some arc.
    """
    if any(a is None for a in arcs):
        return True
    if not arcs:
        return False
    pts = _rep_key([e for a in arcs for e in a])
    probes = list(pts)
    for i, p in enumerate(pts):
        nxt = pts[i + 1] if i + 1 < len(pts) else pts[0] + 1
        probes.append(((p + nxt) * Rat(1, 2)).rep())
    for x in probes:
        hit = False
        for lo, hi in arcs:
            for shift in (0, 1):
                xs = x + shift
                if (xs - lo).sign() > 0 and (hi - xs).sign() > 0:
                    hit = True
                    break
            if hit:
                break
        if not hit:
            return False
    return True


# ---------------------------------------------------------------------------
# torus coverage


def _boxes_covering_point(boxes: list[Box], x: AngleExpr) -> list[Box]:
    out = []
    for b in boxes:
        arc = b[0]
        if arc is None:
            out.append(b)
            continue
        lo, hi = arc
        inside = False
        for shift in (0, 1):
            xs = x + shift
            if (xs - lo).sign() > 0 and (hi - xs).sign() > 0:
                inside = True
                break
        if inside:
            out.append(b)
    return out


def covers_torus(boxes: list[Box], dim: int) -> bool:
    """Exact check that a union of open boxes covers the d-torus."""
    boxes = [b for b in boxes if b]
    if dim == 0:
        return bool(boxes)
    if dim == 1:
        return circle_covered_probe([b[0] for b in boxes])
    endpoints = []
    for b in boxes:
        if b[0] is not None:
            endpoints.extend((b[0][0], b[0][1]))
    if not endpoints:
        return covers_torus([b[1:] for b in boxes], dim - 1) if boxes else False
    pts = _rep_key(endpoints)
    probes = list(pts)
    for i, p in enumerate(pts):
        nxt = pts[i + 1] if i + 1 < len(pts) else pts[0] + 1
        probes.append(((p + nxt) * Rat(1, 2)).rep())
    for x in probes:
        sub = _boxes_covering_point(boxes, x)
        if not covers_torus([b[1:] for b in sub], dim - 1):
            return False
    return True


def uncovered_complement_empty(boxes: list[Box], dim: int) -> bool:
    """Independent verification route: build the uncovered complement
    slab by slab and check it is empty."""
    boxes = [b for b in boxes if b]
    if dim == 0:
        return bool(boxes)
    if dim == 1:
        return not circle_union_complement([b[0] for b in boxes])
    endpoints = []
    for b in boxes:
        if b[0] is not None:
            endpoints.extend((b[0][0], b[0][1]))
    if not endpoints:
        return uncovered_complement_empty([b[1:] for b in boxes], dim - 1) if boxes else False
    pts = _rep_key(endpoints)
    probes = list(pts)
    for i, p in enumerate(pts):
        nxt = pts[i + 1] if i + 1 < len(pts) else pts[0] + 1
        probes.append(((p + nxt) * Rat(1, 2)).rep())
    for x in probes:
        sub = _boxes_covering_point(boxes, x)
        if not uncovered_complement_empty([b[1:] for b in sub], dim - 1):
            return False
    return True
