"""Exact angles: rationals plus certified irrational constants.

An angle value is an ``AngleExpr``: a rational constant plus a rational
linear combination of named irrational base constants,

    x = c0 + sum_i  coeffs[name_i] * CONST[name_i].

Base constants are registered with (a) a refiner producing nested
rational enclosures of any requested width, and (b) an irrationality /
joint-independence certificate.  The registry guarantees that
{1} union {registered constants} is linearly independent over Q:

* square roots are stored by square-free radicand, and distinct
  square-free radicands are Q-linearly independent together with 1;
* a unit angle Log((a+bi)/c)/(2 pi i) of a rational point on the unit
  circle that is not a root of unity is transcendental, hence
  independent of 1 and of the (algebraic) square roots;
* two unit angles are registered only for moduli c with pairwise
  coprime c, which forces multiplicative independence of the circle
  points and hence Q-linear independence of the angles together with 1.

Consequently equality of two AngleExpr values (as reals, or modulo 1)
is decidable purely symbolically, and any strict inequality is decided
by interval refinement, which is guaranteed to terminate.  All interval
endpoints are ``fractions.Fraction``; no binary floating point is used.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..budget import current as current_budget
from ..errors import CertificateError, InputError, PrecisionError

Rat = Fraction

# ---------------------------------------------------------------------------
# rational interval helpers


def _ival_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _ival_scale(a, c: Rat):
    if c >= 0:
        return (a[0] * c, a[1] * c)
    return (a[1] * c, a[0] * c)


def _ival_div_pos(a, b):
    # both intervals strictly positive
    return (a[0] / b[1], a[1] / b[0])


def _arctan_interval(x: Rat, eps: Rat):
    """Enclosure of arctan(x) for rational 0 <= x <= 1.

    Alternating series with decreasing terms; the value lies between
    consecutive partial sums.
    """
    assert 0 <= x <= 1
    if x == 0:
        return (Rat(0), Rat(0))
    term = x
    s = Rat(0)
    k = 0
    x2 = x * x
    prev = None
    while True:
        s_next = s + term if k % 2 == 0 else s - term
        if prev is not None and abs(s_next - prev) <= eps:
            lo, hi = min(prev, s_next), max(prev, s_next)
            return (lo, hi)
        prev = s_next
        s = s_next
        k += 1
        term = term * x2 * (2 * k - 1) / (2 * k + 1)


def _pi_interval(eps: Rat):
    """Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)."""
    a = _arctan_interval(Rat(1, 5), eps / 64)
    b = _arctan_interval(Rat(1, 239), eps / 64)
    lo = 16 * a[0] - 4 * b[1]
    hi = 16 * a[1] - 4 * b[0]
    return (lo, hi)


def _sqrt_interval(n: int, eps: Rat):
    bits = max(2, (Rat(1, eps)).numerator.bit_length() + 2)
    scale = 1 << bits
    root = math.isqrt(n * scale * scale)
    lo = Rat(root, scale)
    return (lo, lo + Rat(1, scale))


# ---------------------------------------------------------------------------
# base-constant registry

_REGISTRY: dict[str, Callable[[Rat], tuple[Rat, Rat]]] = {}
_CACHE: dict[str, tuple[Rat, Rat]] = {}
_CACHE_LOCK = threading.Lock()
_UNIT_MODULI: dict[int, str] = {}


def _register(name: str, refiner: Callable[[Rat], tuple[Rat, Rat]]):
    if name in _REGISTRY:
        return
    _REGISTRY[name] = refiner


def _const_enclosure(name: str, eps: Rat):
    """Cached nested enclosure: the returned interval is never wider than
    any previously returned one (cached intervals only shrink)."""
    with _CACHE_LOCK:
        cached = _CACHE.get(name)
    if cached is not None and cached[1] - cached[0] <= eps:
        return cached
    lo, hi = _REGISTRY[name](eps)
    with _CACHE_LOCK:
        cached = _CACHE.get(name)
        if cached is not None:
            lo, hi = max(lo, cached[0]), min(hi, cached[1])
            if lo > hi:  # refiners disagree: broken certificate
                raise CertificateError(f"inconsistent refiner for constant {name}")
        _CACHE[name] = (lo, hi)
    return (lo, hi)


def _squarefree_split(n: int):
    """n = s*s*f with f square-free; returns (s, f)."""
    s, f, d = 1, 1, 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            f *= d
        d += 1
    return s, f * n


# ---------------------------------------------------------------------------
# AngleExpr


@dataclass(frozen=True)
class AngleExpr:
    """c0 + sum of coeff * base constant; exact symbolic angle value."""

    c0: Rat
    coeffs: tuple[tuple[str, Rat], ...] = ()

    # -- constructors -------------------------------------------------
    @staticmethod
    def rational(q) -> "AngleExpr":
        return AngleExpr(Rat(q), ())

    @staticmethod
    def base(name: str, scale=1) -> "AngleExpr":
        if name not in _REGISTRY:
            raise InputError(f"unknown angle constant: {name}")
        s = Rat(scale)
        return AngleExpr(Rat(0), ((name, s),) if s else ())

    # -- structure ----------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return not self.coeffs

    def coeff_map(self) -> dict[str, Rat]:
        return dict(self.coeffs)

    # -- arithmetic ---------------------------------------------------
    def _combine(self, other: "AngleExpr", sign: int) -> "AngleExpr":
        m = dict(self.coeffs)
        for name, c in other.coeffs:
            m[name] = m.get(name, Rat(0)) + sign * c
        coeffs = tuple(sorted((n, c) for n, c in m.items() if c != 0))
        return AngleExpr(self.c0 + sign * other.c0, coeffs)

    def __add__(self, other):
        return self._combine(_as_expr(other), 1)

    def __radd__(self, other):
        return _as_expr(other)._combine(self, 1)

    def __sub__(self, other):
        return self._combine(_as_expr(other), -1)

    def __rsub__(self, other):
        return _as_expr(other)._combine(self, -1)

    def __mul__(self, k):
        k = Rat(k)
        return AngleExpr(self.c0 * k, tuple((n, c * k) for n, c in self.coeffs if c * k != 0))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    # -- numerics -----------------------------------------------------
    def enclosure(self, eps) -> tuple[Rat, Rat]:
        """Rational interval of width <= eps containing the value."""
        eps = Rat(eps)
        lo = hi = self.c0
        if self.coeffs:
            share = eps / len(self.coeffs)
            for name, c in self.coeffs:
                iv = _ival_scale(_const_enclosure(name, share / (2 * abs(c))), c)
                lo, hi = lo + iv[0], hi + iv[1]
        return (lo, hi)

    def sign(self) -> int:
        """Exact sign (-1, 0, +1); terminates for all expressible values."""
        if self.is_rational:
            c = self.c0
            return (c > 0) - (c < 0)
        # irrational: never zero, refine until separated
        eps = Rat(1, 4)
        bits = current_budget().precision_bits
        for _ in range(bits):
            lo, hi = self.enclosure(eps)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            eps /= 16
        raise PrecisionError(f"sign undecided within precision budget: {self}")

    def compare(self, other) -> int:
        return (self - _as_expr(other)).sign()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def floor(self) -> int:
        if self.is_rational:
            return math.floor(self.c0)
        eps = Rat(1, 4)
        bits = current_budget().precision_bits
        for _ in range(bits):
            lo, hi = self.enclosure(eps)
            if math.floor(lo) == math.floor(hi):
                return math.floor(lo)
            eps /= 16
        raise PrecisionError(f"floor undecided within precision budget: {self}")

    def rep(self) -> "AngleExpr":
        """Representative with value in [0, 1)."""
        return self - self.floor()

    def eq_mod1(self, other) -> bool:
        d = self - _as_expr(other)
        return d.is_rational and d.c0.denominator == 1

    def __str__(self):
        parts = [str(self.c0)] if (self.c0 or not self.coeffs) else []
        for n, c in self.coeffs:
            parts.append(f"{c}*{n}")
        return " + ".join(parts)


def _as_expr(x) -> AngleExpr:
    if isinstance(x, AngleExpr):
        return x
    return AngleExpr(Rat(x), ())


def rational_angle(q) -> AngleExpr:
    return AngleExpr.rational(q)


def sqrt_expr(n: int) -> AngleExpr:
    """Exact sqrt(n) as an AngleExpr over a square-free base constant."""
    if n < 0:
        raise InputError("sqrt of negative integer")
    s, f = _squarefree_split(n)
    if f == 1:
        return AngleExpr.rational(s)
    name = f"sqrt{f}"
    _register(name, lambda eps, _f=f: _sqrt_interval(_f, eps))
    return AngleExpr.base(name, s)


def unit_angle(a: int, b: int, c: int) -> AngleExpr:
    """Log((a+bi)/c) / (2 pi i) in [0,1) for a rational point on the unit
    circle that is not a root of unity.

    The irrationality certificate is checked: a^2+b^2 = c^2 is required,
    and rational points on the circle are roots of unity exactly when
    a*b = 0 (Niven).  Distinct unit angles must have coprime moduli so
    that joint independence is certified by Gaussian-prime factorisation.
    """
    if a * a + b * b != c * c or c <= 0:
        raise InputError(f"({a}+{b}i)/{c} is not on the unit circle")
    if a == 0 or b == 0:
        raise CertificateError(f"({a}+{b}i)/{c} is a root of unity")
    g = math.gcd(math.gcd(abs(a), abs(b)), c)
    a, b, c = a // g, b // g, c // g
    name = f"uangle_{a}_{b}_{c}"
    for m, existing in _UNIT_MODULI.items():
        if m == c and existing != name:
            raise CertificateError(
                f"unit angle modulus {c} already carries {existing}; "
                "a second point over the same modulus is not certified independent"
            )
        if m != c and math.gcd(m, c) != 1:
            raise CertificateError(
                f"unit angle modulus {c} shares a factor with registered modulus {m}; "
                "joint independence not certified"
            )

    def refiner(eps, a=a, b=b, c=c):
        # reduce to first octant: t = arctan(y/x)/(2 pi) with 0<y<=x
        quarter = Rat(0)
        x, y = a, b
        if x < 0 and y > 0:
            quarter, x, y = Rat(1, 4), y, -x
        elif x < 0 and y < 0:
            quarter, x, y = Rat(1, 2), -x, -y
        elif x > 0 and y < 0:
            quarter, x, y = Rat(3, 4), -y, x
        flip = False
        if y > x:
            x, y = y, x
            flip = True
        at = _arctan_interval(Rat(y, x), eps * 4)
        pi = _pi_interval(Rat(1, 2 ** (max(16, (Rat(1, eps)).numerator.bit_length() + 8))))
        tp = _ival_div_pos(at, _ival_scale(pi, Rat(2)))
        if flip:
            tp = (Rat(1, 4) - tp[1], Rat(1, 4) - tp[0])
        return (quarter + tp[0], quarter + tp[1])

    if name not in _REGISTRY:
        _register(name, refiner)
        _UNIT_MODULI[c] = name
    return AngleExpr.base(name)


# ---------------------------------------------------------------------------
# the named constants used by the word zoo and the DSL

GOLDEN = (sqrt_expr(5) - 1) * Rat(1, 2)          # 0.618033...
GOLDEN_SQ = 1 - GOLDEN                            # 0.381966... = GOLDEN**2
FIB_XI = GOLDEN_SQ                                # Fibonacci interval start (fixture)
SQRT2M1 = sqrt_expr(2) - 1                        # 0.414213...
SALOMAA_THETA = 1 - sqrt_expr(2) * Rat(1, 2)      # 0.292893... (rotation of Salomaa's word)
ATAN34 = unit_angle(3, 4, 5)                      # 0.147583... (angle of (3+4i)/5)

NAMED_ANGLES: dict[str, AngleExpr] = {
    "golden": GOLDEN,
    "golden_sq": GOLDEN_SQ,
    "fib_xi": FIB_XI,
    "sqrt2m1": SQRT2M1,
    "salomaa_theta": SALOMAA_THETA,
    "atan34": ATAN34,
}
