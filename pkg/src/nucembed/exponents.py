"""Exact extended-rational arithmetic and the embedding exponent algebra.

Every decision in this package reduces to comparing a handful of derived
exponents: the resolution gap ``delta``, the duality gap index ``p_star``,
the diagonal-summability exponent ``tong_exponent`` and the wavelet shift
``sigma``.  All four are computed exactly over Q extended by +infinity, so
boundary cases (equalities) dispatch without floating-point fuzz.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "ExtRat",
    "INF",
    "SpaceParams",
    "delta",
    "p_star",
    "tong_exponent",
    "sigma",
]

_INT_RE = re.compile(r"^[+-]?\d+$")
_DECIMAL_RE = re.compile(r"^[+-]?\d+\.\d+$")
_RATIO_RE = re.compile(r"^[+-]?\d+/\d+$")

RatLike = Union["ExtRat", Fraction, int, str]


def _parse(text: str) -> Fraction | None:
    """Parse the rational literal grammar ``a/b | a | a.b | inf``.

    Decimal literals are exact (0.1 means 1/10).  Returns None for ``inf``.
    """
    s = text.strip()
    if s.lower() == "inf":
        return None
    if _INT_RE.match(s) or _DECIMAL_RE.match(s):
        return Fraction(s)
    if _RATIO_RE.match(s):
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in rational literal {text!r}")
        return Fraction(int(num), int(den))
    raise ValueError(f"not a rational literal: {text!r}")


class ExtRat:
    """An exact rational number or +infinity.

    Values are immutable.  Arithmetic is defined only where the result is
    unambiguous (``inf - inf`` and ``inf / inf`` raise).  The reciprocal of
    +infinity is exactly 0 and the reciprocal of 0 is +infinity, which keeps
    every criterion comparison inside plain rational arithmetic.
    """

    __slots__ = ("_frac",)

    _frac: Fraction | None  # None encodes +infinity

    def __init__(self, value: RatLike = 0):
        if isinstance(value, ExtRat):
            self._frac = value._frac
        elif isinstance(value, Fraction):
            self._frac = value
        elif isinstance(value, int):
            self._frac = Fraction(value)
        elif isinstance(value, str):
            self._frac = _parse(value)
        else:
            raise TypeError(f"cannot build ExtRat from {type(value).__name__}")

    @classmethod
    def infinity(cls) -> "ExtRat":
        obj = cls.__new__(cls)
        obj._frac = None
        return obj

    @property
    def is_infinite(self) -> bool:
        return self._frac is None

    def as_fraction(self) -> Fraction:
        if self._frac is None:
            raise ValueError("infinite value has no Fraction form")
        return self._frac

    def reciprocal(self) -> "ExtRat":
        if self._frac is None:
            return ExtRat(0)
        if self._frac == 0:
            return ExtRat.infinity()
        return ExtRat(1 / self._frac)

    # -- arithmetic ----------------------------------------------------

    def __neg__(self) -> "ExtRat":
        if self._frac is None:
            raise ValueError("negation of +inf is not representable")
        return ExtRat(-self._frac)

    def __add__(self, other: RatLike) -> "ExtRat":
        other = other if isinstance(other, ExtRat) else ExtRat(other)
        if self._frac is None or other._frac is None:
            return ExtRat.infinity()
        return ExtRat(self._frac + other._frac)

    __radd__ = __add__

    def __sub__(self, other: RatLike) -> "ExtRat":
        other = other if isinstance(other, ExtRat) else ExtRat(other)
        if other._frac is None:
            raise ValueError("subtracting +inf is indeterminate")
        if self._frac is None:
            return ExtRat.infinity()
        return ExtRat(self._frac - other._frac)

    def __mul__(self, other: RatLike) -> "ExtRat":
        other = other if isinstance(other, ExtRat) else ExtRat(other)
        if self._frac is None or other._frac is None:
            finite = self._frac if self._frac is not None else other._frac
            if finite is not None and finite <= 0:
                raise ValueError("inf * nonpositive is indeterminate here")
            return ExtRat.infinity()
        return ExtRat(self._frac * other._frac)

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike) -> "ExtRat":
        other = other if isinstance(other, ExtRat) else ExtRat(other)
        if self._frac is None and other._frac is None:
            raise ValueError("inf / inf is indeterminate")
        if other._frac is None:
            return ExtRat(0)
        if other._frac == 0:
            raise ZeroDivisionError("division by zero ExtRat")
        if self._frac is None:
            return ExtRat.infinity()
        return ExtRat(self._frac / other._frac)

    # -- comparisons (total order, +inf greatest) ------------------------

    def _pair(self, other: RatLike):
        other = other if isinstance(other, ExtRat) else ExtRat(other)
        a: object = self._frac if self._frac is not None else math.inf
        b: object = other._frac if other._frac is not None else math.inf
        return a, b

    def __eq__(self, other) -> bool:
        if not isinstance(other, (ExtRat, Fraction, int, str)):
            return NotImplemented
        a, b = self._pair(other)
        return a == b

    def __lt__(self, other: RatLike) -> bool:
        a, b = self._pair(other)
        return a < b

    def __le__(self, other: RatLike) -> bool:
        a, b = self._pair(other)
        return a <= b

    def __gt__(self, other: RatLike) -> bool:
        a, b = self._pair(other)
        return a > b

    def __ge__(self, other: RatLike) -> bool:
        a, b = self._pair(other)
        return a >= b

    def __hash__(self):
        return hash(self._frac) if self._frac is not None else hash(math.inf)

    # -- conversions -----------------------------------------------------

    def __float__(self) -> float:
        return math.inf if self._frac is None else float(self._frac)

    def __str__(self) -> str:
        if self._frac is None:
            return "inf"
        if self._frac.denominator == 1:
            return str(self._frac.numerator)
        return f"{self._frac.numerator}/{self._frac.denominator}"

    def __repr__(self) -> str:
        return f"ExtRat({str(self)!r})"


INF = ExtRat.infinity()


def _inv(p: RatLike) -> Fraction:
    """1/p as an exact Fraction, with 1/inf = 0.  p must be positive."""
    p = p if isinstance(p, ExtRat) else ExtRat(p)
    if p.is_infinite:
        return Fraction(0)
    f = p.as_fraction()
    if f <= 0:
        raise ValueError(f"integrability index must be positive, got {p}")
    return 1 / f


@dataclass(frozen=True)
class SpaceParams:
    """Parameters of one smoothness space: kind in {B, F}, smoothness s,
    integrability p, fine index q, ambient dimension d.

    p and q are admitted in the full quasi-Banach range (0, inf]; operations
    restricted to the Banach range check that themselves.
    """

    kind: str
    s: Fraction
    p: ExtRat
    q: ExtRat
    d: int

    def __post_init__(self):
        if self.kind not in ("B", "F"):
            raise ValueError(f"kind must be 'B' or 'F', got {self.kind!r}")
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "p", self.p if isinstance(self.p, ExtRat) else ExtRat(self.p))
        object.__setattr__(self, "q", self.q if isinstance(self.q, ExtRat) else ExtRat(self.q))
        if not (isinstance(self.d, int) and self.d >= 1):
            raise ValueError(f"dimension must be a positive integer, got {self.d!r}")
        if not self.p > 0:
            raise ValueError("p must be positive")
        if not self.q > 0:
            raise ValueError("q must be positive")


def delta(s1: Fraction, p1: RatLike, s2: Fraction, p2: RatLike, d: int) -> Fraction:
    """Resolution gap delta = s1 - d/p1 - s2 + d/p2 (exact)."""
    return Fraction(s1) - d * _inv(p1) - Fraction(s2) + d * _inv(p2)


def p_star(p1: RatLike, p2: RatLike) -> ExtRat:
    """Duality gap index: 1/p_star = max(1/p2 - 1/p1, 0); +inf when p1 <= p2."""
    gap = _inv(p2) - _inv(p1)
    if gap <= 0:
        return ExtRat.infinity()
    return ExtRat(1 / gap)


def tong_exponent(r1: RatLike, r2: RatLike) -> ExtRat:
    """Summability exponent governing nuclearity of diagonal maps l_r1 -> l_r2:

        1/t = 1 - (1/r1 - 1/r2)_+

    so t = 1 when r2 <= r1, t = +inf exactly at (r1, r2) = (1, inf), and
    t is finite rational otherwise.  Requires the Banach range [1, inf].
    """
    r1 = r1 if isinstance(r1, ExtRat) else ExtRat(r1)
    r2 = r2 if isinstance(r2, ExtRat) else ExtRat(r2)
    if r1 < 1 or r2 < 1:
        raise ValueError(f"tong_exponent needs r1, r2 in [1, inf], got ({r1}, {r2})")
    inv_t = 1 - max(_inv(r1) - _inv(r2), Fraction(0))
    if inv_t == 0:
        return ExtRat.infinity()
    return ExtRat(1 / inv_t)


def sigma(s: Fraction, p: RatLike, d: int) -> Fraction:
    """Sequence-model smoothness shift sigma = s + d/2 - d/p (exact)."""
    return Fraction(s) + Fraction(d, 2) - d * _inv(p)
