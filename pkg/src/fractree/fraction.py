"""Nonnegative fractions in lowest terms and the distance calculus on them.

The value universe is the set of reduced fractions ``num/den`` with
``num, den >= 0``, which admits exactly two boundary elements: 0/1 (zero)
and 1/0 (infinity).  Ordering is by cross-multiplication, so 1/0 is the
maximum element and 0/1 the minimum.

The central notion is a normalized difference between ordered fractions
p/q < r/s, the integer ``q*r - p*s``, called their distance.  It is always
at least 1; a pair at distance exactly 1 is *adjacent* (a relation that
generalizes consecutive integers).  Mediants subdivide adjacent-bound
intervals and medidifferences undo that subdivision.

Deliberately absent: negative rationals, floats, and general rational
arithmetic (use :mod:`fractions` for that).  Exact rational *values*
returned by error computations are :class:`fractions.Fraction` instances.
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Rational
from math import gcd

__all__ = [
    "Frac",
    "Interval",
    "AdjacencyCase",
    "ZERO",
    "ONE",
    "INF",
    "FULL_INTERVAL",
    "compare",
    "distance",
    "is_adjacent",
    "classify_adjacent_pair",
    "mediant",
    "medidifference",
    "normalized_error",
    "mediant_error",
]

_FRACTION_RE = re.compile(r"(\d+)/(\d+)\Z")


class Frac:
    """A nonnegative rational in lowest terms; ``den == 0`` encodes infinity.

    The constructor canonicalizes: ``Frac(6, 4)`` is 3/2, ``Frac(0, k)`` is
    0/1 and ``Frac(k, 0)`` is 1/0 for any k >= 1.  Only 0/0 is rejected.
    Instances are immutable values; equality is structural, which on lowest
    terms coincides with equality of values.
    """

    __slots__ = ("num", "den")

    num: int
    den: int

    def __init__(self, num: int, den: int):
        if num < 0 or den < 0:
            raise ValueError(f"fraction parts must be nonnegative, got {num}/{den}")
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a fraction")
        g = gcd(num, den)  # gcd(0, k) == k, which forces 0/k -> 0/1 and k/0 -> 1/0
        self.num = num // g
        self.den = den // g

    @classmethod
    def _raw(cls, num: int, den: int) -> "Frac":
        """Skip canonicalization; the caller guarantees the pair is coprime."""
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def parse(cls, text: str) -> "Frac":
        """Parse the ``num/den`` text form (base 10, no whitespace, no signs)."""
        m = _FRACTION_RE.match(text)
        if not m:
            raise ValueError(f"not a fraction literal: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def reciprocal(self) -> "Frac":
        """Swap numerator and denominator (0/1 and 1/0 swap with each other)."""
        return Frac._raw(self.den, self.num)

    def floor(self) -> int:
        if self.den == 0:
            raise ValueError("1/0 has no integer part")
        return self.num // self.den

    def as_rational(self) -> Rational:
        """The exact value as a :class:`fractions.Fraction` (finite only)."""
        if self.den == 0:
            raise ValueError("1/0 is not a rational value")
        return Rational(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Frac({self.num}, {self.den})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Frac):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __lt__(self, other: "Frac") -> bool:
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "Frac") -> bool:
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: "Frac") -> bool:
        return self.num * other.den > other.num * self.den

    def __ge__(self, other: "Frac") -> bool:
        return self.num * other.den >= other.num * self.den


ZERO = Frac(0, 1)
ONE = Frac(1, 1)
INF = Frac(1, 0)


def compare(a: Frac, b: Frac) -> int:
    """Three-way comparison: -1 if a < b, 0 if equal, 1 if a > b."""
    lhs = a.num * b.den
    rhs = b.num * a.den
    return (lhs > rhs) - (lhs < rhs)


@dataclass(frozen=True)
class Interval:
    """An ordered pair of fractions lo < hi.

    Ends need not be adjacent; operations that rely on adjacency check it
    and raise otherwise.
    """

    lo: Frac
    hi: Frac

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"interval needs lo < hi, got [{self.lo}, {self.hi}]")

    def is_adjacent_bound(self) -> bool:
        return distance(self.lo, self.hi) == 1

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


FULL_INTERVAL = Interval(ZERO, INF)


def distance(a: Frac, b: Frac) -> int:
    """The normalized difference a.den*b.num - a.num*b.den of a pair a < b.

    Always an integer >= 1; equal to 1 exactly for adjacent pairs.
    """
    if not a < b:
        raise ValueError(f"distance needs an ordered pair, got {a} >= {b}")
    return a.den * b.num - a.num * b.den


def is_adjacent(a: Frac, b: Frac) -> bool:
    """True when the pair is at distance 1, in either argument order."""
    if b < a:
        a, b = b, a
    return a.den * b.num - a.num * b.den == 1


class AdjacencyCase(Enum):
    """The four mutually exclusive shapes an adjacent ordered pair can take."""

    BOUNDARY = "boundary"                  # (0/1, 1/0)
    UNIT_FRACTIONS = "unit-fractions"      # (1/(n+1), 1/n), n >= 0
    INTEGERS = "integers"                  # (n/1, (n+1)/1), n >= 0
    STRICTLY_ORDERED = "strictly-ordered"  # componentwise strict in one direction


def classify_adjacent_pair(a: Frac, b: Frac) -> AdjacencyCase:
    """Sort an adjacent pair a < b into exactly one of the four shapes."""
    if not a < b or distance(a, b) != 1:
        raise ValueError(f"({a}, {b}) is not an ordered adjacent pair")
    if a == ZERO and b == INF:
        return AdjacencyCase.BOUNDARY
    if a.num == 1 and b.num == 1:
        return AdjacencyCase.UNIT_FRACTIONS
    if a.den == 1 and b.den == 1:
        return AdjacencyCase.INTEGERS
    ascending = a.num < b.num and a.den < b.den
    descending = a.num > b.num and a.den > b.den
    if not (ascending or descending):
        raise AssertionError(f"adjacent pair ({a}, {b}) fits no case")
    return AdjacencyCase.STRICTLY_ORDERED


def mediant(a: Frac, b: Frac) -> Frac:
    """The fraction (a.num + b.num)/(a.den + b.den).

    For an adjacent pair the sum form is already in lowest terms and lies
    strictly between the two; in general the constructor reduces it.
    """
    return Frac(a.num + b.num, a.den + b.den)


def medidifference(a: Frac, b: Frac) -> Frac:
    """The componentwise difference of an ordered adjacent pair a < b.

    One of the two subtraction directions is componentwise nonnegative;
    that one is taken, so the result is |a.num - b.num| / |a.den - b.den|.
    It is adjacent to both inputs, and replacing the componentwise larger
    end of [a, b] with it recovers the interval that [a, b] subdivides.
    Degenerate shapes: a unit-fraction pair yields 0/1 and an integer pair
    yields 1/0.  The pair (0/1, 1/0) has no medidifference (both
    directions would give 0/0) and is rejected.
    """
    if not a < b or distance(a, b) != 1:
        raise ValueError(f"({a}, {b}) is not an ordered adjacent pair")
    if a == ZERO and b == INF:
        raise ValueError("(0/1, 1/0) has no medidifference")
    if b.num >= a.num and b.den >= a.den:
        return Frac(b.num - a.num, b.den - a.den)
    return Frac(a.num - b.num, a.den - b.den)


def normalized_error(x, f: Frac) -> Rational:
    """The error of approximating the value x by f, scaled by f.den.

    Computes |f.den * x - f.num| exactly.  ``x`` may be a finite Frac, a
    :class:`fractions.Fraction`, or an int; floats are rejected.
    """
    if f.is_infinite:
        raise ValueError("cannot approximate by 1/0")
    x = _as_rational_value(x)
    return abs(f.den * x - f.num)


def mediant_error(interval: Interval) -> Rational:
    """The worst error of taking the interval's mediant for a value in it.

    Equals distance(lo, hi) / (lo.den + hi.den), exactly.
    """
    if interval.hi.is_infinite:
        raise ValueError("interval must have a finite upper end")
    return Rational(
        distance(interval.lo, interval.hi), interval.lo.den + interval.hi.den
    )


def _as_rational_value(x) -> Rational:
    if isinstance(x, Frac):
        return x.as_rational()
    if isinstance(x, (Rational, int)):
        return Rational(x)
    raise TypeError(f"need an exact rational value, got {type(x).__name__}")
