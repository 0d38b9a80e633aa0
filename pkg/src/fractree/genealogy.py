"""Parent structure of fractions.

Every positive fraction is the mediant of exactly one adjacent pair, its
*parents*; one parent is always itself a parent of the other and so doubles
as a grandparent.  Starting from the full interval [0/1, 1/0] and repeatedly
subdividing at the mediant reaches every fraction, which gives each one a
unique left/right descent path.  Extension is the inverse of subdivision:
it recovers the interval of which a given adjacent-bound interval is one
half, and iterating it to the fixed point [0/1, 1/0] runs Euclid's
algorithm on numerators and denominators simultaneously.
"""

from enum import Enum
from typing import NamedTuple

from fractree.fraction import (
    INF,
    ONE,
    ZERO,
    Frac,
    Interval,
    is_adjacent,
    medidifference,
)

__all__ = [
    "Handedness",
    "ParentPair",
    "subdivide",
    "extend",
    "parents",
    "handedness",
    "path_to",
    "fraction_of_path",
    "confining_unit_interval",
]


class Handedness(Enum):
    LEFT = "left"
    RIGHT = "right"
    ROOT = "root"


class ParentPair(NamedTuple):
    """The unique adjacent pair whose mediant is a given fraction."""

    left: Frac
    right: Frac


def _require_adjacent_bound(interval: Interval) -> None:
    if not interval.is_adjacent_bound():
        raise ValueError(f"interval {interval} is not bounded by adjacent fractions")


def _require_positive_finite(f: Frac) -> None:
    if f.num == 0 or f.den == 0:
        raise ValueError(f"{f} is a boundary fraction; need a positive finite one")


def subdivide(interval: Interval) -> tuple[Interval, Interval]:
    """Split an adjacent-bound interval at its mediant into two such halves."""
    _require_adjacent_bound(interval)
    lo, hi = interval.lo, interval.hi
    # adjacent ends keep the mediant's sum form in lowest terms
    m = Frac._raw(lo.num + hi.num, lo.den + hi.den)
    return Interval(lo, m), Interval(m, hi)


def extend(interval: Interval) -> Interval:
    """The unique adjacent-bound interval that the given one is a half of.

    The componentwise larger end is the mediant of the other end and the
    pair's medidifference, so it is the one replaced.  Only [0/1, 1/0] has
    no parent interval.
    """
    _require_adjacent_bound(interval)
    lo, hi = interval.lo, interval.hi
    if lo == ZERO and hi == INF:
        raise ValueError("[0/1, 1/0] has no parent interval")
    third = medidifference(lo, hi)
    if hi.num >= lo.num and hi.den >= lo.den:
        return Interval(lo, third)
    return Interval(third, hi)


def parents(f: Frac) -> ParentPair:
    """The adjacent pair whose mediant is f, found by interval descent."""
    _require_positive_finite(f)
    ln, ld = 0, 1
    hn, hd = 1, 0
    while True:
        mn, md = ln + hn, ld + hd
        side = f.num * md - mn * f.den
        if side == 0:
            return ParentPair(Frac._raw(ln, ld), Frac._raw(hn, hd))
        if side < 0:
            hn, hd = mn, md
        else:
            ln, ld = mn, md


def handedness(f: Frac) -> Handedness:
    """Which of f's parents doubles as its grandparent.

    A fraction is RIGHT when its left parent is also a parent of its right
    parent, LEFT in the mirrored situation, and ROOT for 1/1.  The younger
    parent is the componentwise larger one, which decides the test without
    a second descent.
    """
    _require_positive_finite(f)
    if f == ONE:
        return Handedness.ROOT
    left, right = parents(f)
    if right.num >= left.num and right.den >= left.den:
        return Handedness.RIGHT
    return Handedness.LEFT


def path_to(f: Frac) -> str:
    """The L/R descent path from [0/1, 1/0] whose final mediant is f.

    Each step compares f with the current mediant and keeps the half that
    contains it; the empty path denotes 1/1.  Step count equals the sum of
    the continued-fraction digits of f, so inputs like 1/n take n steps.
    """
    _require_positive_finite(f)
    ln, ld = 0, 1
    hn, hd = 1, 0
    steps: list[str] = []
    while True:
        mn, md = ln + hn, ld + hd
        side = f.num * md - mn * f.den
        if side == 0:
            return "".join(steps)
        if side < 0:
            steps.append("L")
            hn, hd = mn, md
        else:
            steps.append("R")
            ln, ld = mn, md


def fraction_of_path(path: str) -> Frac:
    """Replay a string over {L, R} from [0/1, 1/0]; inverse of path_to."""
    ln, ld = 0, 1
    hn, hd = 1, 0
    for step in path:
        mn, md = ln + hn, ld + hd
        if step == "L":
            hn, hd = mn, md
        elif step == "R":
            ln, ld = mn, md
        else:
            raise ValueError(f"path steps must be 'L' or 'R', got {step!r}")
    return Frac._raw(ln + hn, ld + hd)


def confining_unit_interval(a: Frac, b: Frac) -> int:
    """The integer n with n <= a < b <= n+1 enclosing a finite adjacent pair."""
    if b.is_infinite:
        raise ValueError("pair must be finite")
    if not a < b or not is_adjacent(a, b):
        raise ValueError(f"({a}, {b}) is not an ordered adjacent pair")
    return a.num // a.den
