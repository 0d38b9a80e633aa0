"""Coordinates of a fraction relative to an interval.

A fraction f inside [lo, hi] is located by the pair of distances
m = |lo, f| and n = |f, hi|.  When the interval ends are adjacent, m and n
are coprime and act exactly like a numerator/denominator pair relative to
the interval: f = (n*lo.num + m*hi.num)/(n*lo.den + m*hi.den), already in
lowest terms, and distances between fractions equal distances between
their coordinate pairs.
"""

from math import gcd
from typing import NamedTuple

from fractree.fraction import Frac, Interval, distance

__all__ = ["Coordinates", "coordinates_of", "fraction_at", "coordinate_distance"]


class Coordinates(NamedTuple):
    m: int  # distance from the interval's low end
    n: int  # distance to the interval's high end


def coordinates_of(f: Frac, interval: Interval) -> Coordinates:
    """Distances (m, n) of f to the interval ends; 0 at the matching end."""
    lo, hi = interval.lo, interval.hi
    m = lo.den * f.num - lo.num * f.den
    n = f.den * hi.num - f.num * hi.den
    if m < 0 or n < 0:
        raise ValueError(f"{f} lies outside {interval}")
    return Coordinates(m, n)


def fraction_at(coords: Coordinates, interval: Interval) -> Frac:
    """Rebuild the fraction at coordinates (m, n) in an adjacent-bound interval.

    Requires gcd(m, n) == 1; the result is then in lowest terms by
    construction and round-trips through coordinates_of.  (0, 1) and (1, 0)
    give the interval ends.
    """
    if not interval.is_adjacent_bound():
        raise ValueError(f"{interval} is not bounded by adjacent fractions")
    m, n = coords
    if m < 0 or n < 0:
        raise ValueError(f"coordinates must be nonnegative, got {coords}")
    if gcd(m, n) != 1:  # also rejects (0, 0)
        raise ValueError(f"coordinates must be coprime, got {coords}")
    lo, hi = interval.lo, interval.hi
    return Frac._raw(n * lo.num + m * hi.num, n * lo.den + m * hi.den)


def coordinate_distance(f1: Frac, f2: Frac, interval: Interval) -> int:
    """Distance of an ordered pair inside an adjacent-bound interval.

    Computed both directly and as the cross product of the coordinate
    pairs; the two always agree, and disagreement raises.
    """
    if not interval.is_adjacent_bound():
        raise ValueError(f"{interval} is not bounded by adjacent fractions")
    m1, n1 = coordinates_of(f1, interval)
    m2, n2 = coordinates_of(f2, interval)
    d = distance(f1, f2)
    if n1 * m2 - m1 * n2 != d:
        raise AssertionError(
            f"coordinate distance of ({f1}, {f2}) in {interval} disagrees with {d}"
        )
    return d
