"""Best approximation under a denominator bound, and adjacency witnesses.

best_bounded answers the watchmaker's question: which fraction with
denominator at most D comes closest to a given target?  It descends from
[0/1, 1/0] by mediant subdivision until the next mediant would exceed the
bound (or hits the target exactly); the final bracket is the answer
candidate pair.  Soundness rests on the fact that every fraction strictly
inside an adjacent-bound interval has a denominator larger than both
ends'.  That fact is an adjacency criterion in its own right, and
verify_adjacency_by_denominators exercises it via a direct scan.
"""

from dataclasses import dataclass
from fractions import Fraction as Rational
from typing import Iterator

from fractree.fraction import Frac, Interval, _as_rational_value
from fractree.genealogy import parents

__all__ = [
    "ApproximationResult",
    "best_bounded",
    "adjacent_neighbors_within",
    "verify_adjacency_by_denominators",
]

_MODES = ("absolute", "normalized")


@dataclass(frozen=True)
class ApproximationResult:
    """Outcome of a bounded-denominator search.

    below <= target <= above and best is one of the two; when the target
    itself satisfies the bound all three equal the target.  The
    certificate interval is the last adjacent bracket of the descent and
    certifies that no admissible fraction lies strictly between its ends.
    """

    below: Frac
    above: Frac
    best: Frac
    interval_certificate: Interval


def _descend(target: Frac, max_den: int) -> Iterator[tuple[Frac, Frac, Frac]]:
    """Yield (lo, hi, mediant) triples of the bounded mediant descent.

    Stops after yielding the triple whose mediant either equals the target
    or overruns the denominator bound.
    """
    lo = Frac._raw(0, 1)
    hi = Frac._raw(1, 0)
    while True:
        m = Frac._raw(lo.num + hi.num, lo.den + hi.den)
        yield lo, hi, m
        if m.den > max_den or m == target:
            return
        if target < m:
            hi = m
        else:
            lo = m


def best_bounded(target: Frac, max_den: int, mode: str = "absolute") -> ApproximationResult:
    """The closest fraction to `target` with denominator <= max_den.

    Closeness is the absolute difference by default; mode="normalized"
    ranks candidates by denominator-scaled error instead.  Ties prefer the
    smaller denominator, then the smaller fraction.
    """
    if target.num == 0 or target.den == 0:
        raise ValueError(f"target must be a positive finite fraction, got {target}")
    if max_den < 1:
        raise ValueError("denominator bound must be >= 1")
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    for lo, hi, m in _descend(target, max_den):
        pass
    cert = Interval(lo, hi)
    if m == target and m.den <= max_den:
        return ApproximationResult(target, target, target, cert)
    # the bracket ends carry denominators within the bound: 1/0 cannot
    # survive to this point because integer mediants never overrun it
    t = target.as_rational()
    below, above = lo, hi
    diff_below = t - below.as_rational()
    diff_above = above.as_rational() - t
    if mode == "normalized":
        key_below = (below.den * diff_below, below.den)
        key_above = (above.den * diff_above, above.den)
    else:
        key_below = (diff_below, below.den)
        key_above = (diff_above, above.den)
    best = below if key_below <= key_above else above  # final tie: smaller value
    return ApproximationResult(below, above, best, cert)


def adjacent_neighbors_within(f: Frac, epsilon) -> tuple[Frac, Frac]:
    """Fractions adjacent to f on each side, both strictly within epsilon.

    Walks mediants from f's parents toward f; a neighbor with denominator
    b sits exactly 1/(b * f.den) away, so the minimal number of steps
    satisfying the strict bound is computed directly, which makes the
    output deterministic.  epsilon must be an exact positive rational.
    """
    if f.num == 0 or f.den == 0:
        raise ValueError(f"need a fraction strictly between 0/1 and 1/0, got {f}")
    eps = _as_rational_value(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    left_parent, right_parent = parents(f)
    left = _approach(left_parent, f, eps)
    right = _approach(right_parent, f, eps)
    return left, right


def _approach(parent: Frac, f: Frac, eps: Rational) -> Frac:
    """The first mediant iterate of `parent` toward f within eps of it."""
    q = f.den
    # gap after k steps is 1/((parent.den + k*q) * q); want it < eps, i.e.
    # k * q*q * eps.num > eps.den - parent.den * q * eps.num
    lhs = q * q * eps.numerator
    rhs = eps.denominator - parent.den * q * eps.numerator
    k = max(rhs // lhs + 1, 1 if parent.is_infinite else 0)
    return Frac._raw(parent.num + k * f.num, parent.den + k * f.den)


def verify_adjacency_by_denominators(interval: Interval, scan_bound: int) -> bool:
    """Adjacency check by scanning denominators, independent of the distance.

    Returns True when no fraction with denominator at most
    max(lo.den, hi.den) lies strictly inside the interval, which holds
    exactly for adjacent ends.  scan_bound must cover that maximum; it is
    a caller-supplied safety cap, not the scan limit.
    """
    lo, hi = interval.lo, interval.hi
    if hi.is_infinite:
        raise ValueError("interval must have a finite upper end")
    limit = max(lo.den, hi.den)
    if scan_bound < limit:
        raise ValueError(f"scan bound {scan_bound} below the needed {limit}")
    for d in range(1, limit + 1):
        n = lo.num * d // lo.den + 1  # least numerator with n/d > lo
        if n * hi.den < hi.num * d:
            return False
    return True
