"""Shared test utilities: exhaustive enumerations, oracles, frozen rows."""

from itertools import product
from math import gcd

from fractree import Frac, INF, ZERO

# First five rows of each tree, exactly as the plain CLI format emits them.
FIGURE_ROWS = {
    "sb": [
        "1/1",
        "1/2 2/1",
        "1/3 2/3 3/2 3/1",
        "1/4 2/5 3/5 3/4 4/3 5/3 5/2 4/1",
        "1/5 2/7 3/8 3/7 4/7 5/8 5/7 4/5 5/4 7/5 8/5 7/4 7/3 8/3 7/2 5/1",
    ],
    "cw": [
        "1/1",
        "1/2 2/1",
        "1/3 3/2 2/3 3/1",
        "1/4 4/3 3/5 5/2 2/5 5/3 3/4 4/1",
        "1/5 5/4 4/7 7/3 3/8 8/5 5/7 7/2 2/7 7/5 5/8 8/3 3/7 7/4 4/5 5/1",
    ],
    "sa": [
        "1/1",
        "2/1 1/2",
        "3/1 1/3 3/2 2/3",
        "4/1 1/4 4/3 3/4 5/2 2/5 5/3 3/5",
        "5/1 1/5 5/4 4/5 7/3 3/7 7/4 4/7 7/2 2/7 7/5 5/7 8/3 3/8 8/5 5/8",
    ],
    "kepler": [
        "1/2",
        "1/3 2/3",
        "1/4 3/4 2/5 3/5",
        "1/5 4/5 3/7 4/7 2/7 5/7 3/8 5/8",
        "1/6 5/6 4/9 5/9 3/10 7/10 4/11 7/11 2/9 7/9 5/12 7/12 3/11 8/11 5/13 8/13",
    ],
}


def finite_fractions(max_num, max_den, include_zero=False):
    """All reduced fractions with num <= max_num and den <= max_den."""
    out = [ZERO] if include_zero else []
    for d in range(1, max_den + 1):
        for n in range(1, max_num + 1):
            if gcd(n, d) == 1:
                out.append(Frac(n, d))
    return out


def fractions_by_total(max_total):
    """All positive finite reduced fractions with num + den <= max_total."""
    out = []
    for d in range(1, max_total):
        for n in range(1, max_total - d + 1):
            if gcd(n, d) == 1:
                out.append(Frac(n, d))
    return out


def adjacent_pairs(bound, include_boundary=True):
    """Every ordered adjacent pair (a, b) with all four entries <= bound.

    Solves a.den*b.num - a.num*b.den == 1 directly: for each reduced
    b = r/s the left partners' denominators fill one residue class mod s.
    """
    pairs = []
    if include_boundary:
        pairs.append((ZERO, INF))
        for n in range(1, bound + 1):
            pairs.append((Frac(n, 1), INF))
    for s in range(1, bound + 1):
        for r in range(1, bound + 1):
            if gcd(r, s) != 1:
                continue
            if s == 1:
                q_start, q_step = 1, 1
            else:
                q_start, q_step = pow(r, -1, s), s
            for q in range(q_start, bound + 1, q_step):
                p = (q * r - 1) // s
                if p > bound:
                    break
                pairs.append((Frac(p, q), Frac(r, s)))
    return pairs


def naive_stern_table(limit):
    """f(1..limit) filled iteratively straight from the recurrence."""
    f = [0] * (limit + 1)
    f[1] = 1
    for n in range(1, limit // 2 + 1):
        if 2 * n <= limit:
            f[2 * n] = f[n]
        if 2 * n + 1 <= limit:
            f[2 * n + 1] = f[n] + f[n + 1]
    return f


def all_paths(max_len):
    """Every L/R string with length 0..max_len."""
    for length in range(max_len + 1):
        for letters in product("LR", repeat=length):
            yield "".join(letters)
