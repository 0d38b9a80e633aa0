"""Linear enumerations of the positive rationals.

Three independent routes produce the same sequence 1/1, 1/2, 2/1, 1/3,
3/2, 2/3, 3/1, ...:

* ratios f(n)/f(n+1) of the Stern diatomic function f(1)=1, f(2n)=f(n),
  f(2n+1)=f(n)+f(n+1) (consecutive values are always coprime);
* Newman's constant-space successor step x' = 1/(2*floor(x) + 1 - x);
* breadth-first traversal of the Calkin-Wilf tree.

The agreement of the three is a theorem, so the implementations are kept
separate on purpose and the test suite compares them pairwise.

Also here: the ancient triple process that generates all ratios from
"1 1 1" by the two moves (x, y, z) -> (x, x+y, x+2y+z) and
(x+2y+z, y+z, z).  Every reachable triple has the shape (a*a, a*b, b*b)
and thus encodes the ratio a : b; pair-reducing the process yields exactly
the Calkin-Wilf child rule.
"""

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from fractree._backend import kernels
from fractree.fraction import ONE, Frac
from fractree.genealogy import path_to
from fractree.trees import TreeKind, node_at

__all__ = [
    "stern",
    "stern_pair",
    "cw_sequence",
    "iter_cw_sequence",
    "newman_successor",
    "iter_newman",
    "index_of",
    "fraction_at_index",
    "Triple",
    "triple_children",
    "triple_to_ratio",
]

_NEWMAN_BATCH = 4096


def stern(n: int) -> int:
    """The Stern diatomic value f(n), for n >= 1."""
    if not isinstance(n, int):
        raise TypeError("diatomic index must be an int")
    return kernels.stern_value(n)


def stern_pair(n: int) -> tuple[int, int]:
    """The consecutive pair (f(n), f(n+1))."""
    if not isinstance(n, int):
        raise TypeError("diatomic index must be an int")
    return kernels.stern_pair(n)


def iter_cw_sequence() -> Iterator[Frac]:
    """Terms f(n)/f(n+1) for n = 1, 2, ...; the Calkin-Wilf BFS order.

    Generated chunk by chunk from the diatomic recurrence, holding one
    tree row's worth of values at a time.
    """
    chunk = [1, 1]
    while True:
        for i in range(len(chunk) - 1):
            yield Frac._raw(chunk[i], chunk[i + 1])
        chunk = kernels.diatomic_next(chunk)


def cw_sequence(count: int) -> list[Frac]:
    """The first `count` terms f(n)/f(n+1); count >= 1."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return list(islice(iter_cw_sequence(), count))


def newman_successor(x: Frac) -> Frac:
    """The next fraction after x in the Calkin-Wilf BFS order.

    Evaluates 1/(2*floor(x) + 1 - x) exactly; the result is in lowest
    terms without reduction.
    """
    if x.num == 0 or x.den == 0:
        raise ValueError(f"{x} has no successor; need a positive finite fraction")
    p, q = x.num, x.den
    return Frac._raw(q, (2 * (p // q) + 1) * q - p)


def iter_newman(start: Frac = ONE) -> Iterator[Frac]:
    """Iterate the successor step from `start` (inclusive), forever."""
    if start.num == 0 or start.den == 0:
        raise ValueError(f"cannot iterate from {start}")
    num, den = start.num, start.den
    while True:
        batch = kernels.newman_run(num, den, _NEWMAN_BATCH)
        for n, d in batch:
            yield Frac._raw(n, d)
        n, d = batch[-1]
        num, den = d, (2 * (n // d) + 1) * d - n


def index_of(f: Frac, kind: TreeKind) -> int:
    """1-based breadth-first index of f in an unreduced tree."""
    if kind.reduced:
        raise ValueError("breadth-first indexing applies to the unreduced trees")
    if f.num == 0 or f.den == 0:
        raise ValueError(f"{f} is not a tree node")
    if kind is TreeKind.SB:
        bits = path_to(f).translate(str.maketrans("LR", "01"))
        return int("1" + bits, 2)
    p, q = f.num, f.den
    rev: list[str] = []
    if kind is TreeKind.CW:
        while (p, q) != (1, 1):
            if p < q:  # a left child p/(p+q)
                rev.append("0")
                q -= p
            else:  # a right child (p+q)/q
                rev.append("1")
                p -= q
    else:  # SA
        while (p, q) != (1, 1):
            if p > q:  # a left child (p+q)/q
                rev.append("0")
                p -= q
            else:  # a right child q/(p+q)
                rev.append("1")
                p, q = q - p, p
    return int("1" + "".join(reversed(rev)), 2)


def fraction_at_index(i: int, kind: TreeKind) -> Frac:
    """The BFS node at 1-based index i; inverse of index_of."""
    if i < 1:
        raise ValueError("breadth-first indices start at 1")
    r = i.bit_length() - 1
    return node_at(kind, r, i - (1 << r)).value


@dataclass(frozen=True)
class Triple:
    """One state of the ancient proportion process: (a*a, a*b, b*b).

    Validated by the local condition y*y == x*z with positive entries;
    the gcd-1 shape of reachable triples is a consequence of the process.
    """

    x: int
    y: int
    z: int

    def __post_init__(self):
        if self.x < 1 or self.y < 1 or self.z < 1:
            raise ValueError("triple entries must be positive")
        if self.y * self.y != self.x * self.z:
            raise ValueError(f"({self.x}, {self.y}, {self.z}) is not a ratio triple")


def triple_children(t: Triple) -> tuple[Triple, Triple]:
    """The two triples derived from (x, y, z) by the ancient rules."""
    mid = t.x + 2 * t.y + t.z
    return Triple(t.x, t.x + t.y, mid), Triple(mid, t.y + t.z, t.z)


def triple_to_ratio(t: Triple) -> Frac:
    """The ratio a/b encoded by a triple (a*a, a*b, b*b), in lowest terms."""
    return Frac(t.x, t.y)
