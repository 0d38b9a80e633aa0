"""The four classical binary trees of positive fractions and their rows.

Stern-Brocot (SB) places each fraction as the mediant of its nearest left
and right ancestors; Calkin-Wilf (CW) gives p/q the children p/(p+q) and
(p+q)/q; Shen-Andreev (SA) gives it (p+q)/q and q/(p+q).  All three hold
every positive fraction exactly once and are row-wise equivalent: their
rows agree as multisets and are closed under reciprocals.

Deleting the fractions > 1 together with 1/1 from any of them (keeping the
surviving positions adjacent, row by row) leaves a tree rooted at 1/2 that
holds exactly the fractions in (0, 1).  From SA this is the Kepler tree
with child rule p/q -> p/(p+q), q/(p+q); from SB it is SB's own left
subtree; the reduced CW tree works out to the rule p/q -> p/(p+q),
q/(2q-p).

Rows are generated iteratively, each from the previous one, so memory
stays proportional to a single row; (row, index) random access replays the
child choices encoded by the index's binary digits.
"""

from enum import Enum
from typing import Iterator, NamedTuple

from fractree._backend import kernels
from fractree._kernels_py import RULE_CW, RULE_CW_REDUCED, RULE_KEPLER, RULE_SA
from fractree.fraction import Frac, mediant
from fractree.genealogy import parents

__all__ = [
    "TreeKind",
    "TreeNode",
    "children",
    "row",
    "iter_rows",
    "node_at",
    "rows_equivalent",
    "reduce_tree",
]


class TreeKind(Enum):
    SB = "sb"
    CW = "cw"
    SA = "sa"
    KEPLER = "kepler"
    SB_REDUCED = "sb-reduced"
    CW_REDUCED = "cw-reduced"

    @classmethod
    def parse(cls, text: str) -> "TreeKind":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown tree kind: {text!r}") from None

    @property
    def reduced(self) -> bool:
        """True for the trees holding only the fractions in (0, 1)."""
        return self in (TreeKind.KEPLER, TreeKind.SB_REDUCED, TreeKind.CW_REDUCED)


class TreeNode(NamedTuple):
    value: Frac
    row: int
    index: int  # 0-based position in the row, left to right


_RULE_OF = {
    TreeKind.CW: RULE_CW,
    TreeKind.SA: RULE_SA,
    TreeKind.KEPLER: RULE_KEPLER,
    TreeKind.CW_REDUCED: RULE_CW_REDUCED,
}

_ROOT_OF = {
    TreeKind.SB: (1, 1),
    TreeKind.CW: (1, 1),
    TreeKind.SA: (1, 1),
    TreeKind.KEPLER: (1, 2),
    TreeKind.SB_REDUCED: (1, 2),
    TreeKind.CW_REDUCED: (1, 2),
}

# initial mediant boundary for the two trees generated by subdivision
_BOUNDARY_OF = {
    TreeKind.SB: [0, 1, 1, 0],
    TreeKind.SB_REDUCED: [0, 1, 1, 1],
}


def _require_node(kind: TreeKind, f: Frac) -> None:
    if f.num == 0 or f.den == 0:
        raise ValueError(f"{f} is not a tree node")
    if kind.reduced and f.num >= f.den:
        raise ValueError(f"{f} is not a node of {kind.value}: need a value < 1")


def children(kind: TreeKind, f: Frac) -> tuple[Frac, Frac]:
    """The (left, right) children of a node in the given tree."""
    _require_node(kind, f)
    p, q = f.num, f.den
    if kind in (TreeKind.SB, TreeKind.SB_REDUCED):
        left, right = parents(f)
        return mediant(left, f), mediant(f, right)
    if kind is TreeKind.CW:
        return Frac._raw(p, p + q), Frac._raw(p + q, q)
    if kind is TreeKind.SA:
        return Frac._raw(p + q, q), Frac._raw(q, p + q)
    if kind is TreeKind.KEPLER:
        return Frac._raw(p, p + q), Frac._raw(q, p + q)
    return Frac._raw(p, p + q), Frac._raw(q, 2 * q - p)  # reduced CW


def iter_rows(kind: TreeKind) -> Iterator[list[Frac]]:
    """Yield rows 0, 1, 2, ... of the tree, each a left-to-right list."""
    if kind in _BOUNDARY_OF:
        boundary = _BOUNDARY_OF[kind]
        while True:
            boundary = kernels.sb_refine(boundary)
            npairs = len(boundary) // 2
            yield [
                Frac._raw(boundary[2 * j], boundary[2 * j + 1])
                for j in range(1, npairs, 2)
            ]
    else:
        rule = _RULE_OF[kind]
        flat = list(_ROOT_OF[kind])
        while True:
            yield [Frac._raw(flat[i], flat[i + 1]) for i in range(0, len(flat), 2)]
            flat = kernels.next_row(rule, flat)


def row(kind: TreeKind, r: int) -> list[Frac]:
    """Row r of the tree (row 0 is the root row); length 2**r."""
    if r < 0:
        raise ValueError("row number must be nonnegative")
    rows = iter_rows(kind)
    for _ in range(r):
        next(rows)
    return next(rows)


def node_at(kind: TreeKind, r: int, index: int) -> TreeNode:
    """Random access to the node at (row, index), replaying index's bits."""
    if r < 0:
        raise ValueError("row number must be nonnegative")
    if not 0 <= index < (1 << r):
        raise ValueError(f"row {r} has indices 0..{(1 << r) - 1}, got {index}")
    bits = [(index >> (r - 1 - i)) & 1 for i in range(r)]
    if kind in _BOUNDARY_OF:
        ln, ld, hn, hd = _BOUNDARY_OF[kind]
        for bit in bits:
            mn, md = ln + hn, ld + hd
            if bit:
                ln, ld = mn, md
            else:
                hn, hd = mn, md
        return TreeNode(Frac._raw(ln + hn, ld + hd), r, index)
    p, q = _ROOT_OF[kind]
    rule = _RULE_OF[kind]
    for bit in bits:
        p, q = kernels.next_row(rule, [p, q])[2 * bit : 2 * bit + 2]
    return TreeNode(Frac._raw(p, q), r, index)


def rows_equivalent(kind1: TreeKind, kind2: TreeKind, r: int) -> bool:
    """Whether row r of two unreduced trees agrees as a multiset."""
    if kind1.reduced or kind2.reduced:
        raise ValueError("row-wise equivalence is defined for the unreduced trees")
    return sorted(row(kind1, r)) == sorted(row(kind2, r))


def reduce_tree(kind: TreeKind) -> TreeKind:
    """The tree left after deleting 1/1 and everything above it."""
    mapping = {
        TreeKind.SB: TreeKind.SB_REDUCED,
        TreeKind.CW: TreeKind.CW_REDUCED,
        TreeKind.SA: TreeKind.KEPLER,
    }
    if kind not in mapping:
        raise ValueError(f"{kind.value} is already reduced")
    return mapping[kind]
