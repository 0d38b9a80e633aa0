"""Pure-Python sequence kernels.

These are the hot inner loops of the package: Stern diatomic evaluation,
Newman successor stepping, child-rule row expansion, and mediant boundary
refinement.  The compiled module ``fractree._kernels`` mirrors every
function here with identical semantics; ``fractree._backend`` picks one of
the two at import time.

All functions work on plain ints and flat lists of ints so that both
backends share one calling convention.  Child-rule codes for next_row:
0 = Calkin-Wilf, 1 = Shen-Andreev, 2 = Kepler, 3 = reduced Calkin-Wilf.
"""

RULE_CW = 0
RULE_SA = 1
RULE_KEPLER = 2
RULE_CW_REDUCED = 3


def stern_value(n: int) -> int:
    """f(n) of the diatomic recurrence f(1)=1, f(2n)=f(n), f(2n+1)=f(n)+f(n+1).

    Evaluated by walking the binary digits of n while maintaining the pair
    (f(k), f(k+1)); no recursion, O(log n) steps.
    """
    if n < 1:
        raise ValueError("diatomic index must be >= 1")
    a = b = 1
    for shift in range(n.bit_length() - 2, -1, -1):
        if (n >> shift) & 1:
            a += b
        else:
            b += a
    return a


def stern_pair(n: int) -> tuple[int, int]:
    """The consecutive pair (f(n), f(n+1)); same digit walk as stern_value."""
    if n < 1:
        raise ValueError("diatomic index must be >= 1")
    a = b = 1
    for shift in range(n.bit_length() - 2, -1, -1):
        if (n >> shift) & 1:
            a += b
        else:
            b += a
    return a, b


def diatomic_next(chunk: list) -> list:
    """Expand [f(2^k), ..., f(2^(k+1))] to [f(2^(k+1)), ..., f(2^(k+2))].

    Even output slots copy the input; odd slots hold sums of neighbours.
    """
    if len(chunk) < 2:
        raise ValueError("chunk must hold at least two values")
    out = [0] * (2 * len(chunk) - 1)
    out[0::2] = chunk
    out[1::2] = [chunk[i] + chunk[i + 1] for i in range(len(chunk) - 1)]
    return out


def newman_run(num: int, den: int, count: int) -> list:
    """`count` successive terms of the successor iteration x' = 1/(2*floor(x)+1-x),
    starting at num/den inclusive, as (num, den) pairs in lowest terms."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if num < 1 or den < 1:
        raise ValueError("start must be a positive finite fraction")
    out = []
    for _ in range(count):
        out.append((num, den))
        num, den = den, (2 * (num // den) + 1) * den - num
    return out


def next_row(rule: int, row: list) -> list:
    """Apply a child rule to a flat [num, den, num, den, ...] tree row."""
    if not row or len(row) % 2:
        raise ValueError("flat row must hold (num, den) pairs")
    out = []
    if rule == RULE_CW:
        for i in range(0, len(row), 2):
            p, q = row[i], row[i + 1]
            out += (p, p + q, p + q, q)
    elif rule == RULE_SA:
        for i in range(0, len(row), 2):
            p, q = row[i], row[i + 1]
            out += (p + q, q, q, p + q)
    elif rule == RULE_KEPLER:
        for i in range(0, len(row), 2):
            p, q = row[i], row[i + 1]
            out += (p, p + q, q, p + q)
    elif rule == RULE_CW_REDUCED:
        for i in range(0, len(row), 2):
            p, q = row[i], row[i + 1]
            if p >= q:
                raise ValueError("reduced-tree nodes must be < 1")
            out += (p, p + q, q, 2 * q - p)
    else:
        raise ValueError(f"unknown child rule {rule}")
    return out


def sb_refine(boundary: list) -> list:
    """Insert the mediant of every consecutive pair of a flat boundary list.

    The boundary starts as [0, 1, 1, 0] (the ends of [0/1, 1/0]); each
    refinement doubles the interval count, and the inserted pairs are a
    Stern-Brocot tree row.
    """
    if len(boundary) < 4 or len(boundary) % 2:
        raise ValueError("boundary must hold at least two (num, den) pairs")
    out = []
    for i in range(0, len(boundary) - 2, 2):
        out += (
            boundary[i],
            boundary[i + 1],
            boundary[i] + boundary[i + 2],
            boundary[i + 1] + boundary[i + 3],
        )
    out += (boundary[-2], boundary[-1])
    return out
