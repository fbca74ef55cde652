"""Named loop fixtures and loop corpora.

Quaternion elements are indexed ``1, -1, i, -i, j, -j, k, -k`` -> ``0..7``, so
negation is ``index ^ 1``.  The 16-element Cayley (unit octonion) loop doubles
``Q8``: the pair ``(q, b)`` is stored at index ``2*q + b``.
"""
from __future__ import annotations

import itertools
import re

import numpy as np

from .core import CayleyTable

C12_TABLE = """\
0 1 2 3 4 5 6 7 8 9 10 11
1 2 0 4 5 3 7 8 6 10 11 9
2 0 1 5 3 4 8 6 7 11 9 10
3 4 5 0 1 2 9 10 11 6 7 8
4 5 3 1 2 0 10 11 9 7 8 6
5 3 4 2 0 1 11 9 10 8 6 7
6 7 8 10 11 9 0 1 2 5 3 4
7 8 6 11 9 10 1 2 0 3 4 5
8 6 7 9 10 11 2 0 1 4 5 3
9 10 11 8 6 7 3 4 5 2 0 1
10 11 9 6 7 8 4 5 3 0 1 2
11 9 10 7 8 6 5 3 4 1 2 0
"""

# Cycle strings for R_10, R_3, R_7 of the order-12 C-loop.
C12_GENERATORS = (
    "(0 10 1 11 2 9)(3 7 4 8 5 6)",
    "(0 3)(1 4)(2 5)(6 10)(7 11)(8 9)",
    "(0 7 2 6 1 8)(3 10 5 9 4 11)",
)


def c_loop_12() -> CayleyTable:
    """The non-associative C-loop of order 12."""
    return CayleyTable([[int(v) for v in row.split()] for row in C12_TABLE.splitlines()])


def cyclic(n: int) -> CayleyTable:
    ar = np.arange(n)
    return CayleyTable((ar[:, None] + ar[None, :]) % n)


def direct_product(a: CayleyTable, b: CayleyTable) -> CayleyTable:
    """Componentwise product; the pair ``(i, j)`` is element ``i*|b| + j``."""
    m = b.order
    A = np.repeat(np.repeat(a.cells, m, axis=0), m, axis=1)
    B = np.tile(b.cells, (a.order, a.order))
    return CayleyTable(A * m + B)


def dihedral(k: int = 4) -> CayleyTable:
    """Symmetry group of the regular ``k``-gon (order ``2k``).

    ``r^i`` is element ``i`` and ``s r^i`` is element ``k + i``.
    """
    n = 2 * k
    cells = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        fa, ra = divmod(a, k)
        for b in range(n):
            fb, rb = divmod(b, k)
            # (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^((-1)^fb ra + rb)
            r = (ra * (-1) ** fb + rb) % k
            cells[a, b] = ((fa + fb) % 2) * k + r
    return CayleyTable(cells)


# unit quaternions as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
_QUAT_AXIS_MUL = {
    (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
    (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
}


def _quat_index(sign, axis):
    return 2 * axis + (0 if sign > 0 else 1)


def _quat_decode(x):
    return (1 if x % 2 == 0 else -1), x // 2


def _quat_mul(x, y):
    sx, ax = _quat_decode(x)
    sy, ay = _quat_decode(y)
    if ax == 0:
        s, a = 1, ay
    elif ay == 0:
        s, a = 1, ax
    elif ax == ay:
        s, a = -1, 0
    else:
        s, a = _QUAT_AXIS_MUL[(ax, ay)]
    return _quat_index(sx * sy * s, a)


def _quat_conj(x):
    s, a = _quat_decode(x)
    return x if a == 0 else x ^ 1


def quaternion() -> CayleyTable:
    return CayleyTable([[_quat_mul(x, y) for y in range(8)] for x in range(8)])


def _neg(x):
    return x ^ 1


def cayley_loop() -> CayleyTable:
    """Unit octonion loop of order 16 by Cayley-Dickson doubling of Q8.

    ``(a, b)(c, d) = (ac - d*b, da + bc*)`` with ``*`` quaternion conjugation.
    """
    cells = np.empty((16, 16), dtype=np.int64)
    for x in range(16):
        p, px = divmod(x, 2)
        for y in range(16):
            q, qy = divmod(y, 2)
            # a unit has exactly one nonzero slot, so one summand survives
            if (px, qy) == (0, 0):      # (p,0)(q,0) = (pq, 0)
                r, bit = _quat_mul(p, q), 0
            elif (px, qy) == (0, 1):    # (p,0)(0,q) = (0, qp)
                r, bit = _quat_mul(q, p), 1
            elif (px, qy) == (1, 0):    # (0,p)(q,0) = (0, p q*)
                r, bit = _quat_mul(p, _quat_conj(q)), 1
            else:                       # (0,p)(0,q) = (-q* p, 0)
                r, bit = _neg(_quat_mul(_quat_conj(q), p)), 0
            cells[x, y] = 2 * r + bit
    return CayleyTable(cells)


# -- named construction ---------------------------------------------------

def by_name(spec: str) -> CayleyTable:
    """Build a fixture from a name.

    Accepted: ``c12``, ``d4``, ``q8``, ``o16``, ``cyclic:n`` (or ``cN``), and
    ``product:a,b,...`` whose factors are any of the other names.
    """
    spec = spec.strip().lower()
    if spec.startswith("product:"):
        factors = [by_name(f) for f in spec[len("product:"):].split(",") if f]
        if not factors:
            raise ValueError("product needs at least one factor")
        out = factors[0]
        for f in factors[1:]:
            out = direct_product(out, f)
        return out
    m = re.fullmatch(r"(?:cyclic:|c)(\d+)", spec)
    if m and spec != "c12":
        return cyclic(int(m.group(1)))
    m = re.fullmatch(r"d(\d+)", spec)
    if m:
        return dihedral(int(m.group(1)))
    named = {"c12": c_loop_12, "q8": quaternion, "o16": cayley_loop}
    if spec in named:
        return named[spec]()
    raise ValueError(f"unknown fixture {spec!r}")


def corollary_fixtures() -> dict:
    """Loops named in the central-square corollary, by label."""
    c2 = cyclic(2)
    return {
        "D4": dihedral(4),
        "Q8": quaternion(),
        "O16": cayley_loop(),
        "C2xC2": direct_product(c2, c2),
        "C2xC2xC2": direct_product(direct_product(c2, c2), c2),
        "Q8xC2xC3": direct_product(direct_product(quaternion(), c2), cyclic(3)),
    }


def catalog_groups() -> dict:
    c2 = cyclic(2)
    return {
        "C1": cyclic(1),
        "C2": c2,
        "C3": cyclic(3),
        "C4": cyclic(4),
        "C6": cyclic(6),
        "C2xC2": direct_product(c2, c2),
        "C2xC2xC2": direct_product(direct_product(c2, c2), c2),
        "D3": dihedral(3),
        "D4": dihedral(4),
        "Q8": quaternion(),
        "Q8xC2xC3": direct_product(direct_product(quaternion(), c2), cyclic(3)),
    }


# -- loop corpora -----------------------------------------------------------

def _complete(n, rng=None):
    """Yield normalized Latin squares (row 0 and column 0 are 0..n-1).

    Cells are filled row-major.  With ``rng`` the candidate order at each
    cell is shuffled; otherwise candidates are tried in increasing order so
    the squares come out in lexicographic order.
    """
    grid = np.zeros((n, n), dtype=np.int64)
    grid[0, :] = np.arange(n)
    grid[:, 0] = np.arange(n)
    row_used = [set(grid[r, :1].tolist()) for r in range(n)]
    col_used = [set(grid[:1, c].tolist()) for c in range(n)]
    for c in range(n):
        col_used[c].add(c)
    for r in range(n):
        row_used[r].add(r)
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def rec(k):
        if k == len(cells):
            yield grid.copy()
            return
        r, c = cells[k]
        cand = [v for v in range(n) if v not in row_used[r] and v not in col_used[c]]
        if rng is not None:
            rng.shuffle(cand)
        for v in cand:
            grid[r, c] = v
            row_used[r].add(v)
            col_used[c].add(v)
            yield from rec(k + 1)
            row_used[r].discard(v)
            col_used[c].discard(v)

    yield from rec(0)


def all_loops(order: int):
    """Every loop on ``0..order-1`` with identity 0 and sorted border, in
    lexicographic order of the cell array."""
    if order > 6:
        raise ValueError("exhaustive enumeration is limited to order <= 6")
    for g in _complete(order):
        yield CayleyTable(g)


def random_loops(order: int, count: int, seed: int) -> list:
    """``count`` seeded random normalized loops of the given order.

    Each loop is the first completion found by a backtracking search whose
    candidate order is shuffled; identity is always 0.
    """
    if order > 9:
        raise ValueError("random loop generation is limited to order <= 9")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        grid = next(_complete(order, rng))
        out.append(CayleyTable(grid))
    return out
