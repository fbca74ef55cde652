"""Cayley tables, permutations and their arithmetic.

Elements of a table of order ``n`` are the integers ``0..n-1``.  Permutations
act on the right: ``p[x]`` is the image of ``x`` and ``a * b`` means "first
``a``, then ``b``", so ``x(ab) = (xa)b``.  With this convention the right
translation ``R_x`` satisfies ``R_x[y] == y*x`` and products of translations
read exactly as they are written in loop-theory texts.
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import (
    ElementOutOfRange,
    MalformedCycle,
    MalformedInput,
    OrderCapExceeded,
    OrderMismatch,
)

MAX_ORDER = 64


# --------------------------------------------------------------------------
# Permutations
# --------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0..n-1}`` stored as its image tuple."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __getitem__(self, x):
        return self.images[x]

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == x for x, i in enumerate(self.images))

    def cycles(self) -> list:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def element_order(self) -> int:
        k = 1
        for c in self.cycles():
            k = np.lcm(k, len(c))
        return int(k)

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, n={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: ``x -> (x a) b``."""
    if a.degree != b.degree:
        raise OrderMismatch(f"cannot compose permutations of degree {a.degree} and {b.degree}")
    bi = b.images
    return Permutation(tuple(bi[i] for i in a.images))


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for x, i in enumerate(a.images):
        inv[i] = x
    return Permutation(tuple(inv))


def power(a: Permutation, k: int) -> Permutation:
    if k < 0:
        a, k = inverse(a), -k
    result = Permutation.identity(a.degree)
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(0 10 1 11 2 9)(3 7 4 8 5 6)"``.

    Points may be separated by whitespace, commas or ``~``.  Points not
    mentioned are fixed; ``"()"`` is the identity.
    """
    s = text.strip()
    if not s:
        raise MalformedCycle("empty cycle string")
    if _CYCLE_RE.sub("", s).strip():
        raise MalformedCycle(f"unexpected text outside parentheses in {text!r}")
    images = list(range(n))
    used = set()
    for body in _CYCLE_RE.findall(s):
        tokens = [t for t in re.split(r"[\s,~]+", body.strip()) if t]
        try:
            pts = [int(t) for t in tokens]
        except ValueError:
            raise MalformedCycle(f"non-integer point in cycle ({body})") from None
        for p in pts:
            if not 0 <= p < n:
                raise MalformedCycle(f"point {p} out of range for n={n}")
            if p in used:
                raise MalformedCycle(f"point {p} repeated")
            used.add(p)
        for i, p in enumerate(pts):
            images[p] = pts[(i + 1) % len(pts)]
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


# --------------------------------------------------------------------------
# Cayley tables
# --------------------------------------------------------------------------

class CayleyTable:
    """A finite binary operation on ``{0..n-1}``; ``cells[x, y] = x*y``.

    The cell array is read-only.  The identity element is detected on first
    access of :attr:`identity` and is ``None`` when there is no two-sided
    identity.
    """

    def __init__(self, cells):
        arr = np.array(cells, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"cells must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if n > MAX_ORDER:
            raise OrderCapExceeded(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError(f"cell values must lie in 0..{n - 1}")
        arr.setflags(write=False)
        self._cells = arr

    @property
    def cells(self) -> np.ndarray:
        return self._cells

    @property
    def order(self) -> int:
        return self._cells.shape[0]

    def __len__(self):
        return self.order

    def mul(self, x: int, y: int) -> int:
        return int(self._cells[x, y])

    def __call__(self, x, y):
        return self.mul(x, y)

    @cached_property
    def identity(self) -> Optional[int]:
        return find_identity(self)

    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(format_table(self).encode()).hexdigest()

    @cached_property
    def is_loop(self) -> bool:
        return is_quasigroup(self) and self.identity is not None

    @cached_property
    def left_division(self) -> np.ndarray:
        """``ld[a, b] = a \\ b``, the unique ``u`` with ``a*u = b``."""
        n = self.order
        ld = np.empty((n, n), dtype=np.int64)
        rows = np.repeat(np.arange(n), n).reshape(n, n)
        ld[rows, self._cells] = np.arange(n)[None, :]
        ld.setflags(write=False)
        return ld

    @cached_property
    def right_division(self) -> np.ndarray:
        """``rd[b, a] = b / a``, the unique ``u`` with ``u*a = b``."""
        n = self.order
        rd = np.empty((n, n), dtype=np.int64)
        cols = np.tile(np.arange(n), (n, 1))
        rd[self._cells, cols] = np.arange(n)[:, None]
        rd.setflags(write=False)
        return rd

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.order == other.order and np.array_equal(self._cells, other._cells)

    def __hash__(self):
        return hash(self.digest)

    def __repr__(self):
        return f"CayleyTable(order={self.order}, identity={self.identity})"

    def tolist(self) -> list:
        return self._cells.tolist()


def opposite(t: CayleyTable) -> CayleyTable:
    """The opposite operation ``x o y = y*x`` (transpose of the table)."""
    return CayleyTable(t.cells.T)


def is_quasigroup(t: CayleyTable) -> bool:
    """True iff every row and every column is a permutation (Latin square)."""
    c = t.cells
    target = np.arange(t.order)
    return bool(
        (np.sort(c, axis=1) == target).all() and (np.sort(c, axis=0) == target[:, None]).all()
    )


def find_identity(t: CayleyTable) -> Optional[int]:
    c = t.cells
    ar = np.arange(t.order)
    left = (c == ar[None, :]).all(axis=1)
    right = (c == ar[:, None]).all(axis=0)
    found = np.flatnonzero(left & right)
    # two-sided identities of any magma coincide
    assert len(found) <= 1
    return int(found[0]) if len(found) else None


def _check_element(t: CayleyTable, x: int):
    if not 0 <= x < t.order:
        raise ElementOutOfRange(f"element {x} not in 0..{t.order - 1}")


def left_translation(t: CayleyTable, x: int) -> Permutation:
    """``L_x : y -> x*y``, i.e. row ``x`` of the table."""
    _check_element(t, x)
    return Permutation(tuple(t.cells[x, :].tolist()))


def right_translation(t: CayleyTable, x: int) -> Permutation:
    """``R_x : y -> y*x``, i.e. column ``x`` of the table."""
    _check_element(t, x)
    return Permutation(tuple(t.cells[:, x].tolist()))


# --------------------------------------------------------------------------
# Triples and permutation sets
# --------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class TopismTriple:
    u: Permutation
    v: Permutation
    w: Permutation

    def __post_init__(self):
        if not self.u.degree == self.v.degree == self.w.degree:
            raise OrderMismatch("triple components must share one degree")

    @classmethod
    def identity(cls, n: int) -> "TopismTriple":
        i = Permutation.identity(n)
        return cls(i, i, i)

    @property
    def degree(self) -> int:
        return self.u.degree

    def __mul__(self, other: "TopismTriple") -> "TopismTriple":
        return TopismTriple(self.u * other.u, self.v * other.v, self.w * other.w)

    def inverse(self) -> "TopismTriple":
        return TopismTriple(self.u.inverse(), self.v.inverse(), self.w.inverse())

    def to_json(self) -> dict:
        return {"u": format_cycles(self.u), "v": format_cycles(self.v), "w": format_cycles(self.w)}

    def __str__(self):
        return f"({self.u}, {self.v}, {self.w})"


class PermSet:
    """An immutable set of permutations of one degree, kept sorted."""

    def __init__(self, members: Iterable[Permutation] = (), degree: Optional[int] = None):
        ms = sorted(set(members))
        degrees = {m.degree for m in ms}
        if degree is not None:
            degrees.add(degree)
        if len(degrees) > 1:
            raise OrderMismatch(f"mixed degrees {sorted(degrees)} in PermSet")
        self._members = tuple(ms)
        self._lookup = frozenset(ms)
        self.degree = degrees.pop() if degrees else None

    @property
    def members(self) -> tuple:
        return self._members

    def __contains__(self, p):
        return p in self._lookup

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._members)

    def __len__(self):
        return len(self._members)

    def __eq__(self, other):
        if isinstance(other, PermSet):
            return self._lookup == other._lookup
        return NotImplemented

    def __hash__(self):
        return hash(self._lookup)

    def __repr__(self):
        return f"PermSet({len(self)} members, degree={self.degree})"

    def is_group(self) -> bool:
        """Closure under composition and inverses, and contains the identity."""
        if not self._members:
            return False
        if Permutation.identity(self.degree) not in self._lookup:
            return False
        for a in self._members:
            if a.inverse() not in self._lookup:
                return False
            for b in self._members:
                if a * b not in self._lookup:
                    return False
        return True

    def is_sharply_transitive(self) -> bool:
        n = self.degree
        if n is None or len(self) != n:
            return False
        for a in range(n):
            if sorted(p[a] for p in self._members) != list(range(n)):
                return False
        return True


# --------------------------------------------------------------------------
# File formats
# --------------------------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_table(text) -> CayleyTable:
    """Parse the table file format.

    ``#`` comment lines and blank lines are skipped.  The first content line
    is ``n``; when it holds more than one token the header is taken to be
    absent and the order is inferred from the first row.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode()
    lines = list(_content_lines(text))
    if not lines:
        raise MalformedInput("empty table", line=1)

    def ints(lineno, line):
        try:
            return [int(tok) for tok in line.split()]
        except ValueError:
            bad = next(tok for tok in line.split() if not tok.lstrip("-").isdigit())
            raise MalformedInput(f"non-integer token {bad!r}", line=lineno) from None

    first_no, first = lines[0]
    head = ints(first_no, first)
    if len(head) == 1:
        n = head[0]
        body = lines[1:]
        if n <= 0:
            raise MalformedInput(f"order must be positive, got {n}", line=first_no)
    else:
        n = len(head)
        body = lines
    if n > MAX_ORDER:
        raise MalformedInput(f"order {n} exceeds maximum {MAX_ORDER}", line=first_no)
    if len(body) != n:
        last = body[-1][0] if body else first_no
        raise MalformedInput(f"expected {n} rows, found {len(body)}", line=last)
    rows = []
    for lineno, line in body:
        row = ints(lineno, line)
        if len(row) != n:
            raise MalformedInput(f"expected {n} entries, found {len(row)}", line=lineno)
        for v in row:
            if not 0 <= v < n:
                raise MalformedInput(f"value {v} out of range 0..{n - 1}", line=lineno)
        rows.append(row)
    return CayleyTable(rows)


def format_table(t: CayleyTable) -> str:
    lines = [str(t.order)]
    lines += [" ".join(str(v) for v in row) for row in t.cells.tolist()]
    return "\n".join(lines) + "\n"


def parse_permutation_file(text) -> tuple:
    """Parse ``n=<int>`` followed by one cycle-notation permutation per line.

    Returns ``(n, [Permutation, ...])``.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode()
    lines = list(_content_lines(text))
    if not lines:
        raise MalformedInput("empty permutation file", line=1)
    lineno, head = lines[0]
    m = re.fullmatch(r"n\s*=\s*(\d+)", head)
    if not m:
        raise MalformedInput(f"expected 'n=<int>' header, got {head!r}", line=lineno)
    n = int(m.group(1))
    if n <= 0:
        raise MalformedInput("n must be positive", line=lineno)
    perms = []
    for lineno, line in lines[1:]:
        try:
            perms.append(parse_cycles(line, n))
        except MalformedCycle as exc:
            raise MalformedCycle(str(exc), line=lineno) from None
    return n, perms


def format_permutation_file(n: int, perms: Iterable[Permutation]) -> str:
    return "\n".join([f"n={n}"] + [format_cycles(p) for p in perms]) + "\n"
