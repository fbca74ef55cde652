"""Identity and structure predicates for finite loops.

Every universally quantified predicate returns a :class:`Check`: a boolean
plus, when false, the lexicographically smallest failing tuple (variables in
the order ``x, y, z``).  Scans are vectorised over the whole ``n**3`` cube.

The central identities are each checked in two printed forms and the forms
are required to agree:

* LC: ``(xx)(yz) = (x(xy))z``  and  ``(x(xy))z = x(x(yz))``
* RC: ``(zy)(xx) = z((yx)x)``  and  ``((zy)x)x = z((yx)x)``
* C:  ``x(y(yz)) = ((xy)y)z``, cross-checked against ``LC and RC``.

Rewritings of these forms that only rename variables or swap the two sides
collapse onto the same scan, so two scans per side is all there is to check.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import CayleyTable, format_table, is_quasigroup
from .errors import InternalInconsistency, NotALoop


@dataclass(frozen=True)
class Check:
    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"holds": self.holds, "witness": list(self.witness) if self.witness else None}


def _from_mask(ok: np.ndarray) -> Check:
    if ok.all():
        return Check(True)
    return Check(False, tuple(int(v) for v in np.argwhere(~ok)[0]))


def require_loop(t: CayleyTable) -> int:
    if not t.is_loop:
        raise NotALoop("operation requires a loop (Latin square with two-sided identity)")
    return t.identity


def _grid(n):
    ar = np.arange(n)
    return ar[:, None, None], ar[None, :, None], ar[None, None, :]


def _agree(name, a: Check, b: Check):
    if a.holds != b.holds:
        raise InternalInconsistency(f"{name}: equivalent forms disagree ({a} vs {b})")


# The cube scans below are written as row gathers: for an (n, n) array M,
# ``M[T]`` is ``M[T[a, b], c]`` and ``M[:, T]`` is ``M[a, T[b, c]]``.

def _left_twice(T):
    """``x(xy)`` indexed ``[x, y]``."""
    return np.take_along_axis(T, T, axis=1)


def _right_twice(T):
    """``(yx)x`` indexed ``[y, x]``."""
    return T[T, np.arange(len(T))[None, :]]


# -- central identities ---------------------------------------------------

def lc_form_squares(t: CayleyTable) -> Check:
    """``(xx)(yz) = (x(xy))z``"""
    T = t.cells
    sq = np.diagonal(T)
    return _from_mask(T[sq][:, T] == T[_left_twice(T)])


def lc_form_translations(t: CayleyTable) -> Check:
    """``(x(xy))z = x(x(yz))``"""
    T = t.cells
    ll = _left_twice(T)
    return _from_mask(T[ll] == ll[:, T])


def rc_form_squares(t: CayleyTable) -> Check:
    """``(zy)(xx) = z((yx)x)``"""
    T = t.cells
    sq = np.diagonal(T)
    ok = T[:, sq][T] == T[:, _right_twice(T)]  # indexed [z, y, x]
    return _from_mask(ok.transpose(2, 1, 0))


def rc_form_translations(t: CayleyTable) -> Check:
    """``((zy)x)x = z((yx)x)``"""
    T = t.cells
    rr = _right_twice(T)
    return _from_mask((rr[T] == T[:, rr]).transpose(2, 1, 0))


def c_form(t: CayleyTable) -> Check:
    """``x(y(yz)) = ((xy)y)z``"""
    T = t.cells
    return _from_mask(T[:, _left_twice(T)] == T[_right_twice(T)])


def is_lc(t: CayleyTable) -> Check:
    require_loop(t)
    a = lc_form_squares(t)
    _agree("LC", a, lc_form_translations(t))
    return a


def is_rc(t: CayleyTable) -> Check:
    require_loop(t)
    a = rc_form_squares(t)
    _agree("RC", a, rc_form_translations(t))
    return a


def is_c(t: CayleyTable) -> Check:
    require_loop(t)
    res = c_form(t)
    both = is_lc(t).holds and is_rc(t).holds
    if res.holds != both:
        raise InternalInconsistency(f"C identity gives {res.holds} but LC and RC gives {both}")
    return res


# -- alternative and inverse properties -----------------------------------

def is_left_alternative(t: CayleyTable) -> Check:
    """``x(xy) = (xx)y``"""
    require_loop(t)
    T = t.cells
    ar = np.arange(t.order)
    X, Y = ar[:, None], ar[None, :]
    return _from_mask(T[X, T[X, Y]] == T[T[X, X], Y])


def is_right_alternative(t: CayleyTable) -> Check:
    """``(yx)x = y(xx)``, witness ordered ``(x, y)``."""
    require_loop(t)
    T = t.cells
    ar = np.arange(t.order)
    X, Y = ar[:, None], ar[None, :]
    return _from_mask(T[T[Y, X], X] == T[Y, T[X, X]])


def is_alternative(t: CayleyTable) -> Check:
    left = is_left_alternative(t)
    return left if not left else is_right_alternative(t)


def left_inverses(t: CayleyTable) -> np.ndarray:
    """``x^lambda`` with ``x^lambda * x = e``."""
    e = require_loop(t)
    return t.right_division[e, :]


def right_inverses(t: CayleyTable) -> np.ndarray:
    """``x^rho`` with ``x * x^rho = e``."""
    e = require_loop(t)
    return t.left_division[:, e]


def has_lip(t: CayleyTable) -> Check:
    """``x^lambda (x y) = y`` for all x, y."""
    T = t.cells
    lam = left_inverses(t)
    ar = np.arange(t.order)
    X, Y = ar[:, None], ar[None, :]
    return _from_mask(T[lam[X], T[X, Y]] == Y)


def has_rip(t: CayleyTable) -> Check:
    """``(y x) x^rho = y`` for all x, y."""
    T = t.cells
    rho = right_inverses(t)
    ar = np.arange(t.order)
    X, Y = ar[:, None], ar[None, :]
    return _from_mask(T[T[Y, X], rho[X]] == Y)


# -- commutativity, associativity, Moufang --------------------------------

def is_commutative(t: CayleyTable) -> Check:
    T = t.cells
    return _from_mask(T == T.T)


def _assoc_cube(T):
    """``(xy)z == x(yz)`` indexed ``[x, y, z]``."""
    return T[T] == T[:, T]


def is_associative(t: CayleyTable) -> Check:
    return _from_mask(_assoc_cube(t.cells))


def is_moufang(t: CayleyTable) -> Check:
    """Left Moufang identity ``z(x(zy)) = ((zx)z)y``, witness ``(x, y, z)``.

    In a loop this one identity is equivalent to the other Moufang laws.
    """
    require_loop(t)
    T = t.cells
    X, Y, Z = _grid(t.order)
    return _from_mask(T[Z, T[X, T[Z, Y]]] == T[T[T[Z, X], Z], Y])


# -- nuclei, center, squares ----------------------------------------------

def _nucleus_masks(t: CayleyTable):
    cube = _assoc_cube(t.cells)
    return cube.all(axis=(1, 2)), cube.all(axis=(0, 2)), cube.all(axis=(0, 1))


def nuclei(t: CayleyTable) -> tuple:
    """``(left, middle, right)`` nuclei as sorted element lists."""
    require_loop(t)
    return tuple(np.flatnonzero(m).tolist() for m in _nucleus_masks(t))


def center(t: CayleyTable) -> list:
    require_loop(t)
    T = t.cells
    commutant = (T == T.T).all(axis=1)
    left, middle, right = _nucleus_masks(t)
    return np.flatnonzero(commutant & left & middle & right).tolist()


def _in_center(t: CayleyTable, a: int) -> bool:
    T = t.cells
    ar = np.arange(t.order)
    X, Y = ar[:, None], ar[None, :]
    return bool(
        (T[a, :] == T[:, a]).all()
        and (T[a, T[X, Y]] == T[T[a, X], Y]).all()
        and (T[X, T[a, Y]] == T[T[X, a], Y]).all()
        and (T[X, T[Y, a]] == T[T[X, Y], a]).all()
    )


def squares(t: CayleyTable) -> list:
    return sorted(set(np.diagonal(t.cells).tolist()))


def is_central_square(t: CayleyTable) -> Check:
    """Every square ``xx`` lies in the center; witness ``(x,)``."""
    require_loop(t)
    sq = np.diagonal(t.cells)
    verdict = {int(s): _in_center(t, int(s)) for s in set(sq.tolist())}
    for x, s in enumerate(sq.tolist()):
        if not verdict[s]:
            return Check(False, (x,))
    return Check(True)


# -- reports ---------------------------------------------------------------

PREDICATES = {
    "LC": is_lc,
    "RC": is_rc,
    "C": is_c,
    "left_alternative": is_left_alternative,
    "right_alternative": is_right_alternative,
    "alternative": is_alternative,
    "LIP": has_lip,
    "RIP": has_rip,
    "commutative": is_commutative,
    "associative": is_associative,
    "moufang": is_moufang,
    "central_square": is_central_square,
}


def table_digest(t: CayleyTable) -> str:
    return hashlib.sha256(format_table(t).encode()).hexdigest()


@dataclass
class PropertyReport:
    table_digest: str
    order: int
    identity: int
    predicates: dict = field(default_factory=dict)
    computed_sets: dict = field(default_factory=dict)

    def __getitem__(self, name) -> Check:
        return self.predicates[name]

    def to_json(self) -> dict:
        out = {
            "order": self.order,
            "digest": self.table_digest,
            "identity": self.identity,
            "predicates": {k: v.to_json() for k, v in self.predicates.items()},
        }
        out.update(self.computed_sets)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def render_text(self) -> str:
        lines = [f"order {self.order}, identity {self.identity}", f"digest {self.table_digest}"]
        width = max(len(k) for k in self.predicates) if self.predicates else 0
        for name, chk in self.predicates.items():
            mark = "yes" if chk.holds else "no"
            extra = f"  witness {chk.witness}" if chk.witness else ""
            lines.append(f"  {name:<{width}}  {mark}{extra}")
        for name, value in self.computed_sets.items():
            lines.append(f"{name}: {value}")
        return "\n".join(lines) + "\n"


def analyze(t: CayleyTable) -> PropertyReport:
    e = require_loop(t)
    report = PropertyReport(table_digest(t), t.order, e)
    for name, fn in PREDICATES.items():
        report.predicates[name] = fn(t)
    left, middle, right = nuclei(t)
    report.computed_sets = {
        "center": center(t),
        "nuclei": {"left": left, "middle": middle, "right": right},
        "squares": squares(t),
    }
    return report
