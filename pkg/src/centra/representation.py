"""Left/right representation sets and the closure laws they obey.

``Pi_lambda = {L_x}`` and ``Pi_rho = {R_x}``.  A loop is LC (RC) exactly when
its left (right) representation is closed under ``(a, b) -> a b^2``, and C
exactly when it is also closed under ``(a, b) -> a^2 b``.  Running that
closure forwards from a few translations rebuilds a whole loop table.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    CayleyTable,
    Permutation,
    PermSet,
    is_quasigroup,
    left_translation,
    right_translation,
)
from .errors import ClosureOverflow, LawViolation, NotSharplyTransitive, OrderMismatch
from .properties import is_c, is_lc, is_rc

SIDES = ("left", "right")
LAWS = ("lcrc", "c")


def _translations(t: CayleyTable, side: str):
    if side == "left":
        return [left_translation(t, x) for x in range(t.order)]
    if side == "right":
        return [right_translation(t, x) for x in range(t.order)]
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def left_representation(t: CayleyTable) -> PermSet:
    return _representation(t, "left")


def right_representation(t: CayleyTable) -> PermSet:
    return _representation(t, "right")


def _representation(t, side):
    if not is_quasigroup(t):
        raise ValueError("representation sets are defined for quasigroups")
    ps = PermSet(_translations(t, side), degree=t.order)
    assert len(ps) == t.order and ps.is_sharply_transitive()
    return ps


def representation(t: CayleyTable, side: str) -> PermSet:
    return _representation(t, side)


def closed_under_ab2(pi: PermSet) -> bool:
    return all(a * b * b in pi for a in pi for b in pi)


def closed_under_a2b(pi: PermSet) -> bool:
    return all(a * a * b in pi for a in pi for b in pi)


def check_closure_lcrc(t: CayleyTable, side: str) -> bool:
    """Agreement between "Pi closed under a b^2" and LC (left) / RC (right)."""
    pi = representation(t, side)
    identity_holds = (is_lc if side == "left" else is_rc)(t).holds
    return closed_under_ab2(pi) == identity_holds


def check_closure_c(t: CayleyTable, side: str) -> bool:
    """Agreement between "Pi closed under a b^2 and a^2 b" and C."""
    pi = representation(t, side)
    closed = closed_under_ab2(pi) and closed_under_a2b(pi)
    return closed == is_c(t).holds


@dataclass(frozen=True)
class PowerClosure:
    holds: bool
    vacuous: bool = False

    def __bool__(self):
        return self.holds


def check_power_closure(t: CayleyTable, side: str, n_range=(-6, 6)) -> PowerClosure:
    """Every power ``b^k`` (``k`` in the closed range) of a translation is a
    translation on the same side.

    ``vacuous`` is set when the loop is neither C nor the matching LC/RC, in
    which case no such closure is promised and the result is informational.
    """
    lo, hi = n_range
    pi = representation(t, side)
    promised = (is_lc if side == "left" else is_rc)(t).holds or is_c(t).holds
    holds = all(b ** k in pi for b in pi for k in range(lo, hi + 1))
    return PowerClosure(holds, vacuous=not promised)


def close_generators(gens, n: int, law: str = "c") -> PermSet:
    """Saturate ``{I} | gens`` under the closure products of ``law``.

    ``lcrc`` applies ``a b^2``; ``c`` applies ``a b^2`` and ``a^2 b``.  Powers
    ``g^k`` for ``|k| <= n`` are adjoined for every member as well.  Pairs are
    visited in lexicographic order of member index and new members appended
    in discovery order; the search stops with :class:`ClosureOverflow` as
    soon as more than ``n`` members appear.
    """
    if law not in LAWS:
        raise ValueError(f"law must be one of {LAWS}, got {law!r}")
    members = [Permutation.identity(n)]
    seen = set(members)

    def add(p):
        if p.degree != n:
            raise OrderMismatch(f"generator of degree {p.degree} for order {n}")
        if p not in seen:
            seen.add(p)
            members.append(p)
            if len(members) > n:
                raise ClosureOverflow(
                    f"closure exceeds {n} members; generators cannot come from a loop of order {n}"
                )

    for g in gens:
        add(g)
    powered = 0
    done_pairs = 0  # pairs (i, j) with max(i, j) < done_pairs have been processed
    while True:
        before = len(members)
        while powered < len(members):
            g = members[powered]
            for k in range(-n, n + 1):
                add(g ** k)
            powered += 1
        m = len(members)
        for i in range(m):
            for j in range(m):
                if i < done_pairs and j < done_pairs:
                    continue
                a, b = members[i], members[j]
                add(a * b * b)
                if law == "c":
                    add(a * a * b)
        done_pairs = m
        if len(members) == before:
            break
    return PermSet(members, degree=n)


def generate_from_generators(gens, n: int, law: str = "c", side: str = "right", identity: int = 0) -> CayleyTable:
    """Rebuild a loop table from translations generating its representation.

    The closure must be a sharply transitive set of exactly ``n``
    permutations.  Members are then labelled by where they send ``identity``:
    ``sigma_x`` is the member with ``identity -> x``.  For ``side="right"`` the
    members are the right translations, so ``y*x = y sigma_x``; for
    ``side="left"``, ``x*y = y sigma_x``.

    Any point can serve as ``identity`` for a sharply transitive set; the
    default 0 matches tables written with the identity in the first row.
    """
    if side not in SIDES:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    pi = close_generators(gens, n, law)
    if len(pi) != n or not pi.is_sharply_transitive():
        raise NotSharplyTransitive(
            f"closure has {len(pi)} members and is not sharply transitive on {n} points"
        )
    by_label = {p[identity]: p for p in pi}
    cols = np.array([by_label[x].images for x in range(n)], dtype=np.int64)  # cols[x, y] = y sigma_x
    cells = cols.T if side == "right" else cols
    t = CayleyTable(cells)
    if t.identity != identity:
        raise LawViolation(f"reconstructed table has identity {t.identity}, expected {identity}")
    if law == "c":
        ok = is_c(t)
    else:
        ok = (is_lc if side == "left" else is_rc)(t)
    if not ok:
        raise LawViolation(f"reconstructed table violates the {law} law, witness {ok.witness}")
    return t
