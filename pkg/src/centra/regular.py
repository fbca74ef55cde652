"""Autotopisms and regular bijections of a finite loop.

For a loop with identity ``e`` the autotopism equation
``xU * yV = (x*y)W`` pins most of the triple once a few images are known:

* ``y = e`` gives ``W = U R_b`` with ``b = eV``;
* ``x = e`` gives ``yV = a \\ (yW)`` with ``a = eU``.

Specialising further,

* ``(U, I, U)`` autotopism  =>  ``U = L_{eU}``  (lambda-regular),
* ``(I, V, V)`` autotopism  =>  ``V = R_{eV}``  (rho-regular),
* ``xU * y = x * yV``        =>  ``U = R_{eV}`` and ``V = L_{eU}``  (mu-regular),

so the regular sets are found by scanning ``n`` candidates instead of
``n!``.  The ``*_brute`` functions filter all of ``S_n`` by the bare
definitions and exist to cross-check the fast paths on small loops.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    CayleyTable,
    Permutation,
    PermSet,
    TopismTriple,
    left_translation,
    right_translation,
)
from .errors import InternalInconsistency, OrderCapExceeded, OrderMismatch
from .properties import Check, _from_mask, is_c, is_lc, is_rc, require_loop

DEFAULT_AUTOTOPISM_CAP = 10


def autotopism_cap() -> int:
    env = os.environ.get("CENTRA_MAX_ORDER")
    return int(env) if env else DEFAULT_AUTOTOPISM_CAP


def _arr(p: Permutation) -> np.ndarray:
    return np.asarray(p.images, dtype=np.int64)


def is_autotopism(t: CayleyTable, tr: TopismTriple) -> Check:
    """``xU * yV == (x*y)W`` for all ``x, y``; witness ``(x, y)``."""
    require_loop(t)
    if tr.degree != t.order:
        raise OrderMismatch(f"triple of degree {tr.degree} on a table of order {t.order}")
    T = t.cells
    u, v, w = _arr(tr.u), _arr(tr.v), _arr(tr.w)
    return _from_mask(T[u[:, None], v[None, :]] == w[T])


# -- regular sets -----------------------------------------------------------

def lambda_regular_set(t: CayleyTable) -> PermSet:
    """``{U : (U, I, U) is an autotopism}``."""
    require_loop(t)
    ident = Permutation.identity(t.order)
    out = []
    for a in range(t.order):
        cand = left_translation(t, a)
        if is_autotopism(t, TopismTriple(cand, ident, cand)):
            out.append(cand)
    return PermSet(out, degree=t.order)


def rho_regular_set(t: CayleyTable) -> PermSet:
    """``{V : (I, V, V) is an autotopism}``."""
    require_loop(t)
    ident = Permutation.identity(t.order)
    out = []
    for a in range(t.order):
        cand = right_translation(t, a)
        if is_autotopism(t, TopismTriple(ident, cand, cand)):
            out.append(cand)
    return PermSet(out, degree=t.order)


@dataclass(frozen=True, order=True)
class MuPair:
    """A mu-regular bijection ``u`` with its adjoint: ``xu * y == x * y(adjoint)``."""

    u: Permutation
    adjoint: Permutation


def is_mu_pair(t: CayleyTable, u: Permutation, v: Permutation) -> Check:
    require_loop(t)
    T = t.cells
    ua, va = _arr(u), _arr(v)
    ar = np.arange(t.order)
    return _from_mask(T[ua[:, None], ar[None, :]] == T[ar[:, None], va[None, :]])


def mu_regular_set(t: CayleyTable) -> frozenset:
    """All mu-regular bijections paired with their adjoints."""
    require_loop(t)
    out = set()
    for b in range(t.order):
        u, v = right_translation(t, b), left_translation(t, b)
        if is_mu_pair(t, u, v):
            out.add(MuPair(u, v))
    return frozenset(out)


def mu_first_components(pairs) -> PermSet:
    return PermSet((p.u for p in pairs))


def mu_adjoints(pairs) -> PermSet:
    return PermSet((p.adjoint for p in pairs))


def _all_perms(n):
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


def lambda_regular_brute(t: CayleyTable) -> PermSet:
    require_loop(t)
    T = t.cells
    P = _all_perms(t.order)
    ar = np.arange(t.order)
    # (xU) * y == (x*y) U
    ok = (T[P[:, :, None], ar[None, None, :]] == P[:, T]).all(axis=(1, 2))
    return PermSet((Permutation(tuple(p)) for p in P[ok]), degree=t.order)


def rho_regular_brute(t: CayleyTable) -> PermSet:
    require_loop(t)
    T = t.cells
    P = _all_perms(t.order)
    ar = np.arange(t.order)
    ok = (T[ar[None, :, None], P[:, None, :]] == P[:, T]).all(axis=(1, 2))
    return PermSet((Permutation(tuple(p)) for p in P[ok]), degree=t.order)


def mu_regular_brute(t: CayleyTable) -> frozenset:
    require_loop(t)
    T = t.cells
    P = _all_perms(t.order)
    ar = np.arange(t.order)
    rhs = T[ar[None, :, None], P[:, None, :]]  # rhs[k, x, y] = x * yV_k
    out = set()
    for u in P:
        lhs = T[u[:, None], ar[None, :]]
        for k in np.flatnonzero((rhs == lhs[None]).all(axis=(1, 2))):
            out.add(MuPair(Permutation(tuple(u)), Permutation(tuple(P[k]))))
    return frozenset(out)


# -- characterisation checks ------------------------------------------------

def _square(p: Permutation) -> Permutation:
    return p * p


def lc_autotopism_side(t: CayleyTable) -> bool:
    ident = Permutation.identity(t.order)
    return all(
        is_autotopism(t, TopismTriple(_square(lx), ident, _square(lx))).holds
        for lx in (left_translation(t, x) for x in range(t.order))
    )


def rc_autotopism_side(t: CayleyTable) -> bool:
    ident = Permutation.identity(t.order)
    return all(
        is_autotopism(t, TopismTriple(ident, _square(rx), _square(rx))).holds
        for rx in (right_translation(t, x) for x in range(t.order))
    )


def check_theorem_lc_auto(t: CayleyTable) -> bool:
    """LC holds iff ``(L_x^2, I, L_x^2)`` is an autotopism for every x.

    Returns whether the identity scan and the autotopism scans agree.
    """
    return is_lc(t).holds == lc_autotopism_side(t)


def check_theorem_rc_auto(t: CayleyTable) -> bool:
    return is_rc(t).holds == rc_autotopism_side(t)


def check_lemma_lambda_rho(t: CayleyTable) -> bool:
    """LC iff every ``L_x^2`` is lambda-regular; RC iff every ``R_x^2`` is rho-regular."""
    lam, rho = lambda_regular_set(t), rho_regular_set(t)
    lc_side = all(_square(left_translation(t, x)) in lam for x in range(t.order))
    rc_side = all(_square(right_translation(t, x)) in rho for x in range(t.order))
    return is_lc(t).holds == lc_side and is_rc(t).holds == rc_side


def c_mu_side(t: CayleyTable) -> bool:
    pairs = mu_regular_set(t)
    return all(
        MuPair(_square(right_translation(t, x)), _square(left_translation(t, x))) in pairs
        for x in range(t.order)
    )


def check_theorem_c_mu(t: CayleyTable) -> bool:
    """C holds iff every ``R_x^2`` is mu-regular with adjoint ``L_x^2``."""
    return is_c(t).holds == c_mu_side(t)


# -- autotopism group ---------------------------------------------------------

def _generating_set(t: CayleyTable) -> list:
    """Greedy generating set: repeatedly add the smallest element outside the
    subloop generated so far."""
    T = t.cells
    e = t.identity
    gens, span = [], {e}
    while len(span) < t.order:
        g = min(set(range(t.order)) - span)
        gens.append(g)
        span.add(g)
        frontier = True
        while frontier:
            new = {int(T[x, y]) for x in span for y in span} - span
            span |= new
            frontier = bool(new)
    return gens


class AutotopismGroup:
    """The full autotopism group of a loop, with closure verified on build."""

    def __init__(self, table: CayleyTable, triples):
        self.loop_digest = table.digest
        self.degree = table.order
        self.triples = tuple(sorted(set(triples)))
        self._lookup = frozenset(self.triples)
        self._verify_group()

    def _verify_group(self):
        # Grow <X> from the identity by right multiplication with a growing
        # generating set X drawn from the triples; the triples form a group
        # iff what we reach is exactly the set we started with.
        ident = TopismTriple.identity(self.degree)
        if ident not in self._lookup:
            raise InternalInconsistency("autotopism set lacks (I, I, I)")
        reached, gens = {ident}, []
        for tr in self.triples:
            if tr in reached:
                continue
            gens.append(tr)
            queue = list(reached)
            while queue:
                cur = queue.pop()
                for g in gens:
                    nxt = cur * g
                    if nxt not in reached:
                        if nxt not in self._lookup:
                            raise InternalInconsistency("autotopism set not closed under composition")
                        reached.add(nxt)
                        queue.append(nxt)
        if reached != self._lookup:
            raise InternalInconsistency("autotopism set is not a group")
        self.generators = tuple(gens)

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def __contains__(self, tr):
        return tr in self._lookup

    def to_json(self) -> list:
        return [tr.to_json() for tr in self.triples]


def _autotopism_maps(t: CayleyTable):
    """Yield ``(a, b, f)`` for every autotopism, ``f`` the image list of U.

    With ``a = eU`` and ``b = eV`` the equation reads
    ``f(xy) = (f(x) * (a \\ (f(y) * b))) / b``, so ``f`` is fixed by its values
    on a generating set; those values are branched on and the rest is
    propagated, failing early on any conflict.
    """
    n, e = t.order, t.identity
    T = t.cells.tolist()
    ld = t.left_division.tolist()
    rd = t.right_division.tolist()
    gens = _generating_set(t)

    def propagate(f, used, a, b, dom):
        changed = True
        while changed:
            changed = False
            for x in list(dom):
                fx = f[x]
                for y in list(dom):
                    z = T[x][y]
                    v = rd[T[fx][ld[a][T[f[y]][b]]]][b]
                    if f[z] is None:
                        if used[v]:
                            return False
                        f[z] = v
                        used[v] = True
                        dom.append(z)
                        changed = True
                    elif f[z] != v:
                        return False
        return True

    def branch(k, f, used, dom, a, b):
        if k == len(gens):
            yield list(f)
            return
        g = gens[k]
        if f[g] is not None:
            yield from branch(k + 1, f, used, dom, a, b)
            return
        for img in range(n):
            if used[img]:
                continue
            f2, used2, dom2 = list(f), list(used), list(dom)
            f2[g] = img
            used2[img] = True
            dom2.append(g)
            if propagate(f2, used2, a, b, dom2):
                yield from branch(k + 1, f2, used2, dom2, a, b)

    for a in range(n):
        for b in range(n):
            f = [None] * n
            used = [False] * n
            f[e] = a
            used[a] = True
            dom = [e]
            if not propagate(f, used, a, b, dom):
                continue
            for full in branch(0, f, used, dom, a, b):
                yield a, b, full


def enumerate_autotopisms(t: CayleyTable, max_order: Optional[int] = None) -> AutotopismGroup:
    require_loop(t)
    cap = autotopism_cap() if max_order is None else max_order
    if t.order > cap:
        raise OrderCapExceeded(f"order {t.order} exceeds autotopism enumeration cap {cap}")
    T = t.cells
    ld = t.left_division
    triples = []
    for a, b, f in _autotopism_maps(t):
        u = np.asarray(f)
        w = T[u, b]
        v = ld[a, w]
        tr = TopismTriple(Permutation(tuple(u)), Permutation(tuple(v)), Permutation(tuple(w)))
        triples.append(tr)
    return AutotopismGroup(t, triples)


def autotopisms_brute(t: CayleyTable) -> set:
    """Filter every triple in ``S_n^3`` by the autotopism equation."""
    require_loop(t)
    T = t.cells
    P = _all_perms(t.order)
    WT = P[:, T]  # WT[k, x, y] = (x*y) W_k
    out = set()
    for u in P:
        for v in P:
            lhs = T[u[:, None], v[None, :]]
            for k in np.flatnonzero((WT == lhs[None]).all(axis=(1, 2))):
                out.add(TopismTriple(Permutation(tuple(u)), Permutation(tuple(v)), Permutation(tuple(P[k]))))
    return out
