"""Isotopes of loops under triples of shape (A, B, B) and (A, B, A).

An isotopism ``(U, V, W)`` carries ``(G, *)`` to ``(H, o)`` with
``xU o yV = (x*y)W``, so ``x o y = ((x U^-1) * (y V^-1)) W``.  The image is
always a quasigroup but only sometimes a loop.  For the two shapes here the
loop-producing triples are easy to describe:

* ``(A, B, B)`` gives a loop iff ``A = R_c B`` for some ``c`` (identity ``eA``);
* ``(A, B, A)`` gives a loop iff ``B = L_d A`` for some ``d`` (identity ``eB``).

Uniform sampling of ``(A, B)`` therefore almost never yields a loop once
``n`` passes 5 or so (``n`` keepers out of ``n!`` choices of ``A``).  The
default ``"conditioned"`` sampler draws ``B`` (resp. ``A``) uniformly and
``c`` (resp. ``d``) uniformly, which is exactly the keeper distribution of
uniform rejection sampling.  ``"uniform"`` does the literal rejection.
Either way the loop property of every isotope is decided by identity
detection, never assumed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import CayleyTable, Permutation, TopismTriple, left_translation, right_translation
from .errors import OrderMismatch
from .properties import (
    is_alternative,
    is_c,
    is_central_square,
    is_commutative,
    is_lc,
    is_rc,
    require_loop,
)

SHAPES = ("ABB", "ABA")


def apply_isotopism(g: CayleyTable, tr: TopismTriple) -> CayleyTable:
    """The isotope ``x o y = ((x U^-1) * (y V^-1)) W``."""
    if tr.degree != g.order:
        raise OrderMismatch(f"triple of degree {tr.degree} on a table of order {g.order}")
    u_inv = np.asarray(tr.u.inverse().images)
    v_inv = np.asarray(tr.v.inverse().images)
    w = np.asarray(tr.w.images)
    return CayleyTable(w[g.cells[u_inv[:, None], v_inv[None, :]]])


def shaped_triple(a: Permutation, b: Permutation, shape: str) -> TopismTriple:
    if shape == "ABB":
        return TopismTriple(a, b, b)
    if shape == "ABA":
        return TopismTriple(a, b, a)
    raise ValueError(f"shape must be one of {SHAPES}, got {shape!r}")


def _draw(g: CayleyTable, shape: str, rng, method: str):
    n = g.order
    if method == "uniform":
        a = Permutation(tuple(rng.permutation(n)))
        b = Permutation(tuple(rng.permutation(n)))
    elif method == "conditioned":
        base = Permutation(tuple(rng.permutation(n)))
        k = int(rng.integers(n))
        if shape == "ABB":
            b, a = base, right_translation(g, k) * base
        else:
            a, b = base, left_translation(g, k) * base
    else:
        raise ValueError(f"unknown sampling method {method!r}")
    return shaped_triple(a, b, shape)


def sample_shaped_isotopisms(
    g: CayleyTable, shape: str, budget: int, seed: int, method: str = "conditioned"
) -> list:
    """Draw ``budget`` shaped triples and keep the ones whose isotope is a loop.

    Returns ``[(triple, isotope), ...]`` beginning with the trivial keeper
    ``(I, I, I)``.  The result depends only on the arguments.
    """
    require_loop(g)
    if shape not in SHAPES:
        raise ValueError(f"shape must be one of {SHAPES}, got {shape!r}")
    rng = np.random.default_rng(seed)
    ident = TopismTriple.identity(g.order)
    keepers = [(ident, apply_isotopism(g, ident))]
    for _ in range(budget):
        tr = _draw(g, shape, rng, method)
        h = apply_isotopism(g, tr)
        if h.identity is not None:
            keepers.append((tr, h))
    return keepers


def exhaustive_shaped_isotopisms(g: CayleyTable, shape: str) -> list:
    """Every ``(A, B)`` pair in ``S_n^2`` whose shaped isotope is a loop."""
    import itertools

    require_loop(g)
    perms = [Permutation(p) for p in itertools.permutations(range(g.order))]
    out = []
    for a in perms:
        for b in perms:
            tr = shaped_triple(a, b, shape)
            h = apply_isotopism(g, tr)
            if h.identity is not None:
                out.append((tr, h))
    return out


# -- verification reports -----------------------------------------------------

@dataclass
class IsotopyReport:
    source: str
    shape: str
    budget: int
    seed: int
    keepers: int = 0
    hypothesis_filtered: int = 0
    vacuous: bool = False
    counterexamples: list = field(default_factory=list)
    label: Optional[str] = None

    @property
    def clean(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        out = {
            "source": self.source,
            "shape": self.shape,
            "budget": self.budget,
            "seed": self.seed,
            "keepers": self.keepers,
            "hypothesis_filtered": self.hypothesis_filtered,
            "vacuous": self.vacuous,
            "counterexamples": self.counterexamples,
        }
        if self.label is not None:
            out = {"label": self.label, **out}
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _finding(tr, h, predicate, expected, check):
    return {
        "triple": tr.to_json(),
        "isotope_digest": h.digest,
        "predicate": predicate,
        "expected": expected,
        "observed": check.holds,
        "witness": list(check.witness) if check.witness else None,
    }


def verify_iso_invariance_lcrc(g, shape, budget, seed, method="conditioned") -> IsotopyReport:
    """LC is preserved by loop isotopes of shape ABB, RC by those of shape ABA."""
    report = IsotopyReport(g.digest, shape, budget, seed)
    name, pred = ("LC", is_lc) if shape == "ABB" else ("RC", is_rc)
    expected = pred(g).holds
    keepers = sample_shaped_isotopisms(g, shape, budget, seed, method)
    report.keepers = len(keepers)
    for tr, h in keepers:
        chk = pred(h)
        if chk.holds != expected:
            report.counterexamples.append(_finding(tr, h, name, expected, chk))
    return report


def verify_iso_c(g, shape, budget, seed, method="conditioned") -> IsotopyReport:
    """Alternative central-square loop isotopes of a central-square C-loop are C-loops."""
    report = IsotopyReport(g.digest, shape, budget, seed)
    if not (is_c(g) and is_central_square(g)):
        report.vacuous = True
        return report
    keepers = sample_shaped_isotopisms(g, shape, budget, seed, method)
    report.keepers = len(keepers)
    for tr, h in keepers:
        if not (is_alternative(h) and is_central_square(h)):
            report.hypothesis_filtered += 1
            continue
        chk = is_c(h)
        if not chk:
            report.counterexamples.append(_finding(tr, h, "C", True, chk))
    return report


def verify_iso_cc(g, shape, budget, seed, method="conditioned") -> IsotopyReport:
    """Among commutative loop isotopes of a commutative loop, C is invariant."""
    report = IsotopyReport(g.digest, shape, budget, seed)
    if not is_commutative(g):
        report.vacuous = True
        return report
    expected = is_c(g).holds
    keepers = sample_shaped_isotopisms(g, shape, budget, seed, method)
    report.keepers = len(keepers)
    for tr, h in keepers:
        if not is_commutative(h):
            report.hypothesis_filtered += 1
            continue
        chk = is_c(h)
        if chk.holds != expected:
            report.counterexamples.append(_finding(tr, h, "C", expected, chk))
    return report


def verify_corollary_fixtures(shape, budget, seed, fixtures=None, method="conditioned") -> list:
    """Run :func:`verify_iso_c` on every central-square fixture.

    Returns one report per fixture, labelled by name, in the fixtures' order.
    """
    from .catalog import corollary_fixtures

    fixtures = corollary_fixtures() if fixtures is None else fixtures
    reports = []
    for label, g in fixtures.items():
        rep = verify_iso_c(g, shape, budget, seed, method)
        rep.label = label
        reports.append(rep)
    return reports
