"""Exit criteria.  Each test prints one PASS/FAIL line in the terminal summary."""
import time
from contextlib import contextmanager

import pytest

import naive
from conftest import ACCEPTANCE, NON_LC_5
from centra import catalog
from centra import isotopy as I
from centra import properties as P
from centra import regular as R
from centra import representation as Rep
from centra.core import (
    CayleyTable,
    Permutation,
    TopismTriple,
    format_table,
    left_translation,
    parse_cycles,
    parse_table,
    right_translation,
)

SEED = 1
ISO_BUDGET = 10_000


@contextmanager
def criterion(label, max_seconds):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < max_seconds, f"took {elapsed:.1f}s (limit {max_seconds}s)"
    except BaseException as exc:
        ACCEPTANCE.append(f"FAIL  {label}  ({type(exc).__name__}: {exc})")
        raise
    ACCEPTANCE.append(f"PASS  {label}  [{time.perf_counter() - start:.2f}s]")


@pytest.fixture(scope="module")
def equivalence_corpus():
    loops = [t for n in range(1, 6) for t in catalog.all_loops(n)]
    randoms = []
    for n in (6, 7, 8):
        randoms += catalog.random_loops(n, 170, seed=1000 + n)
    return loops, randoms


def test_1_golden_table():
    with criterion("1 golden table: the order-12 loop is a non-associative, non-commutative C-loop", 1.0):
        t = parse_table(catalog.C12_TABLE)
        assert t.order == 12
        assert P.is_quasigroup(t)
        assert t.identity == 0
        for fn in (P.is_lc, P.is_rc, P.is_c, P.has_lip, P.has_rip,
                   P.is_left_alternative, P.is_right_alternative):
            assert fn(t), fn.__name__
        assert not P.is_associative(t)
        assert not P.is_commutative(t)


def test_2_construction_round_trip():
    with criterion("2 construction: alpha, beta, gamma regenerate the order-12 loop cell-for-cell", 1.0):
        gens = [
            parse_cycles("(0~10~1~11~2~9)(3~7~4~8~5~6)", 12),
            parse_cycles("(0~3)(1~4)(2~5)(6~10)(7~11)(8~9)", 12),
            parse_cycles("(0~7~2~6~1~8)(3~10~5~9~4~11)", 12),
        ]
        t = Rep.generate_from_generators(gens, 12, law="c")
        assert t.tolist() == catalog.c_loop_12().tolist()
        assert format_table(t) == format_table(catalog.c_loop_12())


def test_3_theorem_equivalence_suite(equivalence_corpus):
    loops, randoms = equivalence_corpus
    label = f"3 theorem equivalences over {len(loops)} loops of order <= 5 and {len(randoms)} random loops of order 6-8"
    with criterion(label, 300):
        assert len(loops) == 63 and len(randoms) >= 500
        disagreements = []
        for t in loops + randoms:
            checks = {
                "lc_auto": R.check_theorem_lc_auto(t),
                "rc_auto": R.check_theorem_rc_auto(t),
                "c_mu": R.check_theorem_c_mu(t),
                "closure_lcrc_left": Rep.check_closure_lcrc(t, "left"),
                "closure_lcrc_right": Rep.check_closure_lcrc(t, "right"),
                "closure_c_left": Rep.check_closure_c(t, "left"),
                "closure_c_right": Rep.check_closure_c(t, "right"),
            }
            disagreements += [(t.digest, k) for k, ok in checks.items() if not ok]
        assert disagreements == []


def test_4_power_closure():
    with criterion("4 power closure on [-6, 6] for the order-12 loop and every catalog group", 60):
        tables = {"c12": catalog.c_loop_12(), **catalog.catalog_groups()}
        for name, t in tables.items():
            for side in Rep.SIDES:
                res = Rep.check_power_closure(t, side, (-6, 6))
                assert res.holds and not res.vacuous, (name, side)


def test_5_regular_set_structure(equivalence_corpus):
    loops, randoms = equivalence_corpus
    with criterion("5 regular sets are groups; group sizes; brute force matches fast paths", 300):
        for t in loops + randoms:
            assert R.lambda_regular_set(t).is_group()
            assert R.rho_regular_set(t).is_group()
            assert R.mu_first_components(R.mu_regular_set(t)).is_group()
        for name, g in catalog.catalog_groups().items():
            n = g.order
            assert len(R.lambda_regular_set(g)) == len(R.rho_regular_set(g)) == n, name
            expect = {R.MuPair(right_translation(g, b), left_translation(g, b)) for b in range(n)}
            assert R.mu_regular_set(g) == expect, name
        brute_corpus = loops + catalog.random_loops(6, 5, seed=66) + [catalog.cyclic(6), catalog.dihedral(3)]
        for t in brute_corpus:
            assert R.lambda_regular_set(t) == R.lambda_regular_brute(t)
            assert R.rho_regular_set(t) == R.rho_regular_brute(t)
            assert R.mu_regular_set(t) == R.mu_regular_brute(t)


def _iso_runs():
    c12 = catalog.c_loop_12()
    non_lc = CayleyTable(NON_LC_5)
    c2_3 = catalog.by_name("product:c2,c2,c2")
    for shape in I.SHAPES:
        yield f"iso-lcrc c12 {shape}", [I.verify_iso_invariance_lcrc(c12, shape, ISO_BUDGET, SEED)]
        yield f"iso-lcrc non-LC order 5 {shape}", [I.verify_iso_invariance_lcrc(non_lc, shape, ISO_BUDGET, SEED)]
        yield f"iso-cc C2^3 {shape}", [I.verify_iso_cc(c2_3, shape, ISO_BUDGET, SEED)]
        yield f"corollary fixtures {shape}", I.verify_corollary_fixtures(shape, ISO_BUDGET, SEED)


def test_6_isotopy_invariance():
    with criterion(f"6 isotopy invariance, budget {ISO_BUDGET}, seed {SEED}: zero counterexamples", 600):
        findings = {}
        for name, reports in _iso_runs():
            for rep in reports:
                assert not rep.vacuous, (name, rep.label)
                assert rep.keepers == ISO_BUDGET + 1
                if rep.counterexamples:
                    findings[f"{name} {rep.label or ''}"] = rep.counterexamples
        assert findings == {}


def test_7_central_square_fixtures():
    with criterion("7 D4, Q8, O16, C2xC2, C2xC2xC2 are central square", 1.0):
        fx = catalog.corollary_fixtures()
        for name in ("D4", "Q8", "O16", "C2xC2", "C2xC2xC2"):
            assert P.is_central_square(fx[name]), name


def test_8_autotopism_enumerator():
    with criterion("8 autotopism enumerator = S_n^3 filter (order <= 4); the order-12 loop contains the square triples", 60):
        for n in range(1, 5):
            for t in catalog.all_loops(n):
                got = {(x.u.images, x.v.images, x.w.images) for x in R.enumerate_autotopisms(t)}
                assert got == naive.autotopisms(t.tolist())
        c12 = catalog.c_loop_12()
        group = R.enumerate_autotopisms(c12, max_order=12)
        ident = Permutation.identity(12)
        for x in range(12):
            lx = left_translation(c12, x) ** 2
            rx = right_translation(c12, x) ** 2
            assert TopismTriple(lx, ident, lx) in group
            assert TopismTriple(ident, rx, rx) in group
