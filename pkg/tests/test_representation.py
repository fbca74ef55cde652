import pytest

from centra import catalog
from centra.core import Permutation, PermSet, parse_cycles
from centra.errors import ClosureOverflow, MalformedCycle, NotSharplyTransitive, OrderMismatch
from centra import properties as P
from centra import representation as Rep


def c12_gens():
    return [parse_cycles(s, 12) for s in catalog.C12_GENERATORS]


def test_right_representation_contains_generators(c12):
    pi = Rep.right_representation(c12)
    assert len(pi) == 12 and pi.is_sharply_transitive()
    for g in c12_gens():
        assert g in pi


def test_c2_representation():
    pi = Rep.right_representation(catalog.cyclic(2))
    assert pi == PermSet([Permutation.identity(2), parse_cycles("(0 1)", 2)])


def test_identity_in_both_representations(small_loops):
    for t in small_loops:
        ident = Permutation.identity(t.order)
        assert ident in Rep.left_representation(t)
        assert ident in Rep.right_representation(t)


def test_closure_checks_examples(c12):
    assert Rep.check_closure_lcrc(c12, "right")
    assert Rep.closed_under_ab2(Rep.right_representation(c12))
    assert Rep.check_closure_c(c12, "right") and Rep.check_closure_c(c12, "left")
    for side in Rep.SIDES:
        assert Rep.check_closure_lcrc(catalog.dihedral(4), side)


def test_closure_checks_exhaustive(small_loops):
    for t in small_loops:
        for side in Rep.SIDES:
            assert Rep.check_closure_lcrc(t, side)
            assert Rep.check_closure_c(t, side)


def test_closure_fails_for_non_lc(non_lc5):
    assert not Rep.closed_under_ab2(Rep.left_representation(non_lc5))
    assert Rep.check_closure_lcrc(non_lc5, "left")


def test_power_closure(c12):
    for side in Rep.SIDES:
        res = Rep.check_power_closure(c12, side, (-6, 6))
        assert res and not res.vacuous
        assert Rep.check_power_closure(catalog.quaternion(), side)
        assert Rep.check_power_closure(c12, side, (0, 0))


def test_power_closure_vacuous(non_lc5):
    res = Rep.check_power_closure(non_lc5, "left")
    assert res.vacuous


def test_construction_reproduces_table1(c12):
    t = Rep.generate_from_generators(c12_gens(), 12, law="c")
    assert t == c12
    assert Rep.right_representation(t) == Rep.close_generators(c12_gens(), 12, "c")


def test_construction_c2():
    t = Rep.generate_from_generators([parse_cycles("(0 1)", 2)], 2, law="c")
    assert t == catalog.cyclic(2)


def test_inconsistent_generators():
    with pytest.raises(MalformedCycle):
        parse_cycles("(0 1 2 3)", 3)
    with pytest.raises(OrderMismatch):
        Rep.close_generators([Permutation((1, 2, 3, 0))], 3, "c")
    with pytest.raises(ClosureOverflow):
        Rep.close_generators([parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)], 3, "c")
    with pytest.raises(NotSharplyTransitive):
        Rep.generate_from_generators([parse_cycles("(0 1)", 3), parse_cycles("(1 2)", 3)], 3, "c")


@pytest.mark.parametrize("name", ["c12", "q8", "o16", "d4", "c6", "product:c2,c2,c2"])
@pytest.mark.parametrize("side", Rep.SIDES)
def test_round_trip_from_representation(name, side):
    t = catalog.by_name(name)
    for law in Rep.LAWS:
        gens = list(Rep.representation(t, side))
        rebuilt = Rep.generate_from_generators(gens, t.order, law=law, side=side)
        assert rebuilt == t
        assert Rep.representation(rebuilt, side) == PermSet(gens)


def test_closure_bounded_by_order(c12):
    pi = Rep.close_generators(c12_gens(), 12, "c")
    assert len(pi) == 12
    # a subset of generators closes inside the 12 translations as well
    part = Rep.close_generators(c12_gens()[:1], 12, "lcrc")
    assert set(part) <= set(Rep.right_representation(c12))
