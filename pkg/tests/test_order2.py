import pytest

from conftest import LZ2, NULL3, SL2, TRIVIAL, Z2, Z3
from oracles import bi_classes_from_homs, naive_partitions, quasiorder_from_homs
from semigroup_sep.core import CayleyTable
from semigroup_sep.green import NotIdempotentError
from semigroup_sep.order2 import (
    Congruence,
    HypothesisError,
    ScanLimitError,
    induced_two_trivial,
    is_congruence,
    is_E_separated_by_coideals,
    is_two_trivial,
    prime_coideals,
    semilattice_congruences,
    semilattice_reflection,
    set_partitions,
    smallest_coideal,
    two_order_fixpoint,
    two_order_oracle,
    up_class_duo,
    up_class_fixpoint,
    up_class_viable,
    up_down_biclass,
    updown_congruence,
)


def test_prime_coideals_examples():
    assert prime_coideals(LZ2) == [frozenset(), frozenset({0, 1})]
    assert prime_coideals(SL2) == [frozenset(), frozenset({1}), frozenset({0, 1})]
    assert prime_coideals(Z3) == [frozenset(), frozenset({0, 1, 2})]


def test_classes_lz2():
    up, down, bi = up_down_biclass(LZ2, 0)
    assert up == down == bi == {0, 1}
    assert up_class_fixpoint(LZ2, 0).stages == (frozenset({0}), frozenset({0, 1}))


def test_classes_sl2():
    # 0 is the zero and 1 the identity
    assert up_down_biclass(SL2, 0) == ({0, 1}, {0}, {0})
    assert up_down_biclass(SL2, 1) == ({1}, {0, 1}, {1})
    assert up_class_fixpoint(SL2, 1).stages == (frozenset({1}),)


def test_reflection_examples():
    assert semilattice_reflection(LZ2).quotient == TRIVIAL
    assert semilattice_reflection(Z3).quotient == TRIVIAL
    assert semilattice_reflection(NULL3).quotient == TRIVIAL
    r = semilattice_reflection(SL2)
    assert r.quotient == SL2 and r.projection == (0, 1)


def test_two_trivial_examples():
    assert is_two_trivial(LZ2) and is_two_trivial(Z2) and is_two_trivial(NULL3)
    assert not is_two_trivial(SL2)
    assert induced_two_trivial(SL2, frozenset({1}))


def test_semilattice_congruences_examples():
    assert [c.partition for c in semilattice_congruences(LZ2)] == [(frozenset({0, 1}),)]
    assert len(semilattice_congruences(SL2)) == 2


def test_set_partitions_bell_numbers():
    assert [sum(1 for _ in set_partitions(n)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    for n in range(6):
        ours = {frozenset(p) for p in set_partitions(n)}
        theirs = {frozenset(p) for p in naive_partitions(n)}
        assert ours == theirs


def test_duo_upclass_rejects_nonduo():
    with pytest.raises(HypothesisError) as info:
        up_class_duo(LZ2, 0)
    assert info.value.witness == (0,)


def test_viable_upclass_preconditions():
    with pytest.raises(HypothesisError):
        up_class_viable(LZ2, 0)
    with pytest.raises(NotIdempotentError):
        up_class_viable(Z2, 1)
    assert up_class_viable(SL2, 1) == {1}


def test_scan_limits():
    big = CayleyTable(tuple((0,) * 21 for _ in range(21)))
    with pytest.raises(ScanLimitError):
        prime_coideals(big)
    seven = CayleyTable(tuple((0,) * 7 for _ in range(7)))
    with pytest.raises(ScanLimitError):
        semilattice_congruences(seven)


def test_congruence_checks():
    assert is_congruence(SL2, Congruence.from_blocks([{0}, {1}]))
    # min on the chain 0 < 1 < 2: 0 ~ 2 forces 1*0 ~ 1*2, i.e. 0 ~ 1
    chain = CayleyTable(((0, 0, 0), (0, 1, 1), (0, 1, 2)))
    assert not is_congruence(chain, Congruence.from_blocks([{0, 2}, {1}]))


def test_quasiorder_against_homs(corpus3):
    for s in corpus3:
        expect = quasiorder_from_homs(s.table)
        assert [list(r) for r in two_order_oracle(s).leq] == expect, s.to_line()
        assert [list(r) for r in two_order_fixpoint(s).leq] == expect, s.to_line()


def test_updown_congruence_against_homs(corpus3):
    for s in corpus3:
        cong = updown_congruence(s)
        ours = [next(b for b in cong.partition if x in b) for x in s.elements]
        assert ours == bi_classes_from_homs(s.table)


def test_least_semilattice_congruence(corpus3):
    for s in corpus3:
        meet = {(x, y) for x in s.elements for y in s.elements}
        for c in semilattice_congruences(s):
            meet &= c.pairs()
        assert meet == updown_congruence(s).pairs()


def test_fixpoint_stages_grow_and_stop(corpus3):
    for s in corpus3:
        for x in s.elements:
            tr = up_class_fixpoint(s, x)
            assert tr.stages[0] == {x}
            assert all(a < b for a, b in zip(tr.stages, tr.stages[1:]))
            assert len(tr.stages) <= s.order


def test_smallest_prime_coideal_is_up_class(corpus3):
    for s in corpus3:
        o = two_order_oracle(s)
        for x in s.elements:
            meet = s.carrier
            for c in prime_coideals(s):
                if x in c:
                    meet &= c
            assert meet == o.up(x)
            assert smallest_coideal(s, x) <= meet


def test_separation_routes_agree(corpus3):
    for s in corpus3:
        o = two_order_oracle(s)
        es = [e for e in s.elements if s(e, e) == e]
        by_classes = all(len(o.bi(e) & set(es)) == 1 for e in es)
        assert by_classes == is_E_separated_by_coideals(s)
