import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import LZ2, NULL3, SL2, Z3, corpus_upto
from semigroup_sep.analysis import Analysis
from semigroup_sep.predicates import (
    ARCHIMEDEAN_X1,
    BY_NAME,
    FLAG_NAMES,
    PREDICATES,
    center,
    evaluate_properties,
    holds,
    replay,
)

ALL = FLAG_NAMES


def failing(s):
    return {k for k, v in evaluate_properties(s).flags.items() if not v}


def test_left_zero_band_profile():
    r = evaluate_properties(LZ2)
    assert r.is_E_hypocentral and r.is_E_upcentral
    assert not r.is_E_hypercentral and not r.is_E_separated
    assert r.witnesses["is_E_separated"].elements == (0, 1)
    assert failing(LZ2) == {
        "is_semilattice", "is_commutative", "is_duo", "is_viable", "is_E_separated", "is_E_commutative",
        "is_E_central", "is_E_up_central", "is_E_hypercentral", "is_E_viable", "is_unipotent",
    }


def test_two_element_semilattice_profile():
    assert failing(SL2) == {"is_unipotent", "is_two_trivial", "is_archimedean"}


def test_cyclic_group_profile():
    assert failing(Z3) == {"is_semilattice"}


def test_null_semigroup_profile():
    assert failing(NULL3) == {"is_semilattice", "is_regular", "is_completely_regular", "is_clifford"}


def test_unknown_attribute():
    with pytest.raises(AttributeError):
        evaluate_properties(SL2).is_nonsense


def test_report_json_keys():
    doc = evaluate_properties(LZ2).to_json()
    assert list(doc["flags"]) == list(ALL)
    assert doc["witnesses"]["is_duo"] == {"role": BY_NAME["is_duo"].role, "elements": [0]}


def test_center():
    assert center(LZ2) == frozenset()
    assert center(Z3) == {0, 1, 2}


# straight-from-definition oracles, one per property where that is short

def _naive(s):
    n, t = s.order, s.table
    E = [e for e in range(n) if t[e][e] == e]
    el = range(n)
    return {
        "is_commutative": all(t[x][y] == t[y][x] for x in el for y in el),
        "is_E_semigroup": all(t[e][f] in E for e in E for f in E),
        "is_semilattice": len(E) == n and all(t[x][y] == t[y][x] for x in el for y in el),
        "is_E_commutative": all(t[e][f] == t[f][e] for e in E for f in E),
        "is_E_central": all(t[e][x] == t[x][e] for e in E for x in el),
        "is_unipotent": len(E) == 1,
        "is_regular": all(any(t[t[x][y]][x] == x for y in el) for x in el),
        "is_pi_regular": all(any(t[t[s.power(x, k)][y]][s.power(x, k)] == s.power(x, k) for y in el for k in range(1, n + 1)) for x in el),
        "is_duo": all({t[x][y] for y in el} == {t[y][x] for y in el} for x in el),
        "is_viable": all(t[x][y] == t[y][x] for x in el for y in el if t[x][y] in E and t[y][x] in E),
        "is_clifford": all(any(t[t[x][y]][x] == x and t[x][y] == t[y][x] for y in el) for x in el),
    }


def test_predicates_match_naive_definitions(corpus3):
    for s in corpus3:
        flags = evaluate_properties(s).flags
        for name, expect in _naive(s).items():
            assert flags[name] == expect, (name, s.to_line())


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(corpus_upto(3)), st.sampled_from([p.name for p in PREDICATES] + [ARCHIMEDEAN_X1.name]))
def test_witness_replay(s, name):
    a = Analysis(s)
    p = BY_NAME[name]
    w = p.witness(a)
    if w is None:
        assert holds(name, a)
        assert not any(p.refutes(a, c) for c in p.candidates(a))
    else:
        assert replay(name, a, w)
        # first in candidate order
        first = next(c for c in p.candidates(a) if p.refutes(a, c))
        assert first == w.elements


def test_implications_in_corpus(corpus3):
    for s in corpus3:
        f = evaluate_properties(s).flags
        if f["is_commutative"]:
            assert f["is_duo"] and f["is_viable"]
        if f["is_completely_regular"]:
            assert f["is_regular"]
        # "Clifford" here means a union of groups, so left-zero bands qualify
        assert f["is_clifford"] == f["is_completely_regular"]
        if f["is_E_central"]:
            assert f["is_E_commutative"] and f["is_E_up_central"]
        assert f["is_pi_regular"] and f["is_completely_pi_regular"] and f["is_eventually_clifford"]
