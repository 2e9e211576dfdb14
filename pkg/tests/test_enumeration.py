import pytest

from conftest import labelled
from oracles import naive_associative_tables
from semigroup_sep.core import canonical_form
from semigroup_sep.enumeration import EnumerationConfig, corpus, count_tables, enumerate_flat


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_naive_filter(n):
    assert list(enumerate_flat(EnumerationConfig(n))) == naive_associative_tables(n)


def test_known_counts():
    # labelled semigroups and semigroups up to isomorphism, orders 1..4
    assert [count_tables(n) for n in (1, 2, 3)] == [1, 8, 113]
    assert len(labelled(4)) == 3492
    assert [count_tables(n, up_to_iso=True) for n in (1, 2, 3, 4)] == [1, 5, 24, 188]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orderly_equals_dedupe(n):
    orderly = [tuple(f) for f in enumerate_flat(EnumerationConfig(n, up_to_iso=True))]
    dedupe = sorted({canonical_form(s).flat() for s in labelled(n)})
    assert orderly == dedupe


def test_parallel_matches_serial():
    cfg = EnumerationConfig(3)
    assert list(enumerate_flat(cfg, jobs=3)) == list(enumerate_flat(cfg))
    iso = EnumerationConfig(4, up_to_iso=True)
    assert list(enumerate_flat(iso, jobs=2)) == list(enumerate_flat(iso))


def test_prefix_filter():
    got = list(enumerate_flat(EnumerationConfig(3, prefix_filter=(1,))))
    assert got == [f for f in naive_associative_tables(3) if f[0] == 1]


def test_corpus_order():
    orders = [s.order for s in corpus(3)]
    assert orders == sorted(orders) and len(orders) == 1 + 8 + 113


@pytest.mark.parametrize("kwargs", [dict(order=0), dict(order=6), dict(order=7, up_to_iso=True),
                                    dict(order=2, prefix_filter=(0, 0, 0, 0, 0)), dict(order=2, prefix_filter=(2,))])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        EnumerationConfig(**kwargs)
