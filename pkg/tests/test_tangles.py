from hypothesis import given, settings, strategies as st
import pytest

from knotspan.diagram import is_connected, mirror, parse_pd
from knotspan.generate import braid_closure, connected_sum, pretzel_diagram, random_diagram
from knotspan.states import turaev_genus_diagram
from knotspan.tangles import classify_edges, decompose, is_genus_one_cycle_form

from conftest import corpus


def test_alternating_trefoil(trefoil):
    kinds = classify_edges(trefoil)
    assert len(kinds) == 6 and all(k.alternating for k in kinds.values())
    dec = decompose(trefoil)
    assert dec.tangles == ((0, 1, 2),) and dec.connectors == ()
    assert is_genus_one_cycle_form(trefoil)[0] is False


def test_two_crossing_over_over_edge():
    D = braid_closure([1, -1], 2)
    kinds = classify_edges(D)
    plus = [k for k in kinds.values() if not k.alternating and k.sign == 1]
    minus = [k for k in kinds.values() if not k.alternating and k.sign == -1]
    assert len(plus) == 2 and len(minus) == 2


def test_genus_one_example(chord_example):
    dec = decompose(chord_example)
    assert len(dec.tangles) == 2
    assert sorted(c.label for c in dec.connectors) == [8, 15, 23, 30]
    assert sorted(c.sign for c in dec.connectors) == [-1, -1, 1, 1]
    assert dec.end_counts == (4, 4)
    ok, summary = is_genus_one_cycle_form(chord_example)
    assert ok and summary["tangles"] == 2


def test_connected_sum_joined_non_alternately(trefoil):
    D = connected_sum(trefoil, mirror(trefoil))
    dec = decompose(D)
    assert len(dec.tangles) == 2 and len(dec.connectors) == 2
    assert is_genus_one_cycle_form(D)[0] is False
    # joined the other way the sum stays alternating
    assert len(decompose(connected_sum(trefoil, trefoil)).tangles) == 1


def test_pretzel_cycle_form():
    P = pretzel_diagram(3, -2, 3)
    ok, summary = is_genus_one_cycle_form(P)
    assert ok and summary["tangles"] == 2
    assert turaev_genus_diagram(P) == 1


def test_longer_cycle():
    # alternating columns of opposite handedness give a cycle of four tangles
    P = pretzel_diagram(2, -2, 2, -2)
    ok, summary = is_genus_one_cycle_form(P)
    assert ok and summary["tangles"] == 4 and len(summary["cycle"]) == 4
    assert turaev_genus_diagram(P) == 1


def test_rejects_crossingless_and_split(trefoil):
    with pytest.raises(ValueError):
        decompose(parse_pd("", free_loops=1))
    assert is_genus_one_cycle_form(parse_pd("", free_loops=1))[0] is False


def test_alternating_corpus_knots_are_one_tangle():
    for e in corpus(9):
        dec = decompose(e.pd)
        assert (len(dec.tangles) == 1 and not dec.connectors) == e.declared_alternating, e.name


@given(st.tuples(st.integers(0, 10**6), st.integers(2, 6), st.integers(1, 14)))
@settings(max_examples=200, deadline=None)
def test_properties(args):
    D = random_diagram(*args)
    if D.free_loops or not is_connected(D):
        return
    dec = decompose(D)
    assert sorted(i for t in dec.tangles for i in t) == list(range(D.n_crossings))
    assert len(dec.connectors) % 2 == 0
    alternating = all(k.alternating for k in classify_edges(D).values())
    assert alternating == (len(dec.tangles) == 1 and not dec.connectors)
    if is_genus_one_cycle_form(D)[0]:
        assert turaev_genus_diagram(D) <= 1
