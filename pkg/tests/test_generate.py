from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from knotspan.bracket import jones, kauffman_bracket
from knotspan.diagram import is_connected, parse_pd, serialize_pd, writhe
from knotspan.generate import braid_closure, connected_sum, pretzel_diagram, random_diagram
from knotspan.laurent import LaurentPoly1


def test_seed_snapshot():
    D = random_diagram(1, 2, 3)
    assert serialize_pd(D) == "X[3,1,4,6] X[1,5,2,4] X[2,5,3,6]"
    assert D.signs == (1, 1, -1)


def test_positive_three_letter_word_is_right_trefoil():
    D = braid_closure([1, 1, 1], 2)
    assert writhe(D) == 3
    assert dict(jones(D).t_terms()) == {Fraction(1): 1, Fraction(3): 1, Fraction(4): -1}


@given(st.integers(0, 10**6))
def test_single_letter_is_unknot(seed):
    D = random_diagram(seed, 2, 1)
    assert D.n_crossings == 1 and D.n_components == 1
    assert jones(D) == LaurentPoly1.constant(1)


@given(st.integers(0, 10**6), st.integers(2, 7), st.integers(1, 16))
@settings(max_examples=100, deadline=None)
def test_deterministic_and_valid(seed, w, n):
    D = random_diagram(seed, w, n)
    assert D == random_diagram(seed, w, n)
    assert serialize_pd(D) == serialize_pd(random_diagram(seed, w, n))
    assert D.n_crossings == n
    # construction runs the label, orientation and Euler checks; reparsing repeats them
    assert parse_pd(serialize_pd(D)) == D


def test_untouched_strands_are_free_loops():
    D = braid_closure([1], 4)
    assert D.free_loops == 2 and D.n_components == 3


def test_argument_checks():
    with pytest.raises(ValueError):
        random_diagram(0, 1, 3)
    with pytest.raises(ValueError):
        random_diagram(0, 3, 0)
    with pytest.raises(ValueError):
        braid_closure([3], 3)
    with pytest.raises(ValueError):
        pretzel_diagram(3)
    with pytest.raises(ValueError):
        pretzel_diagram(3, 0)


def test_pretzel_one_one_one_is_a_trefoil(trefoil):
    P = pretzel_diagram(1, 1, 1)
    assert P.n_crossings == 3 and P.n_components == 1
    assert jones(P).span_t == 3
    assert kauffman_bracket(P) in (kauffman_bracket(trefoil), kauffman_bracket(trefoil).invert_variable())


def test_pretzel_component_count():
    # even twist columns with an even count of columns give links
    assert pretzel_diagram(2, 2).n_components == 2
    assert pretzel_diagram(3, -2, 3).n_components == 1


def test_connected_sum_multiplies_jones(trefoil):
    D = connected_sum(trefoil, trefoil)
    assert D.n_crossings == 6 and is_connected(D)
    assert jones(D) == jones(trefoil) * jones(trefoil)
    with pytest.raises(ValueError):
        connected_sum(trefoil, pretzel_diagram(2, 2))
