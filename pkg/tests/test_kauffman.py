import random

import pytest
from hypothesis import given, settings, strategies as st

from knotspan.bracket import CutoffError, jones, kauffman_bracket
from knotspan.diagram import LinkDiagram, mirror, parse_pd
from knotspan.generate import braid_closure, random_braid_word
from knotspan.kauffman import (
    DELTA,
    KauffmanEngine,
    PreconditionError,
    adequacy_from_kauffman,
    canonical_code,
    corollary_5_1_check,
    kauffman_F,
    kauffman_report,
    lambda_poly,
    support_check,
)
from knotspan.laurent import LaurentPoly2, span_a, substitute_bracket
from knotspan.states import is_adequate_diagram, turaev_genus_diagram

from conftest import corpus

words = st.builds(
    lambda seed, w, n: (random_braid_word(random.Random(seed), w, n), w),
    st.integers(0, 10**6), st.integers(2, 4), st.integers(1, 9),
)


def test_unknot_and_curl(curl):
    assert lambda_poly(parse_pd("", free_loops=1)) == LaurentPoly2.constant(1)
    assert curl.signs == (1,)
    assert lambda_poly(curl) == LaurentPoly2.monomial(1, 0)
    assert lambda_poly(mirror(curl)) == LaurentPoly2.monomial(-1, 0)
    assert kauffman_F(curl) == LaurentPoly2.constant(1)


def test_trefoil(trefoil):
    lam = lambda_poly(trefoil)
    assert substitute_bracket(lam) == kauffman_bracket(trefoil)
    assert span_a(lam) == 3
    assert support_check(lam, 3)
    ok, (left, right) = adequacy_from_kauffman(trefoil, lam)
    assert ok
    assert -left[0] + left[1] == 3 and right[0] + right[1] == 3
    rep = kauffman_report(trefoil, lam)
    assert rep.F == lam.shift(3, 0)
    assert rep.supportOK and rep.spanA == 3


def test_split_values():
    assert lambda_poly(parse_pd("", free_loops=2)) == DELTA
    unlink = braid_closure([1, -1], 2)
    assert unlink.n_components == 2
    assert lambda_poly(unlink) == DELTA


def test_support_check_examples():
    assert support_check(LaurentPoly2.monomial(1, 0), 1)
    assert not support_check(LaurentPoly2.monomial(5, 0), 3)


def test_curl_not_adequate(curl):
    assert adequacy_from_kauffman(curl) == (False, None)


def test_genus_one_example(chord_example):
    lam = lambda_poly(chord_example)
    assert substitute_bracket(lam) == kauffman_bracket(chord_example)
    assert adequacy_from_kauffman(chord_example, lam)[0] is False
    assert support_check(lam, 15)


def test_cutoff(trefoil):
    with pytest.raises(CutoffError):
        KauffmanEngine(max_crossings=2)(trefoil)


def test_degree_check_preconditions(trefoil, curl):
    with pytest.raises(PreconditionError):
        corollary_5_1_check(trefoil)
    with pytest.raises(PreconditionError):
        corollary_5_1_check(curl)


def test_degree_check_on_ten_crossing_genus_one_knots():
    hits = [e for e in corpus(10) if is_adequate_diagram(e.pd) and turaev_genus_diagram(e.pd) == 1]
    assert len(hits) == 3
    for e in hits:
        out = corollary_5_1_check(e.pd)
        assert out["span_a"] == 8
        assert out["swapped_ok"], e.name


def test_canonical_code_ignores_labels(trefoil):
    n = 6
    shifted = [tuple((v + 2) % n + 1 for v in x) for x in trefoil.crossings]
    assert canonical_code(trefoil.crossings) == canonical_code(tuple(reversed(shifted)))
    assert canonical_code(trefoil.crossings) != canonical_code(mirror(trefoil).crossings)


@given(words)
@settings(max_examples=80, deadline=None)
def test_specializes_to_bracket(wd):
    D = braid_closure(*wd)
    lam = lambda_poly(D)
    assert substitute_bracket(lam) == kauffman_bracket(D)
    assert support_check(lam, D.n_crossings)
    assert lambda_poly(mirror(D)) == lam.invert_a()


@given(words, st.integers(0, 100), st.booleans())
@settings(max_examples=60, deadline=None)
def test_regular_isotopy_r2(wd, pos, flip):
    word, w = wd
    i = pos % (w - 1) + 1
    k = pos % (len(word) + 1)
    pair = [i, -i] if flip else [-i, i]
    D = braid_closure(word, w)
    E = braid_closure(word[:k] + pair + word[k:], w)
    assert lambda_poly(E) == lambda_poly(D)


@given(words, st.booleans())
@settings(max_examples=60, deadline=None)
def test_stabilization_preserves_F_and_jones(wd, positive):
    word, w = wd
    D = braid_closure(word, w)
    E = braid_closure(word + [w if positive else -w], w + 1)
    assert kauffman_F(E) == kauffman_F(D)
    assert jones(E) == jones(D)


def test_fresh_engine_agrees_with_shared_memo():
    e = corpus(8)[5]
    assert KauffmanEngine()(e.pd) == lambda_poly(e.pd)
