import pytest
from hypothesis import given, settings, strategies as st

from knotspan.diagram import (
    LabelError,
    LinkDiagram,
    OrientationError,
    PDSyntaxError,
    PlanarityError,
    component_count,
    disjoint_union,
    is_connected,
    is_reduced,
    mirror,
    nugatory_crossings,
    parse_pd,
    parse_pd_line,
    serialize_pd,
    writhe,
)
from knotspan.generate import random_diagram

from conftest import CURL_PD, TREFOIL_PD

seeds = st.tuples(st.integers(0, 10**6), st.integers(2, 6), st.integers(1, 14))


def _cut_vertices(D):
    """Crossings whose removal disconnects the 4-valent multigraph (brute force)."""
    ends = {}
    for i, x in enumerate(D.crossings):
        for v in x:
            ends.setdefault(v, []).append(i)
    n = D.n_crossings
    out = []
    for cut in range(n):
        # a loop edge at `cut` alone doesn't count; look at the rest of the graph plus
        # the edges leaving `cut`, split at `cut`
        adj = {i: set() for i in range(n) if i != cut}
        stubs = []
        for v, (i, j) in ends.items():
            if i == cut and j == cut:
                continue
            if i == cut or j == cut:
                stubs.append(j if i == cut else i)
            else:
                adj[i].add(j)
                adj[j].add(i)
        if not adj:
            # one crossing: nugatory iff it carries a loop edge
            if any(i == j == cut for i, j in ends.values()):
                out.append(cut)
            continue
        seen, stack = set(), [next(iter(adj))]
        while stack:
            u = stack.pop()
            if u not in seen:
                seen.add(u)
                stack.extend(adj[u] - seen)
        has_loop = any(i == j == cut for i, j in ends.values())
        if len(seen) < len(adj) or has_loop:
            out.append(cut)
    return out


def test_trefoil_parses(trefoil):
    assert trefoil.n_crossings == 3
    assert trefoil.n_components == 1
    assert trefoil.components == ((1, 2, 3, 4, 5, 6),)


def test_trefoil_writhe_by_hand(trefoil):
    # at each tuple the over-strand labels run b -> d, so every crossing is negative
    assert trefoil.signs == (-1, -1, -1)
    assert writhe(trefoil) == -3


def test_empty_diagram_with_free_loop():
    D = parse_pd("", free_loops=1)
    assert D.n_crossings == 0 and D.n_components == 1
    assert writhe(D) == 0
    assert is_connected(D) and is_reduced(D)
    assert parse_pd("O1") == D


def test_curl(curl):
    assert curl.n_crossings == 1
    assert abs(writhe(curl)) == 1
    assert is_connected(curl)
    assert not is_reduced(curl)
    assert nugatory_crossings(curl) == [0]


def test_trefoil_connected_and_reduced(trefoil):
    assert is_connected(trefoil) and is_reduced(trefoil)


@pytest.mark.parametrize("text, error", [
    ("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3", PDSyntaxError),
    ("X[1,4,2] X[3,6,4,1]", PDSyntaxError),
    ("X[1,4,2,5] X[3,6,4,1] X[5,2,7,3]", LabelError),
    ("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] X[1,4,2,5]", LabelError),
    ("X[2,4,1,5] X[3,6,4,1] X[5,2,6,3]", OrientationError),
    ("X[1,4,3,5] X[2,6,4,1] X[5,3,6,2]", OrientationError),
    ("X[1,5,2,4] X[3,6,4,1] X[5,2,6,3]", PlanarityError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_pd(text)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse_pd("garbage")


def test_parse_line_with_annotations():
    name, notes, D = parse_pd_line("3_1 c=3 alt=1 : " + TREFOIL_PD)
    assert name == "3_1" and notes == {"c": "3", "alt": "1"}
    assert D.name == "3_1" and D.n_crossings == 3
    with pytest.raises(PDSyntaxError):
        parse_pd_line(TREFOIL_PD)


def test_serialize(trefoil):
    assert serialize_pd(trefoil) == TREFOIL_PD
    D = disjoint_union(trefoil, parse_pd("", free_loops=2))
    assert serialize_pd(D).endswith("O2")


def test_disjoint_union_with_mirror_has_zero_writhe(trefoil):
    D = disjoint_union(trefoil, mirror(trefoil))
    assert writhe(D) == 0
    assert not is_connected(D)
    assert component_count(D) == 2


def test_link_components():
    hopf = parse_pd("X[1,3,2,4] X[3,1,4,2]")
    assert hopf.n_components == 2
    assert hopf.components == ((1, 2), (3, 4))


@given(seeds)
@settings(max_examples=150, deadline=None)
def test_roundtrip_and_mirror(args):
    D = random_diagram(*args)
    assert parse_pd(serialize_pd(D), free_loops=0) == D
    assert parse_pd(serialize_pd(D)).signs == D.signs
    M = mirror(D)
    assert mirror(M) == D
    assert writhe(M) == -writhe(D)
    assert M.components == D.components


@given(seeds)
@settings(max_examples=150, deadline=None)
def test_reduced_means_no_cut_vertex(args):
    D = random_diagram(*args)
    if not D.free_loops and is_connected(D):
        assert sorted(nugatory_crossings(D)) == _cut_vertices(D)


def test_frozen(trefoil):
    with pytest.raises(Exception):
        trefoil.free_loops = 3
    assert isinstance(trefoil, LinkDiagram)
