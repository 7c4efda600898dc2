import functools
import pathlib
import random

import pytest

from knotspan.diagram import parse_pd
from knotspan.generate import random_diagram
from knotspan.harness import ingest

DATA = pathlib.Path(__file__).resolve().parents[1] / "data" / "knots"

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
CURL_PD = "X[1,1,2,2]"
# 15 crossings, two alternating tangles, three A-chords, no B-chords
GENUS_ONE_15_PD = (
    "X[17,1,18,30] X[1,17,2,16] X[15,3,16,2] X[3,19,4,18] X[19,5,20,4] "
    "X[5,23,6,22] X[21,7,22,6] X[7,21,8,20] X[8,27,9,28] X[28,9,29,10] "
    "X[10,29,11,30] X[26,11,27,12] X[12,23,13,24] X[24,13,25,14] X[14,25,15,26]"
)


@functools.lru_cache(maxsize=None)
def corpus(c):
    return ingest(DATA / f"knots_c{c:02d}.pd")


def corpus_upto(c_max, c_min=3):
    return [e for c in range(c_min, c_max + 1) for e in corpus(c)]


def random_diagrams(n, seed0=0, max_width=6, max_length=12):
    """Deterministic stream of braid closures with varied width and length."""
    for k in range(n):
        r = random.Random(1_000_003 * seed0 + k)
        w = r.randint(2, max_width)
        length = r.randint(1, max_length)
        yield random_diagram(seed0 * 100_000 + k, w, length)


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL_PD)


@pytest.fixture
def curl():
    return parse_pd(CURL_PD)


@pytest.fixture
def chord_example():
    return parse_pd(GENUS_ONE_15_PD)
