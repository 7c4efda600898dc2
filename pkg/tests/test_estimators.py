import math
from types import SimpleNamespace

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from knotspan.diagram import parse_pd
from knotspan.estimators import FEATURES, DiagramInvariants, check_diagrams

from conftest import CURL_PD, GENUS_ONE_15_PD, TREFOIL_PD


def test_check_diagrams_coercion():
    D = parse_pd(TREFOIL_PD)
    out = check_diagrams([D, TREFOIL_PD, SimpleNamespace(pd=D)])
    assert all(d == D for d in out)
    assert check_diagrams(TREFOIL_PD) == [D]
    with pytest.raises(TypeError):
        check_diagrams([3])
    with pytest.raises(ValueError):
        check_diagrams([])


def test_transform_values():
    est = DiagramInvariants().fit([TREFOIL_PD])
    X = est.transform([TREFOIL_PD, GENUS_ONE_15_PD])
    assert X.shape == (2, len(FEATURES) - 1)
    row = dict(zip(est.get_feature_names_out(), X[0]))
    assert row == {"c": 3, "writhe": -3, "span_bracket": 12, "span_jones": 3, "sigma_A": 3,
                   "sigma_B": 2, "turaev_genus": 0, "adequate": 1, "a_M": 1, "a_m": -1}
    row = dict(zip(est.get_feature_names_out(), X[1]))
    assert row["turaev_genus"] == 1 and row["a_M"] == -1 and row["adequate"] == 0


def test_lambda_column_and_selection():
    est = DiagramInvariants(features=("c", "span_a_lambda"))
    X = est.fit_transform([TREFOIL_PD, CURL_PD])
    assert X.tolist() == [[3, 3], [1, 0]]


def test_unknown_feature_and_unfitted():
    with pytest.raises(ValueError):
        DiagramInvariants(features=("colour",)).fit([TREFOIL_PD])
    with pytest.raises(Exception):
        DiagramInvariants().transform([TREFOIL_PD])


def test_split_diagram_genus_is_nan():
    X = DiagramInvariants(features=("turaev_genus",)).fit_transform(["X[1,1,2,2] X[3,3,4,4]"])
    assert math.isnan(X[0, 0])


def test_clone_params_and_pipeline():
    est = DiagramInvariants(features=("c", "writhe"), max_crossings=10)
    assert est.get_params() == {"features": ("c", "writhe"), "max_crossings": 10}
    twin = clone(est)
    assert twin.get_params() == est.get_params() and twin is not est
    pipe = make_pipeline(DiagramInvariants(features=("c", "writhe")), StandardScaler())
    Z = pipe.fit_transform([TREFOIL_PD, GENUS_ONE_15_PD])
    assert np.allclose(Z.mean(axis=0), 0)
