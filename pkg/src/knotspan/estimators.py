"""A scikit-learn transformer that turns diagrams into invariant feature rows."""

from __future__ import annotations

from typing import List, Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bracket import bracket_report, jones, kauffman_bracket
from .diagram import LinkDiagram, is_connected, parse_pd, writhe
from .kauffman import DEFAULT_MAX_CROSSINGS, lambda_poly
from .laurent import span_a
from .states import is_adequate_diagram, turaev_genus_diagram

__all__ = ["FEATURES", "check_diagrams", "DiagramInvariants"]

FEATURES = ("c", "writhe", "span_bracket", "span_jones", "sigma_A", "sigma_B",
            "turaev_genus", "adequate", "a_M", "a_m", "span_a_lambda")


def check_diagrams(X) -> List[LinkDiagram]:
    """Coerce diagrams, PD strings or objects with a ``pd`` attribute to a list of diagrams."""
    if isinstance(X, (str, LinkDiagram)):
        X = [X]
    out = []
    for k, item in enumerate(X):
        if isinstance(item, LinkDiagram):
            out.append(item)
        elif isinstance(item, str):
            out.append(parse_pd(item))
        elif isinstance(getattr(item, "pd", None), LinkDiagram):
            out.append(item.pd)
        else:
            raise TypeError(f"item {k} is not a diagram or PD string: {type(item).__name__}")
    if not out:
        raise ValueError("no diagrams given")
    return out


class DiagramInvariants(TransformerMixin, BaseEstimator):
    """Stateless transformer: one row of exact invariants per diagram.

    ``fit`` only validates input and records the selected feature names.
    Disconnected diagrams get ``nan`` for the Turaev genus.  The Kauffman
    polynomial column is the slow one; leave it out of ``features`` for
    large batches.
    """

    def __init__(self, features: Sequence[str] = FEATURES[:-1], max_crossings: int = DEFAULT_MAX_CROSSINGS):
        self.features = features
        self.max_crossings = max_crossings

    def fit(self, X, y=None):
        unknown = [f for f in self.features if f not in FEATURES]
        if unknown:
            raise ValueError(f"unknown features {unknown}; choose from {FEATURES}")
        check_diagrams(X)
        self.feature_names_out_ = np.asarray(list(self.features), dtype=object)
        self.n_features_out_ = len(self.features)
        return self

    def _row(self, D: LinkDiagram) -> List[float]:
        br = kauffman_bracket(D)
        rep = bracket_report(D, br)
        values = {
            "c": D.n_crossings,
            "writhe": writhe(D),
            "span_bracket": br.span,
            "span_jones": float(jones(D, br).span_t),
            "sigma_A": rep.sigma_A,
            "sigma_B": rep.sigma_B,
            "adequate": float(is_adequate_diagram(D)),
            "a_M": rep.aM,
            "a_m": rep.am,
        }
        if "turaev_genus" in self.features:
            values["turaev_genus"] = turaev_genus_diagram(D) if is_connected(D) else np.nan
        if "span_a_lambda" in self.features:
            values["span_a_lambda"] = span_a(lambda_poly(D, self.max_crossings))
        return [values[f] for f in self.features]

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        return np.array([self._row(D) for D in check_diagrams(X)], dtype=float)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_
