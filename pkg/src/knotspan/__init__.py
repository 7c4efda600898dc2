"""Exact diagram invariants of knots and links: Kauffman bracket, Jones and
Kauffman polynomials, Kauffman states, Turaev genus, adequacy, extreme
bracket coefficients and alternating tangle decompositions."""

from .bracket import CutoffError, JonesPoly, bracket_report, jones, kauffman_bracket, span_jones
from .diagram import (
    LinkDiagram,
    PDError,
    component_count,
    is_connected,
    is_reduced,
    mirror,
    parse_pd,
    parse_pd_line,
    serialize_pd,
    writhe,
)
from .extremal import extreme_coefficient, independent_alternating_sum, interleave_graph
from .generate import braid_closure, connected_sum, pretzel_diagram, random_diagram
from .kauffman import adequacy_from_kauffman, corollary_5_1_check, kauffman_F, lambda_poly, support_check
from .laurent import LaurentPoly1, LaurentPoly2, mod4_support_check, span_a, substitute_bracket
from .states import (
    decorated_state,
    is_A_adequate,
    is_adequate_diagram,
    is_B_adequate,
    resolve_all,
    turaev_genus_diagram,
)
from .tangles import classify_edges, decompose, is_genus_one_cycle_form

__version__ = "0.1.0"
