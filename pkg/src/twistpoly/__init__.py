"""Arrow polynomial, checkerboard colorability and cut points for twisted links."""

__version__ = "0.1.0"

from .arrowsum import (as_set, bracket, colorability_criteria, m_degree_lower_bound,  # noqa: E402
                       normalized, reduce_word, resolve)
from .braid import BraidWord, apply_relation, closure, parse_braid  # noqa: E402
from .coloring import (framing_space_connected, is_checkerboard_colorable,  # noqa: E402
                       min_cut_points, replace_cutpoints_with_bars)
from .diagram import TwistedGaussCode, parse, serialize, writhe  # noqa: E402
from .moves import applicable_moves, apply_move, random_equivalent  # noqa: E402
from .polyring import ArrowPolynomial, parse_poly  # noqa: E402

__all__ = [
    "ArrowPolynomial", "BraidWord", "TwistedGaussCode", "applicable_moves", "apply_move",
    "apply_relation", "as_set", "bracket", "closure", "colorability_criteria",
    "framing_space_connected", "is_checkerboard_colorable", "m_degree_lower_bound",
    "min_cut_points", "normalized", "parse", "parse_braid", "parse_poly", "random_equivalent",
    "reduce_word", "replace_cutpoints_with_bars", "resolve", "serialize", "writhe",
]
