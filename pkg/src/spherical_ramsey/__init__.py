"""Explicit spherical red/blue colorings of E^n with no red unit 3-progression
and no long blue progression, plus the tools that certify them."""

__version__ = "0.1.0"

from .bounds import BoundReport, DistanceCase, blue_bound, dirichlet_approx, progression_norms, required_index_count
from .coloring import CANONICAL29, CANONICAL47, Color, ColoringParams, RationalVector, color_of_norm, color_point
from .exact import RationalInterval
from .ffield import ResidueSet, inverse, is_qr, max_ap_in_set, squares
from .verifier import Certificate, KWindow, Status, check_blue_translates, check_divisibility, check_range, check_red_l3, k_window

__all__ = [
    "BoundReport", "DistanceCase", "blue_bound", "dirichlet_approx", "progression_norms", "required_index_count",
    "CANONICAL29", "CANONICAL47", "Color", "ColoringParams", "RationalVector", "color_of_norm", "color_point",
    "RationalInterval", "ResidueSet", "inverse", "is_qr", "max_ap_in_set", "squares",
    "Certificate", "KWindow", "Status", "check_blue_translates", "check_divisibility", "check_range",
    "check_red_l3", "k_window",
]
