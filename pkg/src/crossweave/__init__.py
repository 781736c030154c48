"""Exact-rational construction of a separately continuous function on Q x Q
whose diagonal pair set is dense while mapping to the single value 1.

The pieces, bottom up: `rationals` fixes exact arithmetic and a bijective
enumeration of Q; `pairing` builds the dense pair sequence with singleton
sections; `cross_extension` builds one continuous interpolant per level on a
cross of lines; `weave` threads them into one function on the whole rational
plane; `verify` certifies the claimed properties at desk scale; `cli` wraps
it all for the command line.
"""

from .cross_extension import (
    AnchorSet,
    CrossFunction,
    base_value,
    build_cross,
    hat_value,
    linf,
    min_pairwise_distance,
    reference_value,
    tent_sum,
)
from .pairing import Box, Pairing, Point, enumerate_box
from .rationals import (
    Rational,
    decimal_approx,
    enumerate_rational,
    format_rational,
    index_of,
    normalize,
    parse_rational,
)
from .verify import (
    DEFAULT_SEED,
    MAX_ORACLE_LEVEL,
    Report,
    check_image_density,
    check_oracle_equivalence,
    check_parameter_range,
    check_sections,
    check_singleton_image,
    check_welldefined,
    image_density_search,
    nonfeeble_witness,
    oracle_eval,
    run_suite,
    section_continuity_check,
)
from .weave import WovenFunction

__version__ = "0.1.0"

__all__ = [
    "AnchorSet",
    "Box",
    "CrossFunction",
    "DEFAULT_SEED",
    "MAX_ORACLE_LEVEL",
    "Pairing",
    "Point",
    "Rational",
    "Report",
    "WovenFunction",
    "base_value",
    "build_cross",
    "check_image_density",
    "check_oracle_equivalence",
    "check_parameter_range",
    "check_sections",
    "check_singleton_image",
    "check_welldefined",
    "decimal_approx",
    "enumerate_box",
    "enumerate_rational",
    "format_rational",
    "hat_value",
    "image_density_search",
    "index_of",
    "linf",
    "min_pairwise_distance",
    "nonfeeble_witness",
    "normalize",
    "oracle_eval",
    "parse_rational",
    "reference_value",
    "run_suite",
    "section_continuity_check",
    "tent_sum",
    "__version__",
]
