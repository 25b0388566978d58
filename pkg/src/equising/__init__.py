"""Equisingularity checks for one-parameter families of space curves.

A family is given by polynomial entries (a, f2(a, t), ..., fN(a, t)) whose
image is a surface swept by curve fibers.  The package decides, with exact
arithmetic, whether the family is equisingular along the parameter axis in
several senses and exhibits certificates either way:

* arc-based verification or refutation of the Whitney conditions;
* a discriminant-style test through generic plane projection, with an
  equimultiplicity check;
* comparison of characteristic exponents across fibers;
* blow-up of the singular axis and Nash modification, re-parametrized so
  every check can be run again upstairs;
* critical-point separation certificates for polynomial maps on a fiber.
"""

from .algebra import (
    Arc,
    INFINITY,
    ParseError,
    Poly,
    Scalar,
    SeriesT,
    fresh_symbol,
    fresh_symbols,
    leading_coeff_t,
    parse_poly,
    series_invert_root,
    series_reversion,
    substitute_arc,
    t_order,
    wedge3,
)
from .family import (
    AxisVanishingError,
    DegenerateFiberError,
    EquationCheck,
    FamilyValidationError,
    ParameterEntryError,
    Parametrization,
    family_from_strings,
    load_equations,
    load_family,
    verify_implicit_equations,
)
from .limits import (
    ArcWitness,
    RegimeRecord,
    Verdict,
    WhitneyJoint,
    WhitneyResult,
    critical_exponents,
    whitney_a_check,
    whitney_b_check,
    whitney_check,
)
from .modifications import (
    DroppedCoordinate,
    FactorizationResult,
    ModificationResult,
    NonPolynomialChartError,
    NoUnitChartError,
    PruneResult,
    blowup_singular_locus,
    check_factorization,
    nash_modification,
    prune_redundant,
)
from .projection import (
    CharSequence,
    StrongResult,
    char_exponents,
    char_exponents_at,
    generic_plane_projection,
    strong_equisingularity_check,
)
from .rolle import (
    ConstantMapError,
    RolleCertificate,
    hurwitz_count,
    load_curve,
    rolle_for_curve,
    rolle_for_map,
    rolle_witness,
)
from .zariski import (
    CrosscheckResult,
    DegenerateSurfaceError,
    PolarResult,
    ZariskiResult,
    equivalence_crosscheck,
    polar_is_empty,
    zariski_check,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Arc",
    "ArcWitness",
    "AxisVanishingError",
    "CharSequence",
    "ConstantMapError",
    "CrosscheckResult",
    "DegenerateFiberError",
    "DegenerateSurfaceError",
    "DroppedCoordinate",
    "EquationCheck",
    "FactorizationResult",
    "FamilyValidationError",
    "INFINITY",
    "ModificationResult",
    "NonPolynomialChartError",
    "NoUnitChartError",
    "ParameterEntryError",
    "Parametrization",
    "ParseError",
    "Poly",
    "PolarResult",
    "PruneResult",
    "RegimeRecord",
    "RolleCertificate",
    "Scalar",
    "SeriesT",
    "StrongResult",
    "Verdict",
    "WhitneyJoint",
    "WhitneyResult",
    "ZariskiResult",
    "blowup_singular_locus",
    "char_exponents",
    "char_exponents_at",
    "check_factorization",
    "critical_exponents",
    "equivalence_crosscheck",
    "family_from_strings",
    "fresh_symbol",
    "fresh_symbols",
    "generic_plane_projection",
    "hurwitz_count",
    "leading_coeff_t",
    "load_curve",
    "load_equations",
    "load_family",
    "nash_modification",
    "parse_poly",
    "polar_is_empty",
    "prune_redundant",
    "rolle_for_curve",
    "rolle_for_map",
    "rolle_witness",
    "series_invert_root",
    "series_reversion",
    "strong_equisingularity_check",
    "substitute_arc",
    "t_order",
    "verify_implicit_equations",
    "wedge3",
    "whitney_a_check",
    "whitney_b_check",
    "whitney_check",
    "zariski_check",
]
