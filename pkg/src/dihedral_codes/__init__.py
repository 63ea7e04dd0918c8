"""Principal dihedral codes over finite fields: construction, duality and exact minimum distance."""

from .dihedral import (
    DihedralSpec,
    FoldingBasis,
    LinearCode,
    bch_dihedral_generator,
    binary_bch_generator,
    binary_condition,
    char2_containment,
    code_from_generator,
    code_from_two_generators,
    conjugate_generator,
    dimension_lower_bound,
    dihedral_action,
    dual_code,
    fold,
    folding_basis,
    format_spec,
    is_dihedral_invariant,
    make_spec,
    parse_spec,
    star_product,
    unfold,
)
from .distance import (
    DistanceResult,
    bch_lower_bound,
    min_distance_bz,
    min_distance_exhaustive,
    minimum_distance,
)
from .errors import DihedralCodesError, ParseError, PreconditionError
from .finite_field import FiniteField, field_of_order, make_field
from .polynomial import Polynomial, cyclotomic_cosets, format_polynomial, parse_polynomial, root_context
from .presets import PRESETS
from .report import AnalysisReport, analyze

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
