"""Analysis toolkit for quasi-cyclic LDPC codes given by polynomial parity-check matrices."""

from .bounds import (
    BoundReport,
    PolyVector,
    bound_eq1,
    bound_eq2,
    bound_factorial,
    bound_girth_adjusted,
    construct_codeword,
)
from .covers import (
    CoverSplit,
    build_cover_block,
    build_cover_interleaved,
    cover_distance_bounds,
    split_auto,
    verify_cover_projection,
)
from .cycles import (
    CycleWitness,
    TannerGraph,
    build_tanner,
    detect_4cycle_type1,
    detect_6cycle_type1,
    diameter,
    equal_products,
    girth,
    type2_4cycle_free,
    wm_girth_caps,
)
from .distance import CodeParams, dmin_exhaustive, dmin_upper_witness, gf2_rank, nullspace_basis
from .matrix import (
    ParseError,
    PolyMatrix,
    ScalarMatrix,
    WeightMatrix,
    expand_scalar,
    parse_matrix,
    read_matrix,
    serialize_matrix,
)
from .permanent import perm_int, perm_poly
from .ring import RingPoly
from .wm_enum import WmClass, canonicalize_wm, enumerate_wm

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CodeParams",
    "CoverSplit",
    "CycleWitness",
    "ParseError",
    "PolyMatrix",
    "PolyVector",
    "RingPoly",
    "ScalarMatrix",
    "TannerGraph",
    "WeightMatrix",
    "WmClass",
    "bound_eq1",
    "bound_eq2",
    "bound_factorial",
    "bound_girth_adjusted",
    "build_cover_block",
    "build_cover_interleaved",
    "build_tanner",
    "canonicalize_wm",
    "construct_codeword",
    "cover_distance_bounds",
    "detect_4cycle_type1",
    "detect_6cycle_type1",
    "diameter",
    "dmin_exhaustive",
    "dmin_upper_witness",
    "enumerate_wm",
    "equal_products",
    "expand_scalar",
    "gf2_rank",
    "girth",
    "nullspace_basis",
    "parse_matrix",
    "perm_int",
    "perm_poly",
    "read_matrix",
    "serialize_matrix",
    "split_auto",
    "type2_4cycle_free",
    "verify_cover_projection",
    "wm_girth_caps",
]
