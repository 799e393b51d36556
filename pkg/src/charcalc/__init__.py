"""Exact formal-character calculus for BGG category O.

Characters are kept in rational form over positive-root denominators and
reduced canonically; finite-dimensionality and tensor-product obstructions
are read off the reduced denominator.
"""

__version__ = "0.1.0"

from .category_o import (
    SweepReport,
    TensorVerdict,
    VermaDecomposition,
    assemble_from_verma,
    char_dimension,
    is_finite_dim_char,
    kostant_p,
    pullback_character,
    satisfies_O_necessary,
    simple_character,
    tensor_obstruction,
    theorem_sweep,
    verma_character,
    verma_decomposition,
    weyl_character,
)
from .char_ring import (
    LaurentPoly,
    RationalChar,
    SeriesWindow,
    add,
    char_from_json,
    char_to_json,
    coefficient,
    denominator_roots,
    divide_by_factor,
    equals,
    mul,
    reduce,
    series_expand,
)
from .errors import CharCalcError
from .root_system import ExtWeylElement, RootSystem, Weight, WeylElement, build_root_system, parse_weight
