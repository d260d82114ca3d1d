"""Christoffel words, Lyndon factorizations, and digitally convex lattice paths."""

__version__ = "0.1.0"

from .christoffel import (
    BOTH,
    NOT_CHRISTOFFEL,
    POWER_OF_PRIMITIVE,
    PRIMITIVE_LOWER,
    PRIMITIVE_UPPER,
    CentralDecomposition,
    ChristoffelClass,
    ChristoffelFactorizations,
    FactorizationPoints,
    central_decomposition,
    central_periods,
    central_word,
    christoffel_lower,
    christoffel_upper,
    classify_christoffel,
    factorizations,
    is_central,
)
from .convexity import (
    DOWNWARD,
    UPWARD,
    ConvexityReport,
    FactorWitness,
    is_balanced,
    is_digitally_convex,
    mfw_balanced,
    mfw_dc,
    mfw_of_word,
)
from .counting import (
    CountTable,
    count_balanced,
    count_dc,
    count_dc0,
    count_dc0_table,
    count_table,
    fibonacci_word,
    lyndon_fib,
    totient,
    totient_table,
)
from .errors import CapExceeded, ContractError, ParseError
from .lattice import (
    CoverRelations,
    Site,
    cover_relations,
    deflate,
    deflation_chain,
    deflation_sites,
    dominance_le,
    dominance_profile,
    enumerate_dc,
    inflate,
    inflation_chain,
    inflation_sites,
    join,
    meet,
)
from .lyndon import (
    LyndonFactorization,
    is_lyndon,
    lyndon_factorization,
    standard_factorization,
)
from .render import RenderSpec, render, render_ascii, render_svg
from .words import (
    ORDER_01,
    ORDER_10,
    ParikhVector,
    Slope,
    are_conjugate,
    complement,
    conjugates,
    is_palindrome,
    is_primitive,
    is_unbordered,
    lex_compare,
    parikh,
    parse_word,
    periods_of,
    primitive_root,
    reverse,
    slope,
    two_palindrome_factorization,
)
