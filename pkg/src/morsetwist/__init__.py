"""Exact twisted Morse / cellular chain complexes with local coefficients."""

from .chains import (
    ChainComplex,
    HomologySummary,
    dualize,
    euler_cells,
    euler_homology,
    homology,
    validate_complex,
)
from .catalog import CatalogEntry, get_example, run_all
from .cw import (
    FacetList,
    Incidence,
    RegularCW,
    cw_to_morse,
    from_simplicial,
    steenrod_boundary,
    validate_regular,
)
from .errors import MorsetwistError
from .invariants import (
    NovikovNumbers,
    ObstructionVerdict,
    check_inequalities,
    hspace_obstruction,
    novikov_numbers,
    parallel_form_obstruction,
    rank_of_class,
)
from .linalg import Matrix, nov_reduce, rank_expsum, rank_int_bruteforce, snf_int
from .morse import (
    CriticalPoint,
    DeckGroup,
    FlowLine,
    LocalSystem,
    MorseDatum,
    build_cochain,
    build_complex,
    flow_weight,
    gauge_transform,
    h0_cohomology,
    h0_quotient,
    is_simple,
    lift_cover,
    potential_shift,
    rescale_datum,
)
from .rings import ExpSum, NovElem

__version__ = "0.1.0"
