"""Exact-arithmetic invariants of local cohomology of squarefree monomial
ideals: Lyubeznik tables, Bass and dual Bass numbers, small supports and
injective dimension bounds, computed by two independent routes that
cross-validate each other (hypercube cohomology complexes, and linear
strands of the minimal free resolution of the Alexander dual).
"""

from .combinatorics import (
    MonomialIdeal,
    SimplicialComplex,
    alexander_dual,
    complex_alexander_dual,
    full_mask,
    ideal_of,
    intersect_face_ideals,
    link,
    mask_of,
    mask_str,
    mask_vector,
    minimal_primes,
    minimalize,
    restriction,
    simplicial_complex,
    stanley_reisner,
)
from .cohomology import (
    cochain_complex,
    induced_cohomology_map,
    reduced_cohomology_dim,
    reduced_homology_dim,
    restriction_cochain_map,
)
from .errors import (
    ContractError,
    DomainError,
    InputError,
    LyubError,
    ResourceError,
)
from .hypercube import (
    Hypercube,
    build_hypercube,
    dual_complex,
    face_restricted_hypercube,
    main_complex,
    matlis_dual,
    restricted_complex,
)
from .invariants import (
    InjectiveDims,
    bass_table,
    betti_matches_hypercube,
    dual_bass_table,
    growth_bound_check,
    injective_dimensions,
    lyubeznik_table,
    mu0_summand_report,
    nonzero_cohomology_degrees,
    routes_agree,
    sequentially_cm,
    small_support,
    terai_mustata_consistent,
)
from .linalg import (
    QQ,
    ChainMap,
    ExactMatrix,
    VectorSpaceComplex,
    homology_dims,
    induced_map_on_homology,
    kernel_basis,
    prime_field,
    rank,
)
from .resolution import (
    GradedFreeComplex,
    StrandFrame,
    betti_numbers,
    linearity_defect,
    lyubeznik_via_strands,
    minimal_resolution,
    minimize,
    strand_frame,
    strand_homology,
    taylor_complex,
)
from .tables import BassTable, BettiTable, DualBassTable, LyubeznikTable

__version__ = "0.1.0"
