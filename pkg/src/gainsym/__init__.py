"""Complex unit gain graphs: spectral symmetry, sign-symmetry and doubling constructions."""
from .core import (
    ComplexUnit,
    GainGraph,
    converse,
    disjoint_union,
    gain_matrix,
    negate,
    random_gain_graph,
    relabel,
    switch,
    underlying_properties,
    validate,
)
from .cycles import (
    Cycle,
    CycleBasis,
    CycleCensus,
    census_is_negation_symmetric,
    cycle_census,
    cycle_gain,
    cycle_space_dimension,
    elementary_subgraphs,
    enumerate_cycles,
    fundamental_cycle_basis,
    odd_cycle_basis,
    sachs_coefficient,
    sachs_coefficients,
    satisfies_edge_bound,
)
from .spectra import char_poly, eigenvalues, is_spectrally_symmetric
from .equivalence import (
    SwitchingWitness,
    automorphisms,
    is_sign_symmetric,
    is_structurally_symmetric,
    is_switching_isomorphic,
)
from .constructions import (
    DoubleKind,
    all_imaginary,
    build_double,
    example2_fixture,
    fig3a,
    fig3b,
    fixture,
    gamma_s,
    hermitian_double,
    identity_block_double,
    odd_anchor_double,
    sylvester_double,
)
from .search import AnnealConfig, SearchResult, anneal_search, distinct_solutions, search_runs, symmetry_objective
from . import errors

__version__ = "0.1.0"
