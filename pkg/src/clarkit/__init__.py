"""clarkit: exact combinatorics of fullerene graphs.

Clar numbers, sextet patterns, Fries structures, pentagonal-fragment
classification and complete isomer censuses for fullerene graphs with up
to 120 vertices.
"""

from .clar import (
    ClarResult,
    SextetPattern,
    clar_brute_force,
    clar_number,
    enumerate_clar_formulas,
    is_extremal,
    is_sextet_pattern,
)
from .enumeration import (
    IsomerCatalog,
    IsomerRecord,
    census_breakdown,
    enumerate_isomers,
    extremal_census,
)
from .fragments import (
    Fragment,
    boundary_labeling,
    classify_fragment,
    clar_set,
    detect_pentagonal_rings,
    gamma,
    hexagon_extension,
    is_extremal_fragment,
    pentagon_components,
    territory,
    theorem2_classify,
)
from .fullerene import (
    CanonicalForm,
    Fullerene,
    SpiralSequence,
    canonical_form,
    dodecahedron,
    from_spiral,
    ih_c60,
    is_isomorphic,
    validate,
)
from .matching import (
    FriesResult,
    Matching,
    count_perfect_matchings,
    find_perfect_matching,
    fries_number,
    is_alternating,
)
from .patches import FragmentTemplate, PatchGraph, paste, pasting_edges_of
from .rotation import (
    FaceSet,
    RotationSystem,
    cyclic_edge_connectivity_at_least,
    from_adjacency_text,
    induced_subgraph,
    is_three_connected,
    to_adjacency_text,
    trace_faces,
)

__version__ = "0.1.0"
