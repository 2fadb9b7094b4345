"""Edge ideals of graphs: independence complexes, vertex decomposability,
shellability, sequential Cohen-Macaulayness, Betti numbers and regularity."""

from .decomposition import (
    Shed,
    ShellingOrder,
    SimplexLeaf,
    VoidLeaf,
    is_shellable,
    is_vd_graph,
    is_vertex_decomposable,
    verify_certificate,
)
from .errors import InputError
from .graph import (
    Bipartition,
    Graph,
    bipartition,
    closed_neighborhood_delete,
    complement,
    connected_components,
    degree_one_vertex,
    delete_vertices,
    generate,
    neighbors,
)
from .homology import (
    GF2,
    RATIONALS,
    BettiTable,
    FieldSpec,
    HomologyProfile,
    hochster_betti,
    is_cohen_macaulay,
    is_sequentially_cm,
    projective_dimension,
    reduced_homology,
    regularity,
)
from .ideals import (
    SquareFreeMonomialIdeal,
    alexander_dual,
    cover_ideal,
    cover_ideal_splitting,
    edge_ideal,
    is_unmixed,
    minimal_vertex_covers,
    stanley_reisner_complex,
)
from .invariants import a_invariant, is_three_disjoint, matching_number
from .simplicial import (
    SimplicialComplex,
    deletion,
    dimension,
    f_vector,
    independence_complex,
    is_pure,
    link,
    pure_skeleton,
    restriction,
)

__version__ = "0.1.0"
