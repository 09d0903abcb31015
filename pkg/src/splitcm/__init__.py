"""Vertex splittings of monomial ideals: certificates, Betti tables, CM classification."""

__version__ = "0.1.0"

from ._accel import BACKEND, HAVE_NUMBA, polymatroidal_masks, rank_mod_p
from .betti import GradedBettiTable
from .cm import (
    CMExplanation,
    ConsistencyError,
    HomologicalSummary,
    NotCohenMacaulayError,
    cm_report,
    cm_type,
    explain_cm,
    gorenstein_shape,
    homological_summary,
    is_cm,
    is_gorenstein,
    is_level,
    is_principal_or_variables,
    is_pseudo_gorenstein,
    summarize,
)
from .families import (
    FamilyPreconditionError,
    PolymatroidalClassification,
    PolymatroidalTag,
    classify_cm_polymatroidal,
    is_componentwise_polymatroidal,
    is_polymatroidal,
    is_tspread_monomial,
    is_tspread_strongly_stable,
    squarefree_veronese,
    tspread_cm_criterion,
    tspread_monomials,
    tspread_witnesses,
    veronese,
)
from .graphs import (
    BicmReport,
    EliminationOrder,
    NotCochordalError,
    SimpleGraph,
    complement,
    cover_ideal,
    edge_ideal,
    edge_ideal_certificate,
    is_bicm,
    is_chordal,
    is_cochordal,
    parse_graph,
    perfect_elimination_order,
)
from .monomial import (
    Monomial,
    MonomialIdeal,
    ParseError,
    RingContext,
    RingMismatchError,
    add_variable,
    colon_by_variable,
    degree_component,
    krull_dim_quotient,
    parse_ideal,
)
from .oracle import (
    FieldSpec,
    SimplicialComplex,
    alexander_dual,
    dim_oracle,
    depth_oracle,
    is_cm_oracle,
    is_vertex_decomposable,
    koszul_betti,
    oracle_betti,
    oracle_summary,
    taylor_betti,
)
from .splitting import (
    LeafPrincipal,
    LeafUnit,
    LeafZero,
    Node,
    NotVertexSplittableError,
    betti_table,
    certificate_from_json,
    certificate_to_json,
    certify_vertex_splittable,
    depth_quotient,
    is_vertex_splittable,
    linear_quotients_order,
    reconstruct,
    reg_quotient,
    try_split_at,
)
