"""Weighted graphs as quantum density matrices.

A weighted graph with a positive semidefinite generalized Laplacian encodes a
quantum state; this package provides the correspondence in both the
real-signed and complex-hermitian weight conventions, together with graph
products, convex mixtures, separability tests, Kraus-operator graph edits,
and graphical positive-semidefiniteness criteria.
"""

from .errors import (
    BadWeights,
    ComplexNotSupported,
    ConventionMismatch,
    DegreeAdditivityWarning,
    DimensionMismatch,
    EdgeExists,
    FileFormatError,
    GraphStateError,
    HasLoops,
    InvalidPermutation,
    LoopExists,
    NoConvergence,
    NoSuchEdge,
    NoSuchLoop,
    NotAState,
    NotPSD,
    ZeroDegreeSum,
)
from .graphs import (
    Convention,
    GraphMatrices,
    WeightedGraph,
    build_graph,
    disjoint_edge_union,
    edge_union,
    empty_graph,
    permutation_matrix,
    permute,
)
from .kraus import (
    EdgeEdit,
    EdgeEditPlan,
    KrausSet,
    add_vertex,
    delete_vertex,
    edge_edit_plan,
    kraus_add_edge,
    kraus_add_loop,
    kraus_delete_edge,
    kraus_delete_loop,
    unitary_mapping,
)
from .products import (
    GraphOperator,
    ProductIndex,
    apply_operator,
    cartesian,
    factor_swap_permutation,
    mix,
    modified_tensor,
    pure_decomposition_graphs,
    tensor,
)
from .psd import (
    PsdVerdict,
    graphical_psd_check,
    principal_subgraph,
    signed_complete_pure,
    theta,
)
from .separability import (
    BipartiteShape,
    SeparabilityVerdict,
    build_separable,
    degree_criterion,
    paired_cross_edges,
    partial_transpose_graph,
    partial_transpose_matrix,
    ppt_oracle,
)
from .spectra import Spectrum, eigensystem, eigenvalues, is_psd
from .states import (
    DensityMatrix,
    ProjectorTerm,
    decompose,
    density_from_graph,
    entropy,
    extract_graph,
    graph_from_density,
    is_pure,
    observable_from_graph,
    observable_graph,
    partial_trace,
    partial_trace_matrix,
    reconstruct,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
