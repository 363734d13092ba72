"""segrank: typical ranks of Gaussian tensors at desk scale.

Classifies the rank of random m x n x ell tensors by counting real points
in which the span of their slices meets the variety of rank-one matrices,
estimates rank and count probabilities by reproducible Monte Carlo, and
evaluates the exact combinatorial side: degrees, parities, expected
intersection counts, asymptotics, real-line counts of random determinantal
cubic surfaces, and the exact polytope bounding their expected number.
"""

__version__ = "0.1.0"

from ._kernels import active_backend, available_backends, set_backend
from .classify import (
    CountDistribution,
    MonteCarloRun,
    ProbEstimate,
    RankBasis,
    RankVerdict,
    classify_rank,
    is_format_supported,
    monte_carlo_rank,
    wilson_interval,
)
from .cubics import (
    CubicSurface,
    LineCountResult,
    LineStatistics,
    PolygonVertices,
    count_real_lines,
    determinant_form_coefficients,
    estimate_line_statistics,
    polytope_vertices,
    random_cubic,
)
from .errors import (
    AmbiguousRoots,
    AmbiguousSystem,
    DegeneratePosition,
    DegenerateSpan,
    DegenerateSurface,
    DegenerateSystem,
    OutOfRange,
    SegrankError,
    TrialAmbiguous,
    TrialRejected,
    UnsupportedFormat,
)
from .formats import Format, Regime, Tensor3, sample_gaussian_tensor
from .polynomials import BinaryForm, real_roots_binary_form
from .rng import SeededRng
from .segre import (
    SegreInvariants,
    asymptotic_coefficient,
    conjugate_real_count,
    expected_intersections,
    expected_intersections_odd_product,
    segre_codim,
    segre_degree,
    segre_degree_is_odd,
    segre_dim,
)
from .solvers import (
    IntersectionResult,
    RankOneWitness,
    SolveStatus,
    bilinear_constraint_subspace,
    conjugate_constraint_subspace,
    pencil_intersection_count,
    rank_one_witness_search,
    three_by_three_intersection_count,
)
from .subspaces import (
    MatrixSubspace,
    orthogonal_complement,
    slice_span,
    subspace_distance,
    subspace_from_matrices,
    uniform_subspace,
)

__all__ = [
    "AmbiguousRoots",
    "AmbiguousSystem",
    "BinaryForm",
    "CountDistribution",
    "CubicSurface",
    "DegeneratePosition",
    "DegenerateSpan",
    "DegenerateSurface",
    "DegenerateSystem",
    "Format",
    "IntersectionResult",
    "LineCountResult",
    "LineStatistics",
    "MatrixSubspace",
    "MonteCarloRun",
    "OutOfRange",
    "PolygonVertices",
    "ProbEstimate",
    "RankBasis",
    "RankOneWitness",
    "RankVerdict",
    "Regime",
    "SeededRng",
    "SegrankError",
    "SegreInvariants",
    "SolveStatus",
    "Tensor3",
    "TrialAmbiguous",
    "TrialRejected",
    "UnsupportedFormat",
    "active_backend",
    "asymptotic_coefficient",
    "available_backends",
    "bilinear_constraint_subspace",
    "classify_rank",
    "conjugate_constraint_subspace",
    "conjugate_real_count",
    "count_real_lines",
    "determinant_form_coefficients",
    "estimate_line_statistics",
    "expected_intersections",
    "expected_intersections_odd_product",
    "is_format_supported",
    "monte_carlo_rank",
    "orthogonal_complement",
    "pencil_intersection_count",
    "polytope_vertices",
    "random_cubic",
    "rank_one_witness_search",
    "real_roots_binary_form",
    "sample_gaussian_tensor",
    "segre_codim",
    "segre_degree",
    "segre_degree_is_odd",
    "segre_dim",
    "set_backend",
    "slice_span",
    "subspace_distance",
    "subspace_from_matrices",
    "three_by_three_intersection_count",
    "uniform_subspace",
    "wilson_interval",
]
