"""Causal double products of rotations, their coefficient combinatorics, and the limit kernel."""

from .combinatorics import (
    CatalanTriple,
    DyckQuery,
    binomial,
    catalan_general,
    catalan_recurrence_holds,
    enumerate_dyck,
    fibonacci,
)
from .coefficients import (
    CoeffKey,
    SeriesPolynomial,
    anticausal_series,
    causal_series,
    forward_count_brute,
    forward_count_closed,
    reversed_count_brute,
    reversed_count_closed,
    truncated_kernel,
    unitarity_identity_residual,
)
from .kernel import (
    ComplexParam,
    Interval,
    KernelField,
    bessel_profile,
    bessel_series,
    isometry_residual,
    kernel_anticausal,
    kernel_causal,
    limit_kernel,
    lommel_residual,
    sonine_gegenbauer_residual,
)
from .lattice import (
    DegenerateOrdering,
    EssentialOrder,
    LatticePath,
    LinearExtension,
    enumerate_degenerate_orderings,
    enumerate_linear_extensions,
    enumerate_paths,
    essential_order,
    upper_vertex_count,
)
from .product import (
    ConvergenceStudy,
    DenseUnitary,
    PairOrdering,
    PiecewisePolynomial,
    bilinear_form,
    chain_count_matrix,
    convergence_study,
    double_product,
    kernel_estimate,
    limit_bilinear_form,
    linearized_product,
    rotation_factor,
)

__version__ = "0.1.0"
