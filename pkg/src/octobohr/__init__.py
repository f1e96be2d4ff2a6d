"""Octonion slice power series, Bohr-type coefficient sums, and radii.

The package implements the octonion algebra through the quaternion doubling
construction, a calculus for truncated slice power series with right
octonion coefficients (product, conjugate, normal, reciprocal, derivative,
stem and splitting decompositions), a family of Bohr-type coefficient
functionals for unit-ball and half-space maps, the closed-form and
root-characterized radii below which those functionals stay bounded by 1,
extremal families witnessing sharpness beyond the radii, and a CLI that
verifies the inequalities numerically over randomized corpora.
"""

from ._kernels import active_backend_name
from .octonion import (
    BASIS,
    I,
    J,
    K,
    L,
    LI,
    LJ,
    LK,
    ONE,
    ZERO,
    Octonion,
    Quaternion,
    SlicePoint,
    associator,
    oct_conj,
    oct_inv,
    oct_mul,
    oct_norm,
    random_imaginary_unit,
    slice_decompose,
)
from .series import (
    SliceSeries,
    companion_identity_residual,
    companion_point,
    evaluate,
    normal,
    slice_conj,
    slice_derivative,
    slice_product,
    slice_reciprocal,
    split_components,
    stem_components,
    sup_norm_estimate,
)
from .functionals import (
    BohrParams,
    FunctionalValue,
    bohr_sum,
    bohr_sum_with_deviation,
    bohr_sum_with_energy_poly,
    bohr_sum_with_quadratic,
    energy_sum,
    halfspace_distance,
    halfspace_sum_with_energy,
    halfspace_sum_with_quadratic,
    quadratic_sum,
    tail_sum,
)
from .radii import (
    RadiusResult,
    bohr_radius,
    deviation_radius,
    distance_tail_radius,
    energy_budget,
    energy_cap,
    halfspace_deviation_radius,
    halfspace_energy_radius,
    halfspace_quadratic_radius,
    l_condition_weight,
    sharpness_poly,
    weights_admissible,
)
from .corpus import (
    CorpusEntry,
    build_corpus,
    load_corpus,
    make_disk_extremal,
    make_disk_extremal_via_ops,
    make_halfspace_extremal,
    random_halfspace_function,
    random_unit_ball_function,
    save_corpus,
    sharpness_probe,
)
from .report import VerificationReport
from .theorems import REGISTRY, TOKENS, WeightsInadmissibleError, theorem_radius
from .verify import run_verification, sweep_values

__version__ = "0.1.0"
