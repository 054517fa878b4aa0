"""Exact characteristic-class calculus with cohomological obstruction checks.

The package computes with Chern and Pontryagin classes over Z, Z/m and Z with
2 inverted, builds cohomology models of divisor complements in projective
space and of bundle total spaces over the 6-sphere, and evaluates four
obstruction tests on them (gradability, polarization, arboreal skeleton,
mod-p Maslov data).  Verdicts are obstructions only: a test that does not fire
never claims the structure exists.
"""

from .rings import CoefficientRing, RingElement, ZZ, Z_HALF, Zmod, odd_part, reduce
from .graded import (
    DEFAULT_MAX_DEGREE,
    FreePoly,
    Generator,
    GradedClass,
    HPowers,
    SphereLike,
    WedgeSum,
)
from .chern import (
    chern_presentation,
    complexification_image,
    in_real_plus_line_kernel,
    pontryagin_line_presentation,
    pontryagin_presentation,
    real_plus_line_image,
    total_chern_projective,
    whitney_product,
)
from .numtheory import (
    anticanonical_congruence,
    arboreal_divisor_criterion,
    binom_exact,
    binom_mod_lucas,
    is_prime,
    padic_valuation,
    triple_product_over_three,
)
from .spaces import (
    SpaceModel,
    cotangent_sphere6,
    divisor_complement,
    point_space,
    space_to_json,
    sphere6_bundle_total_space,
    stabilize,
    top_cell_pairing,
    wedge,
    with_coefficients,
)
from .obstructions import (
    CheckResult,
    ObstructionReport,
    Verdict,
    check_arboreal,
    check_gradability,
    check_maslov_mod_p,
    check_polarization,
    classify,
)
from .homotopy import (
    HomotopyGroup,
    Sphere6Record,
    bott_pi,
    j_sequence_shape,
    sphere6_report,
    stable_stem_mod_p,
    unitary_stable_rank,
)
from .search import SearchSpec, render, run_search, search_rows
from .golden import GOLDEN_CASES, all_consistent, verify_paper

__version__ = "0.1.0"
