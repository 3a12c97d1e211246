"""Certified enclosures and sharp bounds for the complete elliptic integral
of the second kind E(r), the ellipse perimeter, and the Toader mean."""

from .bounds import (
    ALPHA_STAR,
    ALZER_ALPHA,
    ALZER_BETA,
    BETA_STAR,
    LAMBDA_STAR,
    MU_STAR,
    SHARP,
    BoundSpec,
    Enclosure,
    Family,
    SharpConstants,
    Side,
    alzer_qiu_upper,
    barnard_upper,
    best_enclosure,
    corollary31,
    default_candidates,
    parse_bound_spec,
    q_mean,
    thm11_bound,
    thm12_bound,
    thm12_lower_threshold,
    thm12_upper_threshold,
    vuorinen_lower,
)
from .core import (
    EllipticValues,
    MeanPair,
    Modulus,
    agm,
    as_modulus,
    complete_e,
    complete_k,
    derivative_residuals,
    ellipse_perimeter,
    elliptic_ke,
    landen_residual,
    toader_mean,
)
from .errors import (
    ConfigurationError,
    DivergenceError,
    DomainError,
    EllipBoundsError,
    InvalidBoundError,
    VerificationError,
)
from .verify import (
    CheckResult,
    CrossoverResult,
    Direction,
    MonotoneReport,
    NoCrossover,
    SignCase,
    SignCaseReport,
    find_crossover,
    lemma22_function,
    lemma23_g,
    lemma24_h,
    lemma25_check,
    lemma26_classify,
    lemma26_f,
    lemma27_F,
    run_suite,
    search_violation,
    sweep_monotone,
)

__version__ = "0.1.0"
