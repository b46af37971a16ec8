"""Generalized Bohr radii, Bohr-type majorant functionals and sharpness checks."""
from .errors import (
    BohrError,
    ConfigurationError,
    DegenerateError,
    DomainError,
    NoRootError,
    NonConvergentError,
    PreconditionError,
    UnsupportedError,
)
from .seqcore import (
    CoeffSeq,
    SumResult,
    WeightSeq,
    blaschke_point,
    blaschke_product,
    closed_sum_power,
    coeff_table,
    eval_weight,
    harmonic_extremal,
    paper_printed_sum,
    sum_weights,
)
from .functionals import (
    AnalyticInstance,
    HarmonicInstance,
    area_upper_bound,
    eval_area_ratio,
    eval_Cf,
    eval_Fbeta_lhs,
    eval_harmonic_S,
    growth_bounds_harmonic,
)
from .radii import (
    RadiusResult,
    ResidualSpec,
    fbeta_residual,
    generalized_residual,
    harmonic_residual,
    prior_radius,
    residual_fbeta,
    residual_generalized,
    residual_harmonic,
    solve_min_root,
    table1,
)

__version__ = "0.1.0"
