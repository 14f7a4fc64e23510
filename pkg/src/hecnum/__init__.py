"""Exact L-polynomials and class numbers for y^ell = x^2 + ax + b over F_q."""

from .errors import (
    BudgetExceeded,
    Divisible,
    DomainError,
    FieldTooLarge,
    GenusZero,
    HecnumError,
    IncompatibleFields,
    IndexOutOfRange,
    InvalidCharacterBase,
    NonIntegralCoefficient,
    NotIrreducible,
    NotPrime,
    OrderMismatch,
    ResourceError,
    UnsupportedEll,
    UnsupportedM,
    VerificationMismatch,
    ZeroElement,
    ZeroRhs,
)
from .gf import (
    FieldElem,
    FieldSpec,
    build_field,
    conway_polynomial,
    embed,
    field_for_order,
    norm,
    split_prime_power,
)
from .cyclo import (
    CharSpec,
    CycInt,
    char_eval_ell,
    frobenius_shift,
    identity_report,
    jacobi_sum,
    lift_char_base,
    quadratic_eval,
    signed_power,
)
from .frobenius import (
    CurveParams,
    TraceProfile,
    analyze,
    genus,
    multiplicative_order,
    point_count,
    trace,
)
from .lfunc import (
    LPoly,
    class_number,
    closed_form,
    jacobi_constant_coeff_qr,
    lpoly_for_curve,
    lpoly_from_profile,
    lpoly_from_s,
    trivial_lpoly,
)
from .oracle import (
    OracleBudget,
    count_points_naive,
    diagonal_count_naive,
    lpoly_from_counts,
)
from .stats import (
    AverageReport,
    ClassEntry,
    JacobiPowerSums,
    average_class_number,
    average_trace,
    closed_form_average,
    jacobi_power_sums,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
