"""Reversed Dickson polynomials of the fourth kind over finite fields."""

from .dickson import (
    classical_eval,
    closed_form,
    frobenius_power_identity,
    genfun_series,
    rdp4_eval_closed,
    rdp4_eval_recursive,
    rdp4_sequence,
    rdp_coeffs_exact,
    rdp_eval_param,
    special_value,
)
from .errors import (
    CriterionDisagreement,
    DegreeTooLarge,
    DicksonError,
    IndexCoverageError,
    InternalInconsistency,
    KindOutOfRange,
    LengthMismatch,
    OddDegree,
    ReducibleModulus,
    UnsupportedCharacteristic,
)
from .field import GF, QuadExt, build_V, construct_field, parametrize_y, parse_field, quadratic_extension
from .moments import AS_PRINTED, CORRECTED, first_moment_bruteforce, moment_table, verify_moments
from .permutation import PPReport, aux_poly, hermite_check, is_pp_direct, pp_report, pp_scan, two_to_one_characterization

__version__ = "0.1.0"
