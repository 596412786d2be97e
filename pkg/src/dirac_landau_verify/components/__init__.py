"""
Components of the verification suite.

Exact algebra (scalars, Weyl elements, Lie presentations), the numeric Fock
layer, one module per verified structure, and the record/report plumbing.
"""

from .check_record import (
    KNOWN_DISCREPANCIES,
    CheckRecord,
    CheckStatus,
    exact_check,
    make_record,
    numeric_check,
)
from .error_messages import ErrorMessages
from .errors import (
    ConfigError,
    DegreeOverflowError,
    FockError,
    JordanFieldError,
    NonCanonicalMapError,
    PhaseSpaceError,
    SignatureMismatchError,
    VerificationError,
)
from .fock import FockBasis, FockOperator, ladder, realize, spectrum
from .jordan import JordanElement, JordanField, jordan_product, triple_product
from .landau import LandauFrame, dirac_generators, landau_spectrum
from .lie import LiePresentation, RuleStyle, verify_closure
from .report_renderer import emit_report, exit_status, parse_report
from .scalar import Scalar
from .transforms import PhasePoint2, PhasePoint3, PhasePoint4, ks_map, lc_map
from .weyl import AlgebraSignature, LinearMap, WeylElement, commutator, multiply

__all__ = [
    "AlgebraSignature",
    "CheckRecord",
    "CheckStatus",
    "ConfigError",
    "DegreeOverflowError",
    "ErrorMessages",
    "FockBasis",
    "FockError",
    "FockOperator",
    "JordanElement",
    "JordanField",
    "JordanFieldError",
    "KNOWN_DISCREPANCIES",
    "LandauFrame",
    "LiePresentation",
    "LinearMap",
    "NonCanonicalMapError",
    "PhasePoint2",
    "PhasePoint3",
    "PhasePoint4",
    "PhaseSpaceError",
    "RuleStyle",
    "Scalar",
    "SignatureMismatchError",
    "VerificationError",
    "WeylElement",
    "commutator",
    "dirac_generators",
    "emit_report",
    "exact_check",
    "exit_status",
    "jordan_product",
    "ks_map",
    "ladder",
    "landau_spectrum",
    "lc_map",
    "make_record",
    "multiply",
    "numeric_check",
    "parse_report",
    "realize",
    "spectrum",
    "triple_product",
    "verify_closure",
]
