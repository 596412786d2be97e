"""dirac-landau-verify - exact checks of Dirac's so(2,3) representation.

Symbolic verification of the so(2,3) generators of the Landau problem, the
Jordan/TKK construction of the conformal algebras, the so(2,4) symmetry of
hydrogen, the spinorial ladder representation and the KS/LC transforms.
"""

__version__ = "0.1.0"

from .components.check_record import CheckRecord, CheckStatus
from .runner import run_suite
from .verify_config import SuiteConfig, VerifyConfig, get_config

__all__ = [
    "CheckRecord",
    "CheckStatus",
    "SuiteConfig",
    "VerifyConfig",
    "get_config",
    "run_suite",
    "__version__",
]
