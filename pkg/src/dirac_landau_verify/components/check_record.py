"""
Check records.

Every verification produces a ``CheckRecord``. Mathematical failures never
raise; they become records with status ``fail``, or ``expected-fail`` when the
check id is registered as a known printed-form discrepancy.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from .weyl import WeylElement

logger = logging.getLogger(__name__)


class CheckStatus(str, Enum):
    """Outcome of a single check."""

    PASS = "pass"
    FAIL = "fail"
    EXPECTED_FAIL = "expected-fail"


# Check ids (or "prefix.*" families) whose failure documents a printed-form mismatch.
KNOWN_DISCREPANCIES: dict[str, str] = {
    "transforms.hopf-norm.paper-literal": (
        "printed KS x1, x2 rows are half of the Hopf-normalized ones"
    ),
    "transforms.ks-canonical.paper-literal": (
        "printed KS x1, x2 rows give index-dependent bracket constants"
    ),
    "landau.printed.phase.m01": "printed phase m01 is i times the closing form",
    "landau.printed.holomorphic.m3-1": "printed ordering constant -1 instead of +1",
    "landau.printed.holomorphic.m03": "printed overall sign is reversed",
    "tkk.printed.s-equals-m-minus-delta-d.*": (
        "the table operator satisfies S = dD - M; the printed relation holds "
        "for its negative"
    ),
    "tkk.printed.k-equals-ipi": (
        "with P = i d the inversion conjugate of P_mu is -K^mu"
    ),
    "tkk.printed-signs.*": (
        "literal table operators satisfy the abstract relations only after "
        "fitting the realization signs of the g0 and g+1 blocks"
    ),
    "transforms.lc-canonical.equal-constants": (
        "printed LC momenta give {xi, p_xi} = 2 but {eta, p_eta} = -2"
    ),
    "transforms.ks-restriction.printed-x3-equals-xi": (
        "restricted KS gives x3 = -xi; the printed LC map fixes the opposite sign"
    ),
    "transforms.ks-rescaled.paper-literal": (
        "the printed KS rows have no single bracket constant to normalize by"
    ),
}


def known_discrepancy(check_id: str) -> Optional[str]:
    """Reason text if ``check_id`` is registered, else None."""
    if check_id in KNOWN_DISCREPANCIES:
        return KNOWN_DISCREPANCIES[check_id]
    for key, reason in KNOWN_DISCREPANCIES.items():
        if key.endswith(".*") and check_id.startswith(key[:-1]):
            return reason
    return None


@dataclass
class CheckRecord:
    """Result of one verification."""

    id: str
    description: str
    status: CheckStatus
    residual: float = 0.0
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    convention_notes: dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "id": self.id,
            "description": self.description,
            "status": self.status.value,
            "residual": self.residual,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "convention_notes": self.convention_notes,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CheckRecord":
        """Create from dictionary."""
        return cls(
            id=data["id"],
            description=data.get("description", ""),
            status=CheckStatus(data["status"]),
            residual=float(data.get("residual", 0.0)),
            lhs=data.get("lhs"),
            rhs=data.get("rhs"),
            convention_notes=dict(data.get("convention_notes") or {}),
        )


def make_record(
    check_id: str,
    description: str,
    ok: bool,
    residual: float = 0.0,
    lhs: Optional[str] = None,
    rhs: Optional[str] = None,
    notes: Optional[dict[str, Any]] = None,
) -> CheckRecord:
    """Build a record, downgrading registered failures to expected-fail."""
    if ok:
        status = CheckStatus.PASS
        logger.debug(f"{check_id}: pass")
    else:
        reason = known_discrepancy(check_id)
        if reason is None:
            status = CheckStatus.FAIL
            logger.warning(f"{check_id}: FAILED (residual {residual:.3g})")
        else:
            status = CheckStatus.EXPECTED_FAIL
            notes = {**(notes or {}), "known_discrepancy": reason}
            logger.info(f"{check_id}: expected failure ({reason})")
    return CheckRecord(
        id=check_id,
        description=description,
        status=status,
        residual=residual,
        lhs=lhs,
        rhs=rhs,
        convention_notes=dict(notes or {}),
    )


def exact_check(
    check_id: str,
    description: str,
    lhs: WeylElement,
    rhs: WeylElement,
    notes: Optional[dict[str, Any]] = None,
) -> CheckRecord:
    """Symbolic equality lhs == rhs; the residual is the largest |coefficient|."""
    diff = lhs - rhs
    return make_record(
        check_id,
        description,
        diff.is_zero(),
        residual=diff.max_abs_coefficient(),
        lhs=lhs.to_text(),
        rhs=rhs.to_text(),
        notes=notes,
    )


def numeric_check(
    check_id: str,
    description: str,
    residual: float,
    tolerance: float,
    notes: Optional[dict[str, Any]] = None,
) -> CheckRecord:
    """Pass when ``residual`` ≤ ``tolerance``."""
    return make_record(
        check_id,
        description,
        residual <= tolerance,
        residual=float(residual),
        notes={"tolerance": tolerance, **(notes or {})},
    )


def exact_family_check(
    check_id: str,
    description: str,
    pairs: list[tuple[WeylElement, WeylElement]],
    notes: Optional[dict[str, Any]] = None,
) -> CheckRecord:
    """Exact equality over many (lhs, rhs) instances; reports the first mismatch."""
    worst = 0.0
    first: Optional[tuple[WeylElement, WeylElement]] = None
    failures = 0
    for lhs, rhs in pairs:
        diff = lhs - rhs
        if diff.is_zero():
            continue
        failures += 1
        worst = max(worst, diff.max_abs_coefficient())
        if first is None:
            first = (lhs, rhs)
    return make_record(
        check_id,
        description,
        failures == 0,
        residual=worst,
        lhs=first[0].to_text() if first else None,
        rhs=first[1].to_text() if first else None,
        notes={"instances": len(pairs), "failures": failures, **(notes or {})},
    )
