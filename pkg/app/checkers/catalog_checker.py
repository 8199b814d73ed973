import logging
from typing import Optional

import pandas as pd

from app.derivation.boundary_deriver import derive_boundary_system
from app.errors import InvalidFoldingCurveError, LengthCapExceeded
from app.models.system_record import SystemRecord
from app.models.verification_report import CatalogResult
from app.oracle.boundary_verifier import BoundaryVerifier

log = logging.getLogger(__name__)

FRAME_COLUMNS = ["system", "tau", "levels", "failed levels", "result", "error"]


def _tau_label(tau_match: Optional[bool]) -> str:
    if tau_match is None:
        return "-"
    return "match" if tau_match else "MISMATCH"


class CatalogChecker:
    """Derive tau for each catalog record and verify it level by level."""

    # Levels are tried in order until the length cap stops the sweep.
    UNBOUNDED_LEVEL = 64

    def __init__(self, cap: Optional[int] = None, max_level: Optional[int] = None):
        self.cap = cap
        self.max_level = self.UNBOUNDED_LEVEL if max_level is None else max_level

    def check(self, record: SystemRecord) -> CatalogResult:
        system = record.folding_system()
        try:
            tau = derive_boundary_system(system)
        except InvalidFoldingCurveError as e:
            log.warning("%s: %s", record.name, e)
            return CatalogResult(system=record.name, sigma=record.sigma_a, error=str(e))

        derived = tau.to_text()
        tau_match = None
        if record.expected_tau is not None:
            tau_match = derived == record.expected_tau
            if not tau_match:
                log.warning(
                    "%s: derived %s, expected %s",
                    record.name,
                    derived,
                    record.expected_tau,
                )

        verifier = BoundaryVerifier(system, tau, record.name, self.cap)
        try:
            levels = verifier.verify_levels(self.max_level)
        except LengthCapExceeded as e:
            log.warning("%s: no level fits under the cap, %s", record.name, e)
            return CatalogResult(
                system=record.name,
                sigma=record.sigma_a,
                derived=derived,
                tau_match=tau_match,
                error=str(e),
            )
        return CatalogResult(
            system=record.name,
            sigma=record.sigma_a,
            derived=derived,
            tau_match=tau_match,
            levels=levels,
        )

    def check_all(self, records: list[SystemRecord]) -> list[CatalogResult]:
        return [self.check(record) for record in records]

    @staticmethod
    def to_frame(results: list[CatalogResult]) -> pd.DataFrame:
        rows = [
            {
                "system": result.system,
                "tau": _tau_label(result.tau_match),
                "levels": len(result.levels),
                "failed levels": sum(not report.passed for report in result.levels),
                "result": "PASS" if result.passed else "FAIL",
                "error": result.error or "",
            }
            for result in results
        ]
        return pd.DataFrame(rows, columns=FRAME_COLUMNS)
