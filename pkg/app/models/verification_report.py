from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class VerificationReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    system: str = Field(description="Name or sigma(A) of the folding system")
    level: int = Field(ge=0, description="Number of substitution steps")
    passed: bool = Field(alias="pass", description="Verdict of the oracle")
    segments: int = Field(ge=0, description="Segments on the outer boundary loop")
    mismatch: Optional[str] = Field(default=None, description="First difference")

    def to_record(self) -> dict:
        return self.model_dump(by_alias=True, exclude_none=True)

    def describe(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = f"level {self.level}: {verdict} ({self.segments} segments)"
        return f"{line} {self.mismatch}" if self.mismatch else line


class CatalogResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    system: str = Field(description="Catalog record name")
    sigma: str = Field(description="sigma(A) as text")
    derived: Optional[str] = Field(default=None, description="Derived tau as text")
    tau_match: Optional[bool] = Field(
        default=None, description="Derived tau equals the expected one"
    )
    error: Optional[str] = Field(
        default=None, description="Derivation or length cap error"
    )
    levels: List[VerificationReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        # A record with no verified level has not passed.
        return (
            self.error is None
            and self.tau_match is not False
            and bool(self.levels)
            and all(report.passed for report in self.levels)
        )
