from typing import Optional

from pydantic import BaseModel, Field, field_validator

from app.models.dir_word import BoundarySystem
from app.models.fold_word import FoldingSystem, FoldWord


class SystemRecord(BaseModel):
    name: str = Field(description="Name of the folding system")
    sigma_a: str = Field(description="sigma(A) as a fold word")
    expected_tau: Optional[str] = Field(
        default=None, description="Expected productions, L=..,R=..,l=..,r=..,S=..,s=.."
    )

    @field_validator("sigma_a")
    @classmethod
    def _sigma_parses(cls, value: str) -> str:
        FoldWord(value)
        return value

    @field_validator("expected_tau")
    @classmethod
    def _tau_parses(cls, value: Optional[str]) -> Optional[str]:
        if not value:
            return None
        return BoundarySystem.from_text(value).to_text()

    def folding_system(self) -> FoldingSystem:
        return FoldingSystem.from_sigma(self.sigma_a)

    def expected_system(self) -> Optional[BoundarySystem]:
        if self.expected_tau is None:
            return None
        return BoundarySystem.from_text(self.expected_tau)
