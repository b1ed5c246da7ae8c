from pathlib import Path
from typing import Annotated, Optional

from pydantic import BaseModel, BeforeValidator, Field, field_validator

from settings import settings
from src.exceptions.bench import BenchExceptions
from src.models.blocks import partition_by_count
from src.schemes.cost import CostParams


CommaList = Annotated[list[str], BeforeValidator(lambda x: [v for v in x.split(",") if v] if isinstance(x, str) else x)]


class ExperimentConfig(BaseModel):
    procs: int = Field(default=settings.procs, ge=1)
    counts: list[int] = Field(default_factory=list)
    block_size: Optional[int] = Field(default=None, ge=1)
    blocks: Optional[int] = Field(default=None, ge=1)
    operator: str = settings.operator
    algorithms: CommaList = Field(default_factory=lambda: ["doubly", "pipelined", "naive"])
    cost: CostParams = Field(default_factory=CostParams)
    reps: int = Field(default=settings.reps, ge=1)
    csv: Optional[Path] = None
    seed: int = settings.seed
    fault: Optional[tuple[int, int]] = None

    @field_validator("counts")
    @classmethod
    def counts_ascending(cls, value: list[int]) -> list[int]:
        if any(c < 0 for c in value) or value != sorted(value):
            raise ValueError("counts must be non-negative and ascending")
        return value

    @field_validator("algorithms")
    @classmethod
    def algorithms_present(cls, value: list[str]) -> list[str]:
        BenchExceptions.raise_exception_empty_algorithms(value)
        return value

    def block_size_for(self, m: int) -> int:
        """--blocks wins over --block-size; the fixed setting is the fallback."""
        if self.blocks is not None:
            return partition_by_count(m, self.blocks).block_size
        return self.block_size or settings.block_size
