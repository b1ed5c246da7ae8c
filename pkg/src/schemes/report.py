from typing import Optional

from pydantic import BaseModel, Field


class RunReport(BaseModel):
    """
    Step and cost accounting of one simulated allreduce.

    `steps` is the completion step of the last rank, `result_step` the step
    at which the last rank held its full result. `model_time` sums
    α + β·(largest block moved) over the occupied steps only.
    """
    algorithm: str
    operator: str
    p: int
    m: int
    b: int
    block_size: int
    steps: int = 0
    result_step: int = 0
    occupied_steps: int = 0
    model_time: float = 0.0
    gamma_cost: float = 0.0
    reductions: int = 0
    exchanges: int = 0
    elements_sent: int = 0
    elements_received: int = 0
    rounds: list[int] = Field(default_factory=list)
    finish_steps: list[int] = Field(default_factory=list)
    result_steps: list[int] = Field(default_factory=list)
    formula_steps: Optional[int] = None
    formula_offset: Optional[int] = None

    @staticmethod
    def _cell(value) -> str:
        if value is None:
            return "-"
        if isinstance(value, float):
            return f"{value:.6f}"
        if isinstance(value, list):
            return ";".join(str(v) for v in value)
        return str(value)

    @classmethod
    def csv_header(cls) -> list[str]:
        return list(cls.model_fields.keys())

    def to_csv_row(self) -> list[str]:
        return [self._cell(getattr(self, name)) for name in self.csv_header()]

    def to_text(self) -> str:
        return "".join(f"{name}: {cell}\n" for name, cell in zip(self.csv_header(), self.to_csv_row()))
