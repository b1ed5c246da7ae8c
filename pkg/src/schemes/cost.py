from pydantic import BaseModel, ConfigDict, Field

from settings import cost


class CostParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(default=cost.alpha, ge=0, description="start-up latency per step")
    beta: float = Field(default=cost.beta, ge=0, description="time per transmitted element")
    gamma: float = Field(default=cost.gamma, ge=0, description="time per element ⊙ application")

    def step(self, elements: int) -> float:
        return self.alpha + self.beta * elements
