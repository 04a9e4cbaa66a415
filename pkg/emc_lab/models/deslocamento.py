"""
Modelos Pydantic para os deslocamentos (i,j) e sequências de deslocamentos.
"""
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..services.bits import MAX_GROUND
from .familia import SetFamily


class ShiftStep(BaseModel):
    """Deslocamento C_ij: i entra, j sai"""
    model_config = ConfigDict(frozen=True)

    i: int = Field(..., ge=1, le=MAX_GROUND, description="Elemento que entra")
    j: int = Field(..., ge=1, le=MAX_GROUND, description="Elemento que sai")

    @model_validator(mode="after")
    def validate_distinct(self):
        """O caso i = j é rejeitado na construção"""
        if self.i == self.j:
            raise ValueError(f"deslocamento com i = j = {self.i}")
        return self


class ShiftSequence(BaseModel):
    """Sequência (I(p), J(p)) na ordem das posições p = 1…t"""
    model_config = ConfigDict(frozen=True)

    steps: Tuple[ShiftStep, ...] = ()

    @field_validator("steps")
    @classmethod
    def validate_distinct_elements(cls, v):
        """Elementos de I distintos entre si, idem para J"""
        incoming = [step.i for step in v]
        outgoing = [step.j for step in v]
        if len(set(incoming)) != len(incoming):
            raise ValueError(f"elementos de I repetidos: {incoming}")
        if len(set(outgoing)) != len(outgoing):
            raise ValueError(f"elementos de J repetidos: {outgoing}")
        return v

    @property
    def t(self) -> int:
        return len(self.steps)


class IntermediateFamily(BaseModel):
    """Família F_p da cascata de deslocamentos; `step` é o deslocamento que a produziu"""
    model_config = ConfigDict(frozen=True)

    position: int
    step: Optional[ShiftStep] = None
    family: SetFamily
    trivial: bool
