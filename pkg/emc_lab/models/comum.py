"""
Modelos Pydantic comuns: tipo de campo para k-conjuntos e envelope dos relatórios.
"""
from datetime import datetime, timezone
from typing import Annotated, Any, Dict, List, Optional

from pydantic import BaseModel, BeforeValidator, Field, PlainSerializer

from ..services.bits import elements_of, mask_from_elements


def _to_mask(value: Any) -> int:
    """Aceita máscara inteira ou lista de elementos"""
    if isinstance(value, int):
        return value
    return mask_from_elements(value)


# k-conjunto: int internamente, lista crescente de elementos no JSON
KSetField = Annotated[
    int,
    BeforeValidator(_to_mask),
    PlainSerializer(elements_of, return_type=List[int]),
]


class ReportHeader(BaseModel):
    """Cabeçalho isolado: único lugar onde aparece o carimbo de tempo"""
    schema_version: int
    command: str
    generated_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))


class Report(BaseModel):
    """Envelope de todo relatório JSON"""
    header: ReportHeader
    body: Dict[str, Any]


class Finding(BaseModel):
    """Violação de uma afirmação da prova, com evidência reprodutível"""
    claim: str
    message: str
    seed: Optional[int] = None
    evidence: Dict[str, Any] = Field(default_factory=dict)
