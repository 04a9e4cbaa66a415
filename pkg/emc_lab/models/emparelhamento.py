"""
Modelo Pydantic do certificado de emparelhamento.
"""
from typing import Sequence, Tuple

from pydantic import BaseModel, ConfigDict, computed_field

from ..exceptions import InputError
from ..services.bits import KSet, elements_of
from .comum import KSetField
from .familia import SetFamily


class MatchingCertificate(BaseModel):
    """Coleção de membros dois a dois disjuntos que testemunha ν(F) ≥ |sets|"""
    model_config = ConfigDict(frozen=True)

    sets: Tuple[KSetField, ...] = ()

    @computed_field
    @property
    def size(self) -> int:
        return len(self.sets)

    @classmethod
    def for_family(cls, family: SetFamily, sets: Sequence[KSet]) -> "MatchingCertificate":
        """Constrói o certificado validando disjunção e pertinência à família"""
        used = 0
        for member in sets:
            if member not in family:
                raise InputError(f"conjunto {elements_of(member)} não pertence à família")
            if member & used:
                raise InputError(f"conjunto {elements_of(member)} não é disjunto dos demais")
            used |= member
        return cls(sets=tuple(sets))
