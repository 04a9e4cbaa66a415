"""
Modelos Pydantic para parâmetros, famílias uniformes e compactação do conjunto base.
"""
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from ..exceptions import ParameterError
from ..services.bits import MAX_GROUND, KSet, elements_of, mask_from_elements, prefix_mask
from .comum import KSetField


class Params(BaseModel):
    """Parâmetros (n, k, s); S = {1,…,s-1} é sempre derivado, nunca armazenado"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, le=MAX_GROUND, description="Tamanho do conjunto base")
    k: int = Field(..., ge=1, description="Uniformidade")
    s: int = Field(..., ge=1, description="Tamanho do emparelhamento proibido")

    @property
    def ground_mask(self) -> int:
        return prefix_mask(self.n)

    @property
    def s_mask(self) -> int:
        """Máscara de S ∩ [n]"""
        return prefix_mask(self.s - 1) & self.ground_mask

    @property
    def s_elements(self) -> List[int]:
        return elements_of(self.s_mask)

    @property
    def sk(self) -> int:
        return self.s * self.k

    def require_theorem_range(self) -> None:
        """Hipótese do teorema: n ≥ sk"""
        if self.n < self.sk:
            raise ParameterError(f"n={self.n} < sk={self.sk}: fora da hipótese do teorema")

    def with_n(self, n: int) -> "Params":
        return Params(n=n, k=self.k, s=self.s)

    def label(self) -> str:
        return f"(n={self.n}, k={self.k}, s={self.s})"


class SetFamily(BaseModel):
    """
    Família k-uniforme sem repetições, mantida em ordem crescente de máscara.

    Inserir um conjunto duplicado é erro (não há deduplicação silenciosa).
    """
    model_config = ConfigDict(frozen=True)

    params: Params
    sets: Tuple[KSetField, ...] = ()

    _index: frozenset = PrivateAttr(default=frozenset())

    @field_validator("sets")
    @classmethod
    def validate_sets(cls, v):
        """Ordena e rejeita duplicatas"""
        ordered = tuple(sorted(v))
        for prev, cur in zip(ordered, ordered[1:]):
            if prev == cur:
                raise ValueError(f"conjunto duplicado {elements_of(cur)}")
        return ordered

    @model_validator(mode="after")
    def validate_uniform(self):
        """Todo membro tem exatamente k elementos dentro de [n]"""
        ground = self.params.ground_mask
        for member in self.sets:
            if member & ~ground:
                raise ValueError(
                    f"conjunto {elements_of(member)} fora de [{self.params.n}]"
                )
            if member.bit_count() != self.params.k:
                raise ValueError(
                    f"conjunto {elements_of(member)} não tem {self.params.k} elementos"
                )
        return self

    def model_post_init(self, __context) -> None:
        self._index = frozenset(self.sets)

    def __contains__(self, member: KSet) -> bool:
        return member in self._index

    def __len__(self) -> int:
        return len(self.sets)

    def with_sets(self, sets: Sequence[KSet]) -> "SetFamily":
        """Nova família com os mesmos parâmetros"""
        return SetFamily(params=self.params, sets=tuple(sets))

    def support(self) -> int:
        """União de todos os membros"""
        union = 0
        for member in self.sets:
            union |= member
        return union

    def as_elements(self) -> List[List[int]]:
        return [elements_of(member) for member in self.sets]

    @classmethod
    def from_elements(cls, params: Params, sets: Sequence[Sequence[int]]) -> "SetFamily":
        return cls(params=params, sets=tuple(mask_from_elements(m) for m in sets))


class CompactionResult(BaseModel):
    """Resultado da remoção dos elementos não cobertos (conjunto Y) com rerrotulagem"""
    model_config = ConfigDict(frozen=True)

    family: SetFamily
    removed: Tuple[int, ...]
    new_n: int
    relabel_map: Dict[int, int]
    # Elementos fora de S que passaram a ocupar rótulos de S (divergência registrada)
    s_slots_reassigned: Dict[int, int] = Field(default_factory=dict)
    # Rótulos de S sem nenhum elemento coberto disponível
    s_slots_unfilled: int = 0

    @property
    def is_identity(self) -> bool:
        return not self.removed
