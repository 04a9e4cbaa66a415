"""
Modelos Pydantic para os rastros do algoritmo iterativo.
"""
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .comum import KSetField
from .deslocamento import ShiftSequence
from .emparelhamento import MatchingCertificate
from .familia import CompactionResult, Params, SetFamily


class PairSelection(BaseModel):
    """Par (A, B) escolhido numa iteração, com X = A∩B, A′ = A∖X e B′ = B∖X"""
    model_config = ConfigDict(frozen=True)

    a: KSetField
    b: KSetField
    x: KSetField
    a_prime: Tuple[int, ...]
    b_prime: Tuple[int, ...]
    r: int

    @property
    def b1(self) -> int:
        return self.b_prime[0]


class ChainResult(BaseModel):
    """Cadeia A₁,…,A_t / B₁,…,B_t e a sequência de deslocamentos correspondente"""
    model_config = ConfigDict(frozen=True)

    a_seq: Tuple[KSetField, ...]
    b_seq: Tuple[KSetField, ...]
    seq: ShiftSequence
    t: int


class ClaimCheck(BaseModel):
    """Resultado de uma afirmação verificada sobre o rastro concreto"""
    claim: str
    passed: bool
    detail: str = ""


class IterationTrace(BaseModel):
    """Registro completo de uma iteração (suficiente para reprodução)"""
    index: int
    family_size: int
    phi_before: int
    phi_after: int
    pair: PairSelection
    chain: ChainResult
    # |F^x| antes/depois para x ∈ S ∪ {b₁}
    counts_before: Dict[int, int]
    counts_after: Dict[int, int]
    # |F_p^{b₁}| e trivialidade para p = t, t-1, …, 0
    b1_counts: List[int]
    intermediate_trivial: List[bool]
    nu_before: Optional[int] = None
    nu_after: Optional[int] = None
    checks: List[ClaimCheck] = Field(default_factory=list)

    @property
    def failed_claims(self) -> List[str]:
        return [check.claim for check in self.checks if not check.passed]


class OutcomeKind(str, Enum):
    """Condições de parada"""
    SUBSET_OF_G_STAR = "SubsetOfGStar"
    SUBSET_OF_F_STAR = "SubsetOfFStar"
    CONTRADICTION_MATCHING = "ContradictionMatching"


class Outcome(BaseModel):
    """Resultado de uma execução do algoritmo"""
    kind: OutcomeKind
    params: Params
    initial_family: SetFamily
    final_family: SetFamily
    final_n: int
    bound: int
    phi_history: List[int] = Field(default_factory=list)
    iterations: List[IterationTrace] = Field(default_factory=list)
    compactions: List[CompactionResult] = Field(default_factory=list)
    certificate: Optional[MatchingCertificate] = None
    violations: List[Dict[str, Any]] = Field(default_factory=list)
