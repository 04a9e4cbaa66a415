"""
Número de emparelhamento exato (branch-and-bound), verificador ingênuo por
subconjuntos e a reconstrução de um emparelhamento através de um deslocamento.
"""
import logging
from itertools import combinations
from typing import List, Optional, Sequence

from ..config import settings
from ..exceptions import ClaimViolation, InputError, ParameterError
from ..models.emparelhamento import MatchingCertificate
from ..models.familia import SetFamily
from .bits import KSet, bit, elements_of
from .deslocamentos import make_step, shift_family

logger = logging.getLogger(__name__)


def _search(masks: Sequence[KSet], k: int, target: Optional[int] = None) -> List[KSet]:
    """
    Busca em profundidade, ramo de inclusão primeiro, sobre os conjuntos em
    ordem crescente. Poda quando nem os conjuntos restantes nem os elementos
    livres permitem superar o melhor atual. Com `target`, para ao atingi-lo.
    """
    ordered = sorted(masks)
    total = len(ordered)
    universe = 0
    for m in ordered:
        universe |= m
    best: List[KSet] = []
    current: List[KSet] = []

    def branch(start: int, used: int) -> bool:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
            if target is not None and len(best) >= target:
                return True
        free = (universe & ~used).bit_count() // k
        for idx in range(start, total):
            if len(current) + min(total - idx, free) <= len(best):
                break
            member = ordered[idx]
            if member & used:
                continue
            current.append(member)
            if branch(idx + 1, used | member):
                return True
            current.pop()
        return False

    branch(0, 0)
    return best


def find_matching(masks: Sequence[KSet], k: int, size: int) -> Optional[List[KSet]]:
    """Um emparelhamento com `size` conjuntos, ou None"""
    if size <= 0:
        return []
    found = _search(masks, k, target=size)
    return found if len(found) >= size else None


def matching_number(f: SetFamily) -> int:
    """ν(F) exato"""
    return len(_search(f.sets, f.params.k))


def max_matching(f: SetFamily) -> MatchingCertificate:
    """Emparelhamento máximo; empates resolvidos pelo certificado lexicograficamente menor"""
    return MatchingCertificate.for_family(f, _search(f.sets, f.params.k))


def has_s_matching(f: SetFamily, s: Optional[int] = None) -> bool:
    """ν(F) ≥ s, encerrando a busca assim que s conjuntos disjuntos aparecem"""
    s = f.params.s if s is None else s
    return find_matching(f.sets, f.params.k, s) is not None


def s_matching_certificate(f: SetFamily) -> Optional[MatchingCertificate]:
    """Certificado de tamanho s quando existir"""
    found = find_matching(f.sets, f.params.k, f.params.s)
    if found is None:
        return None
    return MatchingCertificate.for_family(f, found)


def naive_matching_number(f: SetFamily) -> int:
    """Oráculo ingênuo: testa todos os subconjuntos, do maior tamanho possível para baixo"""
    if len(f) > settings.naive_max_sets:
        raise ParameterError(
            f"verificador ingênuo limitado a {settings.naive_max_sets} conjuntos (recebeu {len(f)})"
        )
    upper = min(len(f), f.params.n // f.params.k)
    for size in range(upper, 0, -1):
        for group in combinations(f.sets, size):
            union = 0
            disjoint = True
            for member in group:
                if union & member:
                    disjoint = False
                    break
                union |= member
            if disjoint:
                return size
    return 0


def _is_matching(sets: Sequence[KSet]) -> bool:
    used = 0
    for member in sets:
        if used & member:
            return False
        used |= member
    return True


def pullback_matching(
    f: SetFamily, i: int, j: int, m_prime: MatchingCertificate
) -> MatchingCertificate:
    """
    Dado um emparelhamento M′ em C_ij(F), devolve um emparelhamento do mesmo
    tamanho em F.

    No máximo um membro de M′ foi alterado pelo deslocamento (é o único que
    contém i e cuja pré-imagem, trocando i por j, está em F). Se nenhum foi
    alterado, M′ serve. Senão troca-se B₁ pela pré-imagem A₁; se A₁ colidir
    com o único B₂ ∋ j, B₂ é trocado por C₂ = (B₂∖{j})∪{i}, que já está em F.
    """
    step = make_step(i, j)
    shifted = shift_family(f, step)
    bi, bj = bit(i), bit(j)

    members = list(m_prime.sets)
    if not _is_matching(members) or any(member not in shifted for member in members):
        raise InputError("M′ não é um emparelhamento na família deslocada")

    altered = [
        member
        for member in members
        if member & bi
        and member not in f
        and ((member & ~bi) | bj) in f
    ]
    evidence = {
        "family": f.as_elements(),
        "i": i,
        "j": j,
        "m_prime": [elements_of(m) for m in members],
    }
    if len(altered) > 1:
        raise ClaimViolation(
            "single_altered", "mais de um membro de M′ foi alterado pelo deslocamento", evidence
        )
    if any(member not in f for member in members if member not in altered):
        raise ClaimViolation(
            "single_altered", "membro de M′ fora de F sem pré-imagem identificável", evidence
        )
    if not altered:
        return MatchingCertificate.for_family(f, members)

    b1 = altered[0]
    a1 = (b1 & ~bi) | bj
    rest = [member for member in members if member != b1]
    colliding = [member for member in rest if member & bj]
    if not colliding:
        return MatchingCertificate.for_family(f, [a1] + rest)

    b2 = colliding[0]
    c2 = (b2 & ~bj) | bi
    if c2 not in f:
        raise ClaimViolation(
            "c2_membership",
            f"C₂ = {elements_of(c2)} deveria pertencer a F",
            {**evidence, "b2": elements_of(b2), "c2": elements_of(c2)},
        )
    rebuilt = [a1, c2] + [member for member in rest if member != b2]
    logger.debug(f"Pullback via C₂ = {elements_of(c2)}")
    return MatchingCertificate.for_family(f, rebuilt)
