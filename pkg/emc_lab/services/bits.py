"""
Representação de k-conjuntos como vetores de bits de uma palavra.

O elemento x ∈ [n] ocupa o bit x-1, de modo que a ordem natural dos inteiros
é a ordem canônica usada em todas as escolhas "menor conjunto".
"""
from typing import Iterable, Iterator, List

# Um k-conjunto é um int cujo popcount é k
KSet = int

MAX_GROUND = 64


def bit(x: int) -> int:
    """Máscara do elemento x (1-indexado)"""
    return 1 << (x - 1)


def prefix_mask(m: int) -> int:
    """Máscara de {1,…,m}; vazia para m ≤ 0"""
    return (1 << m) - 1 if m > 0 else 0


def mask_from_elements(elements: Iterable[int]) -> KSet:
    """Converte uma coleção de elementos em máscara, rejeitando repetições"""
    mask = 0
    for x in elements:
        x = int(x)
        if x < 1 or x > MAX_GROUND:
            raise ValueError(f"elemento {x} fora de [1, {MAX_GROUND}]")
        if mask & bit(x):
            raise ValueError(f"elemento {x} repetido")
        mask |= bit(x)
    return mask


def elements_of(mask: KSet) -> List[int]:
    """Elementos da máscara em ordem crescente"""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def k_subsets(n: int, k: int) -> Iterator[KSet]:
    """
    Enumera os k-subconjuntos de [n] em ordem crescente de máscara
    (próxima combinação de Gosper).
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    mask = prefix_mask(k)
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple
