"""
Utilitários de teste: construção rápida de famílias e compressão à esquerda.
"""
from typing import Iterable, Sequence

from emc_lab.models.familia import Params, SetFamily
from emc_lab.services.deslocamentos import make_step, shift_family


def familia(n: int, k: int, s: int, sets: Iterable[Sequence[int]] = ()) -> SetFamily:
    return SetFamily.from_elements(Params(n=n, k=k, s=s), list(sets))


def left_compress(f: SetFamily) -> SetFamily:
    """Aplica C_ij para todo i < j até a família ficar estável"""
    n = f.params.n
    while True:
        before = f.sets
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                f = shift_family(f, make_step(i, j))
        if f.sets == before:
            return f
