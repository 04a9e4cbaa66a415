"""
Núcleo das famílias: coeficientes binomiais, cota do teorema, famílias
extremais F* e G*, trivialidade, compactação do conjunto base e potencial Φ.
"""
import logging
from math import comb
from typing import Dict, List

from ..exceptions import ParameterError
from ..models.familia import CompactionResult, Params, SetFamily
from .bits import KSet, bit, elements_of, k_subsets, prefix_mask

logger = logging.getLogger(__name__)


def binomial(a: int, b: int) -> int:
    """C(a, b) exato; 0 quando b > a"""
    if a < 0 or b < 0:
        raise ParameterError(f"binomial com argumento negativo: C({a}, {b})")
    return comb(a, b)


def emc_bound(p: Params) -> int:
    """max{C(sk-1, k), C(n, k) - C(n-s+1, k)} para n ≥ sk"""
    p.require_theorem_range()
    return max(f_star_size(p), g_star_size(p))


def f_star_size(p: Params) -> int:
    return binomial(p.n, p.k) - binomial(p.n - p.s + 1, p.k)


def g_star_size(p: Params) -> int:
    return binomial(p.sk - 1, p.k)


def frankl_upper_bound(p: Params) -> int:
    """Cota geral (s-1)·C(n-1, k-1), usada só como verificação de sanidade"""
    if p.n == 0:
        return 0
    return (p.s - 1) * binomial(p.n - 1, p.k - 1)


def in_frankl_range(p: Params) -> bool:
    """n ≥ (2s+1)k - s, faixa em que a cota já era conhecida"""
    return p.n >= (2 * p.s + 1) * p.k - p.s


def below_threshold_value(p: Params) -> int:
    """Para n < sk nenhuma família tem s-emparelhamento: f = C(n, k)"""
    if p.n >= p.sk:
        raise ParameterError(f"{p.label()} não está abaixo do limiar sk")
    return binomial(p.n, p.k)


def make_f_star(p: Params) -> SetFamily:
    """Todos os k-conjuntos que intersectam S = {1,…,s-1}"""
    p.require_theorem_range()
    s_mask = p.s_mask
    return SetFamily(
        params=p,
        sets=tuple(m for m in k_subsets(p.n, p.k) if m & s_mask),
    )


def make_g_star(p: Params) -> SetFamily:
    """Todos os k-conjuntos contidos em {1,…,sk-1}"""
    if p.sk - 1 > p.n:
        raise ParameterError(f"{p.label()}: sk-1 = {p.sk - 1} excede n")
    return SetFamily(params=p, sets=tuple(k_subsets(p.sk - 1, p.k)))


def uncovered_elements(f: SetFamily) -> List[int]:
    """Elementos de [n] que não pertencem a nenhum membro"""
    return elements_of(f.params.ground_mask & ~f.support())


def is_trivial(f: SetFamily) -> bool:
    return bool(f.params.ground_mask & ~f.support())


def compact_ground(f: SetFamily) -> CompactionResult:
    """
    Remove os elementos não cobertos e rerrotula os restantes sobre [n′].

    Os elementos de S que sobrevivem ocupam primeiro os rótulos {1,…,s-1} em
    ordem crescente; rótulos de S que sobrarem recebem os menores elementos
    sobreviventes fora de S; o restante segue a ordem original.
    """
    p = f.params
    covered = elements_of(f.support())
    removed = tuple(uncovered_elements(f))
    if not removed:
        identity = {x: x for x in covered}
        return CompactionResult(family=f, removed=(), new_n=p.n, relabel_map=identity)

    s_slots = p.s - 1
    in_s = [x for x in covered if x <= s_slots]
    outside = [x for x in covered if x > s_slots]
    fillers = outside[: max(0, s_slots - len(in_s))]
    ordered = in_s + fillers + [x for x in outside if x not in fillers]

    relabel_map: Dict[int, int] = {old: new for new, old in enumerate(ordered, start=1)}
    reassigned = {old: relabel_map[old] for old in fillers}
    unfilled = max(0, s_slots - len(covered))

    new_p = p.with_n(len(covered))
    new_sets = [_relabel(member, relabel_map) for member in f.sets]
    result = CompactionResult(
        family=SetFamily(params=new_p, sets=tuple(new_sets)),
        removed=removed,
        new_n=new_p.n,
        relabel_map=relabel_map,
        s_slots_reassigned=reassigned,
        s_slots_unfilled=unfilled,
    )
    if reassigned or unfilled:
        logger.warning(
            f"Compactação removeu elementos de S {[x for x in removed if x <= s_slots]}: "
            f"rótulos de S reatribuídos {reassigned}, sem preenchimento {unfilled}"
        )
    return result


def _relabel(member: KSet, relabel_map: Dict[int, int]) -> KSet:
    out = 0
    for x in elements_of(member):
        out |= bit(relabel_map[x])
    return out


def potential(f: SetFamily) -> int:
    """Φ(F): número de membros que intersectam S"""
    s_mask = f.params.s_mask
    return sum(1 for member in f.sets if member & s_mask)


def degree(f: SetFamily, x: int) -> int:
    """|F^x|"""
    mask = bit(x)
    return sum(1 for member in f.sets if member & mask)


def subfamily_containing(f: SetFamily, x: int) -> SetFamily:
    """F^x = {F ∈ F : x ∈ F}"""
    if x < 1 or x > f.params.n:
        raise ParameterError(f"elemento {x} fora de [1, {f.params.n}]")
    mask = bit(x)
    return f.with_sets([member for member in f.sets if member & mask])


def within_f_star(f: SetFamily) -> bool:
    """Todo membro intersecta S"""
    return potential(f) == len(f)


def within_g_star(f: SetFamily) -> bool:
    """Todo membro está contido em {1,…,sk-1}"""
    outside = ~prefix_mask(f.params.sk - 1)
    return all(not member & outside for member in f.sets)
