"""
Oráculos independentes para f(n,k,s): busca primal direta, transversal
mínima do hipergrafo de s-emparelhamentos, valores tabelados e gerador de
famílias aleatórias sem s-emparelhamento.

Os limites de tratabilidade são orçamentos de nós, nunca tempo de relógio.
"""
import logging
import random
from typing import Dict, List, Optional, Sequence

from ..config import settings
from ..exceptions import ParameterError
from ..models.familia import Params, SetFamily
from ..models.oraculo import KnownValue, OracleMethod, OracleResult
from .bits import KSet, k_subsets
from .emparelhamentos import find_matching
from .familias import binomial

logger = logging.getLogger(__name__)


class _BudgetExhausted(Exception):
    """Orçamento de nós esgotado"""


def _creates_matching_with(chosen: Sequence[KSet], x: KSet, y: KSet, p: Params) -> bool:
    """
    Se `chosen` ∪ {x} e `chosen` ∪ {y} não têm s-emparelhamento, então
    `chosen` ∪ {x, y} tem um exatamente quando x, y são disjuntos e os
    membros de `chosen` disjuntos de x ∪ y contêm um (s-2)-emparelhamento.
    """
    if x & y:
        return False
    if p.s <= 2:
        return True
    union = x | y
    others = [c for c in chosen if not c & union]
    return find_matching(others, p.k, p.s - 2) is not None


def _disjoint_group_bound(candidates: Sequence[KSet], s: int) -> int:
    """
    Particiona os candidatos gulosamente em grupos de conjuntos dois a dois
    disjuntos; cada grupo contribui com no máximo s-1 conjuntos.
    """
    unions: List[int] = []
    sizes: List[int] = []
    for y in candidates:
        for g, union in enumerate(unions):
            if not union & y:
                unions[g] = union | y
                sizes[g] += 1
                break
        else:
            unions.append(y)
            sizes.append(1)
    return sum(min(size, s - 1) for size in sizes)


def f_direct(p: Params, budget: Optional[int] = None) -> OracleResult:
    """
    f(n,k,s) por branch-and-bound sobre a inclusão de cada k-conjunto.

    Por simetria, alguma família ótima contém {1,…,k}; a busca começa com
    ele fixado. Candidatos incompatíveis com os escolhidos são descartados a
    cada inclusão, e a cota por grupos disjuntos poda o restante.
    """
    total = binomial(p.n, p.k)
    if budget is None:
        if total > settings.direct_max_sets:
            raise ParameterError(
                f"{p.label()}: C(n,k) = {total} excede {settings.direct_max_sets}; "
                "informe um orçamento explícito"
            )
        budget = settings.oracle_node_budget

    if p.s == 1 or total == 0:
        return OracleResult(
            params=p, method=OracleMethod.DIRECT, value=0, witness=SetFamily(params=p)
        )

    all_sets = list(k_subsets(p.n, p.k))
    base = all_sets[0]
    best: List[KSet] = []
    nodes = 0

    def search(chosen: List[KSet], candidates: List[KSet]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted()
        if len(chosen) > len(best):
            best = list(chosen)
        if not candidates:
            return
        if len(chosen) + _disjoint_group_bound(candidates, p.s) <= len(best):
            return
        for idx, x in enumerate(candidates):
            if len(chosen) + len(candidates) - idx <= len(best):
                return
            remaining = [
                y
                for y in candidates[idx + 1 :]
                if not _creates_matching_with(chosen, x, y, p)
            ]
            chosen.append(x)
            search(chosen, remaining)
            chosen.pop()

    start = [y for y in all_sets[1:] if not _creates_matching_with([], base, y, p)]
    try:
        search([base], start)
    except _BudgetExhausted:
        logger.warning(f"f_direct {p.label()}: orçamento de {budget} nós esgotado")
        return OracleResult(
            params=p, method=OracleMethod.DIRECT, conclusive=False, nodes=nodes
        )

    return OracleResult(
        params=p,
        method=OracleMethod.DIRECT,
        value=len(best),
        witness=SetFamily(params=p, sets=tuple(best)),
        nodes=nodes,
    )


def _enumerate_matchings(all_sets: Sequence[KSet], s: int) -> List[int]:
    """Todos os s-emparelhamentos, cada um como máscara de índices em `all_sets`"""
    edges: List[int] = []
    limit = settings.covering_max_hyperedges

    def extend(start: int, used: int, indices: int, depth: int) -> None:
        if depth == s:
            edges.append(indices)
            if len(edges) > limit:
                raise _BudgetExhausted()
            return
        for pos in range(start, len(all_sets)):
            member = all_sets[pos]
            if not member & used:
                extend(pos + 1, used | member, indices | (1 << pos), depth + 1)

    extend(0, 0, 0, 0)
    return edges


def _greedy_transversal(edges: Sequence[int]) -> int:
    """Transversal gulosa (sempre o índice mais frequente), usada como incumbente inicial"""
    chosen = 0
    open_edges = list(edges)
    while open_edges:
        counts: Dict[int, int] = {}
        for edge in open_edges:
            rest = edge
            while rest:
                low = rest & -rest
                counts[low] = counts.get(low, 0) + 1
                rest ^= low
        pick = max(counts, key=lambda b: (counts[b], -b))
        chosen |= pick
        open_edges = [edge for edge in open_edges if not edge & pick]
    return chosen


def _packing_bound(open_edges: Sequence[int], forbidden: int) -> Optional[int]:
    """
    Cota inferior: arestas abertas com partes permitidas duas a duas disjuntas
    exigem elementos distintos. None se alguma aresta ficou sem opção.
    """
    parts = sorted(((edge & ~forbidden) for edge in open_edges), key=int.bit_count)
    if parts and parts[0] == 0:
        return None
    used = 0
    count = 0
    for part in parts:
        if not part & used:
            used |= part
            count += 1
    return count


def f_covering(p: Params, budget: Optional[int] = None) -> OracleResult:
    """
    f(n,k,s) = C(n,k) - τ, onde τ é a menor quantidade de k-conjuntos cuja
    remoção destrói todo s-emparelhamento (transversal mínima exata).
    """
    budget = settings.oracle_node_budget if budget is None else budget
    all_sets = list(k_subsets(p.n, p.k))
    try:
        edges = _enumerate_matchings(all_sets, p.s)
    except _BudgetExhausted:
        logger.warning(
            f"f_covering {p.label()}: mais de {settings.covering_max_hyperedges} s-emparelhamentos"
        )
        return OracleResult(params=p, method=OracleMethod.COVERING, conclusive=False)

    best = _greedy_transversal(edges)
    nodes = 0

    def solve(chosen: int, forbidden: int, open_edges: List[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted()
        if not open_edges:
            if chosen.bit_count() < best.bit_count():
                best = chosen
            return
        lower = _packing_bound(open_edges, forbidden)
        if lower is None or chosen.bit_count() + lower >= best.bit_count():
            return
        edge = min(open_edges, key=lambda e: (e & ~forbidden).bit_count())
        allowed = edge & ~forbidden
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            solve(chosen | low, forbidden, [e for e in open_edges if not e & low])
            forbidden |= low

    try:
        solve(0, 0, edges)
    except _BudgetExhausted:
        logger.warning(f"f_covering {p.label()}: orçamento de {budget} nós esgotado")
        return OracleResult(
            params=p, method=OracleMethod.COVERING, conclusive=False, nodes=nodes
        )

    witness = [member for pos, member in enumerate(all_sets) if not best >> pos & 1]
    return OracleResult(
        params=p,
        method=OracleMethod.COVERING,
        value=len(all_sets) - best.bit_count(),
        witness=SetFamily(params=p, sets=tuple(witness)),
        nodes=nodes,
    )


def random_matching_free_family(
    p: Params, seed: int, target_size: Optional[int] = None
) -> SetFamily:
    """
    Embaralha os k-conjuntos com `random.Random(seed)` e insere cada um
    enquanto não surgir um s-emparelhamento.
    """
    rng = random.Random(seed)
    pool = list(k_subsets(p.n, p.k))
    rng.shuffle(pool)
    chosen: List[KSet] = []
    for candidate in pool:
        if target_size is not None and len(chosen) >= target_size:
            break
        others = [member for member in chosen if not member & candidate]
        if find_matching(others, p.k, p.s - 1) is None:
            chosen.append(candidate)
    return SetFamily(params=p, sets=tuple(chosen))


def known_values(max_n: int = 12, max_k: int = 3, max_s: int = 4) -> List[KnownValue]:
    """
    Tabela curada de f(n,k,s): Erdős–Ko–Rado (s = 2), Kleitman (n = sk),
    k = 1, s = 1 e a faixa trivial n < sk.
    """
    table: Dict[Params, KnownValue] = {}

    def add(n: int, k: int, s: int, value: int, provenance: str) -> None:
        params = Params(n=n, k=k, s=s)
        table.setdefault(params, KnownValue(params=params, value=value, provenance=provenance))

    for k in range(1, max_k + 1):
        for s in range(1, max_s + 1):
            for n in range(k, max_n + 1):
                if s == 1:
                    add(n, k, s, 0, "s_equals_one")
                elif n < s * k:
                    add(n, k, s, binomial(n, k), "below_threshold")
                elif k == 1:
                    add(n, k, s, s - 1, "k_equals_one")
                elif s == 2:
                    add(n, k, s, binomial(n - 1, k - 1), "ekr")
                elif n == s * k:
                    add(n, k, s, binomial(s * k - 1, k), "kleitman")

    return sorted(table.values(), key=lambda kv: (kv.params.n, kv.params.k, kv.params.s))


def known_value(p: Params) -> Optional[KnownValue]:
    for entry in known_values(max_n=max(p.n, 1), max_k=p.k, max_s=p.s):
        if entry.params == p:
            return entry
    return None
