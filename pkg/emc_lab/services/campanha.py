"""
Campanhas em lote: fuzzing do algoritmo e tabela dos oráculos.

Cada item de trabalho é uma função de nível de módulo com argumentos simples
que devolve um dicionário serializável. Os itens rodam num pool de processos
(`settings.workers`) ou numa única thread quando workers ≤ 1, e os resultados
são reunidos na ordem dos itens, independente da ordem de conclusão.
"""
import asyncio
import logging
import random
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence

from ..config import settings
from ..exceptions import ClaimViolation, ParameterError
from ..models.comum import Finding
from ..models.execucao import HuntReport
from ..models.familia import Params
from ..models.oraculo import OracleMethod, OracleRow
from .algoritmo_emc import run
from .familias import emc_bound
from .oraculo import f_covering, f_direct, random_matching_free_family
from .sementes import derive_seed, make_rng

logger = logging.getLogger(__name__)


def _executor(workers: int) -> Executor:
    if workers <= 1:
        return ThreadPoolExecutor(max_workers=1)
    return ProcessPoolExecutor(max_workers=workers)


def _hunt_target(p: Params, rng: random.Random) -> Optional[int]:
    """Metade das famílias é maximal; as demais têm entre metade da cota e a cota"""
    if rng.random() < 0.5:
        return None
    bound = emc_bound(p)
    return rng.randint(max(1, bound // 2), max(1, bound))


def hunt_one(grid: List[Dict[str, int]], seed: int, paranoid: bool = True) -> Dict[str, Any]:
    """
    Um item da campanha: sorteia parâmetros, gera uma família sem
    s-emparelhamento e executa o algoritmo. Metade dos itens usa escolhas
    aleatórias no lugar das escolhas mínimas.
    """
    rng = make_rng(seed)
    p = Params(**rng.choice(grid))
    target = _hunt_target(p, rng)
    family = random_matching_free_family(p, rng.getrandbits(64), target)
    choices = make_rng(rng.getrandbits(64)) if rng.random() < 0.5 else None

    result: Dict[str, Any] = {
        "seed": seed,
        "params": p.model_dump(),
        "family_size": len(family),
        "random_choices": choices is not None,
        "kind": None,
        "iterations": 0,
        "claim_passes": {},
        "finding": None,
    }
    try:
        outcome = run(family, paranoid=paranoid, rng=choices)
    except ClaimViolation as e:
        result["finding"] = Finding(
            claim=e.claim, message=e.message, seed=seed, evidence=e.evidence
        ).model_dump(mode="json")
        return result

    passes: Dict[str, int] = {}
    for trace in outcome.iterations:
        for check in trace.checks:
            if check.passed:
                passes[check.claim] = passes.get(check.claim, 0) + 1
    result.update(
        kind=outcome.kind.value,
        iterations=len(outcome.iterations),
        claim_passes=passes,
    )
    return result


def replay_hunt_item(grid: Sequence[Params], seed: int, paranoid: bool = True) -> Dict[str, Any]:
    """Reexecuta um item a partir da semente registrada num achado"""
    return hunt_one([p.model_dump() for p in grid], seed, paranoid)


async def run_hunt_campaign(
    grid: Sequence[Params],
    seed: int,
    count: int,
    paranoid: bool = True,
    workers: Optional[int] = None,
) -> HuntReport:
    """Distribui `count` itens de fuzzing e agrega estatísticas por afirmação"""
    workers = settings.workers if workers is None else workers
    grid_dump = [p.model_dump() for p in grid]
    logger.info(f"Iniciando campanha: {count} execuções, {workers} workers")

    loop = asyncio.get_running_loop()
    with _executor(workers) as pool:
        tasks = [
            loop.run_in_executor(pool, hunt_one, grid_dump, derive_seed(seed, index), paranoid)
            for index in range(count)
        ]
        results = await asyncio.gather(*tasks, return_exceptions=True)

    report = HuntReport(runs=count)
    for index, result in enumerate(results):
        if isinstance(result, Exception):
            logger.error(f"Item {index} da campanha falhou: {result}")
            report.errors.append(f"item {index}: {result}")
            continue
        for claim, passed in result["claim_passes"].items():
            report.claim_passes[claim] = report.claim_passes.get(claim, 0) + passed
        if result["finding"] is not None:
            finding = Finding(**result["finding"])
            report.findings.append(finding)
            report.claim_failures[finding.claim] = report.claim_failures.get(finding.claim, 0) + 1
            continue
        report.completed += 1
        report.kinds[result["kind"]] = report.kinds.get(result["kind"], 0) + 1
        report.iterations_total += result["iterations"]
        report.max_iterations = max(report.max_iterations, result["iterations"])

    logger.info(
        f"Campanha concluída: {report.completed}/{count} sem achados, "
        f"{len(report.findings)} achados, {len(report.errors)} erros"
    )
    return report


def oracle_one(params: Dict[str, int], budget: Optional[int] = None) -> Dict[str, Any]:
    """
    Uma linha da tabela: f pelos dois métodos e comparação com a cota.

    Só o bloqueio por tamanho (`ParameterError`) vira método ausente; a linha
    fica sem veredito até os dois métodos concluírem.
    """
    p = Params(**params)
    results = {}
    for method, oracle in ((OracleMethod.DIRECT, f_direct), (OracleMethod.COVERING, f_covering)):
        try:
            results[method] = oracle(p, budget)
        except ParameterError as e:
            logger.warning(f"{method.value} {p.label()} não executado: {e}")
            results[method] = None

    direct, covering = results[OracleMethod.DIRECT], results[OracleMethod.COVERING]
    values = {
        method.value: res.value
        for method, res in results.items()
        if res is not None and res.conclusive
    }
    witness = next(
        (
            res.witness.as_elements()
            for res in (direct, covering)
            if res is not None and res.conclusive and res.witness is not None
        ),
        None,
    )
    return {"params": p.model_dump(), "values": values, "witness": witness}


def build_oracle_row(item: Dict[str, Any]) -> OracleRow:
    """
    Monta a linha CSV; linhas inconclusivas ou divergentes nunca recebem um
    valor adivinhado. Com um único método concluído o valor aparece, mas a
    coluna `match` fica vazia.
    """
    p = Params(**item["params"])
    values: Dict[str, int] = item["values"]
    distinct = set(values.values())
    method = "+".join(sorted(values)) or "none"
    if not values:
        f_value = "inconclusive"
    elif len(distinct) > 1:
        f_value = "disagree:" + "/".join(f"{m}={v}" for m, v in sorted(values.items()))
    else:
        f_value = str(distinct.pop())

    if p.n < p.sk:
        bound, match = "n<sk: out of theorem scope", ""
    else:
        bound = str(emc_bound(p))
        both = len(values) == len(OracleMethod)
        match = str(f_value == bound).lower() if both and f_value.isdigit() else ""
    return OracleRow(n=p.n, k=p.k, s=p.s, f=f_value, method=method, bound=bound, match=match)


async def run_oracle_grid(
    grid: Sequence[Params], budget: Optional[int] = None, workers: Optional[int] = None
) -> List[Dict[str, Any]]:
    """Calcula os itens do oráculo em paralelo, devolvidos na ordem da grade"""
    workers = settings.workers if workers is None else workers
    logger.info(f"Iniciando tabela do oráculo: {len(grid)} parâmetros, {workers} workers")

    loop = asyncio.get_running_loop()
    with _executor(workers) as pool:
        tasks = [
            loop.run_in_executor(pool, oracle_one, p.model_dump(), budget) for p in grid
        ]
        results = await asyncio.gather(*tasks, return_exceptions=True)

    items = []
    for p, result in zip(grid, results):
        if isinstance(result, Exception):
            logger.error(f"Oráculo {p.label()} falhou: {result}")
            result = {"params": p.model_dump(), "values": {}, "witness": None}
        items.append(result)
    return items
