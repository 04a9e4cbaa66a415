"""
Suítes de propriedades do deslocamento sobre famílias aleatórias com semente.

Para cada família e cada par ordenado (i, j), i ≠ j, verifica cardinalidade,
tamanho dos membros, ν não crescente (com o verificador ingênuo em famílias
pequenas), reconstrução do emparelhamento, idempotência e, em famílias
triviais, a preservação da trivialidade com a testemunha de cada caso.
"""
import logging
from typing import Callable, List, Optional, Sequence

from ..config import settings
from ..exceptions import ClaimViolation, InputError, ParameterError
from ..models.algoritmo import ClaimCheck
from ..models.comum import Finding
from ..models.deslocamento import ShiftStep
from ..models.execucao import LemmaReport, LemmaTally
from ..models.familia import Params, SetFamily
from .bits import bit, k_subsets
from .deslocamentos import lemma2_witness, make_step, shift_family
from .emparelhamentos import matching_number, max_matching, naive_matching_number, pullback_matching
from .familias import is_trivial, uncovered_elements
from .sementes import derive_seed, make_rng

logger = logging.getLogger(__name__)

ShiftOperator = Callable[[SetFamily, ShiftStep], SetFamily]

# Achados guardados por relatório; o total continua contado
MAX_FINDINGS = 50


def random_family(p: Params, seed: int, size: Optional[int] = None) -> SetFamily:
    """Amostra uniforme de `size` k-conjuntos (tamanho sorteado se omitido)"""
    rng = make_rng(seed)
    pool = list(k_subsets(p.n, p.k))
    cap = min(len(pool), settings.lemma_max_family_size)
    size = rng.randint(0, cap) if size is None else min(size, len(pool))
    return SetFamily(params=p, sets=tuple(rng.sample(pool, size)))


def random_trivial_family(
    p: Params, seed: int, missing: int, size: Optional[int] = None
) -> SetFamily:
    """Família aleatória que nunca cobre o elemento `missing`"""
    if missing < 1 or missing > p.n:
        raise ParameterError(f"elemento descoberto {missing} fora de [1, {p.n}]")
    rng = make_rng(seed)
    pool = [m for m in k_subsets(p.n, p.k) if not m & bit(missing)]
    cap = min(len(pool), settings.lemma_max_family_size)
    size = rng.randint(0, cap) if size is None else min(size, len(pool))
    return SetFamily(params=p, sets=tuple(rng.sample(pool, size)))


def _witness_case(f: SetFamily, step: ShiftStep) -> str:
    missing = uncovered_elements(f)
    if step.j in missing:
        return "lemma2_witness_x_eq_j"
    if step.i in missing:
        return "lemma2_witness_x_eq_i"
    return "lemma2_witness_x_other"


def check_shift_lemmas(
    f: SetFamily, step: ShiftStep, shift: ShiftOperator = shift_family
) -> List[ClaimCheck]:
    """Todas as verificações de um par (família, deslocamento)"""
    try:
        g = shift(f, step)
    except ClaimViolation as e:
        claim = "lemma1_member_size" if e.claim == "shift_size_preserved" else "lemma1_cardinality"
        return [ClaimCheck(claim=claim, passed=False, detail=str(e))]
    except ValueError as e:
        return [ClaimCheck(claim="lemma1_cardinality", passed=False, detail=str(e))]

    k, ground = f.params.k, f.params.ground_mask
    nu_f, nu_g = matching_number(f), matching_number(g)
    checks = [
        ClaimCheck(
            claim="lemma1_cardinality",
            passed=len(g) == len(f),
            detail=f"|F| = {len(f)}, |C(F)| = {len(g)}",
        ),
        ClaimCheck(
            claim="lemma1_member_size",
            passed=all(m.bit_count() == k and not m & ~ground for m in g.sets),
        ),
        ClaimCheck(
            claim="lemma1_matching",
            passed=nu_g <= nu_f,
            detail=f"ν: {nu_f} → {nu_g}",
        ),
    ]

    if len(f) <= settings.naive_crosscheck_max_sets:
        naive_f, naive_g = naive_matching_number(f), naive_matching_number(g)
        checks.append(
            ClaimCheck(
                claim="naive_crosscheck",
                passed=naive_f == nu_f and naive_g == nu_g,
                detail=f"exato ({nu_f}, {nu_g}), ingênuo ({naive_f}, {naive_g})",
            )
        )

    try:
        rebuilt = pullback_matching(f, step.i, step.j, max_matching(g))
        checks.append(
            ClaimCheck(
                claim="pullback",
                passed=rebuilt.size == nu_g,
                detail=f"|M| = {rebuilt.size}, ν(C(F)) = {nu_g}",
            )
        )
    except (ClaimViolation, InputError) as e:
        checks.append(ClaimCheck(claim="pullback", passed=False, detail=str(e)))

    try:
        again = shift(g, step)
        checks.append(ClaimCheck(claim="idempotence", passed=again.sets == g.sets))
    except (ClaimViolation, ValueError) as e:
        checks.append(ClaimCheck(claim="idempotence", passed=False, detail=str(e)))

    if is_trivial(f):
        witness = lemma2_witness(f, step)
        checks.append(ClaimCheck(claim="lemma2_trivial", passed=is_trivial(g)))
        checks.append(
            ClaimCheck(
                claim=_witness_case(f, step),
                passed=witness in uncovered_elements(g),
                detail=f"testemunha {witness}",
            )
        )
    return checks


def run_lemma_suite(
    grid: Sequence[Params],
    seed: int,
    count: int,
    shift: ShiftOperator = shift_family,
) -> LemmaReport:
    """
    `count` famílias sorteadas sobre a grade. Índices pares geram famílias
    gerais; ímpares geram famílias triviais com um elemento descoberto
    sorteado, o que cobre os casos x = i, x = j e x ∉ {i, j} ao percorrer
    todos os pares.
    """
    usable = [p for p in grid if p.n >= 2]
    if count > 0 and not usable:
        raise ParameterError("a grade não tem parâmetros com n ≥ 2")

    report = LemmaReport()
    for index in range(count):
        item_seed = derive_seed(seed, index)
        rng = make_rng(item_seed)
        p = rng.choice(usable)
        if index % 2 == 0:
            f = random_family(p, rng.getrandbits(64))
        else:
            f = random_trivial_family(p, rng.getrandbits(64), rng.randint(1, p.n))
        report.families += 1

        for i in range(1, p.n + 1):
            for j in range(1, p.n + 1):
                if i == j:
                    continue
                step = make_step(i, j)
                report.shifts += 1
                for check in check_shift_lemmas(f, step, shift):
                    tally = report.tallies.setdefault(check.claim, LemmaTally())
                    tally.checked += 1
                    if check.passed:
                        tally.passed += 1
                        continue
                    report.findings_total += 1
                    if len(report.findings) < MAX_FINDINGS:
                        report.findings.append(
                            Finding(
                                claim=check.claim,
                                message=check.detail or f"{check.claim} falhou",
                                seed=item_seed,
                                evidence={
                                    "params": p.model_dump(),
                                    "family": f.as_elements(),
                                    "i": i,
                                    "j": j,
                                },
                            )
                        )

    if report.findings_total:
        logger.error(f"Suíte de lemas: {report.findings_total} violações")
    logger.info(f"Suíte de lemas: {report.families} famílias, {report.shifts} deslocamentos")
    return report
