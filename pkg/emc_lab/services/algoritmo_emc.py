"""
Algoritmo iterativo de deslocamentos com função potencial Φ.

Cada afirmação do argumento de progresso é verificada sobre o rastro
concreto; qualquer falha vira `ClaimViolation` com evidência completa.
Todas as escolhas "arbitrárias" usam a menor opção, ou `rng.choice` quando
um `random.Random` é fornecido (modo de fuzzing).
"""
import logging
import random
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from ..exceptions import ClaimViolation, InputError, ParameterError
from ..models.algoritmo import (
    ChainResult,
    ClaimCheck,
    IterationTrace,
    Outcome,
    OutcomeKind,
    PairSelection,
)
from ..models.emparelhamento import MatchingCertificate
from ..models.deslocamento import ShiftSequence, ShiftStep
from ..models.familia import CompactionResult, SetFamily
from .bits import KSet, bit, elements_of, k_subsets, mask_from_elements
from .deslocamentos import apply_shift_sequence
from .emparelhamentos import matching_number, s_matching_certificate
from .familias import (
    binomial,
    compact_ground,
    degree,
    emc_bound,
    f_star_size,
    g_star_size,
    potential,
    within_f_star,
    within_g_star,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

ChainBuilder = Callable[[SetFamily, PairSelection, Optional[random.Random]], ChainResult]

# Ordem em que as afirmações são conferidas e relatadas
CLAIM_ORDER = (
    "size_preserved",
    "b1_invariance",
    "a_p_present",
    "b_p_absent",
    "b1_strict_gain",
    "s_counts_monotone",
    "potential_increase",
    "triviality_propagation",
    "matching_monotone",
)


def _pick(options: Sequence[T], rng: Optional[random.Random]) -> T:
    return options[0] if rng is None else rng.choice(list(options))


def find_a(f: SetFamily, rng: Optional[random.Random] = None) -> Optional[KSet]:
    """Menor membro disjunto de S, ou None se F ⊆ F*"""
    s_mask = f.params.s_mask
    options = [member for member in f.sets if not member & s_mask]
    return _pick(options, rng) if options else None


def find_b(f: SetFamily, rng: Optional[random.Random] = None) -> Optional[KSet]:
    """Menor k-conjunto sobre [n′] que intersecta S e não está em F"""
    p = f.params
    s_mask = p.s_mask
    if rng is None:
        for candidate in k_subsets(p.n, p.k):
            if candidate & s_mask and candidate not in f:
                return candidate
        return None
    options = [c for c in k_subsets(p.n, p.k) if c & s_mask and c not in f]
    return rng.choice(options) if options else None


def select_pair(
    f: SetFamily, a: KSet, b: KSet, rng: Optional[random.Random] = None
) -> PairSelection:
    """X = A∩B, A′ = A∖X, B′ = B∖X com b₁ ∈ S na primeira posição"""
    s_mask = f.params.s_mask
    if a not in f:
        raise InputError(f"A = {elements_of(a)} não pertence à família")
    if b in f:
        raise InputError(f"B = {elements_of(b)} já pertence à família")
    if a & s_mask:
        raise InputError(f"A = {elements_of(a)} intersecta S")
    if not b & s_mask or b.bit_count() != f.params.k:
        raise InputError(f"B = {elements_of(b)} não é um k-conjunto que intersecta S")

    x = a & b
    a_prime = elements_of(a & ~x)
    b_rest = elements_of(b & ~x)
    b1 = _pick([y for y in b_rest if bit(y) & s_mask], rng)
    others = [y for y in b_rest if y != b1]
    if rng is not None:
        rng.shuffle(a_prime)
        rng.shuffle(others)
    return PairSelection(
        a=a,
        b=b,
        x=x,
        a_prime=tuple(a_prime),
        b_prime=(b1, *others),
        r=len(a_prime),
    )


def _swap(member: KSet, out: int, into: int) -> KSet:
    return (member & ~bit(out)) | bit(into)


def build_chain(
    f: SetFamily, pair: PairSelection, rng: Optional[random.Random] = None
) -> ChainResult:
    """
    Constrói A₁,…,A_t e B₁,…,B_t trocando um elemento de A′ por um de B′ a
    cada estágio, parando no primeiro alvo fora da família. O estágio 1 usa
    sempre i = b₁; a partir do estágio 2, A_t = B_{t-1}.
    """
    b1 = pair.b1
    a_seq = [pair.a]
    b_seq: List[KSet] = []
    steps: List[Tuple[int, int]] = []

    escaping = [j for j in pair.a_prime if _swap(pair.a, j, b1) not in f]
    j = _pick(escaping or list(pair.a_prime), rng)
    b_seq.append(_swap(pair.a, j, b1))
    steps.append((b1, j))
    done = bool(escaping)

    t = 2
    while not done and t <= pair.r:
        a_t = b_seq[-1]
        a_seq.append(a_t)
        free_j = [y for y in pair.a_prime if y not in {out for _, out in steps}]
        free_i = [y for y in pair.b_prime if y not in {into for into, _ in steps}]
        candidates = [(out, into) for out in free_j for into in free_i]
        escaping_pairs = [c for c in candidates if _swap(a_t, *c) not in f]
        out, into = _pick(escaping_pairs or candidates, rng)
        b_seq.append(_swap(a_t, out, into))
        steps.append((into, out))
        done = bool(escaping_pairs)
        t += 1

    if not done:
        raise ClaimViolation(
            "chain_length",
            f"a cadeia passou de r = {pair.r} sem encontrar alvo fora da família",
            {
                "family": f.as_elements(),
                "pair": pair.model_dump(mode="json"),
                "a_seq": [elements_of(m) for m in a_seq],
                "b_seq": [elements_of(m) for m in b_seq],
            },
        )
    return ChainResult(
        a_seq=tuple(a_seq),
        b_seq=tuple(b_seq),
        seq=ShiftSequence(steps=tuple(ShiftStep(i=i, j=j) for i, j in steps)),
        t=len(steps),
    )


def iterate_once(
    f: SetFamily,
    paranoid: bool = False,
    rng: Optional[random.Random] = None,
    chain_builder: Optional[ChainBuilder] = None,
    index: int = 0,
) -> Tuple[SetFamily, IterationTrace]:
    """Uma iteração completa: escolha de A e B, cadeia, cascata de deslocamentos e verificações"""
    a = find_a(f, rng)
    b = find_b(f, rng) if a is not None else None
    if a is None or b is None:
        raise InputError("iterate_once exige um A disjunto de S e um B ∉ F que intersecta S")

    pair = select_pair(f, a, b, rng)
    chain = (chain_builder or build_chain)(f, pair, rng)
    f_new, intermediates = apply_shift_sequence(f, chain.seq)
    t = chain.t

    def family_at(position: int) -> SetFamily:
        return intermediates[t - position].family

    b1 = pair.b1
    s_elements = f.params.s_elements
    tracked = sorted(set(s_elements) | {b1})
    counts_before = {x: degree(f, x) for x in tracked}
    counts_after = {x: degree(f_new, x) for x in tracked}
    b1_counts = [degree(step.family, b1) for step in intermediates]
    trivial_flags = [step.trivial for step in intermediates]

    checks = [
        ClaimCheck(
            claim="size_preserved",
            passed=len(f_new) == len(f),
            detail=f"|F| = {len(f)}, |F_new| = {len(f_new)}",
        ),
        ClaimCheck(
            claim="b1_invariance",
            passed=len(set(b1_counts[:t])) <= 1,
            detail=f"|F_p^b1| para p = t…0: {b1_counts}",
        ),
    ]

    missing_a = [p for p in range(1, t + 1) if chain.a_seq[p - 1] not in family_at(p)]
    checks.append(
        ClaimCheck(
            claim="a_p_present",
            passed=not missing_a,
            detail=f"A_p ∉ F_p para p = {missing_a}" if missing_a else "",
        )
    )
    present_b = [p for p in range(1, t + 1) if chain.b_seq[p - 1] in family_at(p)]
    checks.append(
        ClaimCheck(
            claim="b_p_absent",
            passed=not present_b,
            detail=f"B_p ∈ F_p para p = {present_b}" if present_b else "",
        )
    )
    checks.append(
        ClaimCheck(
            claim="b1_strict_gain",
            passed=counts_after[b1] > counts_before[b1],
            detail=f"|F^b1|: {counts_before[b1]} → {counts_after[b1]}",
        )
    )
    dropped = [x for x in s_elements if counts_after[x] < counts_before[x]]
    checks.append(
        ClaimCheck(
            claim="s_counts_monotone",
            passed=not dropped,
            detail=f"|F^x| diminuiu para x = {dropped}" if dropped else "",
        )
    )
    phi_before, phi_after = potential(f), potential(f_new)
    checks.append(
        ClaimCheck(
            claim="potential_increase",
            passed=phi_after > phi_before,
            detail=f"Φ: {phi_before} → {phi_after}",
        )
    )
    first_trivial = next((idx for idx, flag in enumerate(trivial_flags) if flag), None)
    checks.append(
        ClaimCheck(
            claim="triviality_propagation",
            passed=first_trivial is None or all(trivial_flags[first_trivial:]),
            detail=f"trivialidade p = t…0: {trivial_flags}",
        )
    )

    nu_before = nu_after = None
    if paranoid:
        nu_before, nu_after = matching_number(f), matching_number(f_new)
        checks.append(
            ClaimCheck(
                claim="matching_monotone",
                passed=nu_after <= nu_before,
                detail=f"ν: {nu_before} → {nu_after}",
            )
        )

    trace = IterationTrace(
        index=index,
        family_size=len(f),
        phi_before=phi_before,
        phi_after=phi_after,
        pair=pair,
        chain=chain,
        counts_before=counts_before,
        counts_after=counts_after,
        b1_counts=b1_counts,
        intermediate_trivial=trivial_flags,
        nu_before=nu_before,
        nu_after=nu_after,
        checks=checks,
    )

    failed = trace.failed_claims
    if failed:
        claim = min(failed, key=CLAIM_ORDER.index)
        logger.error(f"Iteração {index}: afirmações violadas {failed}")
        raise ClaimViolation(
            claim,
            f"iteração {index} violou {failed}",
            {
                "failed_claims": failed,
                "params": f.params.model_dump(),
                "family": f.as_elements(),
                "trace": trace.model_dump(mode="json"),
            },
        )
    return f_new, trace


def condition3_certificate(f: SetFamily, a: KSet) -> MatchingCertificate:
    """
    s-emparelhamento {A, B₁,…,B_{s-1}} quando F contém todo k-conjunto que
    intersecta S: B_i = {i} mais os k-1 menores elementos ainda livres fora
    de A ∪ S.
    """
    p = f.params
    if p.n < p.sk:
        raise ParameterError(f"n′ = {p.n} < sk = {p.sk}: construção impossível")
    if a not in f or a & p.s_mask:
        raise InputError(f"A = {elements_of(a)} deve pertencer a F e ser disjunto de S")

    available = [x for x in range(p.s, p.n + 1) if not a & bit(x)]
    width = p.k - 1
    blocks = []
    for slot in range(1, p.s):
        extra = available[(slot - 1) * width : slot * width]
        blocks.append(bit(slot) | mask_from_elements(extra))
    for block in blocks:
        if block not in f:
            raise InputError(
                f"B = {elements_of(block)} intersecta S mas não pertence a F"
            )
    return MatchingCertificate.for_family(f, [a] + blocks)


def run(
    f: SetFamily,
    paranoid: bool = False,
    rng: Optional[random.Random] = None,
    chain_builder: Optional[ChainBuilder] = None,
) -> Outcome:
    """
    Repete compactação → Condição 1 → Condição 2 → Condição 3 → iteração até
    parar. O número de iterações é limitado por C(n,k) + 1.
    """
    p = f.params
    p.require_theorem_range()
    certificate = s_matching_certificate(f)
    if certificate is not None:
        raise InputError(
            f"a família contém um {p.s}-emparelhamento: {[elements_of(m) for m in certificate.sets]}",
            certificate=certificate,
        )

    bound = emc_bound(p)
    cap = binomial(p.n, p.k) + 1
    current = f
    iterations: List[IterationTrace] = []
    compactions: List[CompactionResult] = []

    def evidence() -> dict:
        return {
            "params": p.model_dump(),
            "initial_family": f.as_elements(),
            "current_family": current.as_elements(),
            "current_n": current.params.n,
            "iterations_completed": len(iterations),
        }

    while True:
        compaction = compact_ground(current)
        if not compaction.is_identity:
            compactions.append(compaction)
            current = compaction.family

        if current.params.n <= p.sk - 1:
            kind = OutcomeKind.SUBSET_OF_G_STAR
            break

        a = find_a(current, rng)
        if a is None:
            kind = OutcomeKind.SUBSET_OF_F_STAR
            break

        b = find_b(current, rng)
        if b is None:
            contradiction = condition3_certificate(current, a)
            violation = ClaimViolation(
                "condition3_reached",
                "condição 3 atingida numa família sem s-emparelhamento",
                evidence(),
            )
            outcome = Outcome(
                kind=OutcomeKind.CONTRADICTION_MATCHING,
                params=p,
                initial_family=f,
                final_family=current,
                final_n=current.params.n,
                bound=bound,
                iterations=iterations,
                compactions=compactions,
                certificate=contradiction,
                violations=[violation.to_dict()],
            )
            logger.error(f"Condição 3 atingida em {p.label()} com entrada válida")
            violation.evidence["outcome"] = outcome.model_dump(mode="json")
            raise violation

        if len(iterations) >= cap:
            raise ClaimViolation(
                "iteration_cap", f"mais de {cap} iterações sem parar", evidence()
            )

        try:
            current, trace = iterate_once(
                current, paranoid, rng, chain_builder, index=len(iterations)
            )
        except ClaimViolation as e:
            e.evidence.update({k: v for k, v in evidence().items() if k not in e.evidence})
            raise
        iterations.append(trace)

    _check_terminal(f, current, kind, bound, evidence)

    phi_history = (
        [iterations[0].phi_before] + [trace.phi_after for trace in iterations]
        if iterations
        else [potential(current)]
    )
    logger.info(
        f"Execução {p.label()}: {kind.value} após {len(iterations)} iterações, "
        f"|F| = {len(current)}, cota = {bound}"
    )
    return Outcome(
        kind=kind,
        params=p,
        initial_family=f,
        final_family=current,
        final_n=current.params.n,
        bound=bound,
        phi_history=phi_history,
        iterations=iterations,
        compactions=compactions,
    )


def _check_terminal(
    initial: SetFamily,
    final: SetFamily,
    kind: OutcomeKind,
    bound: int,
    evidence: Callable[[], dict],
) -> None:
    """Tamanho conservado, ν ≤ s-1 no fim, F final dentro de F* ou G* e cota da condição de parada"""
    p, fp = initial.params, final.params
    if len(final) != len(initial):
        raise ClaimViolation("size_preserved", "|F| mudou ao longo da execução", evidence())
    contained = within_g_star(final) if kind is OutcomeKind.SUBSET_OF_G_STAR else within_f_star(final)
    if not contained:
        raise ClaimViolation(
            "terminal_containment", f"a família final não está contida em {kind.value}", evidence()
        )
    if s_matching_certificate(final) is not None:
        raise ClaimViolation(
            "matching_monotone", "a família final contém um s-emparelhamento", evidence()
        )
    kind_bound = g_star_size(p) if kind is OutcomeKind.SUBSET_OF_G_STAR else f_star_size(fp)
    if len(final) > kind_bound or len(final) > bound:
        raise ClaimViolation(
            "terminal_bound",
            f"|F| = {len(final)} excede a cota ({kind_bound}, {bound})",
            evidence(),
        )
