"""
Deslocamento (i,j) de Frankl sobre conjuntos e famílias, e aplicação de
sequências de deslocamentos.
"""
import logging
from typing import List, Tuple

from pydantic import ValidationError

from ..exceptions import ClaimViolation, InputError, ParameterError
from ..models.deslocamento import IntermediateFamily, ShiftSequence, ShiftStep
from ..models.familia import SetFamily
from .bits import KSet, bit, elements_of
from .familias import is_trivial, uncovered_elements

logger = logging.getLogger(__name__)


def make_step(i: int, j: int) -> ShiftStep:
    """Constrói o deslocamento traduzindo erros de validação"""
    try:
        return ShiftStep(i=i, j=j)
    except ValidationError as e:
        raise ParameterError(f"deslocamento inválido ({i},{j}): {e.errors()[0]['msg']}") from e


def _check_range(f: SetFamily, step: ShiftStep) -> None:
    if step.i > f.params.n or step.j > f.params.n:
        raise ParameterError(f"deslocamento ({step.i},{step.j}) fora de [1, {f.params.n}]")


def _target(member: KSet, bi: int, bj: int) -> KSet:
    return (member & ~bj) | bi


def _shifts(f: SetFamily, member: KSet, bi: int, bj: int) -> bool:
    """i ∉ F, j ∈ F e (F∖{j})∪{i} ∉ família"""
    return not member & bi and bool(member & bj) and _target(member, bi, bj) not in f


def shift_set(f: SetFamily, step: ShiftStep, member: KSet) -> KSet:
    """C_ij(F) para um membro F da família"""
    if member not in f:
        raise InputError(f"conjunto {elements_of(member)} não pertence à família")
    _check_range(f, step)
    bi, bj = bit(step.i), bit(step.j)
    result = _target(member, bi, bj) if _shifts(f, member, bi, bj) else member
    if result.bit_count() != f.params.k:
        raise ClaimViolation(
            "shift_size_preserved",
            f"C_{step.i}{step.j}({elements_of(member)}) mudou de tamanho",
            {"member": elements_of(member), "result": elements_of(result)},
        )
    return result


def shift_family(f: SetFamily, step: ShiftStep) -> SetFamily:
    """
    C_ij(F) em duas fases: primeiro decide o deslocamento de cada membro
    contra a família original, depois materializa a nova família.
    """
    _check_range(f, step)
    bi, bj = bit(step.i), bit(step.j)
    decisions = [_shifts(f, member, bi, bj) for member in f.sets]
    images = [
        _target(member, bi, bj) if moved else member
        for member, moved in zip(f.sets, decisions)
    ]

    k = f.params.k
    for member, image in zip(f.sets, images):
        if image.bit_count() != k:
            raise ClaimViolation(
                "shift_size_preserved",
                f"C_{step.i}{step.j}({elements_of(member)}) mudou de tamanho",
                {"family": f.as_elements(), "i": step.i, "j": step.j},
            )
    if len(set(images)) != len(images):
        raise ClaimViolation(
            "shift_injective",
            f"C_{step.i}{step.j} não é injetiva nesta família",
            {"family": f.as_elements(), "i": step.i, "j": step.j},
        )
    return f.with_sets(images)


def apply_shift_sequence(
    f: SetFamily, seq: ShiftSequence
) -> Tuple[SetFamily, List[IntermediateFamily]]:
    """
    F_t = F e F_{p-1} = C_{I(p)J(p)}(F_p) para p = t, …, 1.

    Devolve F_0 e a lista F_t, …, F_0 com a marca de trivialidade de cada uma.
    """
    current = f
    trace = [IntermediateFamily(position=seq.t, family=current, trivial=is_trivial(current))]
    for position in range(seq.t, 0, -1):
        step = seq.steps[position - 1]
        current = shift_family(current, step)
        trace.append(
            IntermediateFamily(
                position=position - 1,
                step=step,
                family=current,
                trivial=is_trivial(current),
            )
        )
    return current, trace


def lemma2_witness(f: SetFamily, step: ShiftStep) -> int:
    """
    Elemento que deve continuar descoberto após C_ij numa família trivial:
    se j está descoberto, j; se i está descoberto, j; senão o próprio x.
    """
    missing = uncovered_elements(f)
    if not missing:
        raise ParameterError("família não trivial não tem testemunha de trivialidade")
    if step.j in missing or step.i in missing:
        return step.j
    return missing[0]
