"""
Testes das suítes de propriedades do deslocamento, incluindo um operador mutante.
"""
import pytest

from emc_lab.exceptions import ParameterError
from emc_lab.models.familia import Params
from emc_lab.services.bits import bit
from emc_lab.services.deslocamentos import make_step
from emc_lab.services.familias import uncovered_elements
from emc_lab.services.lemas import (
    check_shift_lemmas,
    random_family,
    random_trivial_family,
    run_lemma_suite,
)
from tests.helpers import familia

GRID = [Params(n=n, k=k, s=2) for k in (1, 2, 3) for n in range(max(k, 2), 7)]


def deslocamento_sem_bloqueio(f, step):
    """Mutante: ignora o bloqueio e descarta as colisões"""
    bi, bj = bit(step.i), bit(step.j)
    images = {(m & ~bj) | bi if m & bj and not m & bi else m for m in f.sets}
    return f.with_sets(sorted(images))


def test_random_trivial_family_avoids_element():
    p = Params(n=6, k=2, s=2)
    for seed in range(20):
        f = random_trivial_family(p, seed, missing=3)
        assert 3 in uncovered_elements(f)
        assert f == random_trivial_family(p, seed, missing=3)


def test_random_trivial_family_validates_element():
    with pytest.raises(ParameterError):
        random_trivial_family(Params(n=4, k=2, s=2), seed=1, missing=5)


def test_random_family_respects_size_cap():
    f = random_family(Params(n=8, k=3, s=2), seed=2)
    assert len(f) <= 20


def test_check_shift_lemmas_on_trivial_family():
    f = familia(4, 2, 2, [[2, 3]])
    claims = {check.claim: check.passed for check in check_shift_lemmas(f, make_step(4, 2))}
    assert claims["lemma2_trivial"]
    assert claims["lemma2_witness_x_eq_i"]
    assert all(claims.values())


def test_suite_passes_on_correct_operator():
    report = run_lemma_suite(GRID, seed=11, count=40)
    assert report.families == 40
    assert report.findings_total == 0
    assert report.findings == []
    for claim in ("lemma1_cardinality", "lemma1_matching", "pullback", "idempotence"):
        assert report.tallies[claim].checked == report.shifts
    assert report.tallies["naive_crosscheck"].checked > 0
    assert report.tallies["lemma2_trivial"].checked > 0
    assert {"lemma2_witness_x_eq_i", "lemma2_witness_x_eq_j", "lemma2_witness_x_other"} <= set(
        report.tallies
    )


def test_suite_is_deterministic():
    first = run_lemma_suite(GRID, seed=5, count=10)
    second = run_lemma_suite(GRID, seed=5, count=10)
    assert first.model_dump() == second.model_dump()


def test_zero_budget_runs_no_cases():
    report = run_lemma_suite(GRID, seed=1, count=0)
    assert report.no_cases_run
    assert report.tallies == {}


def test_mutated_shift_breaks_cardinality():
    f = familia(3, 2, 2, [[1, 3], [2, 3]])
    checks = check_shift_lemmas(f, make_step(1, 2), shift=deslocamento_sem_bloqueio)
    failed = [check.claim for check in checks if not check.passed]
    assert "lemma1_cardinality" in failed


def test_suite_reports_mutated_shift():
    report = run_lemma_suite(
        [Params(n=4, k=2, s=2)], seed=3, count=30, shift=deslocamento_sem_bloqueio
    )
    assert report.findings_total > 0
    assert "lemma1_cardinality" in {finding.claim for finding in report.findings}
    assert report.findings[0].seed is not None
