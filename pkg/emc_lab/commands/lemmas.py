"""
Comando `lemmas`: suítes de propriedades do deslocamento e do emparelhamento.
"""
import logging
from typing import Any, Dict

from ..models.execucao import LemmaReport, RunConfig
from ..repositories.relatorios_repo import relatorios_repo
from ..services.lemas import run_lemma_suite
from . import EXIT_OK, EXIT_VIOLATION

logger = logging.getLogger(__name__)


def lemma_body(report: LemmaReport, cfg: RunConfig) -> Dict[str, Any]:
    return {
        "grid": [p.model_dump() for p in cfg.grid_params()],
        "seed": cfg.seed,
        "no_cases_run": report.no_cases_run,
        **report.model_dump(mode="json"),
    }


async def cmd_lemmas(cfg: RunConfig) -> int:
    """Roda as suítes; `--budget` (ou `--count`) é o número de famílias sorteadas"""
    count = cfg.budget if cfg.budget is not None else cfg.count
    logger.info(f"Suíte de lemas: {count} famílias, semente {cfg.seed}")
    report = run_lemma_suite(cfg.grid_params(), cfg.seed, count)

    if report.no_cases_run:
        print("⚠️  nenhum caso executado")
    else:
        print(f"📊 {report.families} famílias, {report.shifts} deslocamentos")
        for claim in sorted(report.tallies):
            tally = report.tallies[claim]
            mark = "✅" if tally.passed == tally.checked else "❌"
            print(f"   {mark} {claim}: {tally.passed}/{tally.checked}")

    body = lemma_body(report, cfg)
    if cfg.output_path is not None:
        relatorios_repo.write_report("lemmas", body, cfg.output_path)
        relatorios_repo.write_findings(report.findings, cfg.output_path)
    elif report.findings:
        print(relatorios_repo.dumps_body({"findings": body["findings"]}))

    if report.findings_total:
        print(f"❌ {report.findings_total} violações encontradas")
        return EXIT_VIOLATION
    return EXIT_OK
