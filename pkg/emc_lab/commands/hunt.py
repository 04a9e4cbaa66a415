"""
Comando `hunt`: campanha de fuzzing do algoritmo em modo paranoico.
"""
import logging

from ..exceptions import ParameterError
from ..models.execucao import RunConfig
from ..repositories.relatorios_repo import relatorios_repo
from ..services.campanha import run_hunt_campaign
from . import EXIT_ERROR, EXIT_OK, EXIT_VIOLATION

logger = logging.getLogger(__name__)


async def cmd_hunt(cfg: RunConfig) -> int:
    grid = cfg.grid_params(theorem_range_only=True)
    if not grid:
        raise ParameterError("nenhum parâmetro da grade satisfaz n ≥ sk")

    report = await run_hunt_campaign(grid, cfg.seed, cfg.count, paranoid=True)

    print(f"📊 {report.runs} execuções, {report.completed} concluídas sem achados")
    for kind in sorted(report.kinds):
        print(f"   {kind}: {report.kinds[kind]}")
    print(f"   iterações: total {report.iterations_total}, máximo {report.max_iterations}")
    for claim in sorted(set(report.claim_passes) | set(report.claim_failures)):
        passed = report.claim_passes.get(claim, 0)
        failed = report.claim_failures.get(claim, 0)
        mark = "❌" if failed else "✅"
        print(f"   {mark} {claim}: {passed} aprovadas, {failed} violações")

    if cfg.output_path is not None:
        body = {
            "grid": [p.model_dump() for p in grid],
            "seed": cfg.seed,
            **report.model_dump(mode="json"),
        }
        relatorios_repo.write_report("hunt", body, cfg.output_path)
        relatorios_repo.write_findings(report.findings, cfg.output_path)

    if report.findings:
        for finding in report.findings:
            print(f"❌ [{finding.claim}] semente {finding.seed}: {finding.message}")
        return EXIT_VIOLATION
    if report.errors:
        return EXIT_ERROR
    return EXIT_OK
