"""
Comando `run`: executa o algoritmo numa família lida de arquivo ou gerada pela semente.
"""
import logging

from ..exceptions import ClaimViolation, InputError
from ..models.comum import Finding
from ..models.execucao import RunConfig
from ..repositories.familias_repo import familias_repo
from ..repositories.relatorios_repo import relatorios_repo
from ..services.algoritmo_emc import run
from ..services.bits import elements_of
from ..services.oraculo import random_matching_free_family
from . import EXIT_OK, EXIT_VIOLATION

logger = logging.getLogger(__name__)


async def cmd_run(cfg: RunConfig) -> int:
    if cfg.input_path is not None:
        family = familias_repo.read(cfg.input_path)
    else:
        family = random_matching_free_family(cfg.params, cfg.seed)
    logger.info(f"Executando o algoritmo em {family.params.label()} com |F| = {len(family)}")

    try:
        outcome = run(family, paranoid=cfg.paranoid)
    except InputError as e:
        if e.certificate is not None:
            print(f"❌ {family.params.s}-emparelhamento encontrado:")
            for member in e.certificate.sets:
                print(f"   {elements_of(member)}")
        raise
    except ClaimViolation as e:
        print(f"❌ afirmação violada: {e}")
        certificate = e.evidence.get("outcome", {}).get("certificate")
        if certificate is not None:
            print(f"   certificado de emparelhamento: {certificate['sets']}")
        finding = Finding(claim=e.claim, message=e.message, seed=cfg.seed, evidence=e.evidence)
        if cfg.output_path is not None:
            relatorios_repo.write_report(
                "run", {"finding": finding.model_dump(mode="json")}, cfg.output_path
            )
            relatorios_repo.write_findings([finding], cfg.output_path)
        return EXIT_VIOLATION

    print(f"✅ {outcome.kind.value}")
    print(f"   |F| = {len(outcome.final_family)}, cota = {outcome.bound}, n′ = {outcome.final_n}")
    print(f"   Φ: {' → '.join(str(phi) for phi in outcome.phi_history)}")
    if cfg.output_path is not None:
        relatorios_repo.write_report("run", relatorios_repo.outcome_body(outcome), cfg.output_path)
    return EXIT_OK
