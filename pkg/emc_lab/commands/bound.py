"""
Comando `bound`: valores de referência para um (n, k, s).
"""
import logging
from typing import Any, Dict

from ..models.execucao import RunConfig
from ..models.familia import Params
from ..repositories.relatorios_repo import relatorios_repo
from ..services.familias import (
    below_threshold_value,
    emc_bound,
    f_star_size,
    frankl_upper_bound,
    g_star_size,
    in_frankl_range,
)
from ..services.oraculo import known_value
from . import EXIT_OK

logger = logging.getLogger(__name__)


def bound_summary(p: Params) -> Dict[str, Any]:
    known = known_value(p)
    in_scope = p.n >= p.sk
    return {
        "params": p.model_dump(),
        "in_theorem_range": in_scope,
        "emc_bound": emc_bound(p) if in_scope else None,
        "below_threshold_value": None if in_scope else below_threshold_value(p),
        "f_star_size": f_star_size(p) if p.n >= p.s - 1 else None,
        "g_star_size": g_star_size(p) if p.sk - 1 <= p.n else None,
        "frankl_upper_bound": frankl_upper_bound(p),
        "in_frankl_range": in_frankl_range(p),
        "known_value": None if known is None else known.value,
        "known_provenance": None if known is None else known.provenance,
    }


async def cmd_bound(cfg: RunConfig) -> int:
    summaries = [bound_summary(p) for p in cfg.grid_params()]
    for summary in summaries:
        p = Params(**summary["params"])
        print(f"📐 {p.label()}")
        for key, value in summary.items():
            if key != "params" and value is not None:
                print(f"   {key}: {value}")

    if cfg.output_path is not None:
        relatorios_repo.write_report("bound", {"rows": summaries}, cfg.output_path)
    return EXIT_OK
