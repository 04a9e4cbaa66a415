"""
Comando `oracle`: tabela de f(n,k,s) pelos dois oráculos comparada com a cota.
"""
import logging
from typing import List

from ..models.execucao import RunConfig
from ..models.familia import Params, SetFamily
from ..models.oraculo import OracleMethod, OracleRow
from ..repositories.relatorios_repo import relatorios_repo
from ..services.campanha import build_oracle_row, run_oracle_grid
from ..services.oraculo import known_value
from . import EXIT_OK, EXIT_VIOLATION

logger = logging.getLogger(__name__)


def both_concluded(row: OracleRow) -> bool:
    return row.method == "+".join(sorted(m.value for m in OracleMethod))


def is_mismatch(row: OracleRow) -> bool:
    """
    Divergência entre métodos, com a cota ou com o valor tabelado. Linha que
    não concluiu pelos dois métodos também conta.
    """
    if not both_concluded(row):
        return True
    if row.f.startswith("disagree") or row.match == "false":
        return True
    known = known_value(Params(n=row.n, k=row.k, s=row.s))
    return known is not None and row.f.isdigit() and int(row.f) != known.value


async def cmd_oracle(cfg: RunConfig) -> int:
    grid = cfg.grid_params()
    items = await run_oracle_grid(grid, cfg.budget)

    rows: List[OracleRow] = []
    for item in items:
        row = build_oracle_row(item)
        if cfg.output_path is not None and item["witness"] is not None:
            p = Params(**item["params"])
            witness = SetFamily.from_elements(p, item["witness"])
            path = relatorios_repo.write_witness(witness, cfg.output_path, f"f_{p.n}_{p.k}_{p.s}")
            row.witness_file = str(path.relative_to(cfg.output_path.parent))
        if row.f == "inconclusive":
            logger.warning(f"Linha ({row.n},{row.k},{row.s}) inconclusiva")
        elif not both_concluded(row):
            logger.warning(f"Linha ({row.n},{row.k},{row.s}) concluída só por {row.method}")
        rows.append(row)

    mismatches = [row for row in rows if is_mismatch(row)]
    print(f"{'n':>3} {'k':>3} {'s':>3} {'f':>14} {'cota':>10}  método")
    for row in rows:
        mark = "❌" if row in mismatches else "  "
        print(f"{row.n:>3} {row.k:>3} {row.s:>3} {row.f:>14} {row.bound:>10}  {row.method} {mark}")

    if cfg.output_path is not None:
        relatorios_repo.write_csv(rows, cfg.output_path)

    if mismatches:
        logger.error(f"{len(mismatches)} linhas divergem da cota ou não concluíram pelos dois métodos")
        return EXIT_VIOLATION
    return EXIT_OK
