"""
Repository dos relatórios: único ponto de escrita de JSON, CSV e arquivos de evidência.
"""
import csv
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ..config import settings
from ..models.algoritmo import Outcome
from ..models.comum import Finding, Report, ReportHeader
from ..models.familia import SetFamily
from ..models.oraculo import OracleRow
from .familias_repo import familias_repo

logger = logging.getLogger(__name__)

CSV_FIELDS = ["n", "k", "s", "f", "method", "bound", "match", "witness_file"]


class RelatoriosRepository:
    """Relatórios JSON com cabeçalho isolado; o corpo é serializado com chaves ordenadas"""

    def build_report(self, command: str, body: Dict[str, Any]) -> Report:
        header = ReportHeader(schema_version=settings.schema_version, command=command)
        return Report(header=header, body=body)

    def dumps_body(self, body: Dict[str, Any]) -> str:
        """Serialização determinística do corpo (sem carimbo de tempo)"""
        return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False)

    def dumps_report(self, report: Report) -> str:
        return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False)

    def write_report(self, command: str, body: Dict[str, Any], path: Path) -> Path:
        try:
            path = Path(path)
            report = self.build_report(command, body)
            path.write_text(self.dumps_report(report) + "\n", encoding="utf-8")
            logger.info(f"Relatório '{command}' gravado em {path}")
            return path
        except Exception as e:
            logger.error(f"Erro ao gravar relatório {path}: {e}")
            raise

    def outcome_body(self, outcome: Outcome) -> Dict[str, Any]:
        """Resumo da execução seguido do rastro completo"""
        return {
            "kind": outcome.kind.value,
            "final_n": outcome.final_n,
            "family_size": len(outcome.final_family),
            "bound": outcome.bound,
            "iterations": len(outcome.iterations),
            "violations": outcome.violations,
            "phi_history": outcome.phi_history,
            "params": outcome.params.model_dump(),
            "initial_family": outcome.initial_family.as_elements(),
            "final_family": outcome.final_family.as_elements(),
            "trace": [trace.model_dump(mode="json") for trace in outcome.iterations],
            "compactions": [c.model_dump(mode="json") for c in outcome.compactions],
        }

    def write_csv(self, rows: Sequence[OracleRow], path: Path) -> Path:
        try:
            path = Path(path)
            with path.open("w", encoding="utf-8", newline="") as handle:
                writer = csv.DictWriter(handle, fieldnames=CSV_FIELDS)
                writer.writeheader()
                for row in rows:
                    writer.writerow(row.model_dump())
            logger.info(f"Tabela com {len(rows)} linhas gravada em {path}")
            return path
        except Exception as e:
            logger.error(f"Erro ao gravar tabela {path}: {e}")
            raise

    def evidence_dir(self, out_path: Path) -> Path:
        out_path = Path(out_path)
        return out_path.parent / f"{out_path.stem}_findings"

    def write_findings(self, findings: Sequence[Finding], out_path: Path) -> List[Path]:
        """Um JSON por achado em `<stem>_findings/` ao lado de `out_path`"""
        if not findings:
            return []
        try:
            directory = self.evidence_dir(out_path)
            directory.mkdir(exist_ok=True)
            written = []
            for index, finding in enumerate(findings):
                path = directory / f"finding_{index:04d}_{finding.claim}.json"
                path.write_text(
                    self.dumps_body(finding.model_dump(mode="json")) + "\n", encoding="utf-8"
                )
                written.append(path)
            logger.info(f"{len(written)} arquivos de evidência em {directory}")
            return written
        except Exception as e:
            logger.error(f"Erro ao gravar evidências: {e}")
            raise

    def write_witness(self, family: SetFamily, out_path: Path, name: str) -> Optional[Path]:
        """Família testemunha no formato texto, no diretório `<stem>_witnesses/`"""
        try:
            out_path = Path(out_path)
            directory = out_path.parent / f"{out_path.stem}_witnesses"
            directory.mkdir(exist_ok=True)
            return familias_repo.write(family, directory / f"{name}.txt")
        except Exception as e:
            logger.error(f"Erro ao gravar testemunha {name}: {e}")
            raise


# Instância global do repository
relatorios_repo = RelatoriosRepository()
