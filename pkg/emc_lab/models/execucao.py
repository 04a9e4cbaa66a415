"""
Modelos Pydantic da configuração de execução e dos relatórios de campanha.
"""
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from .comum import Finding
from .familia import Params


class CommandName(str, Enum):
    """Comandos da linha de comando"""
    LEMMAS = "lemmas"
    RUN = "run"
    ORACLE = "oracle"
    BOUND = "bound"
    HUNT = "hunt"


RANDOMIZED_COMMANDS = {CommandName.LEMMAS, CommandName.HUNT}


class RunConfig(BaseModel):
    """Configuração de uma invocação; caminhos validados antes de qualquer trabalho"""
    command: CommandName
    params: Optional[Params] = None
    seed: Optional[int] = None
    paranoid: bool = False
    budget: Optional[int] = Field(None, ge=0)
    count: int = Field(100, ge=0)
    grid: bool = False
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None

    @model_validator(mode="after")
    def validate_config(self):
        if self.command in RANDOMIZED_COMMANDS and self.seed is None:
            raise ValueError(f"--seed é obrigatório para '{self.command.value}'")
        if self.command is CommandName.RUN:
            if self.input_path is None and (self.seed is None or self.params is None):
                raise ValueError("'run' exige --in FILE ou --seed com --n/--k/--s")
        elif self.params is None:
            raise ValueError(f"'{self.command.value}' exige --n, --k e --s")
        if self.input_path is not None and not self.input_path.is_file():
            raise ValueError(f"arquivo de entrada inexistente: {self.input_path}")
        if self.output_path is not None and not self.output_path.parent.is_dir():
            raise ValueError(f"diretório de saída inexistente: {self.output_path.parent}")
        return self

    def grid_params(self, theorem_range_only: bool = False) -> List[Params]:
        """Parâmetros da invocação; com --grid, --n/--k/--s são máximos"""
        if self.params is None:
            return []
        if not self.grid:
            candidates = [self.params]
        else:
            top = self.params
            candidates = [
                Params(n=n, k=k, s=s)
                for k in range(1, top.k + 1)
                for s in range(1, top.s + 1)
                for n in range(k, top.n + 1)
            ]
        if theorem_range_only:
            candidates = [p for p in candidates if p.n >= p.sk]
        return candidates


class LemmaTally(BaseModel):
    """Contagem de verificações de uma afirmação"""
    checked: int = 0
    passed: int = 0


class LemmaReport(BaseModel):
    """Resultado das suítes de propriedades do deslocamento"""
    families: int = 0
    shifts: int = 0
    tallies: Dict[str, LemmaTally] = Field(default_factory=dict)
    findings: List[Finding] = Field(default_factory=list)
    findings_total: int = 0

    @property
    def no_cases_run(self) -> bool:
        return self.families == 0


class HuntReport(BaseModel):
    """Resumo de uma campanha de fuzzing do algoritmo"""
    runs: int = 0
    completed: int = 0
    kinds: Dict[str, int] = Field(default_factory=dict)
    iterations_total: int = 0
    max_iterations: int = 0
    claim_passes: Dict[str, int] = Field(default_factory=dict)
    claim_failures: Dict[str, int] = Field(default_factory=dict)
    errors: List[str] = Field(default_factory=list)
    findings: List[Finding] = Field(default_factory=list)
