"""
Modelos Pydantic para os resultados dos oráculos exaustivos.
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict

from .familia import Params, SetFamily


class OracleMethod(str, Enum):
    """Método de cálculo de f(n,k,s)"""
    DIRECT = "direct"
    COVERING = "covering"


class OracleResult(BaseModel):
    """f(n,k,s) com família testemunha; `value` é None quando inconclusivo"""
    params: Params
    method: OracleMethod
    value: Optional[int] = None
    witness: Optional[SetFamily] = None
    conclusive: bool = True
    nodes: int = 0


class KnownValue(BaseModel):
    """Valor tabelado de f(n,k,s) com a procedência"""
    model_config = ConfigDict(frozen=True)

    params: Params
    value: int
    provenance: str


class OracleRow(BaseModel):
    """Linha da tabela CSV de resultados"""
    n: int
    k: int
    s: int
    f: str
    method: str
    bound: str
    match: str
    witness_file: str = ""
