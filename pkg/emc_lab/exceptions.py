"""
Hierarquia de exceções do laboratório.
"""
from typing import Any, Dict, Optional


class EmcLabError(Exception):
    """Erro base do emc-lab"""


class ParameterError(EmcLabError, ValueError):
    """Parâmetros fora do domínio ou pré-condição violada"""


class InputError(EmcLabError, ValueError):
    """Entrada malformada: conjunto duplicado, k errado, família com s-emparelhamento"""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        certificate: Optional[Any] = None,
    ):
        super().__init__(message if line is None else f"linha {line}: {message}")
        self.line = line
        self.certificate = certificate


class ClaimViolation(EmcLabError):
    """
    Uma afirmação da prova falhou numa instância concreta.

    `claim` é um identificador estável (snake_case) e `evidence` um dicionário
    serializável em JSON com tudo o que é preciso para reproduzir o achado.
    """

    def __init__(self, claim: str, message: str, evidence: Optional[Dict[str, Any]] = None):
        super().__init__(f"[{claim}] {message}")
        self.claim = claim
        self.message = message
        self.evidence = evidence or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"claim": self.claim, "message": self.message, "evidence": dict(self.evidence)}
