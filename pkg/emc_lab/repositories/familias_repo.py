"""
Repository para leitura e escrita de famílias em arquivo (texto e JSON canônico).
"""
import json
import logging
from pathlib import Path
from typing import Dict, List

from pydantic import ValidationError

from ..exceptions import InputError
from ..models.familia import Params, SetFamily
from ..services.bits import KSet, mask_from_elements

logger = logging.getLogger(__name__)


class FamiliasRepository:
    """
    Formato texto: primeira linha "n k s", depois um conjunto por linha com
    os elementos em ordem crescente separados por espaço.
    JSON canônico: {"n": …, "k": …, "s": …, "sets": [[…], …]}.
    """

    def parse_text(self, text: str) -> SetFamily:
        """Interpreta o formato texto; erros indicam a linha (1-based)"""
        lines = [(number, line.strip()) for number, line in enumerate(text.splitlines(), start=1)]
        lines = [(number, line) for number, line in lines if line and not line.startswith("#")]
        if not lines:
            raise InputError("arquivo vazio: falta o cabeçalho 'n k s'", line=1)

        header_line, header = lines[0]
        try:
            n, k, s = (int(token) for token in header.split())
            params = Params(n=n, k=k, s=s)
        except (ValueError, ValidationError) as e:
            raise InputError(f"cabeçalho inválido '{header}': {e}", line=header_line) from e

        return self._build(params, [(number, line.split()) for number, line in lines[1:]])

    def _build(self, params: Params, rows: List[tuple]) -> SetFamily:
        seen: Dict[KSet, int] = {}
        for number, tokens in rows:
            try:
                elements = [int(token) for token in tokens]
                mask = mask_from_elements(elements)
            except ValueError as e:
                raise InputError(f"conjunto inválido {tokens}: {e}", line=number) from e
            if any(x < 1 or x > params.n for x in elements):
                raise InputError(f"conjunto {elements} fora de [1, {params.n}]", line=number)
            if len(elements) != params.k:
                raise InputError(
                    f"conjunto {elements} tem {len(elements)} elementos, esperado k = {params.k}",
                    line=number,
                )
            if mask in seen:
                raise InputError(
                    f"conjunto {sorted(elements)} duplicado (linha {seen[mask]})", line=number
                )
            seen[mask] = number
        try:
            return SetFamily(params=params, sets=tuple(seen))
        except ValidationError as e:
            raise InputError(f"família inválida: {e.errors()[0]['msg']}") from e

    def format_text(self, family: SetFamily) -> str:
        p = family.params
        lines = [f"{p.n} {p.k} {p.s}"]
        lines += [" ".join(str(x) for x in member) for member in family.as_elements()]
        return "\n".join(lines) + "\n"

    def to_json(self, family: SetFamily) -> Dict:
        p = family.params
        return {"n": p.n, "k": p.k, "s": p.s, "sets": family.as_elements()}

    def from_json(self, data: Dict) -> SetFamily:
        try:
            params = Params(n=data["n"], k=data["k"], s=data["s"])
        except (KeyError, TypeError, ValidationError) as e:
            raise InputError(f"JSON sem parâmetros válidos n/k/s: {e}") from e
        sets = data.get("sets", [])
        if not isinstance(sets, list) or not all(isinstance(m, list) for m in sets):
            raise InputError("'sets' deve ser uma lista de listas")
        for pos, member in enumerate(sets, start=1):
            # bool é subclasse de int
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in member):
                raise InputError(f"conjunto {member} tem elementos não inteiros", line=pos)
        return self._build(params, [(pos, list(member)) for pos, member in enumerate(sets, start=1)])

    def read(self, path: Path) -> SetFamily:
        """Lê uma família; `.json` usa o formato canônico, o resto o formato texto"""
        try:
            text = Path(path).read_text(encoding="utf-8")
            if Path(path).suffix == ".json":
                return self.from_json(json.loads(text))
            return self.parse_text(text)
        except json.JSONDecodeError as e:
            logger.error(f"Erro ao ler família {path}: {e}")
            raise InputError(f"JSON inválido: {e.msg}", line=e.lineno) from e
        except Exception as e:
            logger.error(f"Erro ao ler família {path}: {e}")
            raise

    def write(self, family: SetFamily, path: Path) -> Path:
        try:
            path = Path(path)
            if path.suffix == ".json":
                path.write_text(
                    json.dumps(self.to_json(family), sort_keys=True) + "\n", encoding="utf-8"
                )
            else:
                path.write_text(self.format_text(family), encoding="utf-8")
            return path
        except Exception as e:
            logger.error(f"Erro ao gravar família {path}: {e}")
            raise


# Instância global do repository
familias_repo = FamiliasRepository()
