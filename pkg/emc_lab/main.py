"""
Ponto de entrada da linha de comando do emc-lab.
"""
import argparse
import asyncio
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from .commands import EXIT_ERROR, EXIT_VIOLATION
from .commands.bound import cmd_bound
from .commands.hunt import cmd_hunt
from .commands.lemmas import cmd_lemmas
from .commands.oracle import cmd_oracle
from .commands.run import cmd_run
from .config import settings
from .exceptions import ClaimViolation, EmcLabError
from .models.execucao import CommandName, RunConfig
from .models.familia import Params

# Configuração de logging
logging.basicConfig(
    level=getattr(logging, settings.log_level),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

COMMANDS = {
    CommandName.LEMMAS: cmd_lemmas,
    CommandName.RUN: cmd_run,
    CommandName.ORACLE: cmd_oracle,
    CommandName.BOUND: cmd_bound,
    CommandName.HUNT: cmd_hunt,
}


class _Parser(argparse.ArgumentParser):
    """Erros de uso levantam ValueError em vez de encerrar o processo"""

    def error(self, message: str):
        raise ValueError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="emc-lab",
        description="Verificação da prova algorítmica da conjectura de emparelhamento de Erdős",
    )
    parser.add_argument("command", choices=[c.value for c in CommandName])
    parser.add_argument("--n", type=int, help="tamanho do conjunto base (máximo com --grid)")
    parser.add_argument("--k", type=int, help="uniformidade (máximo com --grid)")
    parser.add_argument("--s", type=int, help="tamanho do emparelhamento proibido (máximo com --grid)")
    parser.add_argument("--seed", type=int, help="semente mestra")
    parser.add_argument("--count", type=int, default=100, help="número de execuções")
    parser.add_argument("--budget", type=int, help="orçamento de nós ou de casos")
    parser.add_argument("--paranoid", action="store_true", help="recalcula ν a cada iteração")
    parser.add_argument("--grid", action="store_true", help="percorre todos os (n,k,s) até os máximos")
    parser.add_argument("--in", dest="input_path", help="arquivo de família (texto ou .json)")
    parser.add_argument("--out", dest="output_path", help="arquivo de saída")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    """Interpreta os argumentos; erros de validação viram `ValidationError`"""
    args = build_parser().parse_args(argv)
    given = [value is not None for value in (args.n, args.k, args.s)]
    if any(given) and not all(given):
        raise ValueError("--n, --k e --s devem ser informados juntos")
    params = Params(n=args.n, k=args.k, s=args.s) if all(given) else None
    return RunConfig(
        command=args.command,
        params=params,
        seed=args.seed,
        paranoid=args.paranoid,
        budget=args.budget,
        count=args.count,
        grid=args.grid,
        input_path=args.input_path,
        output_path=args.output_path,
    )


async def dispatch(cfg: RunConfig) -> int:
    logger.info(f"Iniciando comando '{cfg.command.value}'")
    code = await COMMANDS[cfg.command](cfg)
    logger.info(f"Comando '{cfg.command.value}' finalizado com código {code}")
    return code


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
    except (ValidationError, ValueError) as e:
        print(f"❌ configuração inválida: {e}", file=sys.stderr)
        return EXIT_ERROR

    try:
        return asyncio.run(dispatch(cfg))
    except ClaimViolation as e:
        logger.error(f"Afirmação violada em '{cfg.command.value}': {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except EmcLabError as e:
        logger.error(f"Erro ao executar '{cfg.command.value}': {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
