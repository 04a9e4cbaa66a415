"""
Configurações do laboratório carregadas via variáveis de ambiente.
"""
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Configurações carregadas do ambiente (prefixo EMC_LAB_) ou do arquivo .env"""

    # Configurações gerais
    app_env: str = "dev"
    log_level: str = "INFO"

    # Pool de workers para hunt/oracle (EMC_LAB_WORKERS)
    workers: int = 1

    # Versão do esquema gravada no cabeçalho dos relatórios JSON
    schema_version: int = 1

    # Limites dos oráculos exaustivos (contagem de nós, nunca tempo de relógio)
    direct_max_sets: int = 24
    oracle_node_budget: int = 2_000_000
    covering_max_hyperedges: int = 200_000

    # Limites dos verificadores ingênuos
    naive_max_sets: int = 20
    naive_crosscheck_max_sets: int = 15
    lemma_max_family_size: int = 20

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "env_prefix": "EMC_LAB_",
        "extra": "ignore",
    }


# Instância global das configurações
settings = Settings()
