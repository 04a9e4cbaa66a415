"""
Comandos da linha de comando, um módulo por comando.
"""

# Códigos de saída
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
