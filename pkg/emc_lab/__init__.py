"""
emc-lab: verificação executável do algoritmo de deslocamentos (shifting)
para o Erdős Matching Conjecture em instâncias pequenas.
"""

__version__ = "1.0.0"
