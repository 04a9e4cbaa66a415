"""
Fonte única de aleatoriedade.

Toda campanha parte de uma semente mestra; a semente de cada item de
trabalho é derivada por SHA-256 de "mestra:índice" e alimenta um
`random.Random` (Mersenne Twister), estável entre plataformas.
"""
import hashlib
import random


def derive_seed(master: int, index: int) -> int:
    """Semente de 64 bits do item `index` da campanha `master`"""
    digest = hashlib.sha256(f"{master}:{index}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)
