"""
Fixtures compartilhadas.
"""
import pytest

from emc_lab.models.familia import Params
from emc_lab.services.familias import make_f_star
from tests.helpers import familia


@pytest.fixture
def estrela_em_2():
    """Estrela centrada em 2 sobre [5], k = 2, s = 2"""
    return familia(5, 2, 2, [[1, 2], [2, 3], [2, 4], [2, 5]])


@pytest.fixture
def triangulo():
    """Triângulo sobre {2,3,4} em [4], k = 2, s = 2"""
    return familia(4, 2, 2, [[2, 3], [2, 4], [3, 4]])


@pytest.fixture
def familia_a1_deslocado():
    """
    Família intersectante em (6,3,2) na qual a cascata de deslocamentos tira
    A₁ da família antes do último deslocamento.
    """
    return familia(
        6,
        3,
        2,
        [[4, 5, 6], [1, 5, 6], [1, 4, 6], [1, 4, 5], [1, 2, 6], [1, 3, 6], [1, 2, 5], [1, 3, 5]],
    )


@pytest.fixture
def estrela_dupla_com_aresta():
    """F*(6,2,3) mais {5,6}; contém o 3-emparelhamento {5,6},{1,3},{2,4}"""
    f_star = make_f_star(Params(n=6, k=2, s=3))
    return familia(6, 2, 3, f_star.as_elements() + [[5, 6]])
