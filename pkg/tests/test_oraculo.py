"""
Testes dos oráculos de f(n,k,s), da tabela de valores conhecidos e do gerador aleatório.
"""
import pytest

from emc_lab.config import settings
from emc_lab.exceptions import ParameterError
from emc_lab.models.familia import Params
from emc_lab.models.oraculo import OracleMethod
from emc_lab.services.emparelhamentos import has_s_matching
from emc_lab.services.familias import binomial, emc_bound, frankl_upper_bound, make_f_star, make_g_star
from emc_lab.services.oraculo import (
    f_covering,
    f_direct,
    known_value,
    known_values,
    random_matching_free_family,
)

SMALL = [
    ((4, 2, 2), 3),
    ((5, 2, 2), 4),
    ((6, 2, 2), 5),
    ((6, 2, 3), 10),
    ((6, 3, 2), 10),
    ((3, 1, 2), 1),
    ((5, 1, 3), 2),
    ((4, 2, 1), 0),
]


@pytest.mark.parametrize("params,expected", SMALL)
def test_f_direct(params, expected):
    p = Params(n=params[0], k=params[1], s=params[2])
    result = f_direct(p)
    assert result.method is OracleMethod.DIRECT
    assert result.conclusive
    assert result.value == expected
    assert len(result.witness) == expected
    assert not has_s_matching(result.witness)


@pytest.mark.parametrize("params,expected", SMALL)
def test_f_covering(params, expected):
    p = Params(n=params[0], k=params[1], s=params[2])
    result = f_covering(p)
    assert result.method is OracleMethod.COVERING
    assert result.value == expected
    assert len(result.witness) == expected
    assert not has_s_matching(result.witness)


@pytest.mark.parametrize("params,expected", SMALL)
def test_oracles_match_theorem_and_sanity_bounds(params, expected):
    p = Params(n=params[0], k=params[1], s=params[2])
    assert emc_bound(p) == expected
    assert len(make_f_star(p)) <= expected
    assert len(make_g_star(p)) <= expected
    assert expected <= frankl_upper_bound(p)


def test_f_direct_on_seven_points():
    assert f_direct(Params(n=7, k=2, s=2)).value == 6
    assert f_direct(Params(n=7, k=2, s=3)).value == 11


def test_f_covering_without_s_matchings():
    result = f_covering(Params(n=5, k=2, s=3))
    assert result.value == binomial(5, 2)


def test_f_direct_is_gated_without_budget():
    with pytest.raises(ParameterError):
        f_direct(Params(n=8, k=2, s=2))


def test_f_direct_budget_exhaustion_is_inconclusive():
    result = f_direct(Params(n=6, k=2, s=3), budget=1)
    assert not result.conclusive
    assert result.value is None
    assert result.witness is None


def test_f_covering_enumeration_gate(monkeypatch):
    monkeypatch.setattr(settings, "covering_max_hyperedges", 3)
    result = f_covering(Params(n=6, k=2, s=3))
    assert not result.conclusive
    assert result.value is None


def test_random_matching_free_family_is_sound_and_deterministic():
    for params in [(6, 2, 3), (7, 3, 2), (8, 2, 3), (9, 3, 3)]:
        p = Params(n=params[0], k=params[1], s=params[2])
        for seed in range(10):
            f = random_matching_free_family(p, seed)
            assert not has_s_matching(f)
            assert f == random_matching_free_family(p, seed)


def test_random_matching_free_family_target_size():
    f = random_matching_free_family(Params(n=6, k=2, s=3), seed=1, target_size=4)
    assert len(f) == 4


def test_known_values_table():
    table = {kv.params: kv for kv in known_values()}
    assert table[Params(n=6, k=2, s=3)].value == 10
    assert table[Params(n=6, k=2, s=3)].provenance == "kleitman"
    assert table[Params(n=6, k=2, s=2)].value == 5
    assert table[Params(n=6, k=2, s=2)].provenance == "ekr"
    assert table[Params(n=4, k=2, s=3)].provenance == "below_threshold"
    assert table[Params(n=5, k=1, s=3)].value == 2
    assert table[Params(n=5, k=2, s=1)].value == 0


def test_known_value_lookup():
    assert known_value(Params(n=20, k=2, s=2)).value == 19
    assert known_value(Params(n=9, k=2, s=3)) is None


@pytest.mark.parametrize("params,expected", SMALL)
def test_known_values_agree_with_oracles(params, expected):
    p = Params(n=params[0], k=params[1], s=params[2])
    assert known_value(p).value == expected
