"""
Testes do número de emparelhamento, dos certificados e da reconstrução via deslocamento.
"""
import random

import pytest

from emc_lab.exceptions import InputError, ParameterError
from emc_lab.models.emparelhamento import MatchingCertificate
from emc_lab.models.familia import Params, SetFamily
from emc_lab.services.bits import elements_of, k_subsets, mask_from_elements
from emc_lab.services.emparelhamentos import (
    find_matching,
    has_s_matching,
    matching_number,
    max_matching,
    naive_matching_number,
    pullback_matching,
    s_matching_certificate,
)
from emc_lab.services.familias import make_f_star, make_g_star
from tests.helpers import familia


def certificado(f, sets):
    return MatchingCertificate.for_family(f, [mask_from_elements(m) for m in sets])


def como_elementos(cert):
    return sorted(elements_of(m) for m in cert.sets)


def test_matching_number_examples():
    assert matching_number(familia(6, 2, 3, [[1, 2], [3, 4], [5, 6]])) == 3
    assert matching_number(make_f_star(Params(n=6, k=2, s=3))) == 2
    assert matching_number(familia(6, 2, 3)) == 0


def test_max_matching_examples():
    assert max_matching(familia(4, 2, 2, [[1, 2], [3, 4]])).size == 2
    assert max_matching(familia(4, 2, 2, [[1, 2], [1, 3], [1, 4]])).size == 1

    g = make_g_star(Params(n=6, k=2, s=3))
    cert = max_matching(g)
    assert cert.size == 2
    union = 0
    for member in cert.sets:
        assert member in g
        assert not member & union
        union |= member
    assert max(elements_of(union)) <= 5


def test_has_s_matching():
    for n, k, s in [(6, 2, 3), (7, 2, 2), (9, 3, 3)]:
        assert not has_s_matching(make_f_star(Params(n=n, k=k, s=s)))
    assert has_s_matching(familia(6, 2, 3, [[1, 2], [3, 4], [5, 6]]))
    assert has_s_matching(familia(3, 2, 1, [[1, 2]]))
    assert not has_s_matching(familia(3, 2, 1))


def test_s_matching_certificate():
    cert = s_matching_certificate(familia(6, 2, 3, [[1, 2], [3, 4], [5, 6], [1, 3]]))
    assert como_elementos(cert) == [[1, 2], [3, 4], [5, 6]]
    assert s_matching_certificate(make_f_star(Params(n=6, k=2, s=3))) is None


def test_find_matching():
    masks = [mask_from_elements(m) for m in [[1, 2], [2, 3], [3, 4]]]
    assert sorted(find_matching(masks, 2, 2)) == sorted(
        [mask_from_elements([1, 2]), mask_from_elements([3, 4])]
    )
    assert find_matching(masks, 2, 3) is None
    assert find_matching(masks, 2, 0) == []


def test_certificate_rejects_non_members_and_overlaps():
    f = familia(4, 2, 2, [[1, 2], [1, 3], [3, 4]])
    with pytest.raises(InputError):
        certificado(f, [[1, 2], [2, 4]])
    with pytest.raises(InputError):
        certificado(f, [[1, 2], [1, 3]])


def test_naive_oracle_agrees_with_exact_search():
    for seed in range(80):
        rng = random.Random(seed)
        n, k = rng.randint(2, 9), rng.randint(1, 3)
        pool = list(k_subsets(n, k))
        f = SetFamily(
            params=Params(n=n, k=k, s=2),
            sets=tuple(rng.sample(pool, rng.randint(0, min(len(pool), 15)))),
        )
        assert naive_matching_number(f) == matching_number(f)
        assert max_matching(f).size == matching_number(f)
        assert matching_number(f) <= n // k


def test_naive_oracle_is_gated():
    big = SetFamily(params=Params(n=8, k=2, s=2), sets=tuple(list(k_subsets(8, 2))[:21]))
    with pytest.raises(ParameterError):
        naive_matching_number(big)


def test_pullback_single_altered_member():
    f = familia(5, 2, 2, [[2, 3], [4, 5]])
    m_prime = MatchingCertificate(sets=(mask_from_elements([1, 3]), mask_from_elements([4, 5])))
    result = pullback_matching(f, 1, 2, m_prime)
    assert como_elementos(result) == [[2, 3], [4, 5]]


def test_pullback_replaces_colliding_member():
    f = familia(4, 2, 2, [[2, 3], [2, 4], [1, 4]])
    m_prime = MatchingCertificate(sets=(mask_from_elements([1, 3]), mask_from_elements([2, 4])))
    result = pullback_matching(f, 1, 2, m_prime)
    assert como_elementos(result) == [[1, 4], [2, 3]]


def test_pullback_unshifted_matching_is_returned():
    f = familia(5, 2, 2, [[2, 3], [4, 5]])
    m_prime = MatchingCertificate(sets=(mask_from_elements([4, 5]),))
    assert como_elementos(pullback_matching(f, 1, 2, m_prime)) == [[4, 5]]


def test_pullback_rejects_matching_outside_shifted_family():
    f = familia(5, 2, 2, [[2, 3], [4, 5]])
    m_prime = MatchingCertificate(sets=(mask_from_elements([2, 3]),))
    with pytest.raises(InputError):
        pullback_matching(f, 1, 2, m_prime)


def test_pullback_rejects_equal_indices():
    f = familia(5, 2, 2, [[2, 3]])
    with pytest.raises(ParameterError):
        pullback_matching(f, 2, 2, MatchingCertificate())
