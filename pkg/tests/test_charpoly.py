import json
from itertools import product
from itertools import permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partitions
from vercone.charpoly import (
    CharacterPoly,
    alternant_terms,
    VirtualCharacter,
    WeightWindow,
    brute_sym_power_of_sym,
    clear_cache,
    decompose,
    graded_tensor_sym_algebra,
    mult_of,
    multiply,
    schur_char,
    schur_multiplicity,
    sym_power_of_sym,
    weyl_dimension,
)
from vercone.errors import NotACharacterError, ResourceCapExceeded, WeightError, WindowError
from vercone.weights import dominant_weights_between


def test_schur_examples():
    assert schur_char((1, 0)).terms == {(1, 0): 1, (0, 1): 1}
    assert schur_char((1, 1)).terms == {(1, 1): 1}
    assert schur_char((2, 0)).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_schur_rejects_non_dominant():
    with pytest.raises(WeightError):
        schur_char((0, 1))


def test_schur_negative_last_part_is_det_shifted():
    # S_{(1,-1)} C^2 = S_{(2,0)} tensor det^{-1}
    assert schur_char((1, -1)).terms == {(1, -1): 1, (0, 0): 1, (-1, 1): 1}


@pytest.mark.parametrize("lam", [(3, 1, 0), (2, 2, 1), (4, 0, 0, 0), (2, 1, 1, 0), (3, 3)])
def test_weyl_dimension_matches_tableau_count(lam):
    assert schur_char(lam).dimension() == weyl_dimension(lam)


def test_multiply_examples():
    v = schur_char((1, 0))
    assert decompose(multiply(v, v)).terms == {(2, 0): 1, (1, 1): 1}
    assert multiply(v, CharacterPoly.trivial(2)) == v
    assert decompose(schur_char((1, 1)) * v).terms == {(2, 1): 1}


def test_multiply_mismatched_n():
    with pytest.raises(ValueError):
        multiply(schur_char((1, 0)), schur_char((1, 0, 0)))


def test_decompose_examples():
    assert decompose(CharacterPoly(2)).terms == {}
    brute = brute_sym_power_of_sym(2, 2, 2)
    assert brute.terms == {(4, 0): 1, (3, 1): 1, (2, 2): 2, (1, 3): 1, (0, 4): 1}
    dec = decompose(brute)
    assert dec.terms == {(4, 0): 1, (2, 2): 1}
    assert mult_of((2, 2), dec) == 1
    assert mult_of((3, 1), dec) == 0


def test_decompose_errors():
    with pytest.raises(NotACharacterError):
        decompose(CharacterPoly(2, {(1, 0): 1}))
    with pytest.raises(NotACharacterError):
        decompose(CharacterPoly(2, {(2, 0): 1, (0, 2): 1}))


def test_character_poly_rejects_negative():
    with pytest.raises(NotACharacterError):
        CharacterPoly(2, {(1, 1): -1})


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_decompose_round_trip(n, data):
    shapes = data.draw(st.lists(partitions(n=n, hi=3), min_size=1, max_size=4))
    coeffs = data.draw(st.lists(st.integers(1, 3), min_size=len(shapes), max_size=len(shapes)))
    expected = {}
    terms = {}
    for lam, c in zip(shapes, coeffs):
        expected[lam] = expected.get(lam, 0) + c
        for key, mult in schur_char(lam).terms.items():
            terms[key] = terms.get(key, 0) + c * mult
    total = CharacterPoly(n, terms)
    assert decompose(total).terms == expected


@settings(max_examples=30, deadline=None)
@given(partitions(hi=3), partitions(hi=2))
def test_products_are_symmetric(a, b):
    if len(a) != len(b):
        b = (b + (0,) * len(a))[: len(a)]
    assert schur_char(a).is_symmetric()
    assert multiply(schur_char(a), schur_char(b)).is_symmetric()


def test_sym_power_small_cases():
    assert sym_power_of_sym(0, 3, 3) == CharacterPoly.trivial(3)
    assert sym_power_of_sym(1, 2, 2).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert decompose(sym_power_of_sym(2, 2, 2)).terms == {(4, 0): 1, (2, 2): 1}


@pytest.mark.parametrize("k,d,n", [(k, d, n) for k in range(4) for d in (2, 3) for n in (1, 2, 3)])
def test_sym_power_series_matches_enumeration(k, d, n):
    series = sym_power_of_sym(k, d, n)
    assert series == brute_sym_power_of_sym(k, d, n)
    assert series.dimension() == comb(comb(n - 1 + d, d) + k - 1, k)
    assert series.is_symmetric()
    assert all(sum(key) == k * d for key in series.terms)


def _horizontal_strips(lam, m):
    n = len(lam)
    out = set()
    ranges = [range(lam[i], (lam[i - 1] if i else lam[0] + m) + 1) for i in range(n)]
    for mu in product(*ranges):
        if sum(mu) - sum(lam) == m:
            out.add(mu)
    return out


@pytest.mark.parametrize("n", [2, 3])
def test_pieri(n):
    for size in range(9):
        for lam in dominant_weights_between(n, size, 0, total=size):
            for m in range(1, 5):
                got = decompose(multiply(schur_char(lam), schur_char((m,) + (0,) * (n - 1))))
                assert got.terms == {mu: 1 for mu in _horizontal_strips(lam, m)}


def test_graded_tensor_examples():
    pieces = graded_tensor_sym_algebra((2,), 1, 2)
    assert pieces[0] == CharacterPoly.trivial(1)
    assert pieces[2].terms == {(2,): 1}
    assert pieces[1].terms == {}
    dims = [graded_tensor_sym_algebra((2, 3), 1, 10)[t].dimension() for t in range(11)]
    assert dims == [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2]


def test_brute_force_cap():
    with pytest.raises(ResourceCapExceeded):
        brute_sym_power_of_sym(10, 4, 4, cap=100)


def test_series_cap(monkeypatch):
    clear_cache()
    monkeypatch.setenv("VERONESE_CACHE_CAP", "10")
    try:
        with pytest.raises(ResourceCapExceeded):
            sym_power_of_sym(6, 2, 3)
    finally:
        monkeypatch.delenv("VERONESE_CACHE_CAP")
        clear_cache()


def test_virtual_character_json_schema():
    v = VirtualCharacter(2, {(2, 0): 1, (4, 2): -3, (3, 3): 0})
    data = json.loads(v.to_json())
    assert data == {"n": 2, "entries": [{"lambda": [4, 2], "mult": -3}, {"lambda": [2, 0], "mult": 1}]}
    assert VirtualCharacter.from_dict(data) == v


def test_virtual_character_rejects_non_dominant_key():
    with pytest.raises(WeightError):
        VirtualCharacter(2, {(0, 1): 1})


def test_virtual_arithmetic():
    a = VirtualCharacter(2, {(1, 0): 2})
    b = VirtualCharacter(2, {(1, 0): 2, (0, 0): 1})
    assert (a - b).terms == {(0, 0): -1}
    assert (-a + a).terms == {}
    assert (3 * a).terms == {(1, 0): 6}


def test_window_lookup():
    window = WeightWindow(2, 4, 0)
    v = VirtualCharacter(2, {(2, 2): 1}, window)
    assert mult_of((2, 2), v) == 1
    assert mult_of((4, 0), v) == 0
    with pytest.raises(WindowError):
        mult_of((5, 0), v)
    assert mult_of((9, 9), VirtualCharacter(2)) == 0


def test_window_basics():
    w = WeightWindow(2, 2, 0, (3, 2))
    assert w.residue == (1, 2)
    assert list(w.weights()) == [(2, 1), (1, 0)]
    assert WeightWindow(2, -1, 0).is_empty
    assert list(WeightWindow(2, -1, 0).weights()) == []
    with pytest.raises(WindowError):
        WeightWindow(0, 1, 0)


@given(partitions(hi=4))
def test_pruned_alternant_matches_all_permutations(lam):
    n = len(lam)
    rho = tuple(range(n - 1, -1, -1))
    expected = {}
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        exps = tuple(lam[i] + rho[i] - rho[perm[i]] for i in range(n))
        if min(exps) >= 0:
            expected[exps] = -1 if inversions % 2 else 1
    assert {e: s for s, e in alternant_terms(lam)} == expected


@pytest.mark.parametrize("k,d,n", [(3, 2, 3), (2, 3, 3), (4, 2, 4)])
def test_schur_multiplicity_matches_decompose(k, d, n):
    char = brute_sym_power_of_sym(k, d, n)
    dec = decompose(char)
    for lam in dominant_weights_between(n, k * d, 0, total=k * d):
        assert schur_multiplicity(char, lam) == mult_of(lam, dec)
