import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dominant_weights, partitions
from vercone.charpoly import WeightWindow, brute_sym_power_of_sym, decompose, mult_of
from vercone.errors import WindowError
from vercone.veronese import (
    MultiplicityTable,
    a_lambda_j,
    a_pleth,
    check_ordering,
    d0_spectral,
    d2_table_predicate,
    det_sym_weight,
    dj_character,
    e_character,
    e_lambda,
    ext_closed_form,
    ext_via_bott,
    filtration_check,
    hook_string_orderability,
    m_character,
    m_lambda,
    module_character,
    nu_at_level,
    nu_stable,
    p_mult,
    primitive_sum_check,
    s_mult,
)
from vercone.weights import dominant_weights_between, is_hook, u_d


# -- s, a, p ----------------------------------------------------------------

@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_s_on_rows(k, d, n):
    assert s_mult((k * d,) + (0,) * (n - 1), d) == 1


def test_s_examples():
    assert s_mult((3, 1), 2) == 0
    assert s_mult((2, 2), 2) == 1
    assert s_mult((3, 0), 2) == 0
    assert s_mult((2, -1), 2) == 0


@pytest.mark.parametrize("k,d,n", [(2, 2, 3), (3, 2, 3), (2, 3, 3), (4, 2, 2), (3, 3, 2)])
def test_s_matches_enumeration(k, d, n):
    dec = decompose(brute_sym_power_of_sym(k, d, n))
    for lam in dominant_weights_between(n, k * d, 0, total=k * d):
        assert s_mult(lam, d) == mult_of(lam, dec)


def test_a_and_p_examples():
    assert a_pleth((2, 2), 2) == 0
    assert a_pleth((4, 0), 2) == 1
    assert a_pleth((4, 2), 2) == 1
    for k in (1, 2, 3):
        assert p_mult((2 * k, 0), 2) == 0
        assert p_mult((3 * k, 0, 0), 3) == 0
    assert p_mult((2, 2), 2) == 1
    assert p_mult((0, 0, 0), 3) == 1


@settings(max_examples=60, deadline=None)
@given(partitions(hi=6), st.integers(2, 3))
def test_p_nonnegative(lam, d):
    assert p_mult(lam, d) >= 0
    assert p_mult(lam, d) == s_mult(lam, d) - a_pleth(lam, d)


# -- nu ---------------------------------------------------------------------

def test_nu_examples():
    assert nu_stable((4, 2), 2) == 1
    assert nu_stable((3, 2), 2) == 0
    assert nu_stable((5,), 3) == 1
    assert nu_stable((6,), 3) == 2
    assert nu_stable((), 3) == 1
    assert nu_stable((0, 0), 4) == 1
    assert nu_stable((2, -1), 2) == 0


@settings(max_examples=60, deadline=None)
@given(partitions(hi=8))
def test_nu_d2_is_all_parts_even(mu):
    assert nu_stable(mu, 2) == int(all(p % 2 == 0 for p in mu))


def test_nu_at_level_examples():
    assert nu_at_level((2,), 2, 2, 2) == 1
    assert nu_at_level((2,), 1, 2, 2) == 0
    for k in range(5):
        assert nu_at_level((0, 0), k, 3, 3) == 1


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (3, 3)])
def test_nu_at_level_nondecreasing(n, d):
    for mu in dominant_weights_between(n - 1, 5, 0):
        seq = [nu_at_level(mu, k, d, n) for k in range(sum(mu) + 3)]
        assert seq == sorted(seq)
        assert seq[-1] == nu_stable(mu, d)


# -- m, e, a^j --------------------------------------------------------------

def test_m_examples():
    assert m_lambda((4, 2), 2) == 1
    assert m_lambda((3, 3), 2) == -1


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (4, 3)])
def test_m_witness(n, d):
    u = u_d(n, d)
    for last in range(u - 1, u - 8, -1):
        lam = (u + 1,) + (u - 1,) * (n - 2) + (last,)
        assert m_lambda(lam, d) == 1


def test_e_examples():
    assert e_lambda((3, 3), 2) == 1
    assert e_lambda((4, 3), 2) == 0
    assert e_lambda((5, 3), 2) == 1
    for n, d in [(2, 2), (3, 3), (4, 2)]:
        assert e_lambda(det_sym_weight(n, d), d) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_e_d2_closed_form(n):
    for lam in dominant_weights_between(n, n + 7, 0):
        expected = int(all(p >= n + 1 and (p - n) % 2 == 1 for p in lam))
        assert e_lambda(lam, 2) == expected


def test_a_j_examples():
    assert a_lambda_j((3, 3), 0, 2) == 0
    assert a_lambda_j((4, 2), 0, 2) == 1
    assert a_lambda_j((4, 1), 1, 2) == 1
    assert a_lambda_j((4, 1), 0, 2) == 0
    with pytest.raises(ValueError):
        a_lambda_j((4, 1), 2, 2)


@settings(max_examples=80, deadline=None)
@given(dominant_weights(lo=-4, hi=8), st.integers(2, 3))
def test_a_j_support_and_sign(lam, d):
    for j in range(d):
        value = a_lambda_j(lam, j, d)
        assert value >= 0
        if sum(lam) % d != j:
            assert value == 0


# -- characters -------------------------------------------------------------

def test_d0_and_d1_slices():
    window = WeightWindow(2, 4, 0)
    d0 = dj_character(0, 2, window)
    assert d0.terms == {(4, 4): 1, (4, 2): 1, (4, 0): 1, (2, 2): 1, (2, 0): 1}
    d1 = dj_character(1, 2, window)
    assert d1.terms == {(4, 1): 1, (2, 1): 1}
    with pytest.raises(WindowError):
        mult_of((4, 3), d0)


def test_empty_window():
    empty = WeightWindow(3, -1, 0)
    for j in range(3):
        assert dj_character(j, 3, empty).terms == {}
    assert d0_spectral(3, 3, empty).terms == {}


def test_e_character_slice():
    assert e_character(2, WeightWindow(2, 5, 0)).terms == {(5, 5): 1, (5, 3): 1, (3, 3): 1}


@pytest.mark.parametrize("n,d,l1,ln", [(2, 2, 8, -4), (3, 2, 7, -2), (2, 3, 10, -3), (3, 3, 9, 0)])
def test_sum_of_dj_identity(n, d, l1, ln):
    window = WeightWindow(n, l1, ln)
    total = dj_character(0, d, window)
    for j in range(1, d):
        total = total + dj_character(j, d, window)
    sign = (-1) ** n
    expected = sign * e_character(d, window) + m_character(d, window)
    assert total.terms == expected.terms


def test_threads_do_not_change_results():
    window = WeightWindow(3, 8, -2)
    assert dj_character(0, 2, window, workers=4) == dj_character(0, 2, window)


def test_d2_predicate_examples():
    assert d2_table_predicate((4, 2)) == "D0"
    assert d2_table_predicate((4, 1)) == "D1"
    assert d2_table_predicate((3, 3, 2)) == "D0"
    assert d2_table_predicate((3, 3, 3)) == "D1"
    assert d2_table_predicate((4, 3)) is None
    assert d2_table_predicate((2, 2, 2)) is None


def test_multiplicity_table_export():
    window = WeightWindow(2, 4, 0)
    table = MultiplicityTable.from_character("a_j", 2, dj_character(1, 2, window), 1)
    data = json.loads(table.to_json())
    assert data["kind"] == "a_j" and data["j"] == 1 and data["d"] == 2
    assert data["window"]["residue"] == {"j": 1, "d": 2}
    assert data["entries"] == [{"lambda": [4, 1], "mult": 1}, {"lambda": [2, 1], "mult": 1}]
    assert table.to_csv() == "lambda_1,lambda_2,mult\n4,1,1\n2,1,1\n"
    with pytest.raises(ValueError):
        MultiplicityTable("bogus", 2, 2, window)


# -- Ext --------------------------------------------------------------------

def test_ext_closed_form_examples():
    assert ext_closed_form((2, 2), (4, 2), 0, 2) == 1
    assert ext_closed_form((2, 2), (5, 5), 1, 2) == 0
    with pytest.raises(ValueError):
        ext_closed_form((2, 1), (4, 2), 0, 2)
    with pytest.raises(ValueError):
        ext_closed_form((2, 2), (4, 2), 2, 2)


def test_ext_via_bott_example():
    table = ext_via_bott((2, 2), 2, WeightWindow(2, 5, -8))
    assert table.codim == 1
    assert table.degree(0) == {(4, b): 1 for b in range(4, -9, -2)}
    assert table.degree(1) == {}


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_det_weight_needs_a_hook(n, d):
    det = det_sym_weight(n, d)
    window = WeightWindow(n, det[0], det[0])
    for size in range(0, 4 * d + 1, d):
        for mu in dominant_weights_between(n, size, 0, total=size):
            hit = any(ext_closed_form(mu, det, j, d) for j in range(n))
            assert hit == any(ext_via_bott(mu, d, window).mult(j, det) for j in range(n))
            if hit:
                assert is_hook(mu) and size > 0
    for k in range(1, 4):
        row = (k * d,) + (0,) * (n - 1)
        assert any(ext_closed_form(row, det, j, d) for j in range(n))


def test_ext_of_free_module():
    n, d = 2, 2
    table = ext_via_bott((0, 0), d, WeightWindow(n, 6, -6))
    for (index, lam) in table.entries:
        assert index - table.codim in range(n)
        assert ext_closed_form((0, 0), lam, index - table.codim, d) == 1


# -- spectral route and primitives ------------------------------------------

@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3)])
def test_d0_spectral(n, d):
    window = WeightWindow(n, 7, -3)
    assert d0_spectral(d, n, window) == dj_character(0, d, window)


def test_d0_cancellation_weight():
    window = WeightWindow(2, 3, 3)
    assert mult_of((3, 3), d0_spectral(2, 2, window)) == 0


@pytest.mark.parametrize("d", [2, 3])
def test_primitive_sum(d):
    for tail in dominant_weights_between(2, 4, 0):
        res = primitive_sum_check(tail, d)
        assert res.ok, res


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_ordering_exists(n, d):
    seq, problem = hook_string_orderability(n, d, 4)
    assert problem is None
    assert seq
    assert check_ordering(seq) is None


def test_check_ordering_detects_violations():
    assert check_ordering([(2, 2), (4, 0)])[0] == "g decreases"
    assert check_ordering([(4, 2), (2, 2)])[0] == "containment"


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_filtration(n, d):
    assert filtration_check(n, d, 9) is None


def test_module_character():
    assert module_character((2, 1), 3, 2).terms == {(2, 1): 1, (5, 1): 1, (8, 1): 1}
