import pytest
from hypothesis import given, strategies as st

from mapenum import (
    GenusPolynomial,
    TableTooSmallError,
    build_edge_table,
    closed_form_value,
    compute_pg,
    fixed_genus_next,
    fixed_genus_sequence,
    render_rational,
)
from mapenum.series import binom, format_polynomial
from oracles import expand_rational


@pytest.fixture(scope="module")
def polys(edge_table_30):
    return {g: compute_pg(g, build_edge_table(g, 6 * g - 4)) for g in range(1, 7)}


def test_genus_one_polynomial(polys):
    assert polys[1].coeffs == (1,)
    assert polys[1].degree_bound == 0


def test_genus_two_polynomial(polys):
    assert polys[2].coeffs == (21, -210, 885, -1908, 1764)


def test_coefficient_count(polys):
    for g, p in polys.items():
        assert len(p.coeffs) == 4 * g - 3


def test_polynomial_length_validated():
    with pytest.raises(ValueError):
        GenusPolynomial(2, (1, 2))


def test_fixed_genus_hand_values():
    assert fixed_genus_next(1, [1], 3) == 20
    assert fixed_genus_next(1, [1, 20], 4) == 307


def test_fixed_genus_rejects_small_n():
    with pytest.raises(ValueError):
        fixed_genus_next(2, [21, 0, 0, 0], 8)  # 8 < 6g - 3 = 9
    with pytest.raises(ValueError):
        fixed_genus_next(1, [1, 20, 307], 3)


def test_fixed_genus_regenerates_table(edge_table_30):
    for g in range(1, 6):
        seed = edge_table_30.rows[g][2 * g:6 * g - 3]
        assert fixed_genus_sequence(g, seed, 30) == list(edge_table_30.rows[g])


def test_closed_form_hand_values(polys):
    assert closed_form_value(polys[1], 2) == 1
    assert closed_form_value(polys[1], 3) == 20
    assert closed_form_value(polys[1], 1) == 0


def test_closed_form_vanishes_below_support(polys):
    for g, p in polys.items():
        assert all(closed_form_value(p, n) == 0 for n in range(2 * g))


def test_closed_form_matches_table(polys, edge_table_30):
    for g, p in polys.items():
        for n in range(31):
            assert closed_form_value(p, n) == edge_table_30[g, n]


def test_pg_table_too_small():
    with pytest.raises(TableTooSmallError, match="n=8"):
        compute_pg(2, build_edge_table(2, 7))
    with pytest.raises(TableTooSmallError):
        compute_pg(3, build_edge_table(2, 20))


def test_render_genus_one(polys):
    form = render_rational(polys[1])
    assert form.text == "z^2 * (1) / ((1-2m)^1 (1-3m)^2 (1-6m)^2)"
    assert form.substitution == "m = (1 - sqrt(1 - 12z))/6"


def test_render_exponents(polys):
    for g, p in polys.items():
        assert render_rational(p).exponents == (3 * g - 2, 2, 5 * g - 3)
        assert render_rational(p).z_power == 2 * g


def test_render_is_stable(polys):
    assert render_rational(polys[3]).text == render_rational(polys[3]).text


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_rational_form_expands_to_counts(g, polys, edge_table_30):
    order = 6 * g + 6
    table = edge_table_30 if order <= 30 else build_edge_table(g, order)
    assert expand_rational(g, polys[g].coeffs, order) == [table[g, n] for n in range(order + 1)]


def test_dense_formatting():
    assert format_polynomial([1]) == "1"
    assert format_polynomial([21, -210, 0]) == "21 - 210*m + 0*m^2"


@given(st.integers(-3, 12), st.integers(-3, 12))
def test_binomial_convention(a, b):
    from math import comb

    expected = comb(a, b) if 0 <= b <= a else 0
    assert binom(a, b) == expected


def test_invalid_genus():
    with pytest.raises(ValueError):
        fixed_genus_next(0, [], 0)
