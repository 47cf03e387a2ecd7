from __future__ import annotations

from hypothesis import given, settings, strategies as st

from a1stable import A1, make
from a1stable.catalog import poly_tensor
from a1stable.functors import regular_module, tensor, trivial_module
from a1stable.hilbert import (ONE_MINUS_T, TruncatedSeries, expand_rational, free_generator_series,
                              free_part_series, p_p0_generator_counts, p_series, p_series_q_form,
                              poly_tensor_series, pp_generator_counts, series_of)
from a1stable.margolis import reduced_part


def test_series_of_f2():
    s = series_of(trivial_module(A1))
    assert (s.lo, s.coefficients) == (0, (1,))


def test_series_of_a1():
    assert series_of(regular_module(A1)).coefficients == (1, 1, 1, 2, 1, 1, 1)


def test_series_of_tensor_is_product():
    a, b = make("M2"), make("J")
    assert series_of(tensor(a, b)).agrees(series_of(a).restrict(-2, 10) * series_of(b).restrict(-2, 10), 0, 8)


def test_geometric_series():
    s = expand_rational({0: 1}, ONE_MINUS_T, 0, 10)
    assert s.coefficients == (1,) * 11


def test_p2_and_p3_closed_forms():
    p2 = expand_rational({2: 1}, ONE_MINUS_T, 2, 30) + TruncatedSeries.from_dict({3: 1, 5: 1, 6: 1}, 2, 30)
    p3 = expand_rational({3: 1}, ONE_MINUS_T, 3, 30) + TruncatedSeries.from_dict({6: 1, 7: 1}, 3, 30)
    assert p2.agrees(series_of(make("P2"), 30), 2, 30)
    assert p3.agrees(series_of(make("P3"), 30), 3, 30)


def test_closed_forms_agree_with_catalog():
    for n in range(8):
        s = series_of(make(f"P{n}"), 40)
        assert p_series(n, 40).agrees(s, -2, 40)
        assert p_series_q_form(n, 40).agrees(s, -2, 40)


def test_eightfold_shift():
    for i in range(4):
        for k in (1, 2):
            assert p_series(4 * k + i, 44).agrees(p_series(i, 44).shift(8 * k), -2, 44)


def test_free_part_of_p_is_zero():
    assert all(c == 0 for c in free_part_series(1, 30).coefficients)
    diff = poly_tensor_series(1, 30) - p_series(1, 30)
    assert all(c == 0 for c in diff.restrict(1, 30).coefficients)


def test_pp_free_part_matches_split():
    split = reduced_part(poly_tensor(2, 30))
    gens = TruncatedSeries.from_dict(split.generator_counts(), 2, 24)
    free = gens * series_of(regular_module(A1)).restrict(0, 24)
    assert free_part_series(2, 24).agrees(free, 2, 24)


def test_pp_generator_counts():
    counts = pp_generator_counts(12)
    assert counts == {4: 2, 6: 1, 8: 3, 10: 2, 12: 4}
    g = free_generator_series(2, 32)
    assert {d: g[d] for d in range(2, 33) if g[d]} == pp_generator_counts(32)


def test_p_p0_generator_counts():
    split = reduced_part(tensor(make("P1", hi=30), make("P0", hi=30)))
    counts = {d: c for d, c in split.generator_counts().items() if d <= 20}
    assert counts == p_p0_generator_counts(20)


def test_poly_tensor_series_matches_ambient():
    for n in (1, 2, 3):
        assert poly_tensor_series(n, 16).agrees(series_of(poly_tensor(n, 16), 16), n, 16)


def test_as_dict():
    d = p_series(2, 6).as_dict()
    assert d == {"lo": 2, "cutoff": 6, "coefficients": [1, 2, 1, 2, 2]}


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6), st.lists(st.integers(-3, 3), min_size=1, max_size=6))
def test_series_arithmetic(a, b):
    x, y = TruncatedSeries(0, tuple(a)), TruncatedSeries(1, tuple(b))
    assert ((x + y) - y).agrees(x, 0, min(x.cutoff, y.cutoff))
    prod = x * y
    assert prod.lo == 1
    assert prod[1] == a[0] * b[0]
