from __future__ import annotations

import numpy as np
from hypothesis import given, settings, strategies as st

from a1stable import A1, E1, make
from a1stable.functors import (augmentation_ideal, ext_dim, free_module, inverse_loops, localize, loops,
                               minimal_cover, minimal_resolution, regular_module, tensor, trivial_module)
from a1stable.hilbert import series_of
from a1stable.margolis import dims_equal, find_isomorphism, reduced, stable_class_equal
from a1stable.module import suspend
from a1stable.verify import kunneth_defects, random_module


def _dims(m, lo, hi):
    return [m.dim(d) for d in range(lo, hi + 1)]


def test_tensor_unit():
    m = make("M2")
    t = tensor(trivial_module(A1), m)
    assert t.validate().ok
    assert find_isomorphism(t, m, m.lo, m.hi)[0]


def test_tensor_series_is_product():
    a, b = make("J"), make("P1", hi=30)
    t = tensor(a, b)
    top = t.trusted[1]
    assert (series_of(a) * series_of(b, top)).agrees(series_of(t), -2, top)


def test_tensor_validates_and_cartan():
    t = tensor(make("P1", hi=24), make("P0", hi=24))
    assert t.validate().ok


def test_pp_reduced_is_p2():
    red = reduced(tensor(make("P1", hi=36), make("P1", hi=36)))
    assert dims_equal(red, make("P2", hi=36), -2, 28)


def test_loops_of_free_is_stably_zero():
    assert reduced(loops(free_module(A1, [0, 3]))).is_zero()


def test_loops_r_is_sigma_r():
    lr = loops(make("R", hi=36))
    assert _dims(lr, -2, 24) == _dims(make("R", hi=36, suspension=1), -2, 24)


def test_fourth_loops_of_p0():
    m = make("P0", hi=60)
    for _ in range(4):
        m = loops(m)
    assert dims_equal(reduced(m), make("P0", hi=60, suspension=12), -2, 30)


def test_inverse_loops_undoes_loops():
    m = make("P2", hi=36)
    back = reduced(inverse_loops(loops(m)))
    assert dims_equal(back, reduced(m), -2, back.trusted[1])
    j = make("J")
    jj = reduced(inverse_loops(loops(j)))
    assert find_isomorphism(jj.trim(), j, -2, 2)[0]


def test_inverse_loops_of_f2_over_e1():
    assert inverse_loops(trivial_module(E1)).bottom == -4


def test_inverse_loops_of_sigma_p1():
    ip = reduced(inverse_loops(make("P1", hi=36, suspension=1)))
    assert dims_equal(ip, make("P0", hi=36), -2, ip.trusted[1])


def test_cover_of_regular():
    c = minimal_cover(regular_module(A1))
    assert c.generator_degrees == [0] and c.kernel.is_zero()


def test_cover_of_f2_is_augmentation_ideal():
    k = minimal_cover(trivial_module(A1)).kernel.trim()
    assert (k.lo, k.dims) == (1, [1, 1, 2, 1, 1, 1])
    assert find_isomorphism(k, augmentation_ideal(A1).trim(), 1, 6)[0]


def test_cover_of_p1():
    gens_p1 = minimal_cover(make("P1", hi=30)).generator_degrees
    gens_r = minimal_cover(make("R", hi=26)).generator_degrees
    assert gens_p1 == [1] + [g + 4 for g in gens_r]


def test_resolution_of_free_stops():
    assert minimal_resolution(free_module(A1, [0, 2]), 3).s_max == 0


def test_e1_resolution_counts():
    r = minimal_resolution(trivial_module(E1), 5)
    assert [len(r.generator_degrees(s)) for s in range(6)] == [1, 2, 3, 4, 5, 6]


def test_resolution_of_p0_is_periodic():
    r = minimal_resolution(make("P0", hi=60), 3)
    k = reduced(r.covers[3].kernel)
    assert dims_equal(k, make("P0", hi=60, suspension=12), -2, 36)


def test_ext_from_free_vanishes():
    f = free_module(A1, [0])
    for t in range(-2, 4):
        assert ext_dim(f, make("J"), 1, t) == 0
        assert ext_dim(f, make("P1", hi=20), 2, t) == 0


def test_ext_p0_sigma_r():
    assert ext_dim(make("P0", hi=30), make("R", hi=30, suspension=1), 1, 0) == 1


def test_ext_f2_f2():
    f2 = trivial_module(A1)
    assert [ext_dim(f2, f2, 1, t) for t in (1, 2, 3)] == [1, 1, 0]


def test_localizations_of_f2():
    f2 = trivial_module(A1)
    assert _dims(localize(f2, 0, hi=24), -2, 24) == _dims(make("R", suspension=1), -2, 24)
    assert _dims(localize(f2, 1, hi=24), -2, 24) == _dims(make("P0"), -2, 24)


def test_l0_l1_vanishes():
    m = localize(localize(make("J"), 1, hi=30), 0)
    assert m.is_zero(m.lo, m.trusted[1])


def test_l1_joker():
    lj = localize(make("J"), 1, hi=24)
    target = make("P2", lo=-8, hi=40, suspension=-4)
    assert dims_equal(lj, target, -8, 24)
    assert stable_class_equal(lj, target)


def test_kunneth_fixed_pair():
    assert kunneth_defects(make("J"), make("P1", hi=30)) == []
    assert kunneth_defects(make("M1"), make("R", hi=30)) == []


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_kunneth_random_pairs(seed):
    rng = np.random.default_rng(seed)
    m, n = random_module(rng), random_module(rng)
    assert m.validate().ok and n.validate().ok
    assert kunneth_defects(m, n) == []


def test_suspension_commutes_with_tensor():
    a, b = make("J"), make("M1")
    assert tensor(suspend(a, 2), b).same_as(suspend(tensor(a, b), 2)) or \
        find_isomorphism(tensor(suspend(a, 2), b), suspend(tensor(a, b), 2), 0, 9)[0]
