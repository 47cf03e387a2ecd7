from __future__ import annotations

import numpy as np
import pytest

from a1stable import A1, E1, make
from a1stable.catalog import canonical_map
from a1stable.functors import free_module, regular_module, trivial_module
from a1stable.gf2 import BitMatrix
from a1stable.margolis import find_isomorphism, is_stably_free, margolis_homology, reduced_part
from a1stable.module import (GradedModule, ModuleMap, direct_sum, dual, is_module_map, restrict_to_e1,
                             suspend)


def test_algebra_dimensions():
    assert A1.poincare_series == [1, 1, 1, 2, 1, 1, 1]
    assert E1.poincare_series == [1, 1, 0, 1, 1]
    assert A1.dimension == 8 and E1.dimension == 4


def test_regular_representation_validates():
    assert regular_module(A1).validate().ok
    assert regular_module(E1).validate().ok


def test_constructed_violation_is_reported():
    one = BitMatrix.identity(1)
    m = GradedModule(A1, 0, [1, 1, 1], {"Sq1": {0: one, 1: one}})
    assert ("Sq1Sq1", 0) in m.validate().violations


def test_joker_validates():
    j = make("J")
    assert j.validate().ok
    assert (j.lo, j.dims) == (-2, [1, 1, 1, 1, 1])


def test_suspend_zero_is_identity():
    p = make("P1", hi=20)
    assert suspend(p, 0).same_as(p)


def test_suspend_shifts_series():
    m = make("M2")
    s = suspend(m, 5)
    assert s.series() == {d + 5: c for d, c in m.series().items()}


def test_suspend_p0_by_eight_is_p4():
    p4 = make("P4", lo=-2, hi=30)
    s = suspend(make("P0", lo=-2, hi=22), 8)
    assert find_isomorphism(s.truncate(7, 22), p4.truncate(7, 22), 7, 22)[0]


def test_direct_sum_with_zero():
    m = make("J")
    z = GradedModule.zero(A1, -2, 2)
    assert direct_sum(m, z).dims == m.dims


def test_direct_sum_dims_and_homology():
    a, b = make("M1"), make("P1", hi=20)
    s = direct_sum(a, b)
    assert all(s.dim(d) == a.dim(d) + b.dim(d) for d in range(-2, 20))
    for k in (0, 1):
        hs, ha, hb = (margolis_homology(x, k) for x in (s, a, b))
        for d in range(hs.trusted[0], hs.trusted[1] + 1):
            assert hs.dims.get(d, 0) == ha.dims.get(d, 0) + hb.dims.get(d, 0)


def test_dual_involution():
    m = make("M2")
    assert dual(dual(m)).same_as(m)


def test_dual_of_trivial():
    d = dual(trivial_module(A1))
    assert (d.lo, d.dims) == (0, [1])


def test_dual_of_m1_and_the_kernel_of_the_cover_of_m2():
    dm1 = dual(make("M1"))
    assert dm1.validate().ok
    assert (dm1.lo, dm1.dims) == (-4, [1, 0, 1, 1])
    # Sigma^9 D M1 is the kernel of Sigma^2 A(1) -> M2 and Sigma^8 D M1 is M3
    from a1stable.functors import minimal_cover
    ker = minimal_cover(make("M2")).kernel.trim()
    assert find_isomorphism(ker, suspend(dm1, 9), 5, 9)[0]
    assert find_isomorphism(suspend(dm1, 8), make("M3"), 4, 8)[0]


def test_identity_is_module_map():
    m = make("J")
    assert is_module_map(ModuleMap.identity(m))


def test_eta_is_module_map():
    assert is_module_map(canonical_map("eta", hi=20))


def test_constructed_non_map():
    chain = GradedModule(A1, 0, [1, 1], {"Sq1": {0: BitMatrix.identity(1)}})
    f = ModuleMap(trivial_module(A1), chain, {0: BitMatrix.identity(1)})
    assert not is_module_map(f)


def test_restricted_regular_is_e1_free_of_rank_two():
    r = restrict_to_e1(regular_module(A1))
    assert r.validate().ok
    assert is_stably_free(r)
    split = reduced_part(r)
    assert sorted(split.free_generator_degrees) == [0, 2]
    assert split.reduced.is_zero()


def test_restricted_p1_q1_homology():
    p = restrict_to_e1(make("P1", hi=30))
    h = margolis_homology(p, 1)
    assert h.support() == [2]


def test_restrict_commutes_with_suspend():
    m = make("J")
    assert restrict_to_e1(suspend(m, 3)).same_as(suspend(restrict_to_e1(m), 3))


def test_restrict_needs_a1():
    with pytest.raises(ValueError):
        restrict_to_e1(trivial_module(E1))


def test_free_module_dims():
    f = free_module(A1, [0, 3])
    assert f.dims == [1, 1, 1, 3, 2, 2, 3, 1, 1, 1]
    assert f.validate().ok


def test_truncate_marks_trust():
    p = make("P0", hi=40).truncate(-1, 20)
    assert p.hi == 20 and p.trusted[1] <= 20


def test_q_squared_is_zero():
    for key in ("P2", "M3", "J", "Fseq(5)"):
        m = make(key, hi=30)
        for k, s in ((0, 1), (1, 3)):
            for d in range(m.lo, m.hi - 2 * s + 1):
                assert (m.q_matrix(k, d + s) @ m.q_matrix(k, d)).is_zero()


def test_sq1_on_p0():
    p0 = make("P0", hi=10)
    # x^-1 -> x^0 and Sq2 x^-1 = x^1
    assert p0.action("Sq1", -1).to_dense().tolist() == [[1]]
    assert p0.action("Sq2", -1).to_dense().tolist() == [[1]]
    assert np.array_equal(p0.dims[1:10], [1] * 9)
