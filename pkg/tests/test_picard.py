from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from a1stable import A1, make
from a1stable.functors import ext_dim, free_module, localize, regular_module, tensor, trivial_module
from a1stable.margolis import induces_stable_iso, reduced
from a1stable.module import direct_sum, is_module_map
from a1stable.picard import (InvariantError, classify_local, cokernel_invariants, collapse_killed,
                             d_invariant, describe_group, epsilon_tensor_maps, explicit_idempotence_witnesses,
                             is_idempotent, p0_collapse, pic_localization_matrix, sigma_r_diagonal,
                             smith_normal_form, t1_invariant)


def _oracle_diag(a):
    d = sympy_snf(Matrix(a), domain=ZZ)
    return [abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0]


def test_d1_of_suspended_p1():
    for i in (-3, 0, 2, 5):
        assert d_invariant(make("P1", lo=-10, hi=30, suspension=i), 1) == i + 2


def test_d0_of_suspended_r():
    for i in (-2, 0, 1, 4):
        assert d_invariant(make("R", lo=-10, hi=30, suspension=i), 0) == i - 1


def test_d_ignores_free_summands():
    assert d_invariant(direct_sum(make("P0", hi=30), regular_module(A1)), 1) == 0


def test_d_needs_one_dimensional_homology():
    with pytest.raises(InvariantError):
        d_invariant(direct_sum(make("P0", hi=30), make("P0", hi=30, suspension=2)), 1)


def test_t1_table():
    for n in range(4):
        for i in (-4, -1, 0, 3):
            assert t1_invariant(make(f"P{n}", lo=-12, hi=36, suspension=i)) == n


def test_t1_of_products():
    p1 = make("P1", hi=40)
    assert t1_invariant(reduced(tensor(p1, p1))) == 2
    assert t1_invariant(localize(make("J"), 1, hi=24)) == 2


def test_d_and_t1_are_additive():
    cases = [(make("P1", hi=40), make("P1", hi=40)), (make("P1", hi=40), make("P2", hi=40)),
             (make("P1", hi=40, suspension=1), make("J"))]
    for m, n in cases:
        t = reduced(tensor(m, n))
        assert d_invariant(t, 1) == d_invariant(m, 1) + d_invariant(n, 1)
    for m, n in cases[:2]:
        t = reduced(tensor(m, n))
        assert t1_invariant(t) == (t1_invariant(m) + t1_invariant(n)) % 4


def test_classify_units():
    assert classify_local(make("P0", hi=30), 1).key() == ("A1", 1, 0, 0)
    assert classify_local(make("R", hi=30, suspension=1), 0).key() == ("A1", 0, 1, None)


def test_classify_triple_product():
    p1 = make("P1", hi=36)
    pp = reduced(tensor(p1, p1))
    assert classify_local(reduced(tensor(pp, p1)), 1).key() == ("A1", 1, 0, 3)


def test_classify_l0_of_joker():
    sj = tensor(make("R", hi=30, suspension=1), make("J"))
    assert classify_local(sj, 0).shift == 1


def test_classify_round_trip_sample():
    rng = np.random.default_rng(3)
    for n in range(4):
        for i in (-6, -1, 0, 4, 6):
            free = free_module(A1, sorted(int(x) for x in rng.integers(-4, 12, 2)))
            m = direct_sum(make(f"P{n}", lo=-12, hi=30, suspension=i), free)
            assert classify_local(m, 1).key() == ("A1", 1, i, n)


def test_classify_rejects_mixed():
    both = direct_sum(make("P0", hi=30), make("R", hi=30, suspension=1))
    for k in (0, 1):
        with pytest.raises(InvariantError):
            classify_local(both, k)


def test_pic_matrices():
    e1, cok_e = pic_localization_matrix("E1")
    assert e1.entries == [[1, 1], [1, 3]]
    assert describe_group(cok_e) == "Z/2"
    a1, cok_a = pic_localization_matrix("A1")
    assert [[x % t if t else x for x in row] for row, t in zip(a1.entries, a1.torsion)] == \
        [[1, 1, 0], [1, 3, 0], [0, 1, 2]]
    assert describe_group(cok_a) == "Z/4"


def test_snf_small():
    assert smith_normal_form([[1, 1], [1, 3]]) == [1, 2]
    assert smith_normal_form([[1, 1, 0, 0], [1, 3, 0, 0], [0, 3, 2, 4]]) == _oracle_diag(
        [[1, 1, 0, 0], [1, 3, 0, 0], [0, 3, 2, 4]])


def test_cokernel_with_free_part():
    inv = cokernel_invariants([[2, 0], [0, 0], [0, 0]], 3)
    assert inv["free_rank"] == 2 and inv["torsion"] == [2]


small_ints = st.integers(-9, 9)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_matches_sympy(r, c, data):
    a = [[data.draw(small_ints) for _ in range(c)] for _ in range(r)]
    assert smith_normal_form(a) == _oracle_diag(a)


def test_idempotents():
    from a1stable.picard import _witness_module
    for name in ("0", "F2", "P0", "SR", "P0+SR"):
        assert is_idempotent(_witness_module(name, A1, -2, 30)) == (True, name)
    assert is_idempotent(make("P1", hi=30))[0] is False
    assert is_idempotent(make("J"))[0] is False
    assert is_idempotent(trivial_module(A1, 1))[0] is False


def test_diagonal_witness():
    i_map = sigma_r_diagonal(24)
    assert is_module_map(i_map)
    assert induces_stable_iso(i_map)
    left, right = epsilon_tensor_maps(i_map)
    assert np.array_equal(left, right) and left.all()


def test_collapse_witness():
    c = p0_collapse(24)
    assert is_module_map(c)
    assert induces_stable_iso(c)
    assert collapse_killed(-1, -1) and collapse_killed(3, 1)
    assert not collapse_killed(-1, 0) and not collapse_killed(1, -1)


def test_explicit_witnesses_pair():
    i_map, c = explicit_idempotence_witnesses(20)
    assert i_map.name == "i" and c.name == "collapse"


def test_f2_triangle():
    f2 = trivial_module(A1)
    l0, l1 = localize(f2, 0, hi=30), localize(f2, 1, hi=30)
    assert classify_local(l0, 0).shift == 1
    assert classify_local(l1, 1).key() == ("A1", 1, 0, 0)
    assert ext_dim(l1, l0, 1, 0) == 1
