from __future__ import annotations

import pytest

from a1stable import A1, make, ses_main
from a1stable.catalog import canonical_map, laurent_window
from a1stable.functors import free_module, regular_module, tensor, tensor_map, trivial_module
from a1stable.margolis import (RefusalError, UnclassifiableError, induces_stable_iso, is_stably_free,
                               margolis_homology, q_operator, reduced, reduced_part, stable_class_equal)
from a1stable.module import ModuleMap, direct_sum, is_module_map, suspend
from a1stable.hilbert import pp_generator_counts


def test_q_operator_on_f2_is_zero():
    for k in (0, 1):
        assert q_operator(trivial_module(A1), k).is_zero()


def test_q1_on_p1():
    p1 = make("P1", hi=20)
    # Q1 x = x^4
    assert p1.q_matrix(1, 1).to_dense().tolist() == [[1]]
    assert p1.q_matrix(1, 2).to_dense().tolist() == [[0]]


def test_q_squares_vanish_on_catalog():
    for key in ("P3", "R", "M2", "Fseq(-3)"):
        m = make(key, hi=30)
        for k in (0, 1):
            q = q_operator(m, k)
            assert (q @ q).is_zero()


def test_homology_of_p1():
    assert margolis_homology(make("P1", hi=30), 1).support() == [2]
    assert margolis_homology(make("P1", hi=30), 0).support() == []


def test_homology_of_suspended_r():
    for i in (-3, 0, 1, 5):
        h = margolis_homology(make("R", lo=-10, hi=30, suspension=i), 0)
        assert h.support() == [i - 1]
        assert margolis_homology(make("R", lo=-10, hi=30, suspension=i), 1).support() == []


def test_regular_representation_has_no_homology():
    for k in (0, 1):
        assert margolis_homology(regular_module(A1), k).support() == []


def test_local_catalog_modules():
    assert margolis_homology(make("R"), 1).total() == 0
    for n in range(4):
        assert margolis_homology(make(f"P{n}"), 0).total() == 0


def test_stably_free():
    assert is_stably_free(regular_module(A1))
    assert not is_stably_free(make("P1", hi=30))
    with pytest.raises(RefusalError):
        is_stably_free(laurent_window(-24, 24))


def test_reduced_part_of_free():
    split = reduced_part(regular_module(A1))
    assert split.free_generator_degrees == [0]
    assert split.reduced.is_zero()


def test_reduced_part_of_pp():
    split = reduced_part(tensor(make("P1", hi=36), make("P1", hi=36)))
    counts = {d: c for d, c in split.generator_counts().items() if d <= 24}
    assert counts == pp_generator_counts(24)


def test_reduced_part_keeps_joker():
    j = make("J")
    split = reduced_part(j)
    assert split.free_generator_degrees == []
    assert split.reduced.dims == j.dims


def test_reduced_part_recovers_summand():
    m = direct_sum(make("M1"), free_module(A1, [2, 5]))
    split = reduced_part(m)
    assert sorted(split.free_generator_degrees) == [2, 5]
    assert split.reduced.trim().dims == make("M1").dims


def test_identity_is_stable_iso():
    j = make("J")
    assert induces_stable_iso(ModuleMap.identity(j))


def test_epsilon_and_eta_are_not_stable_isos():
    assert not induces_stable_iso(canonical_map("epsilon", hi=30))
    assert not induces_stable_iso(canonical_map("eta", hi=30))


def test_inclusion_tensored_with_p1_is_stable_iso():
    p1 = make("P1", hi=30)
    for i in (1, 2):
        inc, _ = ses_main(i, hi=34)
        assert not induces_stable_iso(inc)
        g = tensor_map(inc, p1)
        assert is_module_map(g)
        assert induces_stable_iso(g)


def test_stable_class_with_free_summand():
    for m in (make("J"), make("M1")):
        assert stable_class_equal(direct_sum(m, regular_module(A1)), m)
        assert stable_class_equal(direct_sum(m, free_module(A1, [3])), m)


def test_pp_against_both_candidates():
    p1 = make("P1", hi=40)
    red = reduced(tensor(p1, p1))
    assert stable_class_equal(red, make("P2", hi=40))
    assert not stable_class_equal(red, make("P1", hi=40, suspension=2))


def test_unclassifiable_inputs_raise():
    big = direct_sum(*(make("P1", hi=30, suspension=2 * i) for i in range(5)))
    other = direct_sum(*(make("P1", hi=30, suspension=2 * i) for i in range(5)))
    with pytest.raises(UnclassifiableError):
        stable_class_equal(big, other)


def test_suspension_moves_homology():
    h = margolis_homology(suspend(make("J"), 3), 1)
    assert h.support() == [d + 3 for d in margolis_homology(make("J"), 1).support()]
