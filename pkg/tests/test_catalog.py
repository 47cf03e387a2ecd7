from __future__ import annotations

import numpy as np
import pytest

from a1stable import make
from a1stable.catalog import (CatalogError, annihilated_classes, canonical_map, degree7_class, embedded_p,
                              f_map, laurent_window, parse_key, poly_tensor, ses_main, submodule_generated)
from a1stable.functors import minimal_cover
from a1stable.gf2 import rank
from a1stable.margolis import find_isomorphism, induces_stable_iso, margolis_homology
from a1stable.module import is_module_map
from a1stable.poly import Poly, orbit_sum, parse_poly


def _dims(m, lo, hi):
    return [m.dim(d) for d in range(lo, hi + 1)]


def test_p0():
    p0 = make("P0", hi=30)
    assert _dims(p0, -2, 30) == [0] + [1] * 32
    assert p0.action("Sq1", -1).to_dense().tolist() == [[1]]
    assert p0.action("Sq2", -1).to_dense().tolist() == [[1]]


def test_p_dims_from_the_sequences():
    assert _dims(make("P1"), 0, 10) == [0] + [1] * 10
    assert _dims(make("P2"), 2, 12) == [1, 2, 1, 2, 2, 1, 1, 1, 1, 1, 1]
    for i in range(4):
        inc, proj = ses_main(i, hi=40)
        p, mi, q = inc.target, inc.source, proj.target
        assert all(p.dim(d) == mi.dim(d) + q.dim(d) for d in range(-2, 36))


def test_p_periodicity_in_catalog():
    for n in range(4):
        a = make(f"P{n + 4}", hi=40)
        b = make(f"P{n}", hi=40, suspension=8)
        assert _dims(a, -2, 40) == _dims(b, -2, 40)


def test_joker():
    j = make("J")
    assert (j.lo, j.dims) == (-2, [1] * 5)
    assert margolis_homology(j, 0).support() == [0]
    assert margolis_homology(j, 1).support() == [0]


def test_fseq_first_row():
    shapes = [(0, [1, 0, 1, 1, 0, 1]), (2, [1, 1, 1, 2, 1, 1, 1]), (4, [1, 1, 1, 2, 1, 1, 1]),
              (7, [1, 0, 1, 1, 0, 1])]
    for i, (lo, dims) in enumerate(shapes):
        f = make(f"Fseq({i})")
        assert (f.lo, f.dims) == (lo, dims)
        assert minimal_cover(f).generator_degrees == [lo]
    assert make("Fseq(0)").dims == make("A1modA0").dims


def test_fseq_periodicity():
    for i in range(-4, 4):
        a, b = make(f"Fseq({i})"), make(f"Fseq({i + 4})")
        assert (a.lo + 12, a.dims) == (b.lo, b.dims)


def test_key_sequence_exact():
    eta = canonical_map("eta", hi=30)
    p0 = eta.target
    r = make("R", hi=30)
    assert is_module_map(eta)
    # F2 -> P0 -> R: dims add up and the bottom class is hit
    assert all(p0.dim(d) == r.dim(d) + (1 if d == 0 else 0) for d in range(-2, 31))
    assert rank(eta.block(0)) == 1


def test_f_complex_composites():
    for i in range(-3, 8):
        assert (f_map(i - 1) @ f_map(i)).is_zero()


def test_ses_main_one():
    inc, proj = ses_main(1, hi=36)
    assert is_module_map(inc) and is_module_map(proj)
    assert inc.is_injective(1, 4)
    assert proj.is_surjective(-2, 32)
    assert all((proj.block(d) @ inc.block(d)).is_zero() for d in range(1, 5))


def test_orbit_sums():
    assert orbit_sum((1, 2), 2) == Poly.monomial(1, 2) + Poly.monomial(2, 1)
    assert orbit_sum((2, 2), 2) == Poly.monomial(2, 2)
    assert len(orbit_sum((1, 1, 2, 4), 4)) == 12


def test_m2_inside_p_tensor_p():
    sub, _ = submodule_generated(poly_tensor(2, 16), [Poly.monomial(1, 1)])
    m2 = make("M2")
    assert _dims(sub, 0, 16) == _dims(m2, 0, 16)


def test_m1_inside_p():
    sub, _ = submodule_generated(make("P1", hi=20), [(1, np.array([1], dtype=np.uint8))])
    assert _dims(sub, 0, 20) == [0, 1, 1, 0, 1] + [0] * 16


def test_embedded_p1_is_p():
    e, inc = embedded_p(1, 20)
    assert _dims(e, 1, 20) == [1] * 20


def test_embedded_p3():
    e, inc = embedded_p(3, 20)
    assert _dims(e, 3, 20) == _dims(make("P3"), 3, 20)
    assert induces_stable_iso(inc)


def test_embedded_p5_via_periodicity_class():
    e, inc = embedded_p(5, 14)
    assert _dims(e, 5, 14) == _dims(make("P5"), 5, 14)


def test_degree7_choices_share_sq1():
    b = annihilated_classes(1)[0]
    for alpha in ((0, 0), (1, 0), (0, 1), (1, 1)):
        assert degree7_class(alpha).sq1() == b


def test_annihilated_classes():
    for i in (1, 2):
        for c in annihilated_classes(i):
            assert c.sq1().is_zero() and c.sq2().is_zero()


def test_parse_poly_round_trip():
    p = parse_poly("12 + 21")
    assert p == orbit_sum((1, 2), 2)


def test_r_is_q0_local():
    assert margolis_homology(make("R"), 1).total() == 0
    assert margolis_homology(make("R"), 0).support() == [-1]


def test_laurent_window_trust():
    lw = laurent_window(-24, 24)
    assert lw.trusted == (-18, 18)
    assert not lw.bounded_below


def test_key_parsing():
    assert parse_key("P3") == ("P", 3)
    assert parse_key("Fseq:1") == ("Fseq", 1)
    assert parse_key("M(2)") == ("M", 2)
    with pytest.raises(CatalogError):
        parse_key("Q7")
    with pytest.raises(CatalogError):
        make("J", algebra="E1")


def test_e1_catalog():
    for key in ("F2", "P0", "P1", "R"):
        assert make(key, algebra="E1", hi=30).validate().ok
