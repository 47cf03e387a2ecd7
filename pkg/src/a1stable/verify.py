"""Verification suites: each acceptance criterion as a list of named checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .algebra import A1, E1
from .catalog import (CatalogError, annihilated_classes, degree7_class, embedded_p, f_map, fseq,
                      laurent_box, laurent_window, make, poly_tensor, ses_main, submodule_generated)
from .functors import (ext_dim, free_module, localize, loops, minimal_cover, regular_module, tensor,
                       trivial_module)
from .gf2 import BitMatrix, rank, solve_matrix
from .hilbert import (TruncatedSeries, free_generator_series, free_part_series, p_series, p_series_q_form,
                      pp_generator_counts, series_of)
from .margolis import (RefusalError, find_isomorphism, induces_stable_iso, is_stably_free,
                       margolis_homology, reduced, reduced_part, stable_class_equal)
from .module import GradedModule, direct_sum, is_module_map, restrict_to_e1, suspend
from .picard import (InvariantError, classify_local, describe_group, epsilon_tensor_maps,
                     explicit_idempotence_witnesses, is_idempotent, collapse_killed, pic_localization_matrix,
                     t1_parts, _witness_module)

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass
class Check:
    id: str
    ref: str
    status: str
    details: str = ""

    def as_dict(self) -> dict:
        return {"id": self.id, "ref": self.ref, "status": self.status, "details": self.details}


@dataclass
class VerifyReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def status(self) -> str:
        return PASS if self.ok else FAIL

    def as_dict(self) -> dict:
        return {"suite": self.suite, "status": self.status, "seconds": round(self.seconds, 2),
                "checks": [c.as_dict() for c in self.checks]}

    def lines(self) -> list[str]:
        out = [f"suite {self.suite}: {self.status} ({len(self.checks)} checks, {self.seconds:.1f}s)"]
        for c in self.checks:
            extra = f"  {c.details}" if c.details else ""
            out.append(f"  [{c.status}] {c.id} ({c.ref}){extra}")
        return out


def _check(cid: str, ref: str, cond: bool, details: str = "") -> Check:
    return Check(cid, ref, PASS if cond else FAIL, details)


def _dims(m: GradedModule, lo: int, hi: int) -> list[int]:
    return [m.dim(d) for d in range(lo, hi + 1)]


def _same_dims(a: GradedModule, b: GradedModule, lo: int, hi: int) -> bool:
    return _dims(a, lo, hi) == _dims(b, lo, hi)


# 1. axioms ---------------------------------------------------------------------------

CATALOG_KEYS = (["F2", "B_regular", "A0", "A1modA0", "I_aug", "I_inv", "R", "J", "Laurent"]
                + [f"P{n}" for n in range(8)] + [f"M{i}" for i in range(8)]
                + [f"Fseq({i})" for i in range(-4, 8)]
                + [f"PolyTensor({n})" for n in (1, 2, 3)] + [f"EmbeddedP({n})" for n in (1, 2, 3)])


def criterion_axioms(seed: int = 0) -> list[Check]:
    checks = []
    bad_a1, bad_e1 = [], []
    for key in CATALOG_KEYS:
        m = make(key, lo=-2, hi=48)
        if not m.validate().ok:
            bad_a1.append(key)
        if not restrict_to_e1(m).validate().ok:
            bad_e1.append(key)
    checks.append(_check("catalog-validates", "relations of A(1)", not bad_a1,
                         f"{len(CATALOG_KEYS)} modules on [-2, 48]" + (f"; failing {bad_a1}" if bad_a1 else "")))
    checks.append(_check("restriction-validates", "relations of E(1)", not bad_e1,
                         f"failing {bad_e1}" if bad_e1 else ""))
    e1_keys = ["F2", "B_regular", "I_aug", "I_inv", "R", "P0", "P1", "Laurent"]
    bad = [k for k in e1_keys if not make(k, algebra="E1", lo=-2, hi=48).validate().ok]
    checks.append(_check("e1-catalog-validates", "relations of E(1)", not bad, f"failing {bad}" if bad else ""))
    return checks


# 2. the F-complex ------------------------------------------------------------------------


def criterion_fcomplex(seed: int = 0, top: int = 36) -> list[Check]:
    checks = []
    zero, exact, maps = [], [], []
    for i in range(-4, 8):
        f, g = f_map(i), f_map(i - 1)
        if not (is_module_map(f) and is_module_map(g)):
            maps.append(i)
        if not (g @ f).is_zero():
            zero.append(i)
        fi = fseq(i)
        for d in fi.degrees:
            if d > top:
                continue
            if fi.dim(d) - rank(g.block(d)) != rank(f.block(d)):
                exact.append((i, d))
    checks.append(_check("f-maps", "the maps f_i are A(1)-linear", not maps, f"bad {maps}" if maps else ""))
    checks.append(_check("f-composites", "f_{i-1} f_i = 0", not zero, f"nonzero at {zero}" if zero else ""))
    checks.append(_check("f-exact", "the F-complex is exact", not exact,
                         f"homology at {exact[:5]}" if exact else f"F_i, i=-4..7, degrees <= {top}"))
    bad = []
    for i in range(-4, 8):
        c, _ = f_map(i).cokernel()
        c = suspend(c.trim(), -i)
        mi = make(f"M{i}")
        lo, hi = min(c.lo, mi.lo), max(c.hi, mi.hi)
        status, _ = find_isomorphism(c, mi, lo, hi)
        if not status:
            bad.append(i)
    checks.append(_check("m-cokernels", "M_i = Sigma^{-i} Cok f_i", not bad, f"mismatch at {bad}" if bad else ""))
    return checks


# 3. the short exact sequences M_i -> P_i -> Sigma^4 R -------------------------------------


def criterion_ses(seed: int = 0, top: int = 36) -> list[Check]:
    checks = []
    for i in range(4):
        inc, pr = ses_main(i, hi=top + 4)
        p, q = inc.target, pr.target
        ok_maps = is_module_map(inc) and is_module_map(pr)
        exact = all(
            rank(inc.block(d)) == inc.source.dim(d)
            and rank(pr.block(d)) == q.dim(d)
            and (pr.block(d) @ inc.block(d)).is_zero()
            and p.dim(d) == rank(inc.block(d)) + rank(pr.block(d))
            for d in range(p.lo, top + 1))
        ext = ext_dim(q, inc.source, 1, 0)
        # boundary: lift the bottom class of the quotient and apply Sq1
        b = q.bottom
        e = BitMatrix.from_dense(np.ones((1, 1), dtype=np.uint8))
        lift = solve_matrix(pr.block(b), e)
        image = p.action("Sq1", b) @ lift
        in_sub = rank(inc.block(b + 1)) == rank(_hcat(inc.block(b + 1), image)) and not image.is_zero()
        qname = "R" if i == 0 else "Sigma^4 R"
        checks.append(_check(f"ses-{i}", f"0 -> M{i} -> P{i} -> {qname} -> 0",
                             ok_maps and exact and ext >= 1 and in_sub,
                             f"exact<= {top}: {exact}, Ext^1,0 = {ext}, Sq1 boundary in M{i}: {in_sub}"))
    return checks


def _hcat(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    from .gf2 import hstack
    return hstack([a, b])


# 4. the tensor square of P ----------------------------------------------------------------


def criterion_tensor_square(seed: int = 0, top: int = 32) -> list[Check]:
    hi = top + 8
    p1 = make("P1", lo=-2, hi=hi)
    split = reduced_part(tensor(p1, p1))
    red = split.reduced
    p2 = make("P2", lo=-2, hi=hi)
    checks = [_check("pp-reduced-dims", "(P (x) P)^red = P_2", _same_dims(red, p2, -2, top),
                     f"degrees <= {top}")]
    ours = t1_parts(red)
    wrong = make("P1", lo=-2, hi=hi, suspension=2)
    theirs = t1_parts(wrong)
    checks.append(_check("sigma2-p1-refuted", "Sigma^2 P_1 is not the reduced part",
                         (ours["d1"], ours["t1"]) != (theirs["d1"], theirs["t1"])
                         and not stable_class_equal(red, wrong),
                         f"reduced: d1={ours['d1']} t1={ours['t1']}; Sigma^2 P1: d1={theirs['d1']} t1={theirs['t1']}"))
    counts = {d: c for d, c in split.generator_counts().items() if d <= top}
    series = free_generator_series(2, top)
    from_series = {d: series[d] for d in range(2, top + 1) if series[d]}
    expected = pp_generator_counts(top)
    checks.append(_check("pp-free-generators", "free part of P (x) P",
                         counts == from_series == expected, f"{counts}"))
    return checks


# 5. periodicity ---------------------------------------------------------------------------


def criterion_periodicity(seed: int = 0, top: int = 24) -> list[Check]:
    checks = []
    r = make("R", lo=-2, hi=top + 12)
    checks.append(_check("loops-R", "Omega R ~ Sigma R",
                         _same_dims(loops(r), make("R", lo=-2, hi=top + 12, suspension=1), -2, top)))
    for n in range(5):
        pn = make(f"P{n}", lo=-2, hi=top + 12)
        lp = reduced(loops(pn))
        target = make(f"P{n + 1}", lo=-2, hi=top + 12, suspension=1)
        checks.append(_check(f"loops-P{n}", f"Omega P_{n} ~ Sigma P_{n + 1}", _same_dims(lp, target, -2, top)))
    m = make("P0", lo=-2, hi=top + 30)
    for _ in range(4):
        m = loops(m)
    checks.append(_check("loops4-P0", "Omega^4 P_0 ~ Sigma^12 P_0",
                         m.trusted[1] >= top and _same_dims(reduced(m), make("P0", lo=-2, hi=top + 30, suspension=12),
                                                            -2, top)))
    return checks


# 6. Kunneth ---------------------------------------------------------------------------------


def random_module(rng: np.random.Generator, hi: int = 16) -> GradedModule:
    """Reduced part of a submodule of P^{(x) k} generated by a few random elements."""
    k = int(rng.integers(1, 3))
    amb = poly_tensor(k, hi)
    gens = []
    for _ in range(int(rng.integers(1, 3))):
        d = int(rng.integers(k, k + 5))
        v = rng.integers(0, 2, amb.dim(d)).astype(np.uint8)
        if not v.any():
            v[0] = 1
        gens.append((d, v))
    sub, _ = submodule_generated(amb, gens)
    return reduced(sub)


def kunneth_defects(m: GradedModule, n: GradedModule) -> list[tuple[int, int]]:
    t = tensor(m, n)
    bad = []
    for k in (0, 1):
        hm, hn, ht = (margolis_homology(x, k) for x in (m, n, t))
        mb = m.bottom if m.bottom is not None else m.lo
        nb = n.bottom if n.bottom is not None else n.lo
        top = min(ht.trusted[1], hm.trusted[1] + nb, hn.trusted[1] + mb)
        for d in range(t.lo, top + 1):
            conv = sum(hm.dims.get(a, 0) * hn.dims.get(d - a, 0) for a in range(m.lo, d - n.lo + 1))
            if conv != ht.dims.get(d, 0):
                bad.append((k, d))
    return bad


def criterion_kunneth(seed: int = 0, pairs: int = 50) -> list[Check]:
    rng = np.random.default_rng(seed)
    failures = []
    for p in range(pairs):
        m, n = random_module(rng), random_module(rng)
        bad = kunneth_defects(m, n)
        if bad:
            failures.append((p, bad[:3]))
    return [_check("kunneth", "Kunneth formula for Margolis homology", not failures,
                   f"{pairs} seeded pairs, seed {seed}" + (f"; failures {failures[:3]}" if failures else ""))]


# 7. localization ----------------------------------------------------------------------------


def criterion_localization(seed: int = 0, top: int = 24) -> list[Check]:
    f2 = trivial_module(A1)
    l0, l1 = localize(f2, 0, hi=top), localize(f2, 1, hi=top)
    sr = make("R", lo=-2, hi=top, suspension=1)
    p0 = make("P0", lo=-2, hi=top)
    checks = [_check("L0-F2", "L_0 F_2 = Sigma R", _same_dims(l0, sr, -2, top)),
              _check("L1-F2", "L_1 F_2 = P_0", _same_dims(l1, p0, -2, top))]
    l0l1 = localize(localize(f2, 1, hi=top + 12), 0)
    l1l0 = localize(localize(f2, 0, hi=top + 12), 1)
    z01 = all(l0l1.dim(d) == 0 for d in range(l0l1.lo, l0l1.trusted[1] + 1))
    z10 = all(l1l0.dim(d) == 0 for d in range(l1l0.lo, l1l0.trusted[1] + 1))
    checks.append(_check("L0L1-zero", "L_0 L_1 = 0", z01, f"trusted to {l0l1.trusted[1]}"))
    checks.append(_check("L1L0-zero", "L_1 L_0 = 0", z10, f"trusted to {l1l0.trusted[1]}"))
    i_map, collapse = explicit_idempotence_witnesses(top)
    left, right = epsilon_tensor_maps(i_map)
    checks.append(_check("diagonal-map", "i : Sigma R -> Sigma R (x) Sigma R",
                         is_module_map(i_map) and induces_stable_iso(i_map) and bool((left == right).all()),
                         "module map, stable iso, equalizes eps (x) 1 and 1 (x) eps"))
    kills_ok = True
    from .functors import tensor_index
    for d, bm in collapse.blocks.items():
        blk = bm.to_dense()
        if not blk.shape[0]:
            continue
        for i in range(-1, d + 2):
            j = d - i
            if j < -1 or not (collapse.target.dim(i) and collapse.target.dim(j)):
                continue
            bit = blk[0, tensor_index(collapse.target, collapse.target, d, i, 0, 0)]
            if bool(bit) == collapse_killed(i, j):
                kills_ok = False
    checks.append(_check("collapse-map", "P_0 (x) P_0 -> P_0",
                         is_module_map(collapse) and induces_stable_iso(collapse) and kills_ok,
                         "module map, stable iso, kills exactly i = -1 (4), j = -1 (2)"))
    return checks


# 8. Picard matrices ------------------------------------------------------------------------------


def criterion_picard(seed: int = 0) -> list[Check]:
    checks = []
    expect = {"E1": ([[1, 1], [1, 3]], "Z/2"), "A1": ([[1, 1, 0], [1, 3, 0], [0, 1, 2]], "Z/4")}
    for alg, (mat, group) in expect.items():
        got, cok = pic_localization_matrix(alg)
        entries = [[x % t if t else x for x in row] for row, t in zip(got.entries, got.torsion)]
        desc = describe_group(cok)
        checks.append(_check(f"pic-{alg}", f"localization matrix over {alg}", entries == mat and desc == group,
                             f"matrix {entries}, cokernel {desc}"))
    return checks


# 9. classification round trip ------------------------------------------------------------------------


def _random_free(rng, lo: int, hi: int) -> GradedModule:
    gens = sorted(int(x) for x in rng.integers(lo, hi, int(rng.integers(1, 3))))
    return free_module(A1, gens)


def criterion_classification(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    wrong = []
    for n in range(4):
        for i in range(-6, 7):
            m = direct_sum(make(f"P{n}", lo=-12, hi=30, suspension=i), _random_free(rng, -4, 12))
            key = classify_local(m, 1).key()
            if key != ("A1", 1, i, n):
                wrong.append((i, n, key))
    checks = [_check("classify-P", "Sigma^i P_n + free -> (i, n)", not wrong,
                     "|i| <= 6, n = 0..3" + (f"; wrong {wrong[:3]}" if wrong else ""))]
    wrong = []
    for i in range(-6, 7):
        m = direct_sum(make("R", lo=-12, hi=30, suspension=i), _random_free(rng, -4, 12))
        cls = classify_local(m, 0)
        if cls.shift != i:
            wrong.append((i, cls.shift))
    checks.append(_check("classify-R", "Sigma^i R + free -> i", not wrong, f"wrong {wrong}" if wrong else ""))
    both = direct_sum(make("P0", lo=-2, hi=30), make("R", lo=-2, hi=30, suspension=1))
    rejected = []
    for k in (0, 1):
        try:
            classify_local(both, k)
        except InvariantError:
            rejected.append(k)
    checks.append(_check("reject-P0+SR", "P_0 + Sigma R is not invertible", rejected == [0, 1]))
    return checks


# 10. idempotents --------------------------------------------------------------------------------------


def criterion_idempotents(seed: int = 0, top: int = 30) -> list[Check]:
    checks = []
    for name in ("0", "F2", "P0", "SR", "P0+SR"):
        m = _witness_module(name, A1, -2, top)
        got = is_idempotent(m)
        checks.append(_check(f"idempotent-{name}", "stably idempotent", got == (True, name), f"{got}"))
    for key, m in (("P1", make("P1", lo=-2, hi=top)), ("J", make("J")), ("SF2", trivial_module(A1, 1))):
        got = is_idempotent(m)
        checks.append(_check(f"not-idempotent-{key}", "not stably idempotent", got[0] is False, f"{got}"))
    return checks


# 11. P_n inside P^(x)n -----------------------------------------------------------------------------------


def criterion_embeddings(seed: int = 0, top: int = 20) -> list[Check]:
    checks = []
    amb4 = None
    for n in range(1, 5):
        amb = poly_tensor(n, top)
        if n == 4:
            amb4 = amb
        sub, inc = embedded_p(n, top, ambient=amb)
        pn = make(f"P{n}", lo=-2, hi=top)
        same = _same_dims(sub, pn, n, top)
        iso = induces_stable_iso(inc)
        comp = series_of(amb, top) - series_of(sub, top)
        free_ok = comp.agrees(free_part_series(n, top), n, top)
        checks.append(_check(f"embedded-P{n}", f"P_{n} inside P^(x){n}", same and iso and free_ok,
                             f"dims {same}, stable iso {iso}, complement = free part {free_ok}"))
    subs = []
    for alpha in ((0, 0), (1, 0), (0, 1), (1, 1)):
        s, _ = submodule_generated(amb4, [degree7_class(alpha)])
        subs.append(s.truncate(7, 14))
    h = [tuple(tuple(sorted(margolis_homology(s, k).dims.items())) for k in (0, 1)) for s in subs]
    isos = [find_isomorphism(subs[0], s, 7, 14)[0] for s in subs]
    checks.append(_check("degree7-choices", "four choices of the degree-7 class",
                         len(set(h)) == 1 and all(isos) and len({tuple(_dims(s, 7, 14)) for s in subs}) == 1,
                         f"dims {_dims(subs[0], 7, 14)}, Sq1 of each = B"))
    killed = all(c.sq1().is_zero() and c.sq2().is_zero() for i in (1, 2) for c in annihilated_classes(i))
    sq1_b = all(degree7_class(a).sq1() == annihilated_classes(1)[0]
                for a in ((0, 0), (1, 0), (0, 1), (1, 1)))
    checks.append(_check("annihilated-classes", "A(1)-annihilated classes", killed and sq1_b,
                         "B^i, x^4 B^i, x1^4 x2^4 B^i, orbit(224) B^i for i = 1, 2"))
    return checks


# 12. Hilbert series --------------------------------------------------------------------------------------


def criterion_hilbert(seed: int = 0, top: int = 40) -> list[Check]:
    checks = []
    bad = []
    for n in range(8):
        pn = make(f"P{n}", lo=-2, hi=top)
        s = series_of(pn, top)
        if not (p_series(n, top).agrees(s, -2, top) and p_series_q_form(n, top).agrees(s, -2, top)):
            bad.append(n)
    checks.append(_check("p-series", "closed forms for H(P_n)", not bad,
                         f"n = 0..7 to degree {top}" + (f"; bad {bad}" if bad else "")))
    a1 = series_of(regular_module(A1)).restrict(0, 40)
    for n, cut in ((1, 32), (2, 32), (3, 20), (4, 20)):
        if n == 1:
            computed = TruncatedSeries(1, (0,) * cut)
        else:
            split = reduced_part(poly_tensor(n, cut + 6)) if n <= 3 else None
            if split is not None:
                counts = split.generator_counts()
                gens = TruncatedSeries.from_dict(counts, n, cut)
                computed = (gens * a1).restrict(n, cut)
            else:
                amb = poly_tensor(n, cut)
                sub, _ = embedded_p(n, cut, ambient=amb)
                computed = (series_of(amb, cut) - series_of(sub, cut)).restrict(n, cut)
        expected = free_part_series(n, cut)
        checks.append(_check(f"free-part-{n}", "Hilbert series of the free part", expected.agrees(computed, n, cut),
                             f"to degree {cut}"))
    return checks


# 13. the Laurent module ------------------------------------------------------------------------------------


def criterion_laurent(seed: int = 0) -> list[Check]:
    checks = []
    lw = laurent_window(-24, 24)
    h = [margolis_homology(lw, k) for k in (0, 1)]
    checks.append(_check("laurent-homology", "L has no Margolis homology",
                         lw.trusted == (-18, 18) and all(x.total(-18, 18) == 0 for x in h), f"trusted {lw.trusted}"))
    try:
        is_stably_free(lw)
        refused = False
    except RefusalError:
        refused = True
    checks.append(_check("laurent-refusal", "criterion needs bounded below", refused))
    box = laurent_box(-23, 24)
    sr = make("R", lo=-1, hi=48, suspension=1)
    p0 = make("P0", lo=-1, hi=48)
    r0 = reduced(tensor(sr, box))
    r1 = reduced(tensor(p0, box))
    checks.append(_check("laurent-L0", "L_0 L = 0", all(r0.dim(d) == 0 for d in range(-18, 19)),
                         f"box [-23, 24], trusted to {r0.trusted[1]}"))
    checks.append(_check("laurent-L1", "L_1 L = L", all(r1.dim(d) == 1 for d in range(-18, 19))))
    ll = tensor(box, box)
    split = reduced_part(ll)
    gdeg = {d for d in split.free_generator_degrees if -18 <= d <= 18}
    pattern = {4 * i + 2 * j - 2 for i in range(-12, 12) for j in range(-12, 12)} & set(range(-18, 19))
    # the explicit generators x^{4i-1} (x) x^{2j-1} span a free submodule
    from .functors import tensor_index
    gens = []
    for e1 in range(-23, 19):
        for e2 in range(-23, 19):
            if e1 % 4 == 3 and e2 % 2 == 1 and -18 <= e1 + e2 <= 18:
                d = e1 + e2
                v = np.zeros(ll.dim(d), dtype=np.uint8)
                v[tensor_index(box, box, d, e1, 0, 0)] = 1
                gens.append((d, v))
    sub, _ = submodule_generated(ll, gens)
    free_ok = sub.total_dim == 8 * len(gens) and sum(rank(sub.top_action(d)) for d in sub.degrees
                                                     if sub.dim(d) and d + 6 <= sub.hi) == len(gens)
    complement = [(d, _unit(ll.dim(d), tensor_index(box, box, d, d, 0, 0))) for d in range(-23, 25)]
    lsub, _ = submodule_generated(ll, complement)
    l_ok = all(lsub.dim(d) == 1 for d in range(-23, 25))
    checks.append(_check("laurent-LxL", "L (x) L = L + free on x^{4i-1} (x) x^{2j-1}",
                         gdeg == pattern and free_ok and l_ok,
                         f"{len(gens)} explicit generators span a free module; x^i (x) 1 spans a copy of L"))
    return checks


def _unit(n: int, i: int) -> np.ndarray:
    v = np.zeros(n, dtype=np.uint8)
    v[i] = 1
    return v


# 14. Ext ---------------------------------------------------------------------------------------------------


def criterion_ext(seed: int = 0) -> list[Check]:
    vals = []
    for hi in (30, 42):
        vals.append(ext_dim(make("P0", lo=-1, hi=hi), make("R", lo=-1, hi=hi, suspension=1), 1, 0))
    return [_check("ext-P0-SR", "Ext^{1,0}(P_0, Sigma R) = F_2", vals == [1, 1],
                   f"windows to 30 and 42 give {vals}")]


# suites -----------------------------------------------------------------------------------------------------

CRITERIA = {
    1: ("axioms", criterion_axioms),
    2: ("F-complex", criterion_fcomplex),
    3: ("short exact sequences", criterion_ses),
    4: ("tensor square", criterion_tensor_square),
    5: ("periodicity", criterion_periodicity),
    6: ("Kunneth", criterion_kunneth),
    7: ("localization", criterion_localization),
    8: ("Picard matrices", criterion_picard),
    9: ("classification", criterion_classification),
    10: ("idempotents", criterion_idempotents),
    11: ("embeddings", criterion_embeddings),
    12: ("Hilbert series", criterion_hilbert),
    13: ("Laurent", criterion_laurent),
    14: ("Ext", criterion_ext),
}

SUITES = {
    "axioms": [1, 2, 3, 6],
    "periodicity": [4, 5],
    "localization": [7, 14],
    "picard": [8, 9],
    "idempotents": [10],
    "appendix-a": [11],
    "hilbert": [12],
    "laurent": [13],
}


def run_criterion(number: int, seed: int = 0) -> VerifyReport:
    name, fn = CRITERIA[number]
    t = time.perf_counter()
    checks = fn(seed=seed)
    return VerifyReport(f"{number}:{name}", checks, time.perf_counter() - t)


def run_suite(name: str, seed: int = 0) -> VerifyReport:
    if name == "all":
        numbers = [n for s in SUITES.values() for n in s]
    elif name in SUITES:
        numbers = SUITES[name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    t = time.perf_counter()
    checks = []
    for n in sorted(numbers):
        checks.extend(CRITERIA[n][1](seed=seed))
    return VerifyReport(name, checks, time.perf_counter() - t)
