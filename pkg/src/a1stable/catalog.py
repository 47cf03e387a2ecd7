"""Named modules and maps: monomial modules, cyclic quotients, the F-complex and polynomial embeddings."""

from __future__ import annotations

import re

import numpy as np

from .algebra import A1, E1, get_algebra
from .functors import (free_module, inverse_augmentation, augmentation_ideal, loops,
                       regular_module, trivial_module)
from .gf2 import BitMatrix
from .module import (GradedModule, ModuleMap, columns_matrix, generated_bases, quotient, restrict_to_e1,
                     submodule, suspend)
from .poly import Poly, binom2, compositions, orbit_sum, parse_poly, short_name

__all__ = ["make", "canonical_map", "orbit_sum", "submodule_generated", "embedded_p",
           "laurent_window", "laurent_box", "poly_tensor", "CATALOG_NAMES"]

CATALOG_NAMES = ["F2", "B_regular", "A0", "A1modA0", "I_aug", "I_inv", "R", "P(n)", "M(i)", "J",
                 "Fseq(i)", "Laurent", "PolyTensor(n)", "EmbeddedP(n)"]

DEFAULT_WINDOW = (-2, 48)


class CatalogError(ValueError):
    pass


# monomial modules -------------------------------------------------------------


def _sq_single(gen: str, n: int) -> list[int]:
    k = 1 if gen == "Sq1" else 2
    return [n + k] if binom2(n, k) else []


def monomial_module(exponents, lo: int, hi: int, *, name: str, bounded_below=True) -> GradedModule:
    """Span of ``x^n`` for the given exponents in one variable, with kept exponents closed upward."""
    keep = set(exponents)
    basis = {d: [d] for d in range(lo, hi + 1) if d in keep}

    def act(gen, n):
        return [e for e in _sq_single(gen, n) if e in keep and e <= hi]

    return GradedModule.from_basis(A1, basis, act, lo, hi, label=lambda n: f"x^{n}",
                                   bounded_below=bounded_below, name=name)


def _p0(lo, hi):
    _need_bottom(lo, -1, "P0")
    return monomial_module(range(-1, hi + 1), lo, hi, name="P0")


def _p1(lo, hi):
    _need_bottom(lo, 1, "P1")
    return monomial_module(range(1, hi + 1), lo, hi, name="P1")


def _r(lo, hi):
    _need_bottom(lo, -1, "R")
    return monomial_module([-1] + list(range(1, hi + 1)), lo, hi, name="R")


def laurent_window(lo: int, hi: int, algebra="A1") -> GradedModule:
    """F2[x, 1/x] on ``[lo, hi]``; a two-sided cut, so not bounded below."""
    if lo >= hi:
        raise CatalogError("laurent window needs lo < hi")
    m = monomial_module(range(lo, hi + 1), lo, hi, name="L", bounded_below=False)
    sd = 6
    m.trusted = (lo + sd, hi - sd) if hi - lo >= 2 * sd else (lo, lo - 1)
    return _over(m, algebra)


def laurent_box(lo: int, hi: int, algebra="A1") -> GradedModule:
    """The finite subquotient x^lo F2[x] / x^(hi+1) F2[x] of the Laurent module.

    Unlike :func:`laurent_window` this is a genuine finite module, so it can
    be tensored; it agrees with L in degrees away from the cut.
    """
    m = monomial_module(range(lo, hi + 1), lo, hi, name=f"L[{lo},{hi}]")
    m.bounded_above = True
    return _over(m, algebra)


def _need_bottom(lo, bottom, name):
    if lo > bottom:
        raise CatalogError(f"window starting at {lo} does not contain the bottom degree {bottom} of {name}")


def _over(m: GradedModule, algebra) -> GradedModule:
    alg = get_algebra(algebra)
    if alg is E1:
        out = restrict_to_e1(m)
        out.name = m.name
        return out
    return m


# cyclic quotients of A(1) --------------------------------------------------------


def cyclic_quotient(words, shift: int = 0, algebra="A1", name: str = "") -> GradedModule:
    """``Sigma^shift B / (left ideal generated by words)`` on the normal-form basis."""
    alg = get_algebra(algebra)
    b = regular_module(alg)
    st = alg.structure
    gens = []
    for w in words:
        if isinstance(w, str):
            from .algebra import parse_word
            w = parse_word(alg, w)
        d = alg.word_degree(w)
        gens.append((d, st.element(w)[st.offset[d]:st.offset[d] + len(st.basis[d])]))
    bases = generated_bases(b, gens)
    q, _ = quotient(b, bases)
    q = q.trim()
    q.bounded_above = True
    q.trusted = q.window
    out = suspend(q, shift)
    out.name = name or f"S{shift}B/({','.join(map(str, words))})"
    return out


def _m_module(i: int) -> GradedModule:
    q, r = divmod(i, 4)
    base = {
        0: lambda: trivial_module(A1),
        1: lambda: cyclic_quotient(["Sq2"], 1),
        2: lambda: cyclic_quotient(["Sq1Sq2"], 2),
        3: lambda: cyclic_quotient(["Sq1", "Sq2Sq1Sq2"], 4),
    }[r]()
    out = suspend(base, 8 * q)
    out.name = f"M{i}"
    return out


def _a1moda0() -> GradedModule:
    return cyclic_quotient(["Sq1"], 0, name="A1//A0")


def _a0() -> GradedModule:
    m = GradedModule.from_basis(A1, {0: ["1"], 1: ["Sq1"]},
                                lambda g, k: ["Sq1"] if (g == "Sq1" and k == "1") else [],
                                0, 1, label=str, bounded_above=True, name="A0")
    return m


# the F-complex --------------------------------------------------------------------

# F_r for r = 0..3 as (left-ideal generators, suspension), and f_r as the element
# multiplying the generator of F_r
_F_BASE = {0: (["Sq1"], 0), 1: ([], 2), 2: ([], 4), 3: (["Sq1"], 7)}
_F_MAPS = {0: (1,), 1: (1,), 2: (0, 1), 3: (1, 0, 1)}  # Sq2, Sq2, Sq3 = Sq1Sq2, Sq2Sq3


def fseq(i: int) -> GradedModule:
    q, r = divmod(i, 4)
    words, s = _F_BASE[r]
    out = cyclic_quotient(words, s + 12 * q, name=f"F{i}")
    return out


def _generator_vector(m: GradedModule) -> np.ndarray:
    v = np.zeros(m.dim(m.lo), dtype=np.uint8)
    v[0] = 1
    return v


def f_map(i: int) -> ModuleMap:
    """``f_i : F_{i+1} -> F_i``, sending the generator to ``x_i`` times the generator."""
    src, tgt = fseq(i + 1), fseq(i)
    alg = A1
    st = alg.structure
    word = _F_MAPS[i % 4]
    # image of the generator of src
    base = (tgt.word_action(word, tgt.lo).to_dense() @ _generator_vector(tgt)) % 2
    gdeg = tgt.lo + alg.word_degree(word)
    if gdeg != src.lo:
        raise AssertionError("degree mismatch in the F-complex")
    blocks = {}
    # basis of the cyclic module src: coset representatives = normal-form words
    reps = _cyclic_reps(src)
    for d in src.degrees:
        cols = []
        for w in reps[d]:
            cols.append((tgt.word_action(w, gdeg).to_dense() @ base) % 2)
        blocks[d] = columns_matrix(cols, tgt.dim(d))
    f = ModuleMap(src, tgt, blocks, name=f"f{i}")
    return f


def _cyclic_reps(m: GradedModule) -> dict[int, list[tuple[int, ...]]]:
    """For a cyclic module from :func:`cyclic_quotient`, the word behind each basis vector."""
    from .algebra import parse_word
    out = {}
    for d in m.degrees:
        labs = m.labels[d - m.lo] if m.labels is not None else []
        out[d] = [parse_word(A1, lab) for lab in labs]
    return out


# the modules P_n ---------------------------------------------------------------------


def _p_base(r: int, lo: int, hi: int, algebra) -> GradedModule:
    alg = get_algebra(algebra)
    if r == 0:
        return _over(_p0(lo, hi), alg)
    if r == 1:
        return _over(_p1(lo, hi), alg)
    # P_r = (Sigma^{-r} Omega^r P_0)^red; each loop costs socle_degree trusted degrees
    top = hi + r + alg.socle_degree * r
    m = _over(_p0(-1, top), alg)
    for _ in range(r):
        m = loops(m)
    m = suspend(m, -r)
    out = m.truncate(lo, hi)
    if out.lo > lo:
        out = out.extend(lo, out.hi)
    out.trusted = out.window
    out.name = f"P{r}"
    out.labels = None
    return out


def p_module(n: int, lo: int, hi: int, algebra="A1") -> GradedModule:
    alg = get_algebra(algebra)
    if alg is E1:
        if n not in (0, 1):
            raise CatalogError("over E(1) only P0 and P1 are catalogued")
        return _p_base(n, lo, hi, alg)
    q, r = divmod(n, 4)
    m = _p_base(r, min(lo - 8 * q, {0: -1, 1: 1, 2: 2, 3: 3}[r]), hi - 8 * q, alg)
    out = suspend(m, 8 * q)
    out = out.truncate(lo, hi) if out.lo < lo else out
    out.name = f"P{n}"
    return out


# polynomial tensor powers ------------------------------------------------------------


def poly_tensor(n: int, hi: int, lo: int | None = None, algebra="A1") -> GradedModule:
    """P^{(x) n}: monomials with all exponents >= 1 in n variables, lexicographic in each degree."""
    if n < 1:
        raise CatalogError("PolyTensor needs n >= 1")
    lo = n if lo is None else lo
    _need_bottom(lo, n, f"PolyTensor({n})")
    from .poly import sq1_monomial, sq2_monomial
    basis = {d: compositions(d, n) for d in range(lo, hi + 1)}

    def act(gen, mono):
        imgs = sq1_monomial(mono) if gen == "Sq1" else sq2_monomial(mono)
        return sorted(imgs)

    m = GradedModule.from_basis(A1, basis, act, lo, hi, label=short_name, name=f"P^{n}")
    m.keys = basis
    return _attach_keys(_over(m, algebra), basis)


def _attach_keys(m, keys):
    m.keys = keys
    m.key_index = {d: {k: i for i, k in enumerate(ks)} for d, ks in keys.items()}
    return m


def poly_vector(m: GradedModule, p: Poly) -> tuple[int, np.ndarray]:
    d = p.degree
    idx = m.key_index[d]
    v = np.zeros(m.dim(d), dtype=np.uint8)
    for t in p.terms:
        v[idx[t]] ^= 1
    return d, v


def submodule_generated(m: GradedModule, gens) -> tuple[GradedModule, ModuleMap]:
    """Closure of the span of the generators (Polys or (degree, vector) pairs)."""
    pairs = []
    for g in gens:
        if isinstance(g, Poly):
            if g.is_zero():
                continue
            d = g.degree
            if d > m.hi:
                continue
            if d < m.lo:
                raise CatalogError(f"generator {g} below the window")
            pairs.append(poly_vector(m, g))
        else:
            pairs.append(g)
    bases = generated_bases(m, pairs)
    return submodule(m, bases, name="<gens>")


def _mono(*e):
    return Poly.monomial(*e)


def _bar_times(exps, tail):
    """Orbit sum over the leading variables times a fixed monomial in the rest."""
    return orbit_sum(exps).times(Poly.monomial(*tail))


def degree7_class(alpha=(0, 0)) -> Poly:
    """The degree-7 generator of P_4 for the choice (alpha0, alpha1)."""
    a0, a1 = alpha
    p = _mono(2, 2, 2, 1) + orbit_sum((1, 1, 1, 4))
    if a0:
        p = p + _mono(2, 2, 2, 1) + _bar_times((2, 2, 1), (2,))
    if a1:
        p = p + _mono(1, 1, 1, 4) + _bar_times((1, 1, 2), (3,))
    return p


def periodicity_class() -> Poly:
    """B = 2222 + orbit(1124)."""
    return _mono(2, 2, 2, 2) + orbit_sum((1, 1, 2, 4))


def embedded_generators(n: int, hi: int, alpha=(0, 0)) -> list[Poly]:
    """Generators of the copy of P_n inside P^{(x) n}, listed up to degree ``hi``."""
    if n < 1:
        raise CatalogError("EmbeddedP needs n >= 1")
    if n == 1:
        return [_mono(1), _mono(3)] + [_mono(i) for i in range(5, hi + 1)]
    if n == 2:
        gens = [_mono(1, 1), orbit_sum((1, 2)), _mono(2, 2), orbit_sum((1, 4)), orbit_sum((2, 4)),
                _mono(2, 1)]
        gens += [_mono(4, i) for i in range(1, hi - 3)]
        return gens
    if n == 3:
        gens = [orbit_sum((1, 1, 2)), _mono(2, 2, 2) + orbit_sum((1, 1, 4)), orbit_sum((1, 2, 4)),
                _mono(1, 1, 1), orbit_sum((1, 2, 2)), _mono(2, 2, 2), orbit_sum((2, 2, 4)),
                _mono(1, 2, 4) + _mono(1, 4, 2) + _mono(4, 2, 1)]
        gens += [_mono(4, 4, i) for i in range(1, hi - 7)]
        return gens
    if n == 4:
        gens = [periodicity_class(), degree7_class(alpha)]
        if tuple(alpha) == (0, 0):
            # these two are Sq2 and Sq1Sq2 of the degree-7 class
            gens += [_bar_times((1, 2, 2), (4,)) + _bar_times((1, 2, 4), (2,)), _mono(2, 2, 2, 4)]
        # the tail starts at exponent 3: orbit(224) x4 and orbit(224) x4^2 lie outside P_4
        gens += [_bar_times((2, 2, 4), (i,)) for i in range(3, hi - 7)]
        return gens
    b = periodicity_class()
    return [b.times(g) for g in embedded_generators(n - 4, hi - 8, alpha)]


def embedded_p(n: int, hi: int, alpha=(0, 0), ambient: GradedModule | None = None):
    """The copy of P_n in P^{(x) n} as (submodule, inclusion)."""
    if not 1 <= n <= 8:
        raise CatalogError("embedded_p is available for 1 <= n <= 8")
    if hi < n:
        raise CatalogError("window too small for embedded_p")
    amb = ambient if ambient is not None else poly_tensor(n, hi)
    sub, inc = submodule_generated(amb, embedded_generators(n, hi, alpha))
    sub.name = f"EmbeddedP{n}"
    return sub, inc


def annihilated_classes(i: int = 1) -> list[Poly]:
    """B^i, x^4 B^i, x1^4 x2^4 B^i and orbit(224) B^i, each in its own variables."""
    b = periodicity_class()
    bi = Poly(0, [()])
    for _ in range(i):
        bi = bi.times(b)
    return [bi, _mono(4).times(bi), _mono(4, 4).times(bi), orbit_sum((2, 2, 4)).times(bi)]


# the public constructor -------------------------------------------------------------------

_KEY_RE = re.compile(r"^\s*([A-Za-z_]+?)\s*(?:[(:]\s*(-?\d+)\s*\)?)?\s*$")
_SIMPLE = {"F2", "B_regular", "A0", "A1modA0", "I_aug", "I_inv", "R", "J", "Laurent", "P0", "P1"}


def parse_key(key: str) -> tuple[str, int | None]:
    key = key.strip()
    if key in _SIMPLE:
        if key in ("P0", "P1"):
            return "P", int(key[1])
        return key, None
    m = re.fullmatch(r"\s*(P|M)(-?\d+)\s*", key)
    if m:
        return m.group(1), int(m.group(2))
    m = _KEY_RE.match(key)
    if not m or m.group(1) not in {"P", "M", "Fseq", "PolyTensor", "EmbeddedP", "F"}:
        raise CatalogError(f"unknown catalog key {key!r}; known: {', '.join(CATALOG_NAMES)}")
    base = "Fseq" if m.group(1) == "F" else m.group(1)
    if m.group(2) is None:
        raise CatalogError(f"catalog key {base} needs an integer argument")
    return base, int(m.group(2))


def make(key: str, algebra="A1", lo: int | None = None, hi: int | None = None,
         suspension: int = 0) -> GradedModule:
    """Construct a catalogued module, optionally suspended, on a degree window.

    Finite modules are returned on their support; infinite ones on
    ``[lo, hi]`` (default ``[-2, 48]``).
    """
    alg = get_algebra(algebra)
    lo = DEFAULT_WINDOW[0] if lo is None else lo
    hi = DEFAULT_WINDOW[1] if hi is None else hi
    if hi < lo:
        raise CatalogError(f"bad window [{lo}, {hi}]")
    base, arg = parse_key(key)
    a, b = lo - suspension, hi - suspension
    a1_only = {"A0", "A1modA0", "M", "J", "Fseq"}
    if alg is E1 and base in a1_only:
        raise CatalogError(f"{base} is only catalogued over A(1)")
    if base == "F2":
        m = trivial_module(alg)
    elif base == "B_regular":
        m = regular_module(alg)
    elif base == "A0":
        m = _a0()
    elif base == "A1modA0":
        m = _a1moda0()
    elif base == "I_aug":
        m = augmentation_ideal(alg)
        m.name = "I"
    elif base == "I_inv":
        m = inverse_augmentation(alg)
    elif base == "R":
        m = _over(_r(a, b), alg)
    elif base == "P":
        m = p_module(arg, a, b, alg)
    elif base == "M":
        m = _m_module(arg)
    elif base == "J":
        m = suspend(_m_module(2), -4)
        m.name = "J"
    elif base == "Fseq":
        m = fseq(arg)
    elif base == "Laurent":
        m = laurent_window(a, b, alg)
    elif base == "PolyTensor":
        m = poly_tensor(arg, b, algebra=alg)
    elif base == "EmbeddedP":
        m, _ = embedded_p(arg, b)
        if alg is E1:
            m = restrict_to_e1(m)
    else:  # pragma: no cover - parse_key guards this
        raise CatalogError(key)
    if suspension:
        name = m.name
        m = suspend(m, suspension)
        m.name = f"S{suspension}{name}" if suspension != 1 else f"S{name}"
    return m


# canonical maps ---------------------------------------------------------------------------


def canonical_map(name: str, lo: int = -2, hi: int = 48, algebra="A1"):
    """``eta: F2 -> P0``, ``epsilon: Sigma R -> F2``, ``f(i)`` and ``ses_main(i)``."""
    alg = get_algebra(algebra)
    if name == "eta":
        f2 = trivial_module(alg)
        p0 = make("P0", alg, lo, hi)
        # x^0 is the second basis element of degree 0's single slot
        return ModuleMap(f2, p0, {0: BitMatrix.identity(1)}, name="eta")
    if name == "epsilon":
        sr = make("R", alg, lo, hi, suspension=1)
        f2 = trivial_module(alg)
        blocks = {d: BitMatrix(f2.dim(d), sr.dim(d)) for d in sr.degrees}
        blocks[0] = BitMatrix.identity(1)
        return ModuleMap(sr, f2, blocks, name="epsilon")
    m = re.fullmatch(r"(f|ses_main)\((-?\d+)\)", name.replace(" ", ""))
    if not m:
        raise CatalogError(f"unknown canonical map {name!r}")
    i = int(m.group(2))
    if m.group(1) == "f":
        return f_map(i)
    return ses_main(i, hi)


def ses_main(i: int, hi: int = 40):
    """``0 -> M_i -> P_i -> Sigma^4 R -> 0`` (``M_0 -> P_0 -> R`` for i = 0), as two maps."""
    from .margolis import find_isomorphism, hom_space
    if not 0 <= i <= 3:
        raise CatalogError("ses_main is catalogued for i = 0..3")
    mi = make(f"M{i}")
    pi = make(f"P{i}", lo=-1, hi=hi)
    # the inclusion M_i -> P_i: an injective module map on M_i's support
    basis = hom_space(mi, pi, mi.lo, mi.hi)
    inc = None
    for x in range(1, 2 ** len(basis)):
        blocks = {d: sum((h[d] for k, h in enumerate(basis) if (x >> k) & 1), np.zeros_like(basis[0][d])) % 2
                  for d in range(mi.lo, mi.hi + 1)}
        cand = ModuleMap(mi, pi, {d: BitMatrix.from_dense(v) for d, v in blocks.items()})
        if cand.is_injective(mi.lo, mi.hi):
            inc = cand
            break
    if inc is None:
        raise RuntimeError(f"no embedding of M{i} in P{i}")
    inc.name = f"M{i}->P{i}"
    q, proj = quotient(pi, {d: inc.block(d) for d in mi.degrees})
    r = make("R", lo=-1, hi=hi - (0 if i == 0 else 4))
    target = r if i == 0 else suspend(r, 4)
    target.name = "R" if i == 0 else "S4R"
    lo, top = q.lo, min(q.trusted[1], target.trusted[1])
    status, iso = find_isomorphism(q, target, lo, top)
    if not status:
        raise RuntimeError(f"P{i}/M{i} is not isomorphic to {target.name}")
    blocks = {}
    for d in pi.degrees:
        if d <= top and target.lo <= d:
            blocks[d] = BitMatrix.from_dense(iso[d]) @ proj.block(d)
    to_r = ModuleMap(pi, target, blocks, name=f"P{i}->{target.name}")
    return inc, to_r
