"""Tensor products, free modules, minimal covers and resolutions, loops, Ext and localization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraDescriptor, get_algebra
from .gf2 import BitMatrix, complement_indices, hstack, rank, column_space
from .module import INF, GradedModule, ModuleMap, TrustError, columns_matrix, submodule


# free modules --------------------------------------------------------------


def free_module(algebra, gen_degrees, lo: int | None = None, hi: int | None = None,
                name: str = "") -> GradedModule:
    """The free module on generators of the given degrees, cut to ``[lo, hi]``.

    The basis in degree ``d`` lists, generator by generator, the normal-form
    words of degree ``d - g``.
    """
    alg = get_algebra(algebra)
    st = alg.structure
    gens = list(gen_degrees)
    sd = alg.socle_degree
    if lo is None:
        lo = min(gens) if gens else 0
    if hi is None:
        hi = max(gens) + sd if gens else lo
    basis = {}
    for d in range(lo, hi + 1):
        basis[d] = [(i, w) for i, g in enumerate(gens) if 0 <= d - g <= sd for w in st.basis[d - g]]
    mult = {}
    for gi, (gname, gd) in enumerate(alg.generators):
        for w in st.flat:
            coords = st.reduce_word((gi,) + w) if alg.word_degree(w) + gd <= sd else []
            deg = alg.word_degree(w) + gd
            mult[gname, w] = [st.basis[deg][k] for k in np.flatnonzero(coords)] if len(coords) else []

    def act(gname, key):
        i, w = key
        return [(i, v) for v in mult[gname, w]]

    complete = not gens or (hi >= max(gens) + sd and lo <= min(gens))
    label = lambda key: f"{alg.word_name(key[1])}.g{key[0]}"
    return GradedModule.from_basis(alg, basis, act, lo, hi, label=label,
                                   bounded_below=lo <= (min(gens) if gens else lo),
                                   bounded_above=complete, name=name or "free")


def regular_module(algebra) -> GradedModule:
    alg = get_algebra(algebra)
    m = free_module(alg, [0], name="B")
    m.labels = [[alg.word_name(w) for w in ws] for ws in alg.structure.basis]
    return m


# tensor products -------------------------------------------------------------


def _cap(x: GradedModule) -> float:
    return INF if x.bounded_above else x.hi


def tensor(m: GradedModule, n: GradedModule, name: str = "") -> GradedModule:
    """Tensor product over F2 with the diagonal (Cartan) action."""
    if m.algebra is not n.algebra:
        raise ValueError("algebra mismatch in tensor")
    if not (m.bounded_below and n.bounded_below):
        raise ValueError("tensor needs bounded-below inputs; cut unbounded modules to finite subquotients first")
    alg = m.algebra
    lo = m.lo + n.lo
    # bottoms of the supports govern how far the product is complete
    a = m.bottom if m.bottom is not None else m.hi
    c = n.bottom if n.bottom is not None else n.hi
    hi = min(_cap(m) + c, _cap(n) + a, m.hi + n.hi)
    hi = int(max(hi, lo))
    t_m, t_n = m.effective_trust()[1], n.effective_trust()[1]
    thi = min(t_m + c, t_n + a, hi)
    if thi < lo:
        raise TrustError("tensor product has an empty trusted interval")
    # block layout of each degree: list of (left degree, offset)
    layout = {}
    dims = []
    for d in range(lo, hi + 1):
        off = 0
        blocks = []
        for i in range(m.lo, m.hi + 1):
            j = d - i
            if m.dim(i) and n.dim(j):
                blocks.append((i, off))
                off += m.dim(i) * n.dim(j)
        layout[d] = dict(blocks)
        dims.append(off)
    actions = {}
    for gname, gd in alg.generators:
        terms = alg.coproduct[gname]
        per = {}
        for d in range(lo, hi - gd + 1):
            out = np.zeros((dims[d + gd - lo], dims[d - lo]), dtype=np.uint8)
            for i, off in layout[d].items():
                j = d - i
                sz = m.dim(i) * n.dim(j)
                for lw, rw in terms:
                    p, q = alg.word_degree(lw), alg.word_degree(rw)
                    toff = layout[d + gd].get(i + p)
                    if toff is None:
                        continue
                    left = m.word_action(lw, i)
                    right = n.word_action(rw, j)
                    if left.is_zero() or right.is_zero():
                        continue
                    blk = np.kron(left.to_dense(), right.to_dense())
                    out[toff:toff + blk.shape[0], off:off + sz] ^= blk
            per[d] = BitMatrix.from_dense(out)
        actions[gname] = per
    labels = None
    if m.labels is not None and n.labels is not None:
        labels = []
        for d in range(lo, hi + 1):
            row = []
            for i in layout[d]:
                row.extend(f"{x}|{y}" for x in m.labels[i - m.lo] for y in n.labels[d - i - n.lo])
            labels.append(row)
    return GradedModule(alg, lo, dims, actions, trusted=(lo, int(thi)), labels=labels,
                        bounded_below=True, bounded_above=m.bounded_above and n.bounded_above and hi == m.hi + n.hi,
                        name=name or f"({m.name}x{n.name})")


def tensor_map(f: ModuleMap, n: GradedModule) -> ModuleMap:
    """``f (x) 1_N : M (x) N -> M' (x) N`` for a degree-preserving map ``f``."""
    if f.shift:
        raise ValueError("tensor_map needs a degree-preserving map")
    src, tgt = tensor(f.source, n), tensor(f.target, n)
    blocks = {}
    for d in src.degrees:
        out = np.zeros((tgt.dim(d), src.dim(d)), dtype=np.uint8)
        for i in range(f.source.lo, f.source.hi + 1):
            j = d - i
            if not (f.source.dim(i) and n.dim(j) and f.target.dim(i)):
                continue
            blk = np.kron(f.block(i).to_dense(), np.eye(n.dim(j), dtype=np.uint8))
            r = tensor_index(f.target, n, d, i, 0, 0)
            c = tensor_index(f.source, n, d, i, 0, 0)
            if r + blk.shape[0] <= tgt.dim(d):
                out[r:r + blk.shape[0], c:c + blk.shape[1]] = blk
        blocks[d] = BitMatrix.from_dense(out)
    return ModuleMap(src, tgt, blocks, name=f"{f.name}x1")


def tensor_index(m: GradedModule, n: GradedModule, d: int, i: int, ki: int, kj: int) -> int:
    """Position of ``m_i[ki] (x) n_{d-i}[kj]`` in the tensor basis of degree ``d``."""
    off = 0
    for a in range(m.lo, i):
        off += m.dim(a) * n.dim(d - a)
    return off + ki * n.dim(d - i) + kj


# minimal covers and resolutions --------------------------------------------


@dataclass
class Cover:
    generator_degrees: list[int]
    free: GradedModule
    map: ModuleMap
    kernel: GradedModule
    kernel_inclusion: ModuleMap
    generator_vectors: list[np.ndarray] = field(default_factory=list)


def indecomposables(m: GradedModule, d: int) -> list[int]:
    """Standard basis indices of degree ``d`` completing the decomposables."""
    n = m.dim(d)
    cols = [m.action(g, d - gd) for g, gd in m.algebra.generators if m.dim(d - gd)]
    if not cols:
        return list(range(n))
    span = column_space(hstack(cols))
    return complement_indices(span, n)


def minimal_cover(m: GradedModule, shrink: bool = True) -> Cover:
    """Minimal free module mapping onto ``m`` in its window, and the kernel."""
    if not m.bounded_below:
        raise ValueError("minimal_cover needs a bounded-below module")
    alg = m.algebra
    if m.bounded_above:
        m = m.extend(m.lo, m.hi + alg.socle_degree)
    gens: list[int] = []
    vecs: list[np.ndarray] = []
    for d in m.degrees:
        for idx in indecomposables(m, d):
            gens.append(d)
            v = np.zeros(m.dim(d), dtype=np.uint8)
            v[idx] = 1
            vecs.append(v)
    free = free_module(alg, gens, m.lo, m.hi, name=f"F({m.name})")
    if m.bounded_above:
        free.bounded_above = True
    st = alg.structure
    blocks = {}
    for d in m.degrees:
        cols = []
        for i, g in enumerate(gens):
            if not 0 <= d - g <= alg.socle_degree:
                continue
            for w in st.basis[d - g]:
                cols.append((m.word_action(w, g).to_dense() @ vecs[i]) % 2)
        blocks[d] = columns_matrix(cols, m.dim(d))
    cover = ModuleMap(free, m, blocks, name="cover")
    kern, inc = cover.kernel()
    kern.name = f"Omega({m.name})"
    kern.labels = None
    if m.bounded_above:
        kern.bounded_above = True
        kern.trusted = kern.window
        kern = kern.trim()
    elif shrink:
        thi = m.trusted[1] - alg.socle_degree
        if thi < m.lo:
            raise TrustError(f"loops of {m!r} leaves no trusted degrees")
        kern.trusted = (m.lo, thi)
    return Cover(gens, free, cover, kern, inc, vecs)


def loops(m: GradedModule) -> GradedModule:
    """Reduced model of the loop module: the kernel of the minimal free cover."""
    return minimal_cover(m).kernel


def augmentation_ideal(algebra) -> GradedModule:
    alg = get_algebra(algebra)
    return minimal_cover(trivial_module(alg)).kernel.trim()


def inverse_augmentation(algebra) -> GradedModule:
    """Cokernel of the socle inclusion F2 -> Sigma^{-d} B."""
    from .module import quotient, suspend
    alg = get_algebra(algebra)
    b = suspend(regular_module(alg), -alg.socle_degree)
    bases = {d: BitMatrix(b.dim(d), 0) for d in b.degrees}
    bases[0] = BitMatrix.identity(1)
    q, _ = quotient(b, bases, name="Iinv")
    return q.trim()


def trivial_module(algebra, degree: int = 0) -> GradedModule:
    return GradedModule(get_algebra(algebra), degree, [1], bounded_above=True, name="F2",
                        labels=[["1"]])


def inverse_loops(m: GradedModule) -> GradedModule:
    from .margolis import reduced_part
    iinv = inverse_augmentation(m.algebra)
    return reduced_part(tensor(iinv, m)).reduced


@dataclass
class Resolution:
    base: GradedModule
    covers: list[Cover]

    @property
    def s_max(self) -> int:
        return len(self.covers) - 1

    def generator_degrees(self, s: int) -> list[int]:
        return self.covers[s].generator_degrees

    def trusted_top(self, s: int) -> float:
        if self.base.bounded_above:
            return INF
        return self.base.trusted[1] - self.base.algebra.socle_degree * s

    def differential(self, s: int) -> list[list[tuple[int, np.ndarray]]]:
        """Images of stage-``s`` generators in stage ``s-1``, as algebra coefficients.

        Entry ``[j]`` lists ``(i, coords)`` with ``coords`` the flat algebra
        coordinates of the coefficient on stage-``s-1`` generator ``i``.
        """
        alg = self.base.algebra
        st = alg.structure
        prev = self.covers[s - 1]
        cur = self.covers[s]
        out = []
        for j, g in enumerate(cur.generator_degrees):
            # generator j maps to vector in kernel of prev, i.e. in prev.free
            vec_k = cur.generator_vectors[j]
            vec_f = (prev.kernel_inclusion.block(g).to_dense() @ vec_k) % 2
            terms = []
            pos = 0
            for i, gi in enumerate(prev.generator_degrees):
                if not 0 <= g - gi <= alg.socle_degree:
                    continue
                ws = st.basis[g - gi]
                coeff = np.zeros(st.dimension, dtype=np.uint8)
                for k, w in enumerate(ws):
                    if vec_f[pos + k]:
                        coeff[st.offset[g - gi] + k] = 1
                pos += len(ws)
                if coeff.any():
                    terms.append((i, coeff))
            out.append(terms)
        return out

    def stage_records(self) -> list[dict]:
        return [{"s": s, "generator_degrees": list(c.generator_degrees)} for s, c in enumerate(self.covers)]


def minimal_resolution(m: GradedModule, s_max: int) -> Resolution:
    covers = []
    cur = m
    for s in range(s_max + 1):
        if not cur.bounded_above and cur.trusted[1] < cur.lo:
            raise TrustError(f"resolution stage {s} has no trusted degrees")
        cov = minimal_cover(cur, shrink=s < s_max)
        covers.append(cov)
        cur = cov.kernel
        if s < s_max and cur.is_zero():
            # free module: the resolution stops
            break
    return Resolution(m, covers)


def ext_dim(m: GradedModule, n: GradedModule, s: int, t: int, *, res: Resolution | None = None) -> int:
    """dim Ext^{s,t}(m, n): cohomology of Hom(F_*, n) with F_s generators in degree g
    contributing n in degree g - t.

    When ``n`` is infinite, the cochains are cut at generator degrees up to
    the trusted range; callers should confirm stability under window growth.
    """
    alg = m.algebra
    if res is None:
        res = minimal_resolution(m, s + 1)
    if len(res.covers) <= s:
        return 0  # resolution stopped: m has projective dimension < s
    top = res.trusted_top(min(s + 1, len(res.covers) - 1))
    if n.bounded_above:
        need = n.hi + t
        if need > top:
            raise TrustError(f"Ext^({s},{t}) needs generators up to degree {need}, trusted only to {top}")
        cut = need
    else:
        cut = min(top, n.effective_trust()[1] + t)

    def cochain(stage):
        if stage < 0 or stage >= len(res.covers):
            return [], []
        idx = [i for i, g in enumerate(res.generator_degrees(stage)) if g <= cut and n.dim(g - t)]
        offs = []
        o = 0
        for i in idx:
            offs.append(o)
            o += n.dim(res.generator_degrees(stage)[i] - t)
        return idx, offs

    def delta(stage):
        """Coboundary C^stage -> C^{stage+1}."""
        src_idx, src_off = cochain(stage)
        tgt_idx, tgt_off = cochain(stage + 1)
        rows = sum(n.dim(res.generator_degrees(stage + 1)[j] - t) for j in tgt_idx)
        cols = sum(n.dim(res.generator_degrees(stage)[i] - t) for i in src_idx)
        out = np.zeros((rows, cols), dtype=np.uint8)
        if not rows or not cols:
            return out
        d = res.differential(stage + 1)
        src_pos = {i: k for k, i in enumerate(src_idx)}
        for tj, j in enumerate(tgt_idx):
            gj = res.generator_degrees(stage + 1)[j]
            for i, coeff in d[j]:
                if i not in src_pos:
                    continue
                gi = res.generator_degrees(stage)[i]
                k = src_pos[i]
                mat = n.element_action(coeff, gi - t, gj - gi).to_dense()
                r0 = tgt_off[tj]
                c0 = src_off[k]
                out[r0:r0 + mat.shape[0], c0:c0 + mat.shape[1]] ^= mat
        return out

    idx, _ = cochain(s)
    dim_c = sum(n.dim(res.generator_degrees(s)[i] - t) for i in idx)
    if dim_c == 0:
        return 0
    d_out = delta(s) if s + 1 < len(res.covers) else np.zeros((0, dim_c), dtype=np.uint8)
    ker = dim_c - rank(BitMatrix.from_dense(d_out))
    im = rank(BitMatrix.from_dense(delta(s - 1))) if s > 0 else 0
    return ker - im


# localization -------------------------------------------------------------------


def localize(m: GradedModule, k: int, hi: int | None = None) -> GradedModule:
    """L_0 M = reduced(Sigma R (x) M), L_1 M = reduced(P_0 (x) M).

    ``hi`` asks for the result to be trusted up to that degree; the unit
    module is built on a window just wide enough for it.
    """
    from .catalog import make
    from .margolis import reduced_part
    if k not in (0, 1):
        raise ValueError("k must be 0 or 1")
    if not m.bounded_below:
        raise ValueError("localize needs a bounded-below module")
    a = m.bottom if m.bottom is not None else m.lo
    c = 0 if k == 0 else -1
    sd = m.algebra.socle_degree
    t_m = m.effective_trust()[1]
    if hi is None:
        hi = t_m + c - sd if t_m != INF else max(m.hi, a) + 24
    if t_m != INF and hi > t_m + c - sd:
        raise TrustError(f"L{k} of {m.name} is trusted only to degree {t_m + c - sd}")
    top = max(hi + sd - a, 8)
    if k == 0:
        unit = make("R", algebra=m.algebra, lo=-1, hi=top, suspension=1)
    else:
        unit = make("P0", algebra=m.algebra, lo=-1, hi=top)
    out = reduced_part(tensor(unit, m)).reduced
    out.name = f"L{k}({m.name})"
    return out
