"""Margolis homology, freeness detection, free-summand splitting and stable comparisons."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import E1
from .functors import free_module
from .gf2 import (BitMatrix, column_pivots, column_space, complement_indices, extend_indices,
                  hstack, kernel_basis, rank, solve_matrix)
from .module import INF, GradedModule, ModuleMap, TrustError, columns_matrix, rows_matrix, submodule


class RefusalError(ValueError):
    """The question is not answerable by the criterion for this kind of module."""


class UnclassifiableError(ValueError):
    """Neither an explicit isomorphism search nor the invariants decide the question."""


def q_degree(m: GradedModule, k: int) -> int:
    return 1 if k == 0 else 3


def q_operator(m: GradedModule, k: int) -> ModuleMap:
    s = q_degree(m, k)
    return ModuleMap(m, m, {d: m.q_matrix(k, d) for d in m.degrees}, shift=s, name=f"Q{k}")


@dataclass
class MargolisHomology:
    k: int
    dims: dict[int, int]
    representatives: dict[int, BitMatrix]
    trusted: tuple[int, int]

    def total(self, lo=None, hi=None) -> int:
        lo = self.trusted[0] if lo is None else lo
        hi = self.trusted[1] if hi is None else hi
        return sum(v for d, v in self.dims.items() if lo <= d <= hi)

    def support(self) -> list[int]:
        return [d for d in range(self.trusted[0], self.trusted[1] + 1) if self.dims.get(d)]

    def as_dict(self) -> dict:
        degs = list(range(self.trusted[0], self.trusted[1] + 1))
        return {"k": self.k, "degrees": degs, "dims": [self.dims.get(d, 0) for d in degs],
                "trusted": {"lo": self.trusted[0], "hi": self.trusted[1]}}


def homology_trust(m: GradedModule, k: int) -> tuple[int, int]:
    s = q_degree(m, k)
    tlo, thi = m.effective_trust()
    lo = m.lo if tlo == -INF else tlo + s
    hi = m.hi if thi == INF else thi - s
    return int(max(lo, m.lo)), int(min(hi, m.hi))


def margolis_homology(m: GradedModule, k: int) -> MargolisHomology:
    s = q_degree(m, k)
    dims = {}
    reps = {}
    for d in m.degrees:
        n = m.dim(d)
        if n == 0:
            dims[d] = 0
            reps[d] = BitMatrix(0, 0)
            continue
        out = m.q_matrix(k, d)
        ker = kernel_basis(out).T
        inc = m.q_matrix(k, d - s) if m.dim(d - s) else BitMatrix(n, 0)
        im = column_space(inc) if inc.cols else inc
        chosen = extend_indices(im, ker) if ker.cols else []
        reps[d] = ker.select_columns(chosen)
        dims[d] = len(chosen)
    return MargolisHomology(k, dims, reps, homology_trust(m, k))


def is_stably_free(m: GradedModule) -> bool:
    if not m.bounded_below:
        raise RefusalError("module is a two-sided cut of an unbounded-below module; "
                           "vanishing Margolis homology does not imply freeness there")
    return all(margolis_homology(m, k).total() == 0 for k in (0, 1))


# splitting off free summands ------------------------------------------------


@dataclass
class SplitResult:
    free_generator_degrees: list[int]
    reduced: GradedModule
    free: GradedModule
    inclusion: ModuleMap  # free part -> m
    retraction: ModuleMap  # m -> free part
    reduced_inclusion: ModuleMap  # reduced -> m
    generator_vectors: list[np.ndarray] = field(default_factory=list)

    def generator_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.free_generator_degrees:
            out[g] = out.get(g, 0) + 1
        return out


def reduced_part(m: GradedModule) -> SplitResult:
    """Split ``m`` as F + M^red, F free, with the top class acting as zero on M^red."""
    if not m.bounded_below:
        raise ValueError("reduced_part needs a bounded-below module")
    alg = m.algebra
    st = alg.structure
    sd = alg.socle_degree
    finite = m.bounded_above
    if not finite and m.trusted[1] - sd < m.lo:
        raise TrustError(f"reduced part of {m!r} has no trusted degrees")
    gens: list[int] = []
    vecs: list[np.ndarray] = []
    for g in range(m.lo, m.hi - sd + 1):
        if not m.dim(g):
            continue
        tau = m.top_action(g)
        if tau.is_zero():
            continue
        for j in column_pivots(tau):
            v = np.zeros(m.dim(g), dtype=np.uint8)
            v[j] = 1
            gens.append(g)
            vecs.append(v)
    free = free_module(alg, gens, m.lo, m.hi, name="free part")
    # inclusion of the free part, degreewise
    inc_blocks = {}
    for d in m.degrees:
        cols = []
        for i, g in enumerate(gens):
            if 0 <= d - g <= sd:
                for w in st.basis[d - g]:
                    cols.append((m.word_action(w, g).to_dense() @ vecs[i]) % 2)
        inc_blocks[d] = columns_matrix(cols, m.dim(d))
    # functionals lambda_i on degree g_i + sd, dual to tau v_i against a basis of F
    lam: dict[int, np.ndarray] = {}
    by_degree: dict[int, list[int]] = {}
    for i, g in enumerate(gens):
        by_degree.setdefault(g, []).append(i)
    for g, idxs in by_degree.items():
        top = g + sd
        fb = inc_blocks[top]
        n = m.dim(top)
        comp = complement_indices(fb, n)
        full = hstack([fb, BitMatrix.identity(n).select_columns(comp)])
        inv = solve_matrix(full, BitMatrix.identity(n))
        if inv is None:
            raise RuntimeError("free part is not a direct summand; input is not a module")
        inv_d = inv.to_dense()
        # column position of tau v_i inside fb: generator block, top word (only word of degree sd)
        for i in idxs:
            pos = sum(len(st.basis[top - gens[k]]) for k in range(i) if 0 <= top - gens[k] <= sd)
            lam[i] = inv_d[pos]
    dual = st.dual_basis()
    # retraction blocks
    ret_blocks = {}
    for d in m.degrees:
        rows = []
        for i, g in enumerate(gens):
            e = d - g
            if not 0 <= e <= sd:
                continue
            for k, _ in enumerate(st.basis[e]):
                flat = st.offset[e] + k
                c = dual[flat]
                cdeg = sd - e
                act = m.element_action(c, d, cdeg).to_dense()
                rows.append((lam[i] @ act) % 2)
        ret_blocks[d] = rows_matrix(rows, m.dim(d))
    inclusion = ModuleMap(free, m, inc_blocks, name="free inclusion")
    retraction = ModuleMap(m, free, ret_blocks, name="retraction")
    red_bases = {d: kernel_basis(ret_blocks[d]).T for d in m.degrees}
    red, red_inc = submodule(m, red_bases, name=f"red({m.name})")
    if finite:
        red.bounded_above = True
        red.trusted = red.window
    else:
        red.trusted = (m.trusted[0], m.trusted[1] - sd)
    return SplitResult(gens, red, free, inclusion, retraction, red_inc, vecs)


def reduced(m: GradedModule) -> GradedModule:
    return reduced_part(m).reduced


# comparisons --------------------------------------------------------------


def _intersect(*intervals):
    lo = max(i[0] for i in intervals)
    hi = min(i[1] for i in intervals)
    return lo, hi


def induces_stable_iso(f: ModuleMap, lo: int | None = None, hi: int | None = None) -> bool:
    """Whether ``f`` induces isomorphisms on both Margolis homologies in the trusted overlap."""
    s, t = f.source, f.target
    if not (s.bounded_below and t.bounded_below):
        raise RefusalError("stable isomorphism test needs bounded-below modules")
    for k in (0, 1):
        hs = margolis_homology(s, k)
        ht = margolis_homology(t, k)
        a, b = _intersect((hs.trusted[0], hs.trusted[1]),
                          (ht.trusted[0] - f.shift, ht.trusted[1] - f.shift))
        if lo is not None:
            a = max(a, lo)
        if hi is not None:
            b = min(b, hi)
        if a > b:
            raise TrustError("no trusted degrees to compare")
        qs = q_degree(t, k)
        for d in range(a, b + 1):
            e = d + f.shift
            if hs.dims[d] != ht.dims[e]:
                return False
            if hs.dims[d] == 0:
                continue
            img = f.block(d) @ hs.representatives[d]
            inc = t.q_matrix(k, e - qs) if t.dim(e - qs) else BitMatrix(t.dim(e), 0)
            both = hstack([inc, img])
            if rank(both) - rank(inc) != hs.dims[d]:
                return False
    return True


def hom_space(a: GradedModule, b: GradedModule, lo: int, hi: int, shift: int = 0) -> list[dict[int, np.ndarray]]:
    """Basis of module maps ``a -> b`` (degree-preserving up to ``shift``) on degrees ``[lo, hi]``."""
    layout = []
    off = 0
    for d in range(lo, hi + 1):
        r, c = b.dim(d + shift), a.dim(d)
        layout.append((d, off, r, c))
        off += r * c
    nvar = off
    if nvar == 0:
        return []
    pos = {d: (o, r, c) for d, o, r, c in layout}
    eqs = []
    for g, gd in a.algebra.generators:
        for d in range(lo, hi - gd + 1):
            o1, r1, c1 = pos[d]
            o2, r2, c2 = pos[d + gd]
            if r2 == 0 or c1 == 0:
                continue
            A = a.action(g, d).to_dense()  # c2 x c1
            B = b.action(g, d + shift).to_dense()  # r2 x r1
            # X_{d+g} A - B X_d = 0 ; X stored row-major: X[p, q] at o + p*c + q
            block = np.zeros((r2 * c1, nvar), dtype=np.uint8)
            for p in range(r2):
                for q in range(c1):
                    row = p * c1 + q
                    for s_ in np.flatnonzero(A[:, q]):
                        block[row, o2 + p * c2 + s_] ^= 1
                    for s_ in np.flatnonzero(B[p, :]):
                        block[row, o1 + s_ * c1 + q] ^= 1
            eqs.append(block)
    if eqs:
        system = BitMatrix.from_dense(np.vstack(eqs))
        ker = kernel_basis(system).to_dense()
    else:
        ker = np.eye(nvar, dtype=np.uint8)
    out = []
    for v in ker:
        out.append({d: v[o:o + r * c].reshape(r, c) for d, o, r, c in layout})
    return out


def find_isomorphism(a: GradedModule, b: GradedModule, lo: int, hi: int, *, seed: int = 0,
                     tries: int = 400, exhaustive_limit: int = 16):
    """Search for a graded isomorphism of the truncations to ``[lo, hi]``.

    Returns ``(status, blocks)``: status True (found), False (none exists) or
    None (random search inconclusive).
    """
    if a.algebra is not b.algebra:
        return False, None
    if any(a.dim(d) != b.dim(d) for d in range(lo, hi + 1)):
        return False, None
    basis = hom_space(a, b, lo, hi)
    if all(a.dim(d) == 0 for d in range(lo, hi + 1)):
        return True, {}
    if not basis:
        return False, None

    def is_iso(blocks):
        return all(rank(BitMatrix.from_dense(blocks[d])) == a.dim(d) for d in range(lo, hi + 1))

    def combo(bits):
        out = {}
        for d in range(lo, hi + 1):
            acc = np.zeros_like(basis[0][d])
            for bit, h in zip(bits, basis):
                if bit:
                    acc ^= h[d]
            out[d] = acc
        return out

    r = len(basis)
    if r <= exhaustive_limit:
        for x in range(1, 2 ** r):
            bits = [(x >> i) & 1 for i in range(r)]
            blocks = combo(bits)
            if is_iso(blocks):
                return True, blocks
        return False, None
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        blocks = combo(rng.integers(0, 2, r))
        if is_iso(blocks):
            return True, blocks
    return None, None


def dims_equal(a: GradedModule, b: GradedModule, lo: int, hi: int) -> bool:
    return all(a.dim(d) == b.dim(d) for d in range(lo, hi + 1))


def _compare_top(m: GradedModule) -> float:
    return m.hi if m.bounded_above else m.trusted[1]


def stable_class_equal(m: GradedModule, n: GradedModule) -> bool:
    """Decide stable equivalence by comparing reduced parts.

    Reduced parts are compared degreewise, then by Margolis homology. Local
    modules with one-dimensional homology are settled by their Picard
    invariants; small inputs by an explicit isomorphism search. Anything
    else raises :class:`UnclassifiableError`.
    """
    from .picard import classify_local, local_profile
    if m.algebra is not n.algebra:
        return False
    rm, rn = reduced(m), reduced(n)
    lo = min(rm.lo, rn.lo)
    hi = int(min(_compare_top(rm), _compare_top(rn)))
    if rm.bounded_above and rn.bounded_above:
        hi = max(rm.hi, rn.hi)
    if hi < lo:
        raise TrustError("no trusted degrees to compare")
    if not dims_equal(rm, rn, lo, hi):
        return False
    hms = [(margolis_homology(rm, k), margolis_homology(rn, k)) for k in (0, 1)]
    for hm, hn in hms:
        a, b = _intersect(hm.trusted, hn.trusted)
        if any(hm.dims.get(d, 0) != hn.dims.get(d, 0) for d in range(a, b + 1)):
            return False
    if all(rm.dim(d) == 0 for d in range(lo, hi + 1)):
        return True
    k = local_profile(rm)
    if k is not None and k == local_profile(rn):
        return classify_local(rm, k).key() == classify_local(rn, k).key()
    if max(rm.dim(d) for d in range(lo, hi + 1)) <= 4:
        status, _ = find_isomorphism(rm, rn, lo, hi)
        if status is not None:
            return status
    raise UnclassifiableError("cannot decide stable equivalence for these inputs")
