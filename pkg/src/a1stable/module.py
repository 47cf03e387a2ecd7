"""Graded modules over A(1) and E(1) stored on finite degree windows.

A module keeps, for each degree ``d`` in its window ``[lo, hi]``, a dimension
and for each algebra generator ``g`` an action matrix from degree ``d`` to
degree ``d + |g|`` (column ``j`` is the image of basis vector ``j``).  Infinite
modules are cut to a window; the ``trusted`` interval records where the stored
data agree with the untruncated module.  ``bounded_below``/``bounded_above``
say whether the window edges are genuine edges of the module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable

import numpy as np

from .algebra import A1, E1, AlgebraDescriptor, Word, get_algebra
from .gf2 import BitMatrix, complement_indices, hstack, kernel_basis, rank, solve_matrix

INF = math.inf


def columns_matrix(cols, nrows: int) -> BitMatrix:
    """BitMatrix whose columns are the given 0/1 vectors of length ``nrows``."""
    if not len(cols):
        return BitMatrix(nrows, 0)
    return BitMatrix.from_dense(np.array(cols, dtype=np.uint8).reshape(len(cols), nrows).T)


def rows_matrix(rows, ncols: int) -> BitMatrix:
    if not len(rows):
        return BitMatrix(0, ncols)
    return BitMatrix.from_dense(np.array(rows, dtype=np.uint8).reshape(len(rows), ncols))


class TrustError(ValueError):
    """Raised when an operation would leave no trusted degrees."""


@dataclass
class ValidationReport:
    violations: list[tuple[str, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        if self.ok:
            return "ValidationReport(ok)"
        return f"ValidationReport({self.violations})"


class GradedModule:
    def __init__(
        self,
        algebra,
        lo: int,
        dims: Iterable[int],
        actions: dict | None = None,
        *,
        trusted: tuple[int, int] | None = None,
        labels: list[list[str]] | None = None,
        bounded_below: bool = True,
        bounded_above: bool = False,
        name: str = "",
    ):
        self.algebra = get_algebra(algebra)
        self.lo = int(lo)
        self.dims = [int(x) for x in dims]
        self.hi = self.lo + len(self.dims) - 1
        self.bounded_below = bounded_below
        self.bounded_above = bounded_above
        self.name = name
        if trusted is None:
            trusted = (self.lo, self.hi)
        self.trusted = (int(trusted[0]), int(trusted[1]))
        if self.dims and not (self.lo <= self.trusted[0] and self.trusted[1] <= self.hi):
            if self.trusted[0] <= self.trusted[1]:
                raise ValueError(f"trusted {self.trusted} not inside window {self.window}")
        if labels is not None and len(labels) != len(self.dims):
            raise ValueError("labels must have one list per window degree")
        self.labels = labels
        actions = actions or {}
        self._act: dict[str, dict[int, BitMatrix]] = {}
        for g, gd in self.algebra.generators:
            given = actions.get(g, {})
            per = {}
            for d in range(self.lo, self.hi - gd + 1):
                shape = (self.dim(d + gd), self.dim(d))
                m = given.get(d)
                if m is None:
                    m = BitMatrix(*shape)
                elif not isinstance(m, BitMatrix):
                    m = BitMatrix.from_dense(np.asarray(m, dtype=np.uint8).reshape(shape))
                if m.shape != shape:
                    raise ValueError(f"{g} at degree {d}: shape {m.shape}, expected {shape}")
                per[d] = m
            self._act[g] = per
        self._word_cache: dict = {}

    # basic data ---------------------------------------------------------

    @property
    def window(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def dim(self, d: int) -> int:
        if self.lo <= d <= self.hi:
            return self.dims[d - self.lo]
        return 0

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self, lo=None, hi=None) -> bool:
        lo = self.lo if lo is None else lo
        hi = self.hi if hi is None else hi
        return all(self.dim(d) == 0 for d in range(lo, hi + 1))

    def series(self) -> dict[int, int]:
        return {d: self.dim(d) for d in self.degrees}

    def support(self) -> list[int]:
        return [d for d in self.degrees if self.dim(d)]

    @property
    def bottom(self) -> int | None:
        s = self.support()
        return s[0] if s else None

    @property
    def finite(self) -> bool:
        return self.bounded_below and self.bounded_above

    def effective_trust(self) -> tuple[float, float]:
        """Trusted interval with infinite ends where the window edge is genuine."""
        lo = -INF if self.bounded_below else self.trusted[0]
        hi = INF if self.bounded_above else self.trusted[1]
        return lo, hi

    def label(self, d: int, i: int) -> str:
        if self.labels is not None:
            return self.labels[d - self.lo][i]
        return f"e{d}_{i}"

    def __repr__(self) -> str:
        nm = f" {self.name}" if self.name else ""
        return (f"<GradedModule{nm} over {self.algebra.name} window={self.window} "
                f"trusted={self.trusted} dims={self.dims}>")

    # actions ------------------------------------------------------------

    def action(self, gen: str, d: int) -> BitMatrix:
        gd = self.algebra.degree_of(gen)
        m = self._act[gen].get(d)
        if m is None:
            return BitMatrix(self.dim(d + gd), self.dim(d))
        return m

    def word_action(self, word: Word, d: int) -> BitMatrix:
        """Matrix of a word of generators acting from degree ``d`` (rightmost first)."""
        key = (word, d)
        hit = self._word_cache.get(key)
        if hit is not None:
            return hit
        if not word:
            out = BitMatrix.identity(self.dim(d))
        else:
            g = self.algebra.generators[word[0]]
            inner = self.word_action(word[1:], d)
            out = self.action(g[0], d + self.algebra.word_degree(word[1:])) @ inner
        self._word_cache[key] = out
        return out

    def element_action(self, coords: np.ndarray, d: int, degree: int) -> BitMatrix:
        """Action of an algebra element (flat coordinates, homogeneous of ``degree``)."""
        st = self.algebra.structure
        out = BitMatrix(self.dim(d + degree), self.dim(d))
        for i in np.flatnonzero(coords):
            if st.flat_degree[i] != degree:
                raise ValueError("element is not homogeneous of the stated degree")
            out = out + self.word_action(st.flat[i], d)
        return out

    def top_action(self, d: int) -> BitMatrix:
        return self.word_action(self.algebra.top_word, d)

    def q_matrix(self, k: int, d: int) -> BitMatrix:
        """Milnor primitive Q_k acting from degree ``d``."""
        if self.algebra is E1:
            return self.action("Q0" if k == 0 else "Q1", d)
        if k == 0:
            return self.action("Sq1", d)
        return self.word_action((0, 1), d) + self.word_action((1, 0), d)

    # validation ---------------------------------------------------------

    def validate(self) -> ValidationReport:
        rep = ValidationReport()
        alg = self.algebra
        for name, lhs, rhs in alg.relations:
            deg = alg.word_degree(lhs[0])
            for d in range(self.lo, self.hi - deg + 1):
                total = BitMatrix(self.dim(d + deg), self.dim(d))
                for w in lhs + rhs:
                    total = total + self.word_action(w, d)
                if not total.is_zero():
                    rep.violations.append((name, d))
        return rep

    # constructors -------------------------------------------------------

    @classmethod
    def from_basis(
        cls,
        algebra,
        basis: dict[int, list[Hashable]],
        act: Callable[[str, Hashable], Iterable[Hashable]],
        lo: int,
        hi: int,
        *,
        label: Callable[[Hashable], str] | None = None,
        **kwargs,
    ) -> "GradedModule":
        """Build a module from basis keys per degree and a generator action on keys.

        ``act(gen, key)`` returns the keys of the image (summed mod 2); keys
        that fall outside the window are dropped.
        """
        alg = get_algebra(algebra)
        index = {d: {k: i for i, k in enumerate(basis.get(d, []))} for d in range(lo, hi + 1)}
        dims = [len(basis.get(d, [])) for d in range(lo, hi + 1)]
        actions = {}
        for g, gd in alg.generators:
            per = {}
            for d in range(lo, hi - gd + 1):
                src = basis.get(d, [])
                tgt = index[d + gd]
                m = np.zeros((len(tgt), len(src)), dtype=np.uint8)
                for j, key in enumerate(src):
                    for img in act(g, key):
                        i = tgt.get(img)
                        if i is None:
                            raise KeyError(f"{g}({key!r}) = {img!r} not in basis of degree {d + gd}")
                        m[i, j] ^= 1
                per[d] = BitMatrix.from_dense(m)
            actions[g] = per
        labels = None
        if label is not None:
            labels = [[label(k) for k in basis.get(d, [])] for d in range(lo, hi + 1)]
        return cls(alg, lo, dims, actions, labels=labels, **kwargs)

    @classmethod
    def zero(cls, algebra, lo: int = 0, hi: int = 0) -> "GradedModule":
        return cls(algebra, lo, [0] * (hi - lo + 1), bounded_above=True, name="0")

    def copy_with(self, **changes) -> "GradedModule":
        kw = dict(trusted=self.trusted, labels=self.labels, bounded_below=self.bounded_below,
                  bounded_above=self.bounded_above, name=self.name)
        kw.update(changes)
        return GradedModule(self.algebra, self.lo, self.dims, self._act, **kw)

    def actions_dict(self) -> dict[str, dict[int, BitMatrix]]:
        return {g: dict(per) for g, per in self._act.items()}

    # structural operations ----------------------------------------------

    def same_as(self, other: "GradedModule") -> bool:
        """Exact equality of the stored data (labels ignored)."""
        if self.algebra is not other.algebra or self.window != other.window or self.dims != other.dims:
            return False
        return all(self._act[g][d] == other._act[g][d] for g in self._act for d in self._act[g])

    def truncate(self, lo: int, hi: int) -> "GradedModule":
        """Restrict the window to ``[lo, hi]`` (a subquotient: data outside is dropped)."""
        lo = max(lo, self.lo)
        hi = min(hi, self.hi)
        dims = [self.dim(d) for d in range(lo, hi + 1)]
        actions = {g: {d: m for d, m in per.items() if lo <= d and d + self.algebra.degree_of(g) <= hi}
                   for g, per in self._act.items()}
        labels = self.labels[lo - self.lo:hi - self.lo + 1] if self.labels is not None else None
        bb = self.bounded_below and (lo == self.lo or all(self.dim(d) == 0 for d in range(self.lo, lo)))
        ba = self.bounded_above and (hi == self.hi or all(self.dim(d) == 0 for d in range(hi + 1, self.hi + 1)))
        tlo = max(self.trusted[0], lo)
        thi = min(self.trusted[1], hi)
        return GradedModule(self.algebra, lo, dims, actions, trusted=(tlo, thi), labels=labels,
                            bounded_below=bb, bounded_above=ba, name=self.name)

    def trim(self) -> "GradedModule":
        """Shrink the window to the support when both edges are genuine."""
        s = self.support()
        if not s:
            return GradedModule.zero(self.algebra, self.lo, self.lo)
        lo = s[0] if self.bounded_below else self.lo
        hi = s[-1] if self.bounded_above else self.hi
        out = self.truncate(lo, hi)
        if self.bounded_above and self.bounded_below:
            out.trusted = out.window
        return out

    def extend(self, lo: int, hi: int) -> "GradedModule":
        """Pad the window with zero degrees; only allowed across genuine edges."""
        lo, hi = min(lo, self.lo), max(hi, self.hi)
        if (lo < self.lo and not self.bounded_below) or (hi > self.hi and not self.bounded_above):
            raise ValueError("cannot extend a window across a cut")
        dims = [self.dim(d) for d in range(lo, hi + 1)]
        labels = None
        if self.labels is not None:
            labels = [self.labels[d - self.lo] if self.lo <= d <= self.hi else [] for d in range(lo, hi + 1)]
        trusted = (lo if self.bounded_below else self.trusted[0], hi if self.bounded_above else self.trusted[1])
        return GradedModule(self.algebra, lo, dims, self._act, trusted=trusted, labels=labels,
                            bounded_below=self.bounded_below, bounded_above=self.bounded_above,
                            name=self.name)

    def with_trusted(self, lo: float, hi: float) -> "GradedModule":
        lo = int(max(lo, self.lo))
        hi = int(min(hi, self.hi))
        if lo > hi:
            raise TrustError(f"empty trusted interval for {self!r}")
        return self.copy_with(trusted=(lo, hi))


def suspend(m: GradedModule, k: int) -> GradedModule:
    actions = {g: {d + k: mat for d, mat in per.items()} for g, per in m._act.items()}
    name = m.name if k == 0 else f"S^{k}{m.name}"
    return GradedModule(m.algebra, m.lo + k, m.dims, actions,
                        trusted=(m.trusted[0] + k, m.trusted[1] + k), labels=m.labels,
                        bounded_below=m.bounded_below, bounded_above=m.bounded_above, name=name)


def direct_sum(*mods: GradedModule) -> GradedModule:
    if not mods:
        raise ValueError("direct_sum needs at least one module")
    alg = mods[0].algebra
    if any(m.algebra is not alg for m in mods):
        raise ValueError("algebra mismatch in direct_sum")
    lo = min(m.lo for m in mods)
    hi = max(m.hi for m in mods)
    tlo = max(m.effective_trust()[0] for m in mods)
    thi = min(m.effective_trust()[1] for m in mods)
    tlo = lo if tlo == -INF else int(tlo)
    thi = hi if thi == INF else int(thi)
    # a finite summand does not restrict where the sum is trusted, but an
    # unbounded one truncated below hi does
    for m in mods:
        if not m.bounded_above:
            thi = min(thi, m.hi)
    dims = [sum(m.dim(d) for m in mods) for d in range(lo, hi + 1)]
    actions = {}
    for g, gd in alg.generators:
        per = {}
        for d in range(lo, hi - gd + 1):
            blocks = [m.action(g, d) for m in mods]
            per[d] = _block_diag(blocks)
        actions[g] = per
    labels = None
    if all(m.labels is not None for m in mods):
        labels = [sum((m.labels[d - m.lo] if m.lo <= d <= m.hi else [] for m in mods), [])
                  for d in range(lo, hi + 1)]
    return GradedModule(alg, lo, dims, actions, trusted=(tlo, thi), labels=labels,
                        bounded_below=all(m.bounded_below for m in mods),
                        bounded_above=all(m.bounded_above for m in mods),
                        name="+".join(m.name for m in mods))


def _block_diag(blocks: list[BitMatrix]) -> BitMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = np.zeros((rows, cols), dtype=np.uint8)
    r = c = 0
    for b in blocks:
        if b.rows and b.cols:
            out[r:r + b.rows, c:c + b.cols] = b.to_dense()
        r += b.rows
        c += b.cols
    return BitMatrix.from_dense(out)


def dual(m: GradedModule) -> GradedModule:
    """The linear dual Hom(M, F2), graded in negative degrees."""
    lo, hi = -m.hi, -m.lo
    dims = [m.dim(-d) for d in range(lo, hi + 1)]
    actions = {}
    for g, gd in m.algebra.generators:
        per = {}
        for d in range(lo, hi - gd + 1):
            # g on the dual in degree d is the transpose of g from degree -d-|g|
            per[d] = m.action(g, -d - gd).T
        actions[g] = per
    labels = None
    if m.labels is not None:
        labels = [[f"{x}*" for x in m.labels[-d - m.lo]] for d in range(lo, hi + 1)]
    return GradedModule(m.algebra, lo, dims, actions, trusted=(-m.trusted[1], -m.trusted[0]),
                        labels=labels, bounded_below=m.bounded_above, bounded_above=m.bounded_below,
                        name=f"D{m.name}")


def restrict_to_e1(m: GradedModule) -> GradedModule:
    if m.algebra is not A1:
        raise ValueError("restriction to E(1) needs an A(1)-module")
    actions = {
        "Q0": {d: m.q_matrix(0, d) for d in range(m.lo, m.hi)},
        "Q1": {d: m.q_matrix(1, d) for d in range(m.lo, m.hi - 2)},
    }
    return GradedModule(E1, m.lo, m.dims, actions, trusted=m.trusted, labels=m.labels,
                        bounded_below=m.bounded_below, bounded_above=m.bounded_above,
                        name=f"{m.name}|E1")


# module maps -------------------------------------------------------------


def _known(m: GradedModule, d: int) -> bool:
    """Whether degree ``d`` of ``m`` is determined: inside the window or past a genuine edge."""
    if m.lo <= d <= m.hi:
        return True
    return (d > m.hi and m.bounded_above) or (d < m.lo and m.bounded_below)


class ModuleMap:
    """A degree-homogeneous linear map ``source_d -> target_{d+shift}``."""

    def __init__(self, source: GradedModule, target: GradedModule, blocks: dict | None = None,
                 shift: int = 0, name: str = ""):
        self.source = source
        self.target = target
        self.shift = shift
        self.name = name
        blocks = blocks or {}
        self.blocks: dict[int, BitMatrix] = {}
        for d in source.degrees:
            shape = (target.dim(d + shift), source.dim(d))
            b = blocks.get(d)
            if b is None:
                b = BitMatrix(*shape)
            elif not isinstance(b, BitMatrix):
                b = BitMatrix.from_dense(np.asarray(b, dtype=np.uint8).reshape(shape))
            if b.shape != shape:
                raise ValueError(f"block at degree {d} has shape {b.shape}, expected {shape}")
            self.blocks[d] = b

    def block(self, d: int) -> BitMatrix:
        b = self.blocks.get(d)
        if b is None:
            return BitMatrix(self.target.dim(d + self.shift), self.source.dim(d))
        return b

    def __repr__(self) -> str:
        return f"<ModuleMap {self.name or ''} {self.source.name} -> {self.target.name} shift={self.shift}>"

    def failures(self) -> list[tuple[str, int]]:
        """Degrees and generators where the commuting square fails."""
        out = []
        s, t = self.source, self.target
        for g, gd in s.algebra.generators:
            for d in s.degrees:
                e = d + self.shift
                if not (_known(s, d + gd) and _known(t, e) and _known(t, e + gd)):
                    continue
                left = self.block(d + gd) @ s.action(g, d)
                right = t.action(g, e) @ self.block(d)
                if left != right:
                    out.append((g, d))
        return out

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self after other``."""
        blocks = {d: self.block(d + other.shift) @ other.block(d) for d in other.source.degrees}
        return ModuleMap(other.source, self.target, blocks, other.shift + self.shift)

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        return self.compose(other)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        blocks = {d: self.block(d) + other.block(d) for d in self.source.degrees}
        return ModuleMap(self.source, self.target, blocks, self.shift)

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks.values())

    def rank(self, d: int) -> int:
        return rank(self.block(d))

    @classmethod
    def identity(cls, m: GradedModule) -> "ModuleMap":
        return cls(m, m, {d: BitMatrix.identity(m.dim(d)) for d in m.degrees}, name="id")

    def is_injective(self, lo: int, hi: int) -> bool:
        return all(self.rank(d) == self.source.dim(d) for d in range(lo, hi + 1))

    def is_surjective(self, lo: int, hi: int) -> bool:
        return all(self.rank(d) == self.target.dim(d + self.shift) for d in range(lo, hi + 1))

    def kernel(self) -> tuple[GradedModule, "ModuleMap"]:
        bases = {d: kernel_basis(self.block(d)).T for d in self.source.degrees}
        return submodule(self.source, bases)

    def image_bases(self) -> dict[int, BitMatrix]:
        out = {}
        for d in self.target.degrees:
            b = self.block(d - self.shift) if self.source.lo <= d - self.shift <= self.source.hi else None
            if b is None:
                out[d] = BitMatrix(self.target.dim(d), 0)
            else:
                out[d] = _column_basis(b)
        return out

    def cokernel(self) -> tuple[GradedModule, "ModuleMap"]:
        return quotient(self.target, self.image_bases())


def is_module_map(f: ModuleMap) -> bool:
    return not f.failures()


def _column_basis(m: BitMatrix) -> BitMatrix:
    from .gf2 import column_space
    return column_space(m)


# sub- and quotient modules -----------------------------------------------


def submodule(m: GradedModule, bases: dict[int, BitMatrix], *, check: bool = True,
              name: str = "") -> tuple[GradedModule, ModuleMap]:
    """Submodule spanned degreewise by the columns of ``bases`` (assumed independent)."""
    dims = []
    actions: dict[str, dict[int, BitMatrix]] = {g: {} for g, _ in m.algebra.generators}
    for d in m.degrees:
        b = bases.get(d)
        dims.append(0 if b is None else b.cols)
    for g, gd in m.algebra.generators:
        for d in range(m.lo, m.hi - gd + 1):
            src = bases.get(d, BitMatrix(m.dim(d), 0))
            tgt = bases.get(d + gd, BitMatrix(m.dim(d + gd), 0))
            img = m.action(g, d) @ src
            x = solve_matrix(tgt, img)
            if x is None:
                if check:
                    raise ValueError(f"span is not closed under {g} at degree {d}")
                x = BitMatrix(tgt.cols, src.cols)
            actions[g][d] = x
    sub = GradedModule(m.algebra, m.lo, dims, actions, trusted=m.trusted,
                       bounded_below=m.bounded_below, bounded_above=m.bounded_above, name=name)
    inc = ModuleMap(sub, m, {d: bases.get(d, BitMatrix(m.dim(d), 0)) for d in m.degrees}, name="inclusion")
    return sub, inc


def quotient(m: GradedModule, bases: dict[int, BitMatrix], name: str = "") -> tuple[GradedModule, ModuleMap]:
    """Quotient by the submodule spanned degreewise by ``bases``.

    The quotient basis in each degree is the set of standard basis vectors
    completing the span, chosen greedily in stored order.
    """
    proj: dict[int, BitMatrix] = {}
    reps: dict[int, list[int]] = {}
    for d in m.degrees:
        n = m.dim(d)
        span = bases.get(d, BitMatrix(n, 0))
        comp = complement_indices(span, n) if span.cols else list(range(n))
        reps[d] = comp
        if not span.cols:
            proj[d] = BitMatrix.identity(n).select_rows(comp)
            continue
        full = hstack([span, BitMatrix.identity(n).select_columns(comp)])
        inv = solve_matrix(full, BitMatrix.identity(n))
        proj[d] = inv.select_rows(range(span.cols, n))
    dims = [len(reps[d]) for d in m.degrees]
    actions: dict[str, dict[int, BitMatrix]] = {}
    for g, gd in m.algebra.generators:
        per = {}
        for d in range(m.lo, m.hi - gd + 1):
            per[d] = proj[d + gd] @ m.action(g, d).select_columns(reps[d])
        actions[g] = per
    labels = None
    if m.labels is not None:
        labels = [[m.labels[d - m.lo][i] for i in reps[d]] for d in m.degrees]
    q = GradedModule(m.algebra, m.lo, dims, actions, trusted=m.trusted, labels=labels,
                     bounded_below=m.bounded_below, bounded_above=m.bounded_above, name=name)
    return q, ModuleMap(m, q, proj, name="projection")


def generated_bases(m: GradedModule, gens: Iterable[tuple[int, np.ndarray]]) -> dict[int, BitMatrix]:
    """Degreewise bases of the submodule generated by ``(degree, vector)`` pairs.

    The span is closed degree by degree in ascending order.
    """
    seeds: dict[int, list[np.ndarray]] = {}
    for d, v in gens:
        if not (m.lo <= d <= m.hi):
            raise ValueError(f"generator in degree {d} outside window {m.window}")
        v = np.asarray(v, dtype=np.uint8) & 1
        if v.shape != (m.dim(d),):
            raise ValueError(f"generator vector in degree {d} has length {v.shape}, expected {m.dim(d)}")
        seeds.setdefault(d, []).append(v)
    bases: dict[int, BitMatrix] = {}
    for d in m.degrees:
        n = m.dim(d)
        given = seeds.get(d, [])
        cols = [BitMatrix.from_dense(np.array(given, dtype=np.uint8).T)] if given else [BitMatrix(n, 0)]
        for g, gd in m.algebra.generators:
            src = bases.get(d - gd)
            if src is not None and src.cols:
                cols.append(m.action(g, d - gd) @ src)
        allc = hstack(cols) if cols else BitMatrix(n, 0)
        bases[d] = _column_basis(allc) if allc.cols else allc
    return bases


def generate_submodule(m: GradedModule, gens, name: str = "") -> tuple[GradedModule, ModuleMap]:
    return submodule(m, generated_bases(m, gens), name=name)
