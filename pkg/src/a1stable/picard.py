"""Invariants of invertible local modules, the localization matrices and the idempotent test."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import A1, E1, get_algebra
from .functors import augmentation_ideal, localize, tensor, trivial_module
from .gf2 import BitMatrix
from .margolis import UnclassifiableError, margolis_homology, reduced
from .module import INF, GradedModule, ModuleMap, direct_sum, is_module_map, suspend

__all__ = ["PicClass", "d_invariant", "t1_invariant", "local_profile", "classify_local", "IntMatrix",
           "smith_normal_form", "cokernel_invariants", "pic_localization_matrix", "is_idempotent",
           "explicit_idempotence_witnesses"]


class InvariantError(ValueError):
    """The module does not satisfy the hypotheses of the invariant."""


@dataclass(frozen=True)
class PicClass:
    """Stable class Sigma^shift X with X = R (k=0), P_0 (E1, k=1) or P_n (A1, k=1)."""

    algebra: str
    k: int
    shift: int
    n: int | None = None
    invariants: dict = field(default_factory=dict, compare=False, hash=False)

    def key(self) -> tuple:
        return (self.algebra, self.k, self.shift, self.n)

    def representative(self) -> str:
        if self.k == 0:
            return f"S^{self.shift}R"
        return f"S^{self.shift}P{self.n or 0}"

    def as_dict(self) -> dict:
        out = {"algebra": self.algebra, "k": self.k, "shift": self.shift, "invariants": dict(self.invariants)}
        if self.n is not None:
            out["n"] = self.n
        return out


# invariants -------------------------------------------------------------------


def d_invariant(m: GradedModule, k: int) -> int:
    """Degree of the single class of H(m, Q_k)."""
    h = margolis_homology(m, k)
    supp = h.support()
    total = h.total()
    if total != 1:
        raise InvariantError(f"H({m.name}, Q{k}) has dimension {total} in trusted degrees, not 1")
    return supp[0]


def _bottom(m: GradedModule) -> int:
    b = m.bottom
    if b is None:
        raise InvariantError(f"{m.name} has no nonzero degrees")
    return b


def _rank_at(m: GradedModule, word: str, d: int) -> int:
    from .algebra import parse_word
    from .gf2 import rank
    w = parse_word(m.algebra, word)
    if m.dim(d) == 0:
        return 0
    return rank(m.word_action(w, d))


def t1_parts(m: GradedModule) -> dict:
    """d1, c, e, f and t1 for an A(1)-module whose Q1 homology is one class."""
    if m.algebra is not A1:
        raise InvariantError("t1 is defined over A(1) only")
    d1 = d_invariant(m, 1)
    red = reduced(m)
    c = _bottom(red)
    e = _rank_at(red, "Sq2", c)
    f = _rank_at(red, "Sq2Sq2", c)
    return {"d1": d1, "c": c, "e": e, "f": f, "t1": (d1 - c - e + f) % 4}


def t1_invariant(m: GradedModule) -> int:
    if margolis_homology(m, 0).total():
        raise InvariantError(f"{m.name} is not Q1-local")
    return t1_parts(m)["t1"]


def local_profile(m: GradedModule) -> int | None:
    """k when m is Q_k-local with one-dimensional homology, else None."""
    h0 = margolis_homology(m, 0).total()
    h1 = margolis_homology(m, 1).total()
    if h0 == 1 and h1 == 0:
        return 0
    if h0 == 0 and h1 == 1:
        return 1
    return None


def _representative(cls: PicClass, lo: int, hi: int) -> GradedModule:
    from .catalog import make
    alg = get_algebra(cls.algebra)
    key = "R" if cls.k == 0 else f"P{cls.n or 0}"
    return make(key, algebra=alg, lo=lo, hi=hi, suspension=cls.shift)


def classify_local(m: GradedModule, k: int, *, check: bool = True) -> PicClass:
    """The class of a Q_k-local module with one-dimensional Q_k homology."""
    if k not in (0, 1):
        raise ValueError("k must be 0 or 1")
    other = margolis_homology(m, 1 - k).total()
    if other:
        raise InvariantError(f"{m.name} is not Q{k}-local: H(-, Q{1 - k}) has dimension {other}")
    alg = m.algebra
    if k == 0:
        d0 = d_invariant(m, 0)
        cls = PicClass(alg.name, 0, d0 + 1, None, {"d0": d0})
    elif alg is E1:
        d1 = d_invariant(m, 1)
        cls = PicClass(alg.name, 1, d1, None, {"d1": d1})
    else:
        parts = t1_parts(m)
        t1 = parts["t1"]
        cls = PicClass(alg.name, 1, parts["d1"] - 2 * t1, t1, parts)
    if check:
        red = reduced(m)
        top = red.trusted[1] if not red.bounded_above else red.hi
        lo = min(red.lo, cls.shift - 2)
        rep = _representative(cls, lo, int(top))
        bad = [d for d in range(lo, int(top) + 1) if red.dim(d) != rep.dim(d)]
        if bad:
            raise UnclassifiableError(f"reduced dims of {m.name} differ from {cls.representative()} in degrees {bad}")
    return cls


# integer matrices and Smith normal form ---------------------------------------------


@dataclass
class IntMatrix:
    entries: list[list[int]]
    row_labels: list[str] = field(default_factory=list)
    col_labels: list[str] = field(default_factory=list)
    torsion: list[int | None] = field(default_factory=list)  # modulus per row, None for Z

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def display(self) -> list[list[str]]:
        out = []
        for r, row in enumerate(self.entries):
            mod = self.torsion[r] if r < len(self.torsion) else None
            out.append([f"{x % mod}(mod {mod})" if mod else str(x) for x in row])
        return out

    def presentation(self) -> list[list[int]]:
        """Relation matrix of the cokernel: the columns plus mod-n relations of torsion rows."""
        rows, cols = self.shape
        extra = [r for r in range(rows) if r < len(self.torsion) and self.torsion[r]]
        out = []
        for r in range(rows):
            row = list(self.entries[r])
            for e in extra:
                row.append(self.torsion[r] if e == r else 0)
            out.append(row)
        return out

    def as_dict(self) -> dict:
        return {"entries": self.entries, "rows": self.row_labels, "cols": self.col_labels,
                "torsion": self.torsion}


def smith_normal_form(a) -> list[int]:
    """Diagonal of the Smith normal form (nonnegative, each dividing the next, zeros dropped)."""
    m = [list(map(int, row)) for row in a]
    if not m or not m[0]:
        return []
    rows, cols = len(m), len(m[0])
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        done = False
        while not done:
            done = True
            p = m[t][t]
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                if m[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    done = False
            if not done:
                # move the smallest remaining entry of row/column t to the pivot
                cand = [(abs(m[i][t]), i, t) for i in range(t, rows) if m[i][t]]
                cand += [(abs(m[t][j]), t, j) for j in range(t, cols) if m[t][j]]
                _, i, j = min(cand)
                m[t], m[i] = m[i], m[t]
                for row in m:
                    row[t], row[j] = row[j], row[t]
                continue
            # divisibility: fold in any entry not divisible by the pivot
            bad = [(i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % p]
            if bad:
                i, _ = bad[0]
                m[t] = [x + y for x, y in zip(m[t], m[i])]
                done = False
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def cokernel_invariants(relations, nrows: int | None = None) -> dict:
    """Z^nrows / (column span of relations) as free rank plus torsion orders."""
    nrows = len(relations) if nrows is None else nrows
    diag = smith_normal_form(relations)
    torsion = [d for d in diag if d > 1]
    return {"free_rank": nrows - len(diag), "torsion": torsion, "diagonal": diag}


def describe_group(inv: dict) -> str:
    parts = ["Z"] * inv["free_rank"] + [f"Z/{d}" for d in inv["torsion"]]
    return " + ".join(parts) if parts else "0"


def pic_localization_matrix(algebra, hi: int = 24) -> tuple[IntMatrix, dict]:
    """Matrix of L on the basis {Sigma F2, Omega F2[, J]}, computed from the modules themselves."""
    from .catalog import make
    alg = get_algebra(algebra)
    basis = [("SF2", trivial_module(alg, 1)), ("OmegaF2", augmentation_ideal(alg))]
    if alg is A1:
        basis.append(("J", make("J")))
    cols = []
    for _, x in basis:
        l0 = localize(x, 0, hi=hi)
        l1 = localize(x, 1, hi=hi)
        col = [d_invariant(l0, 0), d_invariant(l1, 1)]
        if alg is A1:
            col.append(t1_invariant(l1))
        cols.append(col)
    rows = len(cols[0])
    entries = [[cols[j][i] for j in range(len(cols))] for i in range(rows)]
    labels = ["d0 L0", "d1 L1"] + (["t1 L1"] if alg is A1 else [])
    torsion = [None, None] + ([4] if alg is A1 else [])
    mat = IntMatrix(entries, labels, [b for b, _ in basis], torsion)
    return mat, cokernel_invariants(mat.presentation(), rows)


# idempotents ------------------------------------------------------------------------


IDEMPOTENT_WITNESSES = ("0", "F2", "P0", "SR", "P0+SR")


def _witness_module(name: str, alg, lo: int, hi: int) -> GradedModule:
    from .catalog import make
    if name == "0":
        return GradedModule.zero(alg, lo, hi)
    if name == "F2":
        return trivial_module(alg)
    if name == "P0":
        return make("P0", alg, lo, hi)
    if name == "SR":
        return make("R", alg, lo, hi, suspension=1)
    return direct_sum(make("P0", alg, lo, hi), make("R", alg, lo, hi, suspension=1))


def _top(m: GradedModule) -> float:
    return m.hi if m.bounded_above else m.trusted[1]


def is_idempotent(m: GradedModule) -> tuple[bool, str | None]:
    """Whether m (x) m is stably equivalent to m, with the matching witness when it is."""
    if not m.bounded_below:
        raise ValueError("is_idempotent needs a bounded-below module")
    h = [margolis_homology(m, k) for k in (0, 1)]
    totals = [x.total() for x in h]
    if max(totals) > 1:
        return False, None
    # an idempotent's homology classes sit in degree 0
    if any(t and x.support() != [0] for t, x in zip(totals, h)):
        return False, None
    alg = m.algebra
    red = reduced(m)
    sq = reduced(tensor(m, m))
    lo = min(red.lo, sq.lo)
    top = int(min(_top(red), _top(sq)))
    if top < lo:
        raise ValueError("no trusted degrees to compare")
    if any(red.dim(d) != sq.dim(d) for d in range(lo, top + 1)):
        return False, None
    if totals == [0, 0]:
        name = "0"
    elif totals == [1, 0]:
        name = "SR"
    elif totals == [0, 1]:
        name = "P0"
    else:
        name = "F2" if red.bounded_above else "P0+SR"
    wit = _witness_module(name, alg, min(lo, -1), top)
    if any(red.dim(d) != wit.dim(d) for d in range(lo, top + 1)):
        return False, None
    return True, name


# explicit maps from the idempotence argument ------------------------------------------


def sigma_r_diagonal(hi: int = 24) -> ModuleMap:
    """i : Sigma R -> Sigma R (x) Sigma R, Sigma x^n -> sum over i + j = n - 1 of Sigma x^i (x) Sigma x^j."""
    from .catalog import make
    from .functors import tensor_index
    sr = make("R", lo=0, hi=hi, suspension=1)
    tt = tensor(sr, sr)
    top = min(sr.hi, tt.hi)
    allowed = lambda e: e == -1 or e >= 1  # Sigma x^0 counts as zero
    blocks = {}
    for d in range(sr.lo, top + 1):
        blk = np.zeros((tt.dim(d), sr.dim(d)), dtype=np.uint8)
        if sr.dim(d):
            n = d - 1
            for i in range(-1, n + 1):
                j = n - 1 - i
                if allowed(i) and allowed(j):
                    blk[tensor_index(sr, sr, d, i + 1, 0, 0), 0] ^= 1
        blocks[d] = BitMatrix.from_dense(blk)
    f = ModuleMap(sr, tt, blocks, name="i")
    f.source_top = top
    return f


def epsilon_tensor_maps(i_map: ModuleMap) -> tuple[np.ndarray, np.ndarray]:
    """Dense matrices of (eps x 1) i and (1 x eps) i, degree by degree, stacked."""
    sr = i_map.source
    tt = i_map.target
    left, right = [], []
    from .functors import tensor_index
    for d in range(sr.lo, i_map.source_top + 1):
        if not sr.dim(d):
            continue
        img = i_map.block(d).to_dense()[:, 0]
        # eps kills everything but Sigma x^{-1}, the class in degree 0
        l = r = 0
        for a in range(sr.lo, d + 1):
            b = d - a
            if not (sr.dim(a) and sr.dim(b)):
                continue
            bit = img[tensor_index(sr, sr, d, a, 0, 0)]
            if a == 0:
                l ^= int(bit)
            if b == 0:
                r ^= int(bit)
        left.append(l)
        right.append(r)
    return np.array(left, dtype=np.uint8), np.array(right, dtype=np.uint8)


def collapse_killed(i: int, j: int) -> bool:
    return i % 4 == 3 and j % 2 == 1


def p0_collapse(hi: int = 24) -> ModuleMap:
    """P_0 (x) P_0 -> P_0, x^i (x) x^j -> x^(i+j) unless i = -1 mod 4 and j = -1 mod 2."""
    from .catalog import make
    from .functors import tensor_index
    p0 = make("P0", lo=-1, hi=hi)
    tt = tensor(p0, p0)
    top = min(tt.hi, p0.hi)
    blocks = {}
    for d in range(tt.lo, top + 1):
        blk = np.zeros((p0.dim(d), tt.dim(d)), dtype=np.uint8)
        for i in range(-1, d + 2):
            j = d - i
            if j < -1 or not (p0.dim(i) and p0.dim(j)):
                continue
            if not collapse_killed(i, j):
                blk[0, tensor_index(p0, p0, d, i, 0, 0)] = 1
        blocks[d] = BitMatrix.from_dense(blk)
    return ModuleMap(tt, p0, blocks, name="collapse")


def explicit_idempotence_witnesses(hi: int = 24) -> tuple[ModuleMap, ModuleMap]:
    return sigma_r_diagonal(hi), p0_collapse(hi)
