"""The algebras A(1) and E(1), built from their presentations.

Each algebra is constructed as the quotient of the free associative algebra on
its generators by the two-sided ideal generated by the defining relations.
A word ``(g1, ..., gk)`` denotes the product ``g1 * ... * gk``; acting on a
module, ``gk`` is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .gf2 import BitMatrix, hstack, row_reduce, solve_matrix

Word = tuple[int, ...]


@dataclass(frozen=True)
class AlgebraDescriptor:
    name: str
    generators: tuple[tuple[str, int], ...]
    # each relation is (lhs words, rhs words); lhs + rhs = 0 over GF(2)
    relations: tuple[tuple[str, tuple[Word, ...], tuple[Word, ...]], ...]
    socle_degree: int
    top_word: Word
    # coproduct on generators: list of (left word, right word) terms
    coproduct: dict = field(hash=False, compare=False, default_factory=dict)

    @property
    def generator_names(self) -> list[str]:
        return [g for g, _ in self.generators]

    def degree_of(self, gen: str) -> int:
        for g, d in self.generators:
            if g == gen:
                return d
        raise KeyError(gen)

    def word_degree(self, word: Word) -> int:
        return sum(self.generators[i][1] for i in word)

    def word_name(self, word: Word) -> str:
        return "".join(self.generators[i][0] for i in word) or "1"

    @property
    def structure(self) -> "AlgebraStructure":
        return _structure(self.name)

    @property
    def poincare_series(self) -> list[int]:
        return [len(b) for b in self.structure.basis]

    @property
    def dimension(self) -> int:
        return sum(self.poincare_series)

    def __repr__(self) -> str:
        return f"<algebra {self.name}>"


A1 = AlgebraDescriptor(
    name="A1",
    generators=(("Sq1", 1), ("Sq2", 2)),
    relations=(
        ("Sq1Sq1", ((0, 0),), ()),
        ("Sq2Sq2", ((1, 1),), ((0, 1, 0),)),
        ("Sq2Sq1Sq2Sq1", ((1, 0, 1, 0),), ((0, 1, 0, 1),)),
    ),
    socle_degree=6,
    top_word=(1, 1, 1),
    coproduct={
        "Sq1": [((0,), ()), ((), (0,))],
        "Sq2": [((1,), ()), ((0,), (0,)), ((), (1,))],
    },
)

E1 = AlgebraDescriptor(
    name="E1",
    generators=(("Q0", 1), ("Q1", 3)),
    relations=(
        ("Q0Q0", ((0, 0),), ()),
        ("Q1Q1", ((1, 1),), ()),
        ("Q0Q1", ((0, 1),), ((1, 0),)),
    ),
    socle_degree=4,
    top_word=(0, 1),
    coproduct={
        "Q0": [((0,), ()), ((), (0,))],
        "Q1": [((1,), ()), ((), (1,))],
    },
)

ALGEBRAS = {"A1": A1, "E1": E1}


def get_algebra(name) -> AlgebraDescriptor:
    if isinstance(name, AlgebraDescriptor):
        return name
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}; expected one of {sorted(ALGEBRAS)}") from None


class AlgebraStructure:
    """Basis, multiplication and Frobenius data of a presented algebra."""

    def __init__(self, alg: AlgebraDescriptor):
        self.alg = alg
        degs = [d for _, d in alg.generators]
        top = alg.socle_degree + 2 * max(degs)
        # words of each degree
        words: dict[int, list[Word]] = {0: [()]}
        for d in range(1, top + 1):
            ws = []
            for i, gd in enumerate(degs):
                if d - gd >= 0:
                    ws.extend((i,) + w for w in words.get(d - gd, []))
            words[d] = sorted(set(ws), key=lambda w: (len(w), w))
        self.words = words
        self.word_index = {d: {w: k for k, w in enumerate(ws)} for d, ws in words.items()}
        # two-sided ideal, degree by degree
        ideal: dict[int, BitMatrix] = {}
        for d in range(top + 1):
            n = len(words[d])
            cols = []
            for name, lhs, rhs in alg.relations:
                rdeg = alg.word_degree(lhs[0])
                for du in range(d - rdeg + 1):
                    dv = d - rdeg - du
                    for u in words.get(du, []):
                        for v in words.get(dv, []):
                            vec = np.zeros(n, dtype=np.uint8)
                            for w in lhs + rhs:
                                vec[self.word_index[d][u + w + v]] ^= 1
                            cols.append(vec)
            ideal[d] = BitMatrix.from_dense(np.array(cols).T) if cols else BitMatrix(n, 0)
        # basis = greedy words independent modulo the ideal
        basis: list[list[Word]] = []
        self._reducers: dict[int, tuple[BitMatrix, int]] = {}
        for d in range(top + 1):
            n = len(words[d])
            ident = BitMatrix.identity(n)
            both = hstack([ideal[d], ident])
            _, _, piv = row_reduce(both)
            k = ideal[d].cols
            chosen = [p - k for p in piv if p >= k]
            basis.append([words[d][j] for j in chosen])
            # reducer: express a word vector in [ideal basis | chosen words]
            ideal_piv = [p for p in piv if p < k]
            full = hstack([ideal[d].select_columns(ideal_piv), ident.select_columns(chosen)])
            self._reducers[d] = (full, len(ideal_piv))
        while basis and not basis[-1]:
            basis.pop()
        if len(basis) - 1 != alg.socle_degree:
            raise RuntimeError(f"{alg.name}: presentation does not give top degree {alg.socle_degree}")
        for d in range(alg.socle_degree + 1, top + 1):
            if self._reducers[d][0].cols != self._reducers[d][1]:
                raise RuntimeError(f"{alg.name}: nonzero elements above the socle in degree {d}")
        self.basis = basis
        self.index = {w: (d, k) for d, ws in enumerate(basis) for k, w in enumerate(ws)}
        self.flat = [w for ws in basis for w in ws]
        self.flat_degree = [d for d, ws in enumerate(basis) for _ in ws]
        self.offset = np.cumsum([0] + [len(b) for b in basis]).tolist()

    def reduce_word(self, word: Word) -> np.ndarray:
        """Coordinates of a word in the normal-form basis of its degree."""
        d = self.alg.word_degree(word)
        if d > self.alg.socle_degree:
            return np.zeros(0, dtype=np.uint8)
        full, nideal = self._reducers[d]
        vec = np.zeros((len(self.words[d]), 1), dtype=np.uint8)
        vec[self.word_index[d][word], 0] = 1
        x = solve_matrix(full, BitMatrix.from_dense(vec))
        return x.to_dense()[nideal:, 0]

    @property
    def dimension(self) -> int:
        return len(self.flat)

    def left_mult(self, gen: int) -> BitMatrix:
        """Matrix of left multiplication by a generator on the flat basis."""
        n = self.dimension
        out = np.zeros((n, n), dtype=np.uint8)
        for j, w in enumerate(self.flat):
            d = self.flat_degree[j] + self.alg.generators[gen][1]
            if d > self.alg.socle_degree:
                continue
            coords = self.reduce_word((gen,) + w)
            out[self.offset[d]:self.offset[d] + len(coords), j] = coords
        return BitMatrix.from_dense(out)

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product of two elements given as flat coordinate vectors."""
        n = self.dimension
        out = np.zeros(n, dtype=np.uint8)
        for i in np.flatnonzero(x):
            for j in np.flatnonzero(y):
                w = self.flat[i] + self.flat[j]
                d = self.alg.word_degree(w)
                if d > self.alg.socle_degree:
                    continue
                c = self.reduce_word(w)
                out[self.offset[d]:self.offset[d] + len(c)] ^= c
        return out

    def element(self, word: Word) -> np.ndarray:
        """Flat coordinates of a word."""
        n = self.dimension
        out = np.zeros(n, dtype=np.uint8)
        d = self.alg.word_degree(word)
        if d <= self.alg.socle_degree:
            c = self.reduce_word(word)
            out[self.offset[d]:self.offset[d] + len(c)] = c
        return out

    def top_coefficient(self, x: np.ndarray) -> int:
        return int(x[self.offset[self.alg.socle_degree]])

    def dual_basis(self) -> list[np.ndarray]:
        """Elements c_j with top-coefficient(c_i * b_j) = delta_ij."""
        n = self.dimension
        unit = np.eye(n, dtype=np.uint8)
        gram = np.zeros((n, n), dtype=np.uint8)
        for i in range(n):
            for j in range(n):
                gram[i, j] = self.top_coefficient(self.multiply(unit[i], unit[j]))
        g = BitMatrix.from_dense(gram)
        # X G = I  <=>  G^T X^T = I
        xt = solve_matrix(g.T, BitMatrix.identity(n))
        if xt is None:
            raise RuntimeError("Frobenius form is degenerate")
        x = xt.T.to_dense()
        return [x[i] for i in range(n)]


@lru_cache(maxsize=None)
def _structure(name: str) -> AlgebraStructure:
    return AlgebraStructure(ALGEBRAS[name])


def element_terms(alg: AlgebraDescriptor, coords: np.ndarray) -> list[Word]:
    """Basis words appearing in an element given by flat coordinates."""
    st = alg.structure
    return [st.flat[i] for i in np.flatnonzero(coords)]


def all_words(alg: AlgebraDescriptor, max_degree: int):
    degs = [d for _, d in alg.generators]
    out = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for i, d in enumerate(degs):
                nw = (i,) + w
                if alg.word_degree(nw) <= max_degree:
                    nxt.append(nw)
        out.extend(nxt)
        frontier = nxt
    return out


def parse_word(alg: AlgebraDescriptor, text: str) -> Word:
    """Parse ``"Sq2Sq1"`` or ``"Q0Q1"`` into a word; ``"1"`` is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    names = sorted(((g, i) for i, (g, _) in enumerate(alg.generators)), key=lambda t: -len(t[0]))
    out = []
    pos = 0
    while pos < len(text):
        for g, i in names:
            if text.startswith(g, pos):
                out.append(i)
                pos += len(g)
                break
        else:
            raise ValueError(f"cannot parse word {text!r} over {alg.name}")
    return tuple(out)

