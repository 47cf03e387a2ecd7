"""Bit-packed dense linear algebra over GF(2).

Rows are stored as little-endian sequences of 64-bit words: column ``j`` of a
row lives in word ``j // 64`` at bit ``j % 64``.  Padding bits past the last
column are always zero.  Matrices are treated as immutable values.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

WORD = 64


def _nwords(cols: int) -> int:
    return (cols + WORD - 1) // WORD


def _pack(dense: np.ndarray) -> np.ndarray:
    """Pack a 2-d 0/1 array into uint64 words (little-endian bit order)."""
    rows, cols = dense.shape
    nw = _nwords(cols)
    if rows == 0 or nw == 0:
        return np.zeros((rows, nw), dtype=np.uint64)
    padded = np.zeros((rows, nw * WORD), dtype=np.uint8)
    padded[:, :cols] = dense & 1
    as_bytes = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(as_bytes).view("<u8").astype(np.uint64).reshape(rows, nw)


def _unpack(data: np.ndarray, cols: int) -> np.ndarray:
    rows = data.shape[0]
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=np.uint8)
    as_bytes = np.ascontiguousarray(data.astype("<u8")).view(np.uint8).reshape(rows, -1)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :cols]


class BitMatrix:
    """Dense matrix over GF(2) with bit-packed rows."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        if data is None:
            data = np.zeros((rows, _nwords(cols)), dtype=np.uint64)
        elif data.shape != (rows, _nwords(cols)):
            raise ValueError(f"packed data has shape {data.shape}, expected {(rows, _nwords(cols))}")
        data = np.ascontiguousarray(data, dtype=np.uint64)
        data.setflags(write=False)
        self.data = data

    # construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, dense) -> "BitMatrix":
        arr = np.asarray(dense)
        if arr.ndim != 2:
            raise ValueError("from_dense expects a 2-d array")
        arr = (arr.astype(np.int64) & 1).astype(np.uint8)
        return cls(arr.shape[0], arr.shape[1], _pack(arr))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "BitMatrix":
        if len(rows) == 0:
            return cls(0, cols or 0)
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), -1)
        if cols is not None and arr.shape[1] != cols:
            raise ValueError("row length does not match cols")
        return cls.from_dense(arr)

    @classmethod
    def from_columns(cls, columns: Sequence["BitVector"], nrows: int) -> "BitMatrix":
        if not columns:
            return cls(nrows, 0)
        dense = np.stack([c.to_array() for c in columns], axis=1)
        return cls.from_dense(dense)

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator, density: float = 0.5) -> "BitMatrix":
        return cls.from_dense((rng.random((rows, cols)) < density).astype(np.uint8))

    # inspection ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_dense(self) -> np.ndarray:
        return _unpack(self.data, self.cols)

    def tolist(self) -> list[list[int]]:
        return self.to_dense().astype(int).tolist()

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return int((int(self.data[i, j // WORD]) >> (j % WORD)) & 1)

    def row(self, i: int) -> "BitVector":
        return BitVector(self.cols, self.data[i].copy())

    def column(self, j: int) -> "BitVector":
        bits = (self.data[:, j // WORD] >> np.uint64(j % WORD)) & np.uint64(1)
        return BitVector.from_bits(bits.astype(np.uint8))

    def is_zero(self) -> bool:
        return not self.data.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            body = "; ".join("".join(str(b) for b in r) for r in self.tolist())
            return f"BitMatrix({self.rows}x{self.cols}: {body})"
        return f"BitMatrix({self.rows}x{self.cols})"

    # arithmetic ---------------------------------------------------------

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return BitMatrix(self.rows, self.cols, self.data ^ other.data)

    __xor__ = __add__

    def __matmul__(self, other):
        if isinstance(other, BitVector):
            if other.len != self.cols:
                raise ValueError(f"cannot apply {self.shape} matrix to vector of length {other.len}")
            return self.mul_vector(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return BitMatrix(self.rows, other.cols)
        if self.is_zero() or other.is_zero():
            return BitMatrix(self.rows, other.cols)
        # row i of the product is the XOR of the packed rows of `other`
        # selected by the set bits of row i of `self`
        ri, ci = np.nonzero(self.to_dense())
        gathered = other.data[ci]
        starts = np.flatnonzero(np.r_[True, ri[1:] != ri[:-1]])
        out = np.zeros((self.rows, other.data.shape[1]), dtype=np.uint64)
        out[ri[starts]] = np.bitwise_xor.reduceat(gathered, starts, axis=0)
        return BitMatrix(self.rows, other.cols, out)

    def mul_vector(self, v: "BitVector") -> "BitVector":
        if self.rows == 0:
            return BitVector(0)
        anded = self.data & v.data[np.newaxis, :]
        parity = np.zeros(self.rows, dtype=np.uint8)
        for w in range(anded.shape[1]):
            parity ^= _popcount_parity(anded[:, w])
        return BitVector.from_bits(parity)

    @property
    def T(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    def transpose(self) -> "BitMatrix":
        return self.T

    def hstack(self, *others: "BitMatrix") -> "BitMatrix":
        return hstack([self, *others])

    def vstack(self, *others: "BitMatrix") -> "BitMatrix":
        return vstack([self, *others])

    def select_rows(self, idx: Iterable[int]) -> "BitMatrix":
        idx = list(idx)
        return BitMatrix(len(idx), self.cols, self.data[idx] if idx else None)

    def select_columns(self, idx: Iterable[int]) -> "BitMatrix":
        idx = list(idx)
        if not idx:
            return BitMatrix(self.rows, 0)
        return BitMatrix.from_dense(self.to_dense()[:, idx])

    # elimination --------------------------------------------------------

    def row_reduce(self) -> tuple["BitMatrix", int, list[int]]:
        return row_reduce(self)

    def rank(self) -> int:
        return rank(self)

    def kernel(self) -> "BitMatrix":
        return kernel_basis(self)


def _popcount_parity(words: np.ndarray) -> np.ndarray:
    x = words.copy()
    for shift in (32, 16, 8, 4, 2, 1):
        x ^= x >> np.uint64(shift)
    return (x & np.uint64(1)).astype(np.uint8)


class BitVector:
    """A packed vector over GF(2)."""

    __slots__ = ("len", "data")

    def __init__(self, length: int, data: np.ndarray | None = None):
        self.len = length
        if data is None:
            data = np.zeros(_nwords(length), dtype=np.uint64)
        data = np.ascontiguousarray(data, dtype=np.uint64)
        data.setflags(write=False)
        self.data = data

    @classmethod
    def from_bits(cls, bits) -> "BitVector":
        arr = np.asarray(bits, dtype=np.int64).reshape(1, -1) & 1
        return cls(arr.shape[1], _pack(arr.astype(np.uint8))[0])

    @classmethod
    def unit(cls, length: int, i: int) -> "BitVector":
        bits = np.zeros(length, dtype=np.uint8)
        bits[i] = 1
        return cls.from_bits(bits)

    def to_array(self) -> np.ndarray:
        return _unpack(self.data.reshape(1, -1), self.len)[0]

    def tolist(self) -> list[int]:
        return self.to_array().astype(int).tolist()

    def support(self) -> list[int]:
        return np.flatnonzero(self.to_array()).tolist()

    def is_zero(self) -> bool:
        return not self.data.any()

    def __getitem__(self, i: int) -> int:
        return int((int(self.data[i // WORD]) >> (i % WORD)) & 1)

    def __add__(self, other: "BitVector") -> "BitVector":
        if self.len != other.len:
            raise ValueError("length mismatch")
        return BitVector(self.len, self.data ^ other.data)

    __xor__ = __add__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.len == other.len and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.len, self.data.tobytes()))

    def __len__(self) -> int:
        return self.len

    def __repr__(self) -> str:
        return "BitVector(" + "".join(str(b) for b in self.tolist()) + ")"

    def as_column(self) -> BitMatrix:
        return BitMatrix.from_dense(self.to_array().reshape(-1, 1))


def hstack(mats: Sequence[BitMatrix]) -> BitMatrix:
    mats = list(mats)
    rows = {m.rows for m in mats}
    if len(rows) > 1:
        raise ValueError(f"hstack row mismatch {rows}")
    nrows = rows.pop() if rows else 0
    total = sum(m.cols for m in mats)
    if total == 0:
        return BitMatrix(nrows, 0)
    return BitMatrix.from_dense(np.hstack([m.to_dense() for m in mats]))


def vstack(mats: Sequence[BitMatrix]) -> BitMatrix:
    mats = list(mats)
    cols = {m.cols for m in mats}
    if len(cols) > 1:
        raise ValueError(f"vstack column mismatch {cols}")
    ncols = cols.pop() if cols else 0
    total = sum(m.rows for m in mats)
    if total == 0:
        return BitMatrix(0, ncols)
    return BitMatrix(total, ncols, np.vstack([m.data for m in mats]))


def block_diag(mats: Sequence[BitMatrix]) -> BitMatrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = np.zeros((rows, cols), dtype=np.uint8)
    r = c = 0
    for m in mats:
        out[r:r + m.rows, c:c + m.cols] = m.to_dense()
        r += m.rows
        c += m.cols
    return BitMatrix.from_dense(out)


def _reduce_packed(data: np.ndarray, cols: int, stop_col: int | None = None):
    """In-place reduced row echelon form of packed rows; returns pivot columns.

    Pivot choice is deterministic: first column with a nonzero entry at or
    below the current row, first such row.
    """
    nrows = data.shape[0]
    pivots: list[int] = []
    r = 0
    limit = cols if stop_col is None else min(cols, stop_col)
    one = np.uint64(1)
    for c in range(limit):
        if r == nrows:
            break
        w = c // WORD
        b = np.uint64(c % WORD)
        colbits = (data[r:, w] >> b) & one
        nz = np.flatnonzero(colbits)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            tmp = data[r].copy()
            data[r] = data[p]
            data[p] = tmp
        mask = ((data[:, w] >> b) & one).astype(bool)
        mask[r] = False
        if mask.any():
            data[mask, w:] ^= data[r, w:]
        pivots.append(c)
        r += 1
    return pivots


def row_reduce(m: BitMatrix) -> tuple[BitMatrix, int, list[int]]:
    """Reduced row echelon form, rank and (strictly increasing) pivot columns."""
    data = m.data.copy()
    pivots = _reduce_packed(data, m.cols)
    return BitMatrix(m.rows, m.cols, data), len(pivots), pivots


def rank(m: BitMatrix) -> int:
    if m.rows == 0 or m.cols == 0 or m.is_zero():
        return 0
    # eliminate along the shorter side
    if m.rows > m.cols:
        m = m.T
    data = m.data.copy()
    return len(_reduce_packed(data, m.cols))


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Rows of the result form a basis of ``{v : m v = 0}``."""
    n = m.cols
    rref, r, pivots = row_reduce(m)
    free = [j for j in range(n) if j not in set(pivots)]
    if not free:
        return BitMatrix(0, n)
    out = np.zeros((len(free), n), dtype=np.uint8)
    out[np.arange(len(free)), free] = 1
    if r:
        dense = rref.to_dense()[:r]
        out[:, pivots] = dense[:, free].T
    return BitMatrix.from_dense(out)


def solve(m: BitMatrix, b: BitVector) -> BitVector | None:
    """Some ``x`` with ``m x = b`` (free variables zero), or None if inconsistent."""
    if b.len != m.rows:
        raise ValueError(f"right-hand side has length {b.len}, matrix has {m.rows} rows")
    x = solve_matrix(m, b.as_column())
    if x is None:
        return None
    return x.column(0) if x.cols else BitVector(m.cols)


def solve_matrix(a: BitMatrix, b: BitMatrix) -> BitMatrix | None:
    """Some ``X`` with ``a X = b`` (free variables zero), or None if inconsistent."""
    if a.rows != b.rows:
        raise ValueError(f"row mismatch: {a.shape} vs {b.shape}")
    n = a.cols
    if b.cols == 0:
        return BitMatrix(n, 0)
    if a.rows == 0:
        return BitMatrix(n, b.cols)
    aug = hstack([a, b])
    data = aug.data.copy()
    pivots = _reduce_packed(data, aug.cols, stop_col=n)
    r = len(pivots)
    dense = _unpack(data, aug.cols)
    if dense[r:, n:].any():
        return None
    x = np.zeros((n, b.cols), dtype=np.uint8)
    if r:
        x[pivots] = dense[:r, n:]
    return BitMatrix.from_dense(x)


def column_pivots(m: BitMatrix) -> list[int]:
    """Indices of columns forming a basis of the column space (greedy, left to right)."""
    return row_reduce(m)[2]


def column_space(m: BitMatrix) -> BitMatrix:
    return m.select_columns(column_pivots(m))


def complement_indices(span: BitMatrix, n: int) -> list[int]:
    """Standard basis indices whose vectors complete the column span of ``span``."""
    if span.cols == 0:
        return list(range(n))
    _, _, piv = row_reduce(span.T)
    ps = set(piv)
    return [j for j in range(n) if j not in ps]


def extend_indices(span: BitMatrix, candidates: BitMatrix) -> list[int]:
    """Greedy choice of candidate columns independent modulo the column span of ``span``."""
    k = span.cols
    both = hstack([span, candidates])
    _, _, piv = row_reduce(both)
    # greedy pivots of [span | candidates] visit span first
    return [p - k for p in piv if p >= k]


def in_span(span: BitMatrix, v: BitMatrix) -> bool:
    """Whether every column of ``v`` lies in the column span of ``span``."""
    if v.cols == 0 or v.is_zero():
        return True
    if span.cols == 0:
        return False
    return solve_matrix(span, v) is not None


def identity(n: int) -> BitMatrix:
    return BitMatrix.identity(n)


def zeros(rows: int, cols: int) -> BitMatrix:
    return BitMatrix(rows, cols)
