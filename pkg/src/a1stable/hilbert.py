"""Truncated Hilbert series and the closed forms for P_n and the free parts of P^{(x) n}."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .module import GradedModule

Laurent = dict  # degree -> integer coefficient


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer power series sum c_d t^d, known for lo <= d <= cutoff."""

    lo: int
    coefficients: tuple[int, ...]

    @property
    def cutoff(self) -> int:
        return self.lo + len(self.coefficients) - 1

    def __getitem__(self, d: int) -> int:
        if d < self.lo:
            return 0
        if d > self.cutoff:
            raise IndexError(f"degree {d} beyond cutoff {self.cutoff}")
        return self.coefficients[d - self.lo]

    @classmethod
    def from_dict(cls, coeffs: dict, lo: int, cutoff: int) -> "TruncatedSeries":
        return cls(lo, tuple(int(coeffs.get(d, 0)) for d in range(lo, cutoff + 1)))

    def as_dict(self) -> dict:
        return {"lo": self.lo, "cutoff": self.cutoff, "coefficients": list(self.coefficients)}

    def restrict(self, lo: int, cutoff: int) -> "TruncatedSeries":
        return TruncatedSeries(lo, tuple(self[d] if d <= self.cutoff else 0 for d in range(lo, cutoff + 1)))

    def _align(self, other):
        lo = min(self.lo, other.lo)
        hi = min(self.cutoff, other.cutoff)
        return lo, hi

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        lo, hi = self._align(other)
        return TruncatedSeries(lo, tuple(self[d] + other[d] for d in range(lo, hi + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        lo, hi = self._align(other)
        return TruncatedSeries(lo, tuple(self[d] - other[d] for d in range(lo, hi + 1)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        lo = self.lo + other.lo
        # a product coefficient is exact while both factors are known
        hi = min(self.cutoff + other.lo, other.cutoff + self.lo)
        out = []
        for d in range(lo, hi + 1):
            out.append(sum(self[i] * other[d - i] for i in range(self.lo, d - other.lo + 1)))
        return TruncatedSeries(lo, tuple(out))

    def shift(self, k: int) -> "TruncatedSeries":
        return TruncatedSeries(self.lo + k, self.coefficients)

    def agrees(self, other: "TruncatedSeries", lo: int | None = None, hi: int | None = None) -> bool:
        a, b = self._align(other)
        a = a if lo is None else lo
        b = b if hi is None else min(b, hi)
        return all(self[d] == other[d] for d in range(a, b + 1))

    def __repr__(self) -> str:
        terms = [f"{c}t^{d}" for d, c in zip(range(self.lo, self.cutoff + 1), self.coefficients) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'}; to t^{self.cutoff})"


def series_of(m: GradedModule, cutoff: int | None = None) -> TruncatedSeries:
    """Hilbert series of a module, cut at its trusted top (or its window for finite modules)."""
    top = m.hi if m.bounded_above else m.trusted[1]
    if cutoff is not None:
        top = min(top, cutoff) if not m.bounded_above else cutoff
    return TruncatedSeries(m.lo, tuple(m.dim(d) for d in range(m.lo, top + 1)))


# Laurent polynomial helpers ------------------------------------------------------


def poly_mul(a: Laurent, b: Laurent) -> Laurent:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def poly_add(a: Laurent, b: Laurent, sign: int = 1) -> Laurent:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def poly_pow(a: Laurent, n: int) -> Laurent:
    out = {0: 1}
    for _ in range(n):
        out = poly_mul(out, a)
    return out


def expand_rational(numerator: Laurent, denominator: Laurent, lo: int, cutoff: int) -> TruncatedSeries:
    """Expand numerator/denominator as a power series from ``lo`` through ``cutoff``."""
    den = {k: v for k, v in denominator.items() if v}
    if not den:
        raise ZeroDivisionError("zero denominator")
    s = min(den)
    d0 = den[s]
    dshift = {k - s: v for k, v in den.items()}
    num = {k - s: v for k, v in numerator.items() if v}
    if not num:
        return TruncatedSeries(lo, tuple(0 for _ in range(lo, cutoff + 1)))
    start = min(min(num), lo)
    coeffs: dict[int, Fraction] = {}
    for d in range(start, cutoff + 1):
        acc = Fraction(num.get(d, 0))
        for k, v in dshift.items():
            if k and (d - k) in coeffs:
                acc -= v * coeffs[d - k]
        coeffs[d] = acc / d0
    out = []
    for d in range(lo, cutoff + 1):
        c = coeffs.get(d, Fraction(0))
        if c.denominator != 1:
            raise ValueError("series does not have integer coefficients")
        out.append(int(c))
    if any(coeffs[d] for d in coeffs if d < lo):
        raise ValueError(f"series has terms below degree {lo}")
    return TruncatedSeries(lo, tuple(out))


ONE_MINUS_T = {0: 1, 1: -1}
A1_SERIES = {0: 1, 1: 1, 2: 1, 3: 2, 4: 1, 5: 1, 6: 1}


def p_series(n: int, cutoff: int) -> TruncatedSeries:
    """H(P_n) from the closed forms, using H(P_{4k+i}) = t^{8k} H(P_i)."""
    k, i = divmod(n, 4)
    extra = {0: {}, 1: {}, 2: {3: 1, 5: 1, 6: 1}, 3: {6: 1, 7: 1}}[i]
    start = {0: -1, 1: 1, 2: 2, 3: 3}[i]
    num = poly_add({start: 1}, poly_mul(extra, ONE_MINUS_T))
    num = {d + 8 * k: c for d, c in num.items()}
    lo = start + 8 * k
    return expand_rational(num, ONE_MINUS_T, min(lo, cutoff), cutoff)


def q_poly(n: int) -> Laurent:
    """Q_n(t) as a Laurent polynomial."""
    r = n % 4
    if r in (0, 1):
        return {-1: 1}
    if r == 2:
        return {-2: 1, -1: 1, 0: -1, 1: 1, 3: -1}
    return {-3: 1, 0: 1, 2: -1}


def p_series_q_form(n: int, cutoff: int) -> TruncatedSeries:
    """H(P_n) = t^{2n} Q_n(t) / (1 - t)."""
    num = {d + 2 * n: c for d, c in q_poly(n).items()}
    lo = min(num)
    return expand_rational(num, ONE_MINUS_T, min(lo, cutoff), cutoff)


def poly_tensor_series(n: int, cutoff: int) -> TruncatedSeries:
    """H(P^{(x) n}) = (t / (1 - t))^n."""
    return expand_rational({n: 1}, poly_pow(ONE_MINUS_T, n), n, cutoff)


def free_part_series(n: int, cutoff: int) -> TruncatedSeries:
    """H(A(1)) t^n (1 - t^n (1-t)^{n-1} Q_n(t)) / ((1-t)^{n-1} (1-t^4) (1+t^3))."""
    if n < 1:
        raise ValueError("n must be positive")
    inner = poly_mul({n: 1}, poly_mul(poly_pow(ONE_MINUS_T, n - 1), q_poly(n)))
    num = poly_mul(A1_SERIES, poly_mul({n: 1}, poly_add({0: 1}, inner, -1)))
    den = poly_mul(poly_pow(ONE_MINUS_T, n - 1), poly_mul({0: 1, 4: -1}, {0: 1, 3: 1}))
    lo = min(num) if num else n
    return expand_rational(num, den, min(lo, n), cutoff)


def free_generator_series(n: int, cutoff: int) -> TruncatedSeries:
    """Generator counts of the free part: H(F_n) / H(A(1))."""
    inner = poly_mul({n: 1}, poly_mul(poly_pow(ONE_MINUS_T, n - 1), q_poly(n)))
    num = poly_mul({n: 1}, poly_add({0: 1}, inner, -1))
    den = poly_mul(poly_pow(ONE_MINUS_T, n - 1), poly_mul({0: 1, 4: -1}, {0: 1, 3: 1}))
    return expand_rational(num, den, min(min(num) if num else n, n), cutoff)


def pp_generator_counts(cutoff: int) -> dict[int, int]:
    """Free generators of P (x) P by the index sets {4i+4j : i+j>0} and {4i+4j+6}."""
    out: dict[int, int] = {}
    for i in range(cutoff // 4 + 1):
        for j in range(cutoff // 4 + 1):
            for d in ([4 * i + 4 * j] if i + j > 0 else []) + [4 * i + 4 * j + 6]:
                if d <= cutoff:
                    out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))


def p_p0_generator_counts(cutoff: int) -> dict[int, int]:
    """Free generators of P (x) P_0: one copy of A(1) per monomial u^i v^j (degrees 2i + 4j)."""
    out: dict[int, int] = {}
    for i in range(cutoff // 2 + 1):
        for j in range(cutoff // 4 + 1):
            d = 2 * i + 4 * j
            if d <= cutoff:
                out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))
