"""Sparse polynomials over F2 with the Steenrod action of Sq1 and Sq2.

A monomial ``x1^i1 ... xn^in`` is the exponent tuple ``(i1, ..., in)``;
exponents may be negative (Laurent monomials).  A polynomial is a frozenset of
monomials.  The action comes from the total square ``Sq(x) = x + x^2`` and the
Cartan formula, i.e. ``Sq^k(x^n) = binom(n, k) x^(n+k)``.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations
from typing import Iterable

Monomial = tuple[int, ...]


def binom2(n: int, k: int) -> int:
    """binom(n, k) mod 2 for k >= 0 and any integer n (Lucas, 2-adic for n < 0)."""
    if k < 0:
        return 0
    return 1 if (k & ~n) == 0 else 0


def _toggle(acc: set, mono: Monomial) -> None:
    if mono in acc:
        acc.remove(mono)
    else:
        acc.add(mono)


def sq1_monomial(m: Monomial) -> set[Monomial]:
    out: set[Monomial] = set()
    for k, e in enumerate(m):
        if e & 1:
            _toggle(out, m[:k] + (e + 1,) + m[k + 1:])
    return out


def sq2_monomial(m: Monomial) -> set[Monomial]:
    out: set[Monomial] = set()
    n = len(m)
    for k, e in enumerate(m):
        if binom2(e, 2):
            _toggle(out, m[:k] + (e + 2,) + m[k + 1:])
    for k in range(n):
        if not m[k] & 1:
            continue
        for l in range(k + 1, n):
            if m[l] & 1:
                t = list(m)
                t[k] += 1
                t[l] += 1
                _toggle(out, tuple(t))
    return out


class Poly:
    """A homogeneous-or-not polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Iterable[Monomial] = ()):
        acc: set[Monomial] = set()
        for t in terms:
            t = tuple(int(e) for e in t)
            if len(t) != nvars:
                raise ValueError(f"monomial {t} does not have {nvars} variables")
            _toggle(acc, t)
        self.nvars = nvars
        self.terms = frozenset(acc)

    @classmethod
    def monomial(cls, *exps: int) -> "Poly":
        return cls(len(exps), [tuple(exps)])

    @property
    def degree(self) -> int | None:
        degs = {sum(t) for t in self.terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else None

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Poly") -> "Poly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        return Poly(self.nvars, list(self.terms) + list(other.terms))

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def sq1(self) -> "Poly":
        acc: set[Monomial] = set()
        for t in self.terms:
            for u in sq1_monomial(t):
                _toggle(acc, u)
        return Poly(self.nvars, acc)

    def sq2(self) -> "Poly":
        acc: set[Monomial] = set()
        for t in self.terms:
            for u in sq2_monomial(t):
                _toggle(acc, u)
        return Poly(self.nvars, acc)

    def apply(self, word: Iterable[int]) -> "Poly":
        """Apply a word in Sq1 (0) and Sq2 (1), rightmost letter first."""
        p = self
        for letter in reversed(tuple(word)):
            p = p.sq1() if letter == 0 else p.sq2()
        return p

    def times(self, other: "Poly") -> "Poly":
        """Product in disjoint variables: the external tensor product."""
        return Poly(self.nvars + other.nvars, [a + b for a in self.terms for b in other.terms])

    def __mul__(self, other: "Poly") -> "Poly":
        """Product in the same variables."""
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        acc: set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                _toggle(acc, tuple(x + y for x, y in zip(a, b)))
        return Poly(self.nvars, acc)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(short_name(t) for t in sorted(self.terms))


def short_name(m: Monomial) -> str:
    """Write ``x1^i1...xn^in`` as the digit string ``i1...in`` (bracketed when >9)."""
    return "".join(str(e) if 0 <= e <= 9 else f"[{e}]" for e in m)


def orbit_sum(exps: Iterable[int], n: int | None = None) -> Poly:
    """Sum of the distinct monomials in the symmetric-group orbit of ``exps``."""
    exps = tuple(exps)
    if n is not None and n != len(exps):
        raise ValueError("exponent tuple length must equal the number of variables")
    if any(e < 1 for e in exps):
        raise ValueError("orbit sums are taken over exponents >= 1")
    return Poly(len(exps), set(permutations(exps)))


def parse_poly(text: str) -> Poly:
    """Parse the digit notation: ``"2222 + ~1124"`` where ``~`` marks an orbit sum."""
    parts = [p.strip() for p in text.split("+") if p.strip()]
    out = None
    for p in parts:
        bar = p.startswith("~")
        digits = tuple(int(c) for c in p.lstrip("~"))
        term = orbit_sum(digits) if bar else Poly.monomial(*digits)
        out = term if out is None else out + term
    if out is None:
        raise ValueError("empty polynomial")
    return out


def compositions(total: int, parts: int, minimum: int = 1) -> list[Monomial]:
    """Exponent tuples with ``parts`` entries each >= minimum summing to ``total``, lexicographic."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, minimum):
            out.append((first,) + rest)
    return out


def partitions_sorted(total: int, parts: int, minimum: int = 1) -> list[Monomial]:
    """Weakly increasing exponent tuples (orbit representatives)."""
    out = []
    for combo in combinations_with_replacement(range(minimum, total + 1), parts):
        if sum(combo) == total:
            out.append(combo)
    return out
