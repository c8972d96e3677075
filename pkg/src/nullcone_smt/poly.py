"""Exact sparse polynomials in the matrix entries ``x_ij`` and exterior algebra elements.

Coefficients are Python integers; :class:`fractions.Fraction` values are
accepted where a rational linear solve produces them and are collapsed back to
``int`` whenever the denominator is 1.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from numbers import Rational

from .errors import DomainError, ParameterError
from .tableaux import OneLineTableau

Coef = int | Fraction


def normalize_coef(c: Rational) -> Coef:
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    return int(c)


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries), via inversion count."""
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


class Poly:
    """A polynomial in ``x_ij`` (``1 <= i <= n``, ``1 <= j <= m``).

    Exponents are stored as dense tuples indexed by ``(i-1)*m + (j-1)``; the
    sparse ``(i, j, e)`` form is used for serialization only.
    """

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: Mapping[tuple[int, ...], Rational] | None = None):
        self.n = n
        self.m = m
        clean = {}
        for exp, c in (terms or {}).items():
            if c:
                if len(exp) != n * m:
                    raise ParameterError("exponent vector has wrong length")
                clean[exp] = normalize_coef(c)
        self.terms: dict[tuple[int, ...], Coef] = clean

    # constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, n: int, m: int, c: Rational) -> Poly:
        return cls(n, m, {(0,) * (n * m): c})

    @classmethod
    def one(cls, n: int, m: int) -> Poly:
        return cls.constant(n, m, 1)

    @classmethod
    def var(cls, i: int, j: int, n: int, m: int) -> Poly:
        if not (1 <= i <= n and 1 <= j <= m):
            raise ParameterError(f"x_{i}{j} outside a {n}x{m} matrix")
        exp = [0] * (n * m)
        exp[(i - 1) * m + (j - 1)] = 1
        return cls(n, m, {tuple(exp): 1})

    @classmethod
    def from_sparse(cls, n: int, m: int, items: Iterable[tuple[Iterable[tuple[int, int, int]], Rational]]) -> Poly:
        terms: dict[tuple[int, ...], Rational] = {}
        for exps, c in items:
            exp = [0] * (n * m)
            for i, j, e in exps:
                if not (1 <= i <= n and 1 <= j <= m) or e < 0:
                    raise ParameterError(f"bad exponent entry ({i}, {j}, {e})")
                exp[(i - 1) * m + (j - 1)] += e
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + c
        return cls(n, m, terms)

    # arithmetic -----------------------------------------------------------

    def _check(self, other: Poly) -> None:
        if (self.n, self.m) != (other.n, other.m):
            raise ParameterError(f"ambient mismatch: {self.n}x{self.m} vs {other.n}x{other.m}")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, Rational):
            return Poly.constant(self.n, self.m, other)
        return NotImplemented

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return Poly(self.n, self.m, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.n, self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, Rational):
            return Poly(self.n, self.m, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], Coef] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return Poly(self.n, self.m, out)

    __rmul__ = __mul__

    def scalar_mul(self, c: Rational) -> Poly:
        return self * c

    def __pow__(self, k: int) -> Poly:
        out = Poly.one(self.n, self.m)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational):
            other = Poly.constant(self.n, self.m, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    # queries --------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_components(self) -> dict[int, Poly]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Poly(self.n, self.m, t) for d, t in sorted(parts.items())}

    def sparse_exponent(self, exp: tuple[int, ...]) -> list[tuple[int, int, int]]:
        return [(idx // self.m + 1, idx % self.m + 1, e) for idx, e in enumerate(exp) if e]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Coef]]:
        """Terms in graded-lex order: total degree descending, then exponent vector descending."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def evaluate(self, point: Sequence[Sequence[Rational]]) -> Coef:
        if len(point) != self.n or any(len(row) != self.m for row in point):
            raise ParameterError(f"point must be a {self.n}x{self.m} matrix")
        flat = [Fraction(v) for row in point for v in row]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = Fraction(c)
            for v, e in zip(flat, exp):
                if e:
                    term *= v**e
            total += term
        return normalize_coef(total)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}{j}" + (f"^{e}" if e > 1 else "") for i, j, e in self.sparse_exponent(exp)
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


@lru_cache(maxsize=65536)
def _minor_cached(I: tuple[int, ...], J: tuple[int, ...], n: int, m: int) -> Poly:  # noqa: E741
    terms: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(len(I))):
        exp = [0] * (n * m)
        for a, b in enumerate(perm):
            exp[(I[a] - 1) * m + (J[b] - 1)] += 1
        terms[tuple(exp)] = permutation_sign(perm)
    return Poly(n, m, terms)


def minor(t: OneLineTableau) -> Poly:
    """The determinant ``delta_[I:J]`` by Leibniz expansion.

    The returned object is shared through a cache; treat it as immutable.
    """
    return _minor_cached(t.I, t.J, t.n, t.m)


def monomial_of(columns: Iterable[OneLineTableau], n: int, m: int) -> Poly:
    out = Poly.one(n, m)
    for c in columns:
        out = out * minor(c)
    return out


def det(matrix: Sequence[Sequence[Rational]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination (for numeric points)."""
    a = [[Fraction(v) for v in row] for row in matrix]
    size = len(a)
    result = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, size):
            f = a[r][col] / p
            if f:
                for c in range(col, size):
                    a[r][c] -= f * a[col][c]
    return result


def minor_value(t: OneLineTableau, point: Sequence[Sequence[Rational]]) -> Fraction:
    return det([[point[i - 1][j - 1] for j in t.J] for i in t.I])


# --------------------------------------------------------------------------
# exterior algebra of C^dim


class Exterior:
    """An element of ``Lambda^p C^dim`` in the basis ``e_K``, ``K`` strictly increasing."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int, terms: Mapping[tuple[int, ...], Rational] | None = None):
        self.dim = dim
        self.degree = degree
        clean = {}
        for K, c in (terms or {}).items():
            K = tuple(K)
            if len(K) != degree or any(a >= b for a, b in zip(K, K[1:])):
                raise ParameterError(f"{K} is not a strictly increasing index set of size {degree}")
            if K and (K[0] < 1 or K[-1] > dim):
                raise ParameterError(f"{K} has indices outside 1..{dim}")
            if c:
                clean[K] = normalize_coef(c)
        self.terms: dict[tuple[int, ...], Coef] = clean

    @classmethod
    def basis(cls, K: Sequence[int], dim: int) -> Exterior:
        """``e_K`` for an arbitrary index sequence (signed sort, zero on repeats)."""
        K = tuple(K)
        if len(set(K)) != len(K):
            return cls(dim, len(K))
        return cls(dim, len(K), {tuple(sorted(K)): permutation_sign(K)})

    @classmethod
    def unit(cls, dim: int) -> Exterior:
        return cls(dim, 0, {(): 1})

    def __add__(self, other: Exterior) -> Exterior:
        if (self.dim, self.degree) != (other.dim, other.degree):
            raise ParameterError("exterior elements of different degree or ambient")
        out = dict(self.terms)
        for K, c in other.terms.items():
            out[K] = out.get(K, 0) + c
        return Exterior(self.dim, self.degree, out)

    def __mul__(self, c: Rational) -> Exterior:
        return Exterior(self.dim, self.degree, {K: v * c for K, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self) -> Exterior:
        return self * -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Exterior):
            return NotImplemented
        return (self.dim, self.degree, self.terms) == (other.dim, other.degree, other.terms)

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def wedge(self, other: Exterior) -> Exterior:
        return wedge(self, other)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Coef]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e{list(K)}" for K, c in self.sorted_terms())


def wedge(a: Exterior, b: Exterior) -> Exterior:
    if a.dim != b.dim:
        raise ParameterError("exterior elements over different spaces")
    if a.degree + b.degree > a.dim:
        raise DomainError(f"degree {a.degree + b.degree} exceeds dimension {a.dim}")
    out: dict[tuple[int, ...], Coef] = {}
    for K1, c1 in a.terms.items():
        for K2, c2 in b.terms.items():
            seq = K1 + K2
            if len(set(seq)) != len(seq):
                continue
            key = tuple(sorted(seq))
            out[key] = out.get(key, 0) + permutation_sign(seq) * c1 * c2
    return Exterior(a.dim, a.degree + b.degree, out)


def omega(n: int) -> Exterior:
    """The invariant two-form ``sum_u e_{2u-1} ^ e_{2u}`` on ``C^{2n}``."""
    return Exterior(2 * n, 2, {(2 * u - 1, 2 * u): 1 for u in range(1, n + 1)})
