"""Weights, straightening into standard monomials, and the Hibi leading term."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InvariantViolation, ParameterError
from .linalg import solve_columns
from .poly import Coef, Poly, monomial_of, normalize_coef
from .tableaux import (
    DoubleTableau,
    Lattice,
    OneLineTableau,
    Order,
    Shape,
    as_standard,
    compare,
    enumerate_with_content,
    is_standard,
    xi,
)


@dataclass(frozen=True)
class WeightConfig:
    n: int
    m: int
    base: int | None = None

    def __post_init__(self) -> None:
        if self.base is None:
            object.__setattr__(self, "base", 2 * (self.n + self.m) + 1)
        if self.base <= 2 * (self.n + self.m):
            raise ParameterError(f"weight base must exceed 2(n+m) = {2 * (self.n + self.m)}, got {self.base}")


def weight(t: OneLineTableau | DoubleTableau, cfg: WeightConfig) -> int:
    """``sum_r (m + r - q_r) N^(n-r)`` with ``q = xi(t)``; additive over columns."""
    if isinstance(t, DoubleTableau):
        return sum(weight(c, cfg) for c in t.columns)
    if t.ambient != (cfg.n, cfg.m):
        raise ParameterError(f"{t} is not in D({cfg.n},{cfg.m})")
    q = xi(t)
    N = cfg.base
    return sum((cfg.m + r - qr) * N ** (cfg.n - r) for r, qr in enumerate(q, start=1))


@dataclass(frozen=True)
class StandardCombination:
    """``sum c_r * delta_{T_r}`` with every ``T_r`` standard in ``lattice``.

    Terms are kept in canonical order: weight descending, then the tableau key.
    """

    terms: tuple[tuple[Coef, DoubleTableau], ...]
    lattice: Lattice
    cfg: WeightConfig

    @classmethod
    def build(cls, coeffs: dict[DoubleTableau, Coef], lattice: Lattice,
              cfg: WeightConfig) -> StandardCombination:
        items = [(normalize_coef(c), t) for t, c in coeffs.items() if c]
        for _, t in items:
            if not is_standard(t, lattice):
                raise InvariantViolation(f"{t} is not standard in {lattice}")
        items.sort(key=lambda ct: (-weight(ct[1], cfg), ct[1].key()))
        return cls(tuple(items), lattice, cfg)

    def __iter__(self) -> Iterator[tuple[Coef, DoubleTableau]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def as_dict(self) -> dict[DoubleTableau, Coef]:
        return {t: c for c, t in self.terms}

    def coefficient(self, t: DoubleTableau) -> Coef:
        return self.as_dict().get(t, 0)

    def weights(self) -> list[int]:
        return [weight(t, self.cfg) for _, t in self.terms]

    def expand(self) -> Poly:
        n, m = self.lattice.rows, self.lattice.cols
        out = Poly(n, m)
        for c, t in self.terms:
            out = out + monomial_of(t.columns, n, m) * c
        return out

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c, _ in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{t}" for c, t in self.terms)


def _content(product: Sequence[OneLineTableau]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rows = tuple(sorted(i for t in product for i in t.I))
    cols = tuple(sorted(j for t in product for j in t.J))
    return rows, cols


@lru_cache(maxsize=8192)
def _straighten_key(key: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...], lattice: Lattice
                    ) -> tuple[tuple[Coef, DoubleTableau], ...]:
    n, m = lattice.rows, lattice.cols
    product = [OneLineTableau(I, J, n, m) for I, J in key]
    fast = as_standard(product, n, m)
    if fast is not None and is_standard(fast, lattice):
        return ((1, fast),)
    target = monomial_of(product, n, m)
    rows, cols = _content(product)
    candidates = enumerate_with_content(lattice, rows, cols)
    basis = [monomial_of(t.columns, n, m).terms for t in candidates]
    solution = solve_columns(basis, target.terms, require_unique=True)
    if solution is None:
        raise InvariantViolation(f"product {key} is not a combination of standard monomials in {lattice}")
    out = []
    for c, t in zip(solution, candidates):
        if c:
            if c.denominator != 1:
                raise InvariantViolation(f"non-integral straightening coefficient {c}")
            out.append((int(c), t))
    return tuple(out)


def straighten(product: Sequence[OneLineTableau], lattice: Lattice | None = None,
               cfg: WeightConfig | None = None) -> StandardCombination:
    """Write ``prod delta_t`` as the unique combination of standard monomials.

    ``lattice`` defaults to ``D(n, m)`` of the factors; factors outside it are
    rejected.  The empty product is the empty tableau with coefficient 1.
    """
    product = list(product)
    if lattice is None:
        if not product:
            raise ParameterError("the empty product needs an explicit lattice")
        lattice = Lattice.D(*product[0].ambient)
    if lattice.kind != "D":
        raise ParameterError("straighten works in a full D(n,m); use n_straighten for the nullcone")
    n, m = lattice.rows, lattice.cols
    cfg = cfg or WeightConfig(n, m)
    if (cfg.n, cfg.m) != (n, m):
        raise ParameterError("weight config and lattice have different ambients")
    for t in product:
        lattice.require(t)
    if not product:
        return StandardCombination.build({DoubleTableau((), n, m): 1}, lattice, cfg)
    key = tuple(sorted((t.I, t.J) for t in product))
    terms = _straighten_key(key, lattice)
    return StandardCombination.build({t: c for c, t in terms}, lattice, cfg)


def hibi_term(a: OneLineTableau, b: OneLineTableau, lattice: Lattice) -> DoubleTableau:
    """The standard tableau ``(a meet b)(a join b)``."""
    lo, hi = lattice.meet(a, b), lattice.join(a, b)
    return DoubleTableau((lo, hi), lattice.rows, lattice.cols)


def check_leading(comb: StandardCombination, expected: DoubleTableau) -> None:
    """Assert that ``expected`` is the unique weight-maximal term and has coefficient 1."""
    if not comb.terms:
        raise InvariantViolation("empty combination has no leading term")
    coef, top = comb.terms[0]
    weights = comb.weights()
    if top != expected or coef != 1:
        raise InvariantViolation(f"leading term is {coef}*{top}, expected 1*{expected}")
    if len(weights) > 1 and weights[1] >= weights[0]:
        raise InvariantViolation(f"weight-maximal term of {comb} is not unique")


def leading_term(a: OneLineTableau, b: OneLineTableau,
                 cfg: WeightConfig | None = None) -> tuple[DoubleTableau, Coef]:
    """Leading term of ``delta_a delta_b`` for incomparable ``a``, ``b``; always ``(meet, join)`` with coefficient 1."""
    if compare(a, b) is not Order.INCOMPARABLE:
        raise DomainError(f"{a} and {b} are comparable: the product is already standard")
    lattice = Lattice.D(*a.ambient)
    comb = straighten([a, b], lattice, cfg)
    expected = hibi_term(a, b, lattice)
    check_leading(comb, expected)
    return expected, 1


def _partial_sums(values: Sequence[int], width: int) -> list[int]:
    out, acc = [], 0
    for i in range(width):
        acc += values[i] if i < len(values) else 0
        out.append(acc)
    return out


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Partial-sum dominance ``a >= b`` of two weakly decreasing sequences."""
    width = max(len(a), len(b))
    return all(x >= y for x, y in zip(_partial_sums(a, width), _partial_sums(b, width)))


def _dominance_meet(a: Shape, b: Shape) -> Shape:
    width = max(len(a), len(b))
    sums = [min(x, y) for x, y in zip(_partial_sums(a, width), _partial_sums(b, width))]
    return Shape(s - p for s, p in zip(sums, [0] + sums[:-1]))


def shape_leading(comb: StandardCombination,
                  column_lengths: Sequence[int] | None = None) -> Shape:
    """The shape-filtration level of a combination.

    This is the join of the terms' column-length sequences under partial-sum
    dominance, returned as a row shape (conjugation reverses dominance, so it
    is the dominance meet of the row shapes).

    With ``column_lengths`` (those of the straightened product) every term's
    column lengths are asserted to dominate them.
    """
    if not comb.terms:
        raise DomainError("shape_leading of an empty combination")
    if column_lengths is not None:
        for _, t in comb.terms:
            if not dominates(t.column_lengths, sorted(column_lengths, reverse=True)):
                raise InvariantViolation(f"{t} violates the column dominance of the shape filtration")
    shapes = [t.shape for _, t in comb.terms]
    out = shapes[0]
    for s in shapes[1:]:
        out = _dominance_meet(out, s)
    return out


def product_columns(product: Iterable[OneLineTableau]) -> tuple[int, ...]:
    return tuple(sorted((len(t) for t in product), reverse=True))


def expand_product(product: Sequence[OneLineTableau]) -> Poly:
    if not product:
        raise ParameterError("empty product has no ambient")
    n, m = product[0].ambient
    return monomial_of(product, n, m)


def scale(comb: dict[DoubleTableau, Coef], c: Fraction | int, into: dict[DoubleTableau, Coef]) -> None:
    for t, v in comb.items():
        into[t] = into.get(t, 0) + c * v
        if not into[t]:
            del into[t]
