"""The symplectic nullcone ``N_{k,2n}``: invariants, omega-sums and N-standard monomials.

The symplectic form pairs coordinates ``(2u-1, 2u)``:
``<x, y> = sum_u x_{2u-1} y_{2u} - x_{2u} y_{2u-1}``.  Everything below
(``r_ij``, ``omega``, the floor ``[1, 3, ..., 2n-1]``) relies on that choice,
made once in :func:`symplectic_pairing`.
"""

from __future__ import annotations

import math
import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, combinations_with_replacement

from .errors import DomainError, InvariantViolation, ParameterError, ResourceError, guard_limit
from .linalg import column_rank, in_span, solve_columns
from .poly import Coef, Exterior, Poly, minor, minor_value, normalize_coef, omega, wedge
from .straighten import StandardCombination, WeightConfig, straighten, weight
from .tableaux import (
    DoubleTableau,
    Lattice,
    OneLineTableau,
    Shape,
    enumerate_ssyt,
    enumerate_standard,
    index_set_precedes,
    partitions,
)

Matrix = list[list[Fraction]]


def symplectic_pairing(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y) or len(x) % 2:
        raise ParameterError("symplectic pairing needs two vectors of the same even length")
    return sum((x[2 * u] * y[2 * u + 1] - x[2 * u + 1] * y[2 * u] for u in range(len(x) // 2)),
               Fraction(0))


@dataclass(frozen=True)
class NullconeContext:
    k: int
    n: int
    base: int | None = None

    def __post_init__(self) -> None:
        if self.k < 1 or self.n < 1:
            raise ParameterError(f"k and n must be positive, got k={self.k}, n={self.n}")
        WeightConfig(self.k, 2 * self.n, self.base)

    @property
    def floor(self) -> tuple[int, ...]:
        return tuple(2 * d - 1 for d in range(1, self.n + 1))

    @property
    def lattice(self) -> Lattice:
        return Lattice.N(self.k, self.n)

    @property
    def ambient(self) -> Lattice:
        return Lattice.D(self.k, 2 * self.n)

    @cached_property
    def cfg(self) -> WeightConfig:
        return WeightConfig(self.k, 2 * self.n, self.base)

    @property
    def max_length(self) -> int:
        return min(self.k, self.n)

    def dominates_floor(self, J: Sequence[int]) -> bool:
        """``J >= [1, 3, ..., 2n-1]`` in the tableau order (which forces ``|J| <= n``)."""
        return index_set_precedes(self.floor, tuple(J))

    def make(self, I: Sequence[int], J: Sequence[int]) -> OneLineTableau:  # noqa: E741
        return OneLineTableau(tuple(I), tuple(J), self.k, 2 * self.n)


def basic_invariant(i: int, j: int, ctx: NullconeContext) -> Poly:
    """``r_ij = sum_u x_{i,2u-1} x_{j,2u} - x_{j,2u-1} x_{i,2u}``."""
    if not 1 <= i < j <= ctx.k:
        raise ParameterError(f"basic invariant needs 1 <= i < j <= {ctx.k}, got ({i}, {j})")
    k, m = ctx.k, 2 * ctx.n
    x = lambda a, b: Poly.var(a, b, k, m)  # noqa: E731
    out = Poly(k, m)
    for u in range(1, ctx.n + 1):
        out = out + x(i, 2 * u - 1) * x(j, 2 * u) - x(j, 2 * u - 1) * x(i, 2 * u)
    return out


# --------------------------------------------------------------------------
# omega-sums


@dataclass(frozen=True)
class OmegaSum:
    """``sum_d c_d e_{J_d}`` written as ``omega ^ certificate``."""

    n: int
    element: Exterior
    certificate: Exterior

    @property
    def p(self) -> int:
        return self.element.degree

    @property
    def terms(self) -> list[tuple[tuple[int, ...], Coef]]:
        return self.element.sorted_terms()

    @property
    def leading(self) -> tuple[int, ...]:
        return self.terms[0][0]

    def verify(self) -> bool:
        return wedge(omega(self.n), self.certificate) == self.element


def _omega_generators(n: int, p: int) -> list[tuple[tuple[int, ...], Exterior]]:
    om = omega(n)
    return [(K, wedge(om, Exterior.basis(K, 2 * n))) for K in combinations(range(1, 2 * n + 1), p - 2)]


def search_omega_sum(J: Sequence[int], n: int) -> OmegaSum | None:
    """An omega-sum whose lex-smallest term is ``e_J`` with coefficient 1, or ``None``.

    Single generators ``omega ^ e_K`` are tried first, then a linear solve in
    their span.  No side condition on ``J`` is assumed, so ``None`` is a genuine
    answer.
    """
    J = tuple(J)
    p = len(J)
    if p < 2 or p > 2 * n:
        return None
    gens = _omega_generators(n, p)
    for K, g in gens:
        if g and min(g.terms) == J:
            c = Fraction(1, 1) / g.terms[J]
            return OmegaSum(n, g * c, Exterior(2 * n, p - 2, {K: c}))
    smaller = [K for K in combinations(range(1, 2 * n + 1), p) if K < J]
    columns = [{key: v for key, v in g.terms.items() if key == J or key < J} for _, g in gens]
    target = {J: 1}
    target.update({K: 0 for K in smaller})
    sol = solve_columns(columns, target, require_unique=False)
    if sol is None:
        return None
    cert = Exterior(2 * n, p - 2, {K: c for (K, _), c in zip(gens, sol)})
    element = wedge(omega(n), cert)
    if not element or min(element.terms) != J or element.terms[J] != 1:
        raise InvariantViolation(f"omega-sum solve for {J} produced {element}")
    return OmegaSum(n, element, cert)


def omega_sum_for(J: Sequence[int], ctx: NullconeContext) -> OmegaSum:
    """The omega-sum used to rewrite a column ``J`` that does not dominate the floor."""
    J = tuple(J)
    n = ctx.n
    if not 2 <= len(J) <= 2 * n or any(a >= b for a, b in zip(J, J[1:])) or J[0] < 1 or J[-1] > 2 * n:
        raise ParameterError(f"J must be a strictly increasing subset of 1..{2 * n} of size >= 2: {J}")
    if ctx.dominates_floor(J):
        raise DomainError(f"no omega-sum exists with leading term {list(J)}: it dominates {list(ctx.floor)}")
    found = search_omega_sum(J, n)
    if found is None:
        raise InvariantViolation(f"no omega-sum found for {J} although it does not dominate the floor")
    return found


def theta_element(I: Sequence[int], s: OmegaSum, ctx: NullconeContext) -> Poly:  # noqa: E741
    """``sum_d c_d delta_[I:J_d]``, an element of the nullcone ideal."""
    I = tuple(I)  # noqa: E741
    if s.n != ctx.n:
        raise ParameterError("omega-sum and context have different n")
    if len(I) != s.p:
        raise ParameterError(f"|I| = {len(I)} but the omega-sum has degree {s.p}")
    out = Poly(ctx.k, 2 * ctx.n)
    for J, c in s.terms:
        out = out + minor(ctx.make(I, J)) * c
    return out


# --------------------------------------------------------------------------
# N-straightening


def _first_bad_column(t: DoubleTableau, ctx: NullconeContext) -> OneLineTableau | None:
    return next((c for c in t.columns if not ctx.lattice.contains(c)), None)


def n_straighten(product: Sequence[OneLineTableau], ctx: NullconeContext,
                 fuel: int = 10**5) -> StandardCombination:
    """Rewrite ``prod delta_t`` modulo the nullcone ideal as a combination of N-standard monomials.

    Straighten in ``D(k, 2n)``; while some term has a column ``[I:J]`` outside
    ``D(N)``, replace ``delta_[I:J]`` by ``-sum_{J_d != J} c_d delta_[I:J_d]``
    from the omega-sum led by ``J`` and straighten again.  Each rewrite lowers
    the weight of everything it produces, so the loop terminates; ``fuel``
    only guards against bugs.
    """
    ambient = ctx.ambient
    cfg = ctx.cfg
    for t in product:
        ambient.require(t)
    current: dict[DoubleTableau, Coef] = straighten(list(product), ambient, cfg).as_dict()
    steps = 0
    while True:
        bad = [t for t in current if _first_bad_column(t, ctx) is not None]
        if not bad:
            break
        steps += 1
        if steps > fuel:
            raise ResourceError(f"N-straightening did not finish within {fuel} rewrites")
        t = max(bad, key=lambda b: (weight(b, cfg), b.key()))
        coef = current.pop(t)
        col = _first_bad_column(t, ctx)
        rest = list(t.columns)
        rest.remove(col)
        s = omega_sum_for(col.J, ctx)
        for J, c in s.terms:
            if J == col.J:
                continue
            replaced = straighten(rest + [ctx.make(col.I, J)], ambient, cfg)
            for c2, t2 in replaced:
                value = current.get(t2, 0) - coef * c * c2
                if value:
                    current[t2] = normalize_coef(value)
                else:
                    current.pop(t2, None)
    return StandardCombination.build(current, ctx.lattice, cfg)


def enumerate_n_standard(shape: Sequence[int], ctx: NullconeContext,
                         guard: int | None = None) -> list[DoubleTableau]:
    """Standard tableaux of ``shape`` with every column in ``D(N_{k,2n})``."""
    shape = Shape(shape)
    if shape.length > ctx.max_length:
        return []
    return enumerate_standard(shape, ctx.lattice, guard=guard)


# --------------------------------------------------------------------------
# dimension oracles


def dim_gl_weyl(shape: Sequence[int], k: int) -> int:
    lam = Shape(shape).padded(k)
    num = math.prod(lam[i] - lam[j] + j - i for i in range(k) for j in range(i + 1, k))
    den = math.prod(j - i for i in range(k) for j in range(i + 1, k))
    return num // den


def dim_sp_weyl(shape: Sequence[int], n: int) -> int:
    lam = Shape(shape).padded(n)
    rho = [n - i for i in range(n)]
    l = [a + r for a, r in zip(lam, rho)]  # noqa: E741
    num = den = Fraction(1)
    for i in range(n):
        num *= l[i]
        den *= rho[i]
        for j in range(i + 1, n):
            num *= (l[i] - l[j]) * (l[i] + l[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    value = num / den
    if value.denominator != 1:
        raise InvariantViolation(f"symplectic Weyl formula gave {value}")
    return int(value)


def dim_gl(shape: Sequence[int], k: int) -> int:
    """Dimension of the ``GL_k`` irreducible: semistandard count, checked against Weyl."""
    shape = Shape(shape)
    if shape.length > k:
        raise DomainError(f"shape {tuple(shape)} has more than {k} rows")
    count = len(enumerate_ssyt(shape, k))
    if count != dim_gl_weyl(shape, k):
        raise InvariantViolation(f"GL_{k} dimension mismatch for {tuple(shape)}")
    return count


def dim_sp(shape: Sequence[int], n: int) -> int:
    """Dimension of the ``Sp_2n`` irreducible: column-floor tableau count, checked against Weyl."""
    shape = Shape(shape)
    if shape.length > n:
        raise DomainError(f"shape {tuple(shape)} has more than {n} rows")
    floor = tuple(range(1, 2 * n, 2))
    count = len(enumerate_ssyt(shape, 2 * n, column_floor=floor))
    if count != dim_sp_weyl(shape, n):
        raise InvariantViolation(f"Sp_{2 * n} dimension mismatch for {tuple(shape)}")
    return count


# --------------------------------------------------------------------------
# sampling and ideal membership


def sample_nullcone_point(ctx: NullconeContext, seed: int = 0) -> Matrix:
    """A ``k x 2n`` rational matrix with isotropic row span, deterministic in ``seed``.

    Random exact transvections ``x -> x + c <x, v> v`` move the standard
    Lagrangian ``span(e_1, e_3, ...)``; a random integer ``k x n`` matrix then
    picks rows inside it.
    """
    rng = random.Random(seed)
    dim = 2 * ctx.n
    basis = [[Fraction(int(j == 2 * d)) for j in range(dim)] for d in range(ctx.n)]
    for _ in range(ctx.n + 2):
        v = [Fraction(rng.randint(-2, 2)) for _ in range(dim)]
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        basis = [[x + c * symplectic_pairing(row, v) * vj for x, vj in zip(row, v)] for row in basis]
    coeffs = [[rng.randint(-3, 3) for _ in range(ctx.n)] for _ in range(ctx.k)]
    point = [[sum((a * row[j] for a, row in zip(crow, basis)), Fraction(0)) for j in range(dim)]
             for crow in coeffs]
    for i in range(ctx.k):
        for j in range(i + 1, ctx.k):
            if symplectic_pairing(point[i], point[j]):
                raise InvariantViolation("sampled point is not isotropic")
    return point


def sample_points(ctx: NullconeContext, count: int, seed: int = 0) -> list[Matrix]:
    return [sample_nullcone_point(ctx, seed * 1_000_003 + i) for i in range(count)]


def vanishes_on_nullcone(f: Poly, ctx: NullconeContext, num_points: int = 25, seed: int = 0) -> bool:
    """Evaluate at sampled nullcone points; a non-zero value proves ``f`` is not in the ideal."""
    return all(f.evaluate(pt) == 0 for pt in sample_points(ctx, num_points, seed))


def _grading(exp: tuple[int, ...], k: int, n: int) -> tuple:
    """Row degrees together with the weight of the diagonal torus of ``Sp_2n``."""
    m = 2 * n
    rows = tuple(sum(exp[i * m:(i + 1) * m]) for i in range(k))
    torus = tuple(
        sum(exp[i * m + 2 * u] - exp[i * m + 2 * u + 1] for i in range(k)) for u in range(n)
    )
    return rows, torus


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    return out


def in_ideal_exact(f: Poly, ctx: NullconeContext, guard: int | None = None) -> bool:
    """Exact test of ``f in <r_ij>`` by linear algebra in each graded piece.

    The ideal is generated by forms of degree 2 that are homogeneous for the
    row grading and the torus weight, so ``f`` is a member iff each graded
    piece of degree ``d`` lies in the span of ``r_ij`` times monomials of
    degree ``d - 2`` in the same graded piece.
    """
    k, n = ctx.k, ctx.n
    nvars = k * 2 * n
    limit = guard_limit(guard)
    gens = [basic_invariant(i, j, ctx) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    pieces: dict[tuple, dict] = {}
    for exp, c in f.terms.items():
        pieces.setdefault((sum(exp), _grading(exp, k, n)), {})[exp] = c
    for (degree, grade), target in pieces.items():
        if degree < 2:
            return False
        multipliers = _monomials(nvars, degree - 2)
        if len(multipliers) * len(gens) > limit:
            raise ResourceError(f"ideal certificate in degree {degree} exceeds the guard")
        columns = []
        for g in gens:
            g_rows, _ = _grading(next(iter(g.terms)), k, n)
            for mono in multipliers:
                rows, torus = _grading(mono, k, n)
                if (tuple(a + b for a, b in zip(rows, g_rows)), torus) != grade:
                    continue
                columns.append((g * Poly(k, 2 * n, {mono: 1})).terms)
        if not in_span(columns, target):
            return False
    return True


# --------------------------------------------------------------------------
# linear independence of N-standard monomials on the nullcone


@dataclass(frozen=True)
class IndependenceReport:
    candidates: int
    points: int
    rank: int
    attempts: int

    @property
    def full_rank(self) -> bool:
        return self.rank == self.candidates

    @property
    def finding(self) -> str | None:
        if self.full_rank:
            return None
        return (f"FINDING: evaluation rank {self.rank} < {self.candidates} candidates "
                f"after {self.attempts} attempts with up to {self.points} points")


def n_standard_up_to(degree: int, ctx: NullconeContext) -> list[DoubleTableau]:
    """All N-standard tableaux with at most ``degree`` boxes, the empty one included."""
    out = [DoubleTableau((), ctx.k, 2 * ctx.n)]
    for d in range(1, degree + 1):
        for shape in partitions(d):
            out.extend(enumerate_n_standard(shape, ctx))
    return out


def evaluation_matrix(candidates: Sequence[DoubleTableau], points: Sequence[Matrix]) -> list[list[Fraction]]:
    rows = []
    for pt in points:
        cache: dict[OneLineTableau, Fraction] = {}
        row = []
        for t in candidates:
            value = Fraction(1)
            for c in t.columns:
                if c not in cache:
                    cache[c] = minor_value(c, pt)
                value *= cache[c]
            row.append(value)
        rows.append(row)
    return rows


def basis_independence_check(candidates: Sequence[DoubleTableau], ctx: NullconeContext,
                             num_points: int | None = None, seed: int = 0,
                             retries: int = 2) -> IndependenceReport:
    """Rank of the candidates' values at sampled nullcone points.

    Full column rank proves the candidates are independent modulo the ideal.
    A deficient rank is retried with twice as many points before it is reported.
    """
    if not candidates:
        return IndependenceReport(0, 0, 0, 0)
    points = num_points if num_points is not None else 2 * len(candidates)
    if points < len(candidates):
        raise ParameterError(f"need at least {len(candidates)} points, got {points}")
    rank = 0
    for attempt in range(1, retries + 2):
        pts = sample_points(ctx, points, seed + attempt - 1)
        rank = column_rank(evaluation_matrix(candidates, pts))
        if rank == len(candidates):
            break
        if attempt <= retries:
            points *= 2
    return IndependenceReport(len(candidates), points, rank, attempt)
