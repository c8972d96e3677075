"""Gelfand-Tsetlin posets, patterns and their lattice cones.

A cell ``(a, b)`` stands for ``z_b^(a)``: ``a`` is the row (counted from the
bottom, so row ``a`` of ``Gamma_M`` has ``a`` cells) and ``b`` the position in
that row.  In ``Gamma_M`` the covering relations are

    z_b^(a) > z_b^(a-1)      and      z_b^(a) > z_{b+1}^(a+1),

so ``(a, b) >= (a', b')`` iff ``b <= b'`` and ``a - b >= a' - b'``.

Three posets are supported, all convex subsets of some ``Gamma_M``:

* ``gamma(m)``         the full triangle ``Gamma_m``;
* ``gamma_nm(n, m)``   cells of ``Gamma_{m+n}`` with ``b <= n`` and ``a - b < m``
  (the quotient of the Pluecker patterns by the top element);
* ``nullcone(k, n)``   ``gamma_nm(k, 2n)`` minus the regions ``A`` and ``B``.

Serialization lists rows top first and, within a row, cells by increasing ``b``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DomainError, InvariantViolation, ParameterError, ResourceError, guard_limit
from .tableaux import DoubleTableau, SemistandardTableau, Shape, xi

Cell = tuple[int, int]


def gamma_geq(u: Cell, v: Cell) -> bool:
    """Order of the ambient triangle: ``u >= v``."""
    return u[1] <= v[1] and u[0] - u[1] >= v[0] - v[1]


def in_region_a(cell: Cell, n: int) -> bool:
    a, b = cell
    return a <= 2 * n and 2 * b > a + 1


def in_region_b(cell: Cell, k: int, n: int) -> bool:
    c = min(k, n)
    return gamma_geq((2 * n, c + 1), cell)


@dataclass(frozen=True)
class GTPoset:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        arity = {"gamma": 1, "gamma_nm": 2, "nullcone": 2}
        if self.kind not in arity:
            raise ParameterError(f"unknown poset kind {self.kind!r}")
        if len(self.params) != arity[self.kind] or any(p < 1 for p in self.params):
            raise ParameterError(f"bad parameters {self.params} for {self.kind}")

    @classmethod
    def gamma(cls, m: int) -> GTPoset:
        return cls("gamma", (m,))

    @classmethod
    def gamma_nm(cls, n: int, m: int) -> GTPoset:
        return cls("gamma_nm", (n, m))

    @classmethod
    def nullcone(cls, k: int, n: int) -> GTPoset:
        return cls("nullcone", (k, n))

    @property
    def big(self) -> int:
        """Size ``M`` of the enclosing triangle ``Gamma_M``."""
        if self.kind == "gamma":
            return self.params[0]
        if self.kind == "gamma_nm":
            return sum(self.params)
        k, n = self.params
        return k + 2 * n

    @property
    def split_row(self) -> int:
        """The row carrying the shape: the top row of ``Gamma_m``, row ``m`` of ``Gamma_{n,m}``, row ``2n`` of the nullcone poset."""
        if self.kind == "gamma":
            return self.params[0]
        if self.kind == "gamma_nm":
            return self.params[1]
        return 2 * self.params[1]

    @property
    def halves(self) -> tuple[int, int]:
        """``(rows, cols)``: the glued triangles are ``Gamma_rows`` and ``Gamma_cols``."""
        if self.kind == "gamma":
            raise ParameterError("Gamma_m is not glued")
        if self.kind == "gamma_nm":
            return self.params
        k, n = self.params
        return (k, 2 * n)

    def contains(self, cell: Cell) -> bool:
        a, b = cell
        if not 1 <= b <= a <= self.big:
            return False
        if self.kind == "gamma":
            return True
        n, m = self.halves
        if b > n or a - b >= m:
            return False
        if self.kind == "nullcone":
            k, nn = self.params
            return not (in_region_a(cell, nn) or in_region_b(cell, k, nn))
        return True

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        M = self.big
        return tuple((a, b) for a in range(M, 0, -1) for b in range(1, a + 1) if self.contains((a, b)))

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {c: i for i, c in enumerate(self.cells)}

    def __len__(self) -> int:
        return len(self.cells)

    def row_cells(self, a: int) -> tuple[Cell, ...]:
        return tuple(c for c in self.cells if c[0] == a)

    @cached_property
    def row_indices(self) -> tuple[int, ...]:
        return tuple(sorted({a for a, _ in self.cells}, reverse=True))

    @cached_property
    def covers(self) -> tuple[tuple[Cell, Cell], ...]:
        """Pairs ``(u, v)`` with ``u`` covering ``v``, both inside the poset."""
        out = []
        for a, b in self.cells:
            for lower in ((a - 1, b), (a + 1, b + 1)):
                if self.contains(lower):
                    out.append(((a, b), lower))
        return tuple(out)

    def minimal_elements(self) -> tuple[Cell, ...]:
        has_lower = {u for u, _ in self.covers}
        return tuple(c for c in self.cells if c not in has_lower)

    def to_json(self) -> dict:
        names = {"gamma": ("m",), "gamma_nm": ("n", "m"), "nullcone": ("k", "n")}[self.kind]
        return {"kind": self.kind, **dict(zip(names, self.params))}

    def __str__(self) -> str:
        if self.kind == "gamma":
            return f"Gamma_{self.params[0]}"
        if self.kind == "gamma_nm":
            return f"Gamma_{{{self.params[0]},{self.params[1]}}}"
        k, n = self.params
        return f"F_{{{k},{2 * n}}}"


def in_nullcone_poset(cell: Cell, k: int, n: int) -> bool:
    """Whether ``z_b^(a)`` of ``Gamma_{k,2n}`` survives the removal of ``A`` and ``B``."""
    if not GTPoset.gamma_nm(k, 2 * n).contains(cell):
        raise ParameterError(f"{cell} is not a cell of Gamma_{{{k},{2 * n}}}")
    return not (in_region_a(cell, n) or in_region_b(cell, k, n))


@dataclass(frozen=True)
class GTPattern:
    """Non-negative integer values on the cells of a :class:`GTPoset`."""

    poset: GTPoset
    values: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values) or (0,) * len(self.poset)
        if len(vals) != len(self.poset):
            raise ParameterError(f"{len(vals)} values for a poset with {len(self.poset)} cells")
        object.__setattr__(self, "values", vals)

    @classmethod
    def zero(cls, poset: GTPoset) -> GTPattern:
        return cls(poset)

    @classmethod
    def from_rows(cls, poset: GTPoset, rows: Sequence[Sequence[int]]) -> GTPattern:
        """Rows top first, each listing the poset's cells of that row by increasing ``b``."""
        if len(rows) != len(poset.row_indices):
            raise ParameterError(f"{poset} has {len(poset.row_indices)} rows, got {len(rows)}")
        vals: list[int] = []
        for a, row in zip(poset.row_indices, rows):
            width = len(poset.row_cells(a))
            if len(row) != width:
                raise ParameterError(f"row {a} of {poset} has {width} cells, got {len(row)}")
            vals.extend(row)
        return cls(poset, tuple(vals))

    @classmethod
    def from_mapping(cls, poset: GTPoset, mapping: dict[Cell, int]) -> GTPattern:
        extra = [c for c, v in mapping.items() if v and not poset.contains(c)]
        if extra:
            raise DomainError(f"non-zero values outside {poset}: {extra}")
        return cls(poset, tuple(mapping.get(c, 0) for c in poset.cells))

    def __call__(self, a: int, b: int) -> int:
        i = self.poset.index.get((a, b))
        return 0 if i is None else self.values[i]

    def as_mapping(self) -> dict[Cell, int]:
        return dict(zip(self.poset.cells, self.values))

    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(self(*c) for c in self.poset.row_cells(a)) for a in self.poset.row_indices]

    def row(self, a: int) -> tuple[int, ...]:
        return tuple(self(*c) for c in self.poset.row_cells(a))

    def shape(self) -> Shape:
        return Shape(self.row(self.poset.split_row))

    def support(self) -> set[Cell]:
        return {c for c, v in zip(self.poset.cells, self.values) if v}

    def is_order_preserving(self) -> bool:
        if any(v < 0 for v in self.values):
            return False
        return all(self(*u) >= self(*v) for u, v in self.poset.covers)

    def check(self) -> GTPattern:
        if not self.is_order_preserving():
            raise InvariantViolation(f"values on {self.poset} are not order preserving")
        return self

    def __add__(self, other: GTPattern) -> GTPattern:
        return pattern_add(self, other)

    def __str__(self) -> str:
        return " / ".join(",".join(map(str, r)) for r in self.rows())


def pattern_add(p: GTPattern, q: GTPattern) -> GTPattern:
    if p.poset != q.poset:
        raise ParameterError(f"cannot add patterns on {p.poset} and {q.poset}")
    return GTPattern(p.poset, tuple(a + b for a, b in zip(p.values, q.values)))


# --------------------------------------------------------------------------
# patterns of GL_m and semistandard tableaux


def pattern_from_tableau(T: SemistandardTableau, m: int) -> GTPattern:
    """Row ``i`` of the pattern is the shape of the subtableau of entries ``<= i``."""
    if T.max_entry > m:
        raise ParameterError(f"tableau has entries larger than {m}")
    poset = GTPoset.gamma(m)
    mapping: dict[Cell, int] = {}
    for i in range(1, m + 1):
        for r, row in enumerate(T.rows[:i]):
            mapping[(i, r + 1)] = sum(1 for v in row if v <= i)
    return GTPattern.from_mapping(poset, mapping)


def tableau_from_pattern(p: GTPattern) -> SemistandardTableau:
    """Fill the skew shape between consecutive rows ``i-1`` and ``i`` with ``i``."""
    if p.poset.kind != "gamma":
        raise ParameterError("tableau_from_pattern needs a pattern on Gamma_m")
    p.check()
    m = p.poset.params[0]
    rows: list[list[int]] = [[] for _ in range(m)]
    previous = [0] * m
    for i in range(1, m + 1):
        current = [p(i, b) for b in range(1, i + 1)] + [0] * (m - i)
        for r in range(m):
            rows[r].extend([i] * (current[r] - previous[r]))
        previous = current
    return SemistandardTableau(tuple(tuple(r) for r in rows))


def pattern_of_columns(columns: Sequence[Sequence[int]], m: int) -> GTPattern:
    """Pattern on ``Gamma_m`` of the semistandard tableau with the given columns."""
    return pattern_from_tableau(SemistandardTableau.from_columns(columns), m)


def top_pattern(n: int, m: int) -> GTPattern:
    """The pattern of the top element ``[m+1, ..., m+n]`` of ``Pl(n, m+n)``."""
    return pattern_of_columns([tuple(range(m + 1, m + n + 1))], m + n)


def reduce_mod_top(p: GTPattern, n: int) -> GTPattern:
    """Canonical representative on ``Gamma_{n,m}`` of a Pluecker pattern on ``Gamma_{m+n}``.

    Subtracts ``c * p_top`` with ``c = p(z_n^(m+n))`` and restricts to ``Gamma_{n,m}``.
    """
    if p.poset.kind != "gamma" or not 1 <= n < p.poset.params[0]:
        raise ParameterError("reduce_mod_top needs a pattern on Gamma_{m+n} with 1 <= n < m+n")
    p.check()
    M = p.poset.params[0]
    m = M - n
    c = p(M, n)
    for (a, b), v in p.as_mapping().items():
        if b > n and v:
            raise DomainError(f"support meets column {b} > {n}: not a Pluecker pattern")
        if b <= n and a - b >= m and v != c:
            raise DomainError("pattern is not constant above z_n^(m+n): not a Pluecker pattern")
    target = GTPoset.gamma_nm(n, m)
    return GTPattern.from_mapping(target, {cell: p(*cell) for cell in target.cells})


def pattern_of_standard(t: DoubleTableau, poset: GTPoset | None = None) -> GTPattern:
    """Point of the lattice cone attached to a standard double tableau.

    The columns are sent through ``xi`` to a chain of ``Pl(n, m+n)``, read as a
    semistandard tableau, and the resulting pattern is reduced modulo the top
    element.  Passing a nullcone poset restricts the result to it.
    """
    n, m = t.n, t.m
    p = pattern_of_columns([xi(c) for c in t.columns], m + n)
    q = reduce_mod_top(p, n)
    return restrict(q, poset) if poset is not None else q


def restrict(p: GTPattern, poset: GTPoset) -> GTPattern:
    """Restrict a ``Gamma_{n,m}`` pattern to a sub-poset; it must vanish off the sub-poset."""
    if p.poset.kind != "gamma_nm" or poset.halves != p.poset.halves:
        raise ParameterError(f"cannot restrict a pattern on {p.poset} to {poset}")
    return GTPattern.from_mapping(poset, {c: v for c, v in p.as_mapping().items()})


def embed(p: GTPattern) -> GTPattern:
    """Extend a nullcone-poset pattern by zero to ``Gamma_{k,2n}``."""
    if p.poset.kind == "gamma_nm":
        return p
    target = GTPoset.gamma_nm(*p.poset.halves)
    return GTPattern.from_mapping(target, p.as_mapping())


# --------------------------------------------------------------------------
# gluing along the shared row


def _minus_cell(i: int, j: int, n: int, m: int) -> Cell:
    """Image in ``Gamma_{n,m}`` of the cell ``z_j^(i)`` of ``Gamma_n``."""
    return (m + n - i, n - i + j)


def glue(p_minus: GTPattern, p_plus: GTPattern, target: GTPoset | None = None) -> GTPattern:
    """Fiber product of a ``Gamma_n`` and a ``Gamma_m`` pattern over their common top row."""
    if p_minus.poset.kind != "gamma" or p_plus.poset.kind != "gamma":
        raise ParameterError("glue needs two patterns on plain GT posets")
    n, m = p_minus.poset.params[0], p_plus.poset.params[0]
    if p_minus.shape() != p_plus.shape():
        raise DomainError(f"top rows differ: {tuple(p_minus.shape())} vs {tuple(p_plus.shape())}")
    p_minus.check()
    p_plus.check()
    poset = GTPoset.gamma_nm(n, m)
    mapping: dict[Cell, int] = {}
    for (a, b), v in p_plus.as_mapping().items():
        if v and not poset.contains((a, b)):
            raise DomainError(f"GL_{m} pattern is non-zero at {(a, b)}, outside {poset}")
        if poset.contains((a, b)):
            mapping[(a, b)] = v
    for (i, j), v in p_minus.as_mapping().items():
        cell = _minus_cell(i, j, n, m)
        if not poset.contains(cell):
            if v:
                raise DomainError(f"GL_{n} pattern is non-zero at {(i, j)}, outside {poset}")
            continue
        if cell in mapping and mapping[cell] != v:
            raise InvariantViolation("shared row disagrees after gluing")
        mapping[cell] = v
    glued = GTPattern.from_mapping(poset, mapping)
    return restrict(glued, target) if target is not None else glued


def split_glued(p: GTPattern) -> tuple[GTPattern, GTPattern]:
    """Inverse of :func:`glue`: the ``Gamma_n`` part above and the ``Gamma_m`` part below."""
    n, m = p.poset.halves
    full = embed(p)
    minus = GTPoset.gamma(n)
    plus = GTPoset.gamma(m)
    p_minus = GTPattern.from_mapping(
        minus, {(i, j): full(*_minus_cell(i, j, n, m)) for (i, j) in minus.cells}
    )
    p_plus = GTPattern.from_mapping(plus, {(a, b): full(a, b) for (a, b) in plus.cells})
    return p_minus, p_plus


def left_half_rows(p: GTPattern) -> list[tuple[int, ...]]:
    """Rows of a ``Gamma_{2n}`` pattern restricted to ``b <= (a+1)/2``, top first.

    This is how symplectic patterns are usually drawn.
    """
    if p.poset.kind != "gamma":
        raise ParameterError("left_half_rows needs a pattern on Gamma_m")
    M = p.poset.params[0]
    return [tuple(p(a, b) for b in range(1, (a + 1) // 2 + 1)) for a in range(M, 0, -1)]


# --------------------------------------------------------------------------
# lattice cones


def enumerate_cone_points(poset: GTPoset, top_row: Sequence[int],
                          guard: int | None = None) -> list[GTPattern]:
    """All order preserving non-negative integer maps with the prescribed shape row."""
    return list(iter_cone_points(poset, top_row, guard))


def iter_cone_points(poset: GTPoset, top_row: Sequence[int],
                     guard: int | None = None) -> Iterator[GTPattern]:
    limit = guard_limit(guard)
    shape = Shape(top_row)
    t = poset.split_row
    fixed = poset.row_cells(t)
    if shape.length > len(fixed):
        return
    values = dict(zip(fixed, shape.padded(len(fixed))))
    # rows below the shape row, nearest first, then the rows above it
    order = [c for a in range(t - 1, 0, -1) for c in poset.row_cells(a)]
    order += [c for a in range(t + 1, poset.big + 1) for c in poset.row_cells(a)]
    bounds = []
    for a, b in order:
        if a < t:
            upper, lower = (a + 1, b), (a + 1, b + 1)
        else:
            upper, lower = (a - 1, b - 1), (a - 1, b)
        if not poset.contains(upper):
            raise InvariantViolation(f"cell {(a, b)} of {poset} has no upper bound")
        bounds.append(((a, b), upper, lower if poset.contains(lower) else None))
    emitted = 0

    def rec(pos: int) -> Iterator[GTPattern]:
        nonlocal emitted
        if pos == len(bounds):
            emitted += 1
            if emitted > limit:
                raise ResourceError(f"more than {limit} lattice points")
            yield GTPattern(poset, tuple(values[c] for c in poset.cells))
            return
        cell, upper, lower = bounds[pos]
        lo = values[lower] if lower is not None else 0
        for v in range(lo, values[upper] + 1):
            values[cell] = v
            yield from rec(pos + 1)
        del values[cell]

    yield from rec(0)


@dataclass(frozen=True)
class HRepresentation:
    """Inequalities ``coeffs . x >= rhs`` over the poset's cells in canonical order."""

    dim: int
    inequalities: tuple[tuple[tuple[int, ...], int], ...]

    def satisfied_by(self, x: Sequence[int]) -> bool:
        return all(sum(c * v for c, v in zip(coeffs, x)) >= rhs for coeffs, rhs in self.inequalities)

    def to_json(self) -> dict:
        return {"dim": self.dim, "inequalities": [list(c) + [r] for c, r in self.inequalities]}


def cone_inequalities(poset: GTPoset) -> HRepresentation:
    dim = len(poset)
    rows = []
    for u, v in poset.covers:
        coeffs = [0] * dim
        coeffs[poset.index[u]] = 1
        coeffs[poset.index[v]] = -1
        rows.append((tuple(coeffs), 0))
    for w in poset.minimal_elements():
        coeffs = [0] * dim
        coeffs[poset.index[w]] = 1
        rows.append((tuple(coeffs), 0))
    return HRepresentation(dim, tuple(rows))


def count_linear_extensions(poset: GTPoset) -> int:
    """Number of linear extensions, by dynamic programming over order ideals."""
    cells = poset.cells
    size = len(cells)
    if size > 24:
        raise ResourceError(f"{poset} is too large for linear-extension counting")
    below = [0] * size
    for u, v in poset.covers:
        below[poset.index[u]] |= 1 << poset.index[v]
    ways = {0: 1}
    for _ in range(size):
        nxt: dict[int, int] = {}
        for ideal, count in ways.items():
            for i in range(size):
                bit = 1 << i
                if not ideal & bit and below[i] & ideal == below[i]:
                    nxt[ideal | bit] = nxt.get(ideal | bit, 0) + count
        ways = nxt
    return sum(ways.values())
