"""Young diagrams, one-line and double tableaux, and the tableau-order lattices.

A one-line tableau ``[I:J]`` pairs a set of row indices with an equally long set
of column indices of an ``n x m`` matrix.  Under the tableau order the
one-line tableaux form distributive lattices:

* ``D(n, m)``      all one-line tableaux of ``M_{n,m}``;
* ``L(n, m)``      those with ``I = [1..|J|]``;
* ``Pl(n, m+n)``   Pluecker index sets, stored as ``[1..n : K]``;
* ``D(N_{k,2n})``  the nullcone sublattice of ``D(k, 2n)``: length at most
  ``min(k, n)`` and column set dominating ``[1, 3, ..., 2n-1]``.

Enumerations use a fixed canonical order (length descending, then
lexicographic on ``(I, J)``) so that golden outputs are stable.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from .errors import DomainError, ParameterError, ResourceError, guard_limit


class Shape(tuple):
    """A Young diagram given by its weakly decreasing row lengths."""

    def __new__(cls, rows: Iterable[int] = ()) -> Shape:
        rows = tuple(int(r) for r in rows)
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        if any(r <= 0 for r in rows):
            raise ParameterError(f"shape rows must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ParameterError(f"shape rows must be weakly decreasing: {rows}")
        return super().__new__(cls, rows)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def transpose(self) -> Shape:
        if not self:
            return Shape()
        return Shape(sum(1 for r in self if r > c) for c in range(self[0]))

    def padded(self, width: int) -> tuple[int, ...]:
        if len(self) > width:
            raise ParameterError(f"shape {tuple(self)} has more than {width} rows")
        return tuple(self) + (0,) * (width - len(self))

    def __repr__(self) -> str:
        return f"Shape({tuple(self)})"


def partitions(total: int, max_part: int | None = None) -> Iterator[Shape]:
    """All partitions of ``total`` with parts at most ``max_part``, reverse-lex order."""
    if max_part is None:
        max_part = total

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, cap), 0, -1):
            for tail in rec(rest - part, part):
                yield (part,) + tail

    for p in rec(total, max_part):
        yield Shape(p)


def _check_index_set(values: Sequence[int], bound: int, what: str) -> tuple[int, ...]:
    values = tuple(int(v) for v in values)
    if any(a >= b for a, b in zip(values, values[1:])):
        raise ParameterError(f"{what} must be strictly increasing: {values}")
    if values and (values[0] < 1 or values[-1] > bound):
        raise ParameterError(f"{what} entries must lie in 1..{bound}: {values}")
    return values


@dataclass(frozen=True)
class OneLineTableau:
    """The pair ``[I:J]`` selecting the minor with rows ``I`` and columns ``J``."""

    I: tuple[int, ...]  # noqa: E741
    J: tuple[int, ...]
    n: int
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "I", _check_index_set(self.I, self.n, "row set I"))
        object.__setattr__(self, "J", _check_index_set(self.J, self.m, "column set J"))
        if len(self.I) != len(self.J):
            raise ParameterError(f"|I| != |J| in [{self.I}:{self.J}]")
        if not self.I:
            raise ParameterError("a one-line tableau has length at least 1")

    def __len__(self) -> int:
        return len(self.I)

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.n, self.m)

    def sort_key(self) -> tuple:
        return (-len(self.I), self.I, self.J)

    def __str__(self) -> str:
        def fmt(s: tuple[int, ...]) -> str:
            sep = "" if all(v < 10 for v in s) else " "
            return sep.join(map(str, s))

        return f"[{fmt(self.I)}:{fmt(self.J)}]"


@dataclass(frozen=True)
class DoubleTableau:
    """A concatenation of one-line tableaux with weakly decreasing lengths.

    The empty double tableau is the unit of concatenation; ``n`` and ``m``
    record its ambient.
    """

    columns: tuple[OneLineTableau, ...]
    n: int
    m: int

    def __post_init__(self) -> None:
        cols = tuple(self.columns)
        object.__setattr__(self, "columns", cols)
        for c in cols:
            if c.ambient != (self.n, self.m):
                raise ParameterError(f"column {c} not in ambient ({self.n}, {self.m})")
        if any(len(a) < len(b) for a, b in zip(cols, cols[1:])):
            raise ParameterError("double tableau column lengths must weakly decrease")

    @classmethod
    def of(cls, columns: Iterable[OneLineTableau], n: int | None = None,
           m: int | None = None) -> DoubleTableau:
        """Build from columns in any order, sorted by decreasing length then lex."""
        cols = sorted(columns, key=OneLineTableau.sort_key)
        if cols:
            n, m = cols[0].ambient
        if n is None or m is None:
            raise ParameterError("empty double tableau needs an explicit ambient")
        return cls(tuple(cols), n, m)

    @property
    def shape(self) -> Shape:
        return Shape(len(c) for c in self.columns).transpose()

    @property
    def column_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    def key(self) -> tuple:
        return tuple((c.I, c.J) for c in self.columns)

    def __len__(self) -> int:
        return len(self.columns)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.columns) or "[]"


@dataclass(frozen=True)
class SemistandardTableau:
    """A filling of a Young diagram, rows weakly and columns strictly increasing."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        Shape(len(r) for r in rows)
        for r in rows:
            if any(a > b for a, b in zip(r, r[1:])):
                raise ParameterError(f"row {r} is not weakly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ParameterError(f"columns must strictly increase: {upper} over {lower}")
        if rows and min(rows[0]) < 1:
            raise ParameterError("entries must be positive")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> SemistandardTableau:
        height = max((len(c) for c in columns), default=0)
        return cls(tuple(tuple(c[r] for c in columns if len(c) > r) for r in range(height)))

    @property
    def shape(self) -> Shape:
        return Shape(len(r) for r in self.rows)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        width = len(self.rows[0]) if self.rows else 0
        return tuple(tuple(r[c] for r in self.rows if len(r) > c) for c in range(width))

    @property
    def max_entry(self) -> int:
        return max((max(r) for r in self.rows), default=0)

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows)


# --------------------------------------------------------------------------
# tableau order


class Order(enum.Enum):
    LESS = "<="
    GREATER = ">="
    EQUAL = "="
    INCOMPARABLE = "incomparable"


def precedes(a: OneLineTableau, b: OneLineTableau) -> bool:
    """``a <= b`` in the tableau order (``a`` at least as long, entrywise smaller)."""
    if len(a) < len(b):
        return False
    return all(x <= y for x, y in zip(a.I, b.I)) and all(x <= y for x, y in zip(a.J, b.J))


def compare(a: OneLineTableau, b: OneLineTableau) -> Order:
    if a.ambient != b.ambient:
        raise ParameterError(f"ambient mismatch: {a.ambient} vs {b.ambient}")
    if a == b:
        return Order.EQUAL
    if precedes(a, b):
        return Order.LESS
    if precedes(b, a):
        return Order.GREATER
    return Order.INCOMPARABLE


def index_set_precedes(a: Sequence[int], b: Sequence[int]) -> bool:
    """Tableau order on bare index sets, i.e. on elements of ``L``."""
    return len(a) >= len(b) and all(x <= y for x, y in zip(a, b))


def xi(t: OneLineTableau) -> tuple[int, ...]:
    """Order embedding of ``D(n, m)`` into ``Pl(n, m+n)``."""
    n, m = t.n, t.m
    rows = set(t.I)
    us = sorted(n + 1 - i for i in range(1, n + 1) if i not in rows)
    return t.J + tuple(m + u for u in us)


def xi_inverse(K: Sequence[int], n: int, m: int) -> OneLineTableau:
    K = _check_index_set(K, m + n, "Pluecker index set")
    if len(K) != n:
        raise ParameterError(f"Pluecker index set must have {n} entries: {K}")
    if K == tuple(range(m + 1, m + n + 1)):
        raise DomainError(f"{list(K)} is the reserved top element and has no preimage")
    J = tuple(k for k in K if k <= m)
    missing = {n + 1 - (k - m) for k in K if k > m}
    I = tuple(i for i in range(1, n + 1) if i not in missing)  # noqa: E741
    return OneLineTableau(I, J, n, m)


def _entrywise(a: OneLineTableau, b: OneLineTableau, pick) -> OneLineTableau:
    return OneLineTableau(tuple(map(pick, a.I, b.I)), tuple(map(pick, a.J, b.J)), a.n, a.m)


def _meet_d(a: OneLineTableau, b: OneLineTableau) -> OneLineTableau:
    if len(a) == len(b):
        return _entrywise(a, b, min)
    return xi_inverse(tuple(map(min, xi(a), xi(b))), a.n, a.m)


def _join_d(a: OneLineTableau, b: OneLineTableau) -> OneLineTableau:
    if len(a) == len(b):
        return _entrywise(a, b, max)
    return xi_inverse(tuple(map(max, xi(a), xi(b))), a.n, a.m)


# --------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class Lattice:
    """Descriptor of one of the tableau-order lattices.

    ``rows`` and ``cols`` give the ambient ``D(rows, cols)`` that contains
    every member; all four kinds are sublattices of it.
    """

    kind: str
    params: tuple[int, int]

    def __post_init__(self) -> None:
        if self.kind not in ("D", "L", "Pl", "N"):
            raise ParameterError(f"unknown lattice kind {self.kind!r}")
        if any(p < 1 for p in self.params):
            raise ParameterError(f"lattice parameters must be positive: {self.params}")

    @classmethod
    def D(cls, n: int, m: int) -> Lattice:
        return cls("D", (n, m))

    @classmethod
    def L(cls, n: int, m: int) -> Lattice:
        return cls("L", (n, m))

    @classmethod
    def Pl(cls, n: int, m: int) -> Lattice:
        """``Pl(n, m+n)``: note the second parameter is ``m``, not ``m + n``."""
        return cls("Pl", (n, m))

    @classmethod
    def N(cls, k: int, n: int) -> Lattice:
        """The nullcone lattice ``D(N_{k,2n})``."""
        return cls("N", (k, n))

    @property
    def rows(self) -> int:
        return self.params[0]

    @property
    def cols(self) -> int:
        a, b = self.params
        return {"D": b, "L": b, "Pl": a + b, "N": 2 * b}[self.kind]

    @property
    def max_length(self) -> int:
        a, b = self.params
        if self.kind == "Pl":
            return a
        if self.kind == "N":
            return min(a, b)
        return min(a, b)

    @property
    def floor(self) -> tuple[int, ...]:
        """``[1, 3, ..., 2n-1]`` for the nullcone lattice, empty otherwise."""
        if self.kind != "N":
            return ()
        return tuple(range(1, 2 * self.params[1], 2))

    def __str__(self) -> str:
        a, b = self.params
        return {
            "D": f"D({a},{b})",
            "L": f"L({a},{b})",
            "Pl": f"Pl({a},{a + b})",
            "N": f"D(N_{{{a},{2 * b}}})",
        }[self.kind]

    def expected_size(self) -> int:
        a, b = self.params
        if self.kind == "D":
            return math.comb(a + b, a) - 1
        if self.kind == "L":
            return sum(math.comb(b, l) for l in range(1, min(a, b) + 1))
        if self.kind == "Pl":
            return math.comb(a + b, a)
        return math.comb(a + 2 * b, a) - 1  # upper bound via D(k, 2n)

    def contains(self, t: OneLineTableau) -> bool:
        if t.ambient != (self.rows, self.cols) or len(t) > self.max_length:
            return False
        if self.kind == "L":
            return t.I == tuple(range(1, len(t) + 1))
        if self.kind == "Pl":
            return len(t) == self.rows and t.I == tuple(range(1, self.rows + 1))
        if self.kind == "N":
            return index_set_precedes(self.floor, t.J)
        return True

    def require(self, t: OneLineTableau) -> None:
        if not self.contains(t):
            raise ParameterError(f"{t} is not a member of {self}")

    def compare(self, a: OneLineTableau, b: OneLineTableau) -> Order:
        return compare(a, b)

    def meet(self, a: OneLineTableau, b: OneLineTableau) -> OneLineTableau:
        self.require(a)
        self.require(b)
        out = _meet_d(a, b)
        assert self.contains(out), f"{self} not closed under meet"
        return out

    def join(self, a: OneLineTableau, b: OneLineTableau) -> OneLineTableau:
        self.require(a)
        self.require(b)
        out = _join_d(a, b)
        assert self.contains(out), f"{self} not closed under join"
        return out

    def make(self, I: Sequence[int], J: Sequence[int]) -> OneLineTableau:  # noqa: E741
        return OneLineTableau(tuple(I), tuple(J), self.rows, self.cols)


def enumerate_lattice(lattice: Lattice, guard: int | None = None) -> list[OneLineTableau]:
    """Every member of ``lattice`` in canonical order."""
    limit = guard_limit(guard)
    if lattice.expected_size() > limit:
        raise ResourceError(f"{lattice} has more than {limit} elements")
    return list(_members(lattice))


@lru_cache(maxsize=256)
def _members(lattice: Lattice) -> tuple[OneLineTableau, ...]:
    n, m = lattice.rows, lattice.cols
    out = []
    for length in range(lattice.max_length, 0, -1):
        if lattice.kind in ("L", "Pl"):
            row_sets = [tuple(range(1, length + 1))]
        else:
            row_sets = list(combinations(range(1, n + 1), length))
        if lattice.kind == "Pl" and length != n:
            continue
        for I in row_sets:  # noqa: E741
            for J in combinations(range(1, m + 1), length):
                t = OneLineTableau(I, J, n, m)
                if lattice.contains(t):
                    out.append(t)
    return tuple(out)


@lru_cache(maxsize=256)
def _upper_sets(lattice: Lattice) -> dict[OneLineTableau, tuple[OneLineTableau, ...]]:
    elems = _members(lattice)
    return {x: tuple(y for y in elems if precedes(x, y)) for x in elems}


def is_standard(t: DoubleTableau, lattice: Lattice | None = None) -> bool:
    """Columns form a multichain (and lie in ``lattice`` when given)."""
    if lattice is not None and not all(lattice.contains(c) for c in t.columns):
        return False
    return all(precedes(a, b) for a, b in zip(t.columns, t.columns[1:]))


def as_standard(columns: Iterable[OneLineTableau], n: int, m: int) -> DoubleTableau | None:
    """Arrange ``columns`` as a chain if they form one, else return ``None``.

    ``xi`` is an order embedding, so sorting by ``xi`` (a linear extension)
    puts any multichain in chain order.
    """
    cols = sorted(columns, key=lambda c: (xi(c), c.I))
    if all(precedes(a, b) for a, b in zip(cols, cols[1:])):
        return DoubleTableau(tuple(cols), n, m)
    return None


def split(t: DoubleTableau) -> tuple[SemistandardTableau, SemistandardTableau]:
    """The row-index tableau ``T-`` and column-index tableau ``T+`` of a standard tableau."""
    if not is_standard(t):
        raise DomainError(f"{t} is not standard")
    minus = SemistandardTableau.from_columns([c.I for c in t.columns])
    plus = SemistandardTableau.from_columns([c.J for c in t.columns])
    return minus, plus


def assemble(minus: SemistandardTableau, plus: SemistandardTableau, n: int,
             m: int) -> DoubleTableau:
    """Inverse of :func:`split`: pair the k-th columns of the two tableaux."""
    if minus.shape != plus.shape:
        raise ParameterError("T- and T+ must have the same shape")
    cols = [OneLineTableau(a, b, n, m) for a, b in zip(minus.columns, plus.columns)]
    return DoubleTableau(tuple(cols), n, m)


def enumerate_standard(shape: Sequence[int], lattice: Lattice,
                       content: tuple[Sequence[int], Sequence[int]] | None = None,
                       guard: int | None = None) -> list[DoubleTableau]:
    """All standard tableaux of ``shape`` in ``lattice``.

    ``content`` optionally fixes the multisets of row and column indices, each
    given as a sorted sequence of indices (repeats allowed).
    """
    shape = Shape(shape)
    col_lengths = shape.transpose()
    if shape.length > lattice.max_length:
        return []
    return list(_chains(lattice, col_lengths, content, guard_limit(guard)))


def enumerate_with_content(lattice: Lattice, row_content: Sequence[int],
                           col_content: Sequence[int],
                           guard: int | None = None) -> list[DoubleTableau]:
    """All standard tableaux of any shape with the given row and column content."""
    return list(_chains(lattice, None, (row_content, col_content), guard_limit(guard)))


def _counts(values: Sequence[int], bound: int) -> list[int]:
    counts = [0] * (bound + 1)
    for v in values:
        if not 1 <= v <= bound:
            raise ParameterError(f"content entry {v} outside 1..{bound}")
        counts[v] += 1
    return counts


def _chains(lattice: Lattice, col_lengths: Sequence[int] | None,
            content: tuple[Sequence[int], Sequence[int]] | None,
            limit: int) -> Iterator[DoubleTableau]:
    n, m = lattice.rows, lattice.cols
    elems = enumerate_lattice(lattice)
    upper = _upper_sets(lattice)
    if content is not None:
        rows_left = _counts(content[0], n)
        cols_left = _counts(content[1], m)
        if sum(rows_left) != sum(cols_left):
            return
        total = sum(rows_left)
    else:
        rows_left = cols_left = None
        total = None
    if col_lengths is not None and total is not None and sum(col_lengths) != total:
        return
    emitted = 0
    chain: list[OneLineTableau] = []

    def fits(x: OneLineTableau) -> bool:
        return all(rows_left[i] for i in x.I) and all(cols_left[j] for j in x.J)

    def take(x: OneLineTableau, sign: int) -> None:
        for i in x.I:
            rows_left[i] -= sign
        for j in x.J:
            cols_left[j] -= sign

    def rec(pos: int, candidates: Sequence[OneLineTableau], left: int | None) -> Iterator[DoubleTableau]:
        nonlocal emitted
        done = pos == len(col_lengths) if col_lengths is not None else left == 0
        if done:
            if left not in (None, 0):
                return
            emitted += 1
            if emitted > limit:
                raise ResourceError(f"more than {limit} standard tableaux in {lattice}")
            yield DoubleTableau(tuple(chain), n, m)
            return
        want = col_lengths[pos] if col_lengths is not None else None
        for x in candidates:
            if want is not None and len(x) != want:
                continue
            if rows_left is not None:
                if len(x) > left or not fits(x):
                    continue
                take(x, 1)
            chain.append(x)
            yield from rec(pos + 1, upper[x], None if left is None else left - len(x))
            chain.pop()
            if rows_left is not None:
                take(x, -1)

    yield from rec(0, elems, total)


def enumerate_ssyt(shape: Sequence[int], max_entry: int,
                   column_floor: Sequence[int] | None = None,
                   guard: int | None = None) -> list[SemistandardTableau]:
    """Semistandard tableaux of ``shape`` with entries in ``1..max_entry``.

    With ``column_floor`` every column, read as an index set, must dominate the
    floor in the tableau order (so columns are no longer than the floor).
    """
    shape = Shape(shape)
    limit = guard_limit(guard)
    if shape.length > max_entry:
        return []
    floor = tuple(column_floor) if column_floor is not None else None
    if floor is not None and shape.length > len(floor):
        return []
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    grid = [[0] * width for width in shape]
    out: list[SemistandardTableau] = []

    def rec(idx: int) -> None:
        if idx == len(cells):
            if len(out) >= limit:
                raise ResourceError(f"more than {limit} semistandard tableaux")
            out.append(SemistandardTableau(tuple(tuple(r) for r in grid)))
            return
        r, c = cells[idx]
        lo = 1
        if c:
            lo = max(lo, grid[r][c - 1])
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        if floor is not None:
            lo = max(lo, floor[r])
        # leave room for the strictly increasing entries below
        below = sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c)
        for v in range(lo, max_entry - below + 1):
            grid[r][c] = v
            rec(idx + 1)
        grid[r][c] = 0

    rec(0)
    return out


def maximal_chains(lattice: Lattice, guard: int | None = None) -> list[tuple[OneLineTableau, ...]]:
    """All maximal chains, each listed bottom to top."""
    limit = guard_limit(guard)
    elems = enumerate_lattice(lattice, guard)
    upper = _upper_sets(lattice)
    strictly = {x: [y for y in upper[x] if y != x] for x in elems}
    covers = {
        x: [y for y in strictly[x] if not any(precedes(z, y) for z in strictly[x] if z != y)]
        for x in elems
    }
    bottoms = [x for x in elems if len(upper[x]) == len(elems)]
    if len(bottoms) != 1:
        raise DomainError(f"{lattice} has no unique minimum")
    out: list[tuple[OneLineTableau, ...]] = []

    def rec(path: list[OneLineTableau]) -> None:
        nxt = covers[path[-1]]
        if not nxt:
            if len(out) >= limit:
                raise ResourceError(f"more than {limit} maximal chains")
            out.append(tuple(path))
            return
        for y in nxt:
            path.append(y)
            rec(path)
            path.pop()

    rec([bottoms[0]])
    return out
