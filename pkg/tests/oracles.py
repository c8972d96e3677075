"""Brute-force reference computations, written without reusing the library's algorithms."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from nullcone_smt.poly import Poly


def leq(a, b) -> bool:
    """Tableau order straight from its definition."""
    if len(a.I) < len(b.I):
        return False
    return all(a.I[k] <= b.I[k] and a.J[k] <= b.J[k] for k in range(len(b.I)))


def all_one_line(n, m, max_len=None):
    out = []
    for length in range(1, min(n, m) + 1):
        if max_len is not None and length > max_len:
            continue
        for I in itertools.combinations(range(1, n + 1), length):  # noqa: E741
            for J in itertools.combinations(range(1, m + 1), length):
                out.append((I, J))
    return out


def glb(elems, a, b):
    lower = [x for x in elems if leq(x, a) and leq(x, b)]
    best = [x for x in lower if all(leq(y, x) for y in lower)]
    assert len(best) == 1
    return best[0]


def lub(elems, a, b):
    upper = [x for x in elems if leq(a, x) and leq(b, x)]
    best = [x for x in upper if all(leq(x, y) for y in upper)]
    assert len(best) == 1
    return best[0]


def laplace_det(n, m, rows, cols) -> Poly:
    """Determinant of the symbolic submatrix by cofactor expansion along the first row."""
    if not rows:
        return Poly.one(n, m)
    out = Poly(n, m)
    for pos, j in enumerate(cols):
        rest = cols[:pos] + cols[pos + 1:]
        term = Poly.var(rows[0], j, n, m) * laplace_det(n, m, rows[1:], rest)
        out = out + (term if pos % 2 == 0 else -term)
    return out


def count_ssyt(shape, max_entry, floor=None) -> int:
    cells = [(r, c) for r, w in enumerate(shape) for c in range(w)]
    total = 0
    for values in itertools.product(range(1, max_entry + 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        ok = all(
            (c == 0 or grid[(r, c - 1)] <= v) and (r == 0 or grid[(r - 1, c)] < v)
            for (r, c), v in grid.items()
        )
        if ok and floor is not None:
            ok = all(grid[(r, c)] >= floor[r] for (r, c) in cells)
        total += ok
    return total


def hook_content_gl(shape, k) -> int:
    num = den = 1
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []
    for r, w in enumerate(shape):
        for c in range(w):
            num *= k + c - r
            den *= (w - c - 1) + (conj[c] - r - 1) + 1
    return num // den


def triangle(M):
    return [(a, b) for a in range(M, 0, -1) for b in range(1, a + 1)]


def gamma_nm_cells(n, m):
    return [(a, b) for a, b in triangle(n + m) if b <= n and a - b < m]


def nullcone_cells(k, n):
    """``Gamma_{k,2n}`` minus ``A`` and ``B``, with ``B`` decided by reachability in the full triangle."""
    c = min(k, n)
    big = triangle(k + 2 * n)
    below = {v for u, v in order_pairs(big) if u == (2 * n, c + 1)} | {(2 * n, c + 1)}
    out = []
    for a, b in gamma_nm_cells(k, 2 * n):
        in_a = a <= 2 * n and b > (a + 1) / 2
        if not in_a and (a, b) not in below:
            out.append((a, b))
    return out


def order_pairs(cells):
    """All pairs ``(u, v)``, ``u > v``, in the transitive closure of the covers inside ``cells``."""
    cellset = set(cells)
    pairs = []
    for u in cells:
        seen, frontier = set(), [u]
        while frontier:
            a, b = frontier.pop()
            for nxt in ((a - 1, b), (a + 1, b + 1)):
                if nxt in cellset and nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        pairs.extend((u, v) for v in seen)
    return pairs


def count_cone_points(cells, fixed_row, top_row) -> int:
    """Order preserving maps with values in ``0..max(top_row)`` and the given fixed row."""
    bound = max(top_row, default=0)
    fixed = {c: v for c, v in zip([c for c in cells if c[0] == fixed_row], list(top_row) + [0] * len(cells))}
    free = [c for c in cells if c not in fixed]
    pairs = order_pairs(cells)
    total = 0
    for values in itertools.product(range(bound + 1), repeat=len(free)):
        f = dict(fixed)
        f.update(zip(free, values))
        total += all(f[u] >= f[v] for u, v in pairs)
    return total


def count_linear_extensions(cells) -> int:
    pairs = order_pairs(cells)
    total = 0
    for perm in itertools.permutations(cells):
        pos = {c: i for i, c in enumerate(perm)}
        total += all(pos[v] < pos[u] for u, v in pairs)
    return total


def count_chains(elems, col_lengths) -> int:
    """Multichains ``x_1 <= ... <= x_r`` with prescribed lengths, by exhaustive product."""
    pools = [[x for x in elems if len(x[0]) == length] for length in col_lengths]
    return sum(
        all(leq(_T(a), _T(b)) for a, b in zip(chain, chain[1:]))
        for chain in itertools.product(*pools)
    )


class _T:
    def __init__(self, pair):
        self.I, self.J = pair


def monomial_count(nvars, degree) -> int:
    return math.comb(nvars + degree - 1, degree)


def isotropic(point) -> bool:
    k = len(point)
    for i in range(k):
        for j in range(i + 1, k):
            x, y = point[i], point[j]
            if sum(x[2 * u] * y[2 * u + 1] - x[2 * u + 1] * y[2 * u] for u in range(len(x) // 2)) != 0:
                return False
    return True


def solve_exact(rows, rhs):
    """Least-structure exact solve ``rows @ c = rhs`` (unique solution expected)."""
    ncols = len(rows[0])
    aug = [[Fraction(v) for v in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    piv_row = 0
    pivots = []
    for col in range(ncols):
        p = next((r for r in range(piv_row, len(aug)) if aug[r][col]), None)
        if p is None:
            continue
        aug[piv_row], aug[p] = aug[p], aug[piv_row]
        aug[piv_row] = [v / aug[piv_row][col] for v in aug[piv_row]]
        for r in range(len(aug)):
            if r != piv_row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[piv_row])]
        pivots.append(col)
        piv_row += 1
    assert len(pivots) == ncols, "solution not unique"
    assert all(not r[-1] for r in aug[piv_row:]), "inconsistent"
    return [aug[i][-1] for i in range(ncols)]
