"""The reproducibility harness: every acceptance check as a deterministic function.

Each check returns a :class:`CheckResult` whose ``detail`` only contains
counts and exact values, so two runs with the same arguments print the same
bytes.
"""

from __future__ import annotations

import json
import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations, combinations_with_replacement

from .errors import DomainError, NullconeError
from .nullcone import (
    NullconeContext,
    _monomials,
    basis_independence_check,
    dim_gl,
    dim_gl_weyl,
    dim_sp,
    dim_sp_weyl,
    enumerate_n_standard,
    n_standard_up_to,
    n_straighten,
    sample_nullcone_point,
    search_omega_sum,
)
from .patterns import (
    GTPattern,
    GTPoset,
    enumerate_cone_points,
    glue,
    left_half_rows,
    pattern_add,
    pattern_of_columns,
    pattern_from_tableau,
    reduce_mod_top,
    restrict,
    split_glued,
    tableau_from_pattern,
)
from .poly import monomial_of
from .straighten import check_leading, hibi_term, leading_term, straighten
from .tableaux import (
    DoubleTableau,
    Lattice,
    OneLineTableau,
    Order,
    SemistandardTableau,
    compare,
    enumerate_lattice,
    enumerate_standard,
    is_standard,
    partitions,
    split,
    xi,
)


@dataclass(frozen=True)
class CheckResult:
    ident: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.ident:>2} {self.name}: {self.detail}"


@lru_cache(maxsize=1)
def golden() -> dict:
    text = resources.files("nullcone_smt").joinpath("data/golden.json").read_text()
    return json.loads(text)


def _rows(p: GTPattern) -> list[list[int]]:
    return [list(r) for r in p.rows()]


def check_gl7_example() -> CheckResult:
    g = golden()["gl7_example"]
    T = SemistandardTableau(tuple(tuple(r) for r in g["tableau"]))
    p = pattern_from_tableau(T, 7)
    ok_gl = _rows(p) == g["gl7_rows"]
    q = reduce_mod_top(p, g["n"])
    ok_quot = _rows(q) == g["gamma_nm_rows"]
    glued = glue(GTPattern.from_rows(GTPoset.gamma(3), g["gl3_rows"]),
                 GTPattern.from_rows(GTPoset.gamma(4), g["gl4_rows"]))
    ok_glue = glued == q
    ok_back = tableau_from_pattern(p) == T
    return CheckResult(1, "worked GL_7 example", ok_gl and ok_quot and ok_glue and ok_back,
                       f"GL_7 triangle {ok_gl}, Gamma_3,4 triangle {ok_quot}, gluing {ok_glue}, "
                       f"round trip {ok_back}")


def check_n46_example() -> CheckResult:
    g = golden()["n46_example"]
    k, n = g["k"], g["n"]
    cols = [OneLineTableau(tuple(c["I"]), tuple(c["J"]), k, 2 * n) for c in g["monomial"]]
    t = DoubleTableau(tuple(cols), k, 2 * n)
    images = [xi(c) for c in cols]
    pl = SemistandardTableau(tuple(tuple(r) for r in g["pluecker_rows"]))
    ok_xi = images == list(pl.columns)
    p = pattern_of_columns(images, k + 2 * n)
    ok_gl = _rows(p) == g["gl10_rows"]
    q = reduce_mod_top(p, k)
    ok_quot = _rows(q) == g["gamma_nm_rows"]
    try:
        restrict(q, GTPoset.nullcone(k, n))
        ok_support = True
    except DomainError:
        ok_support = False
    p_minus, p_plus = split_glued(q)
    ok_halves = (_rows(p_minus) == g["gl4_rows"]
                 and [list(r) for r in left_half_rows(p_plus)] == g["sp6_left_rows"])
    t_minus, t_plus = split(t)
    ok_split = ([list(r) for r in t_minus.rows] == g["t_minus"]
                and [list(r) for r in t_plus.rows] == g["t_plus"])
    ok_std = is_standard(t, Lattice.N(k, n))
    passed = ok_xi and ok_gl and ok_quot and ok_support and ok_halves and ok_split and ok_std
    return CheckResult(2, "worked N_4,6 example", passed,
                       f"xi columns {ok_xi}, GL_10 triangle {ok_gl}, Gamma_4,6 triangle {ok_quot}, "
                       f"nullcone support {ok_support}, GL_4/Sp_6 halves {ok_halves}, "
                       f"T-/T+ {ok_split}, N-standard {ok_std}")


def _pairs(lattice: Lattice, max_len: int | None = None) -> list[tuple[OneLineTableau, OneLineTableau]]:
    elems = [x for x in enumerate_lattice(lattice) if max_len is None or len(x) <= max_len]
    return list(combinations_with_replacement(elems, 2))


def check_straightening() -> CheckResult:
    total = bad = 0
    for lattice, max_len in ((Lattice.D(2, 3), None), (Lattice.D(3, 3), 2)):
        for a, b in _pairs(lattice, max_len):
            total += 1
            comb = straighten([a, b], lattice)
            if comb.expand() != monomial_of([a, b], lattice.rows, lattice.cols):
                bad += 1
            elif comb.coefficient(hibi_term(a, b, lattice)) != 1:
                bad += 1
    return CheckResult(3, "straightening soundness", bad == 0,
                       f"{total} products in D(2,3) and D(3,3) with length <= 2, {bad} failures")


def check_hibi() -> CheckResult:
    d_pairs = bad = 0
    for a, b in _pairs(Lattice.D(2, 3)):
        if compare(a, b) is Order.INCOMPARABLE:
            d_pairs += 1
            try:
                leading_term(a, b)
            except NullconeError:
                bad += 1
    ctx = NullconeContext(2, 2)
    n_pairs = 0
    for a, b in _pairs(ctx.lattice):
        if compare(a, b) is Order.INCOMPARABLE:
            n_pairs += 1
            try:
                check_leading(n_straighten([a, b], ctx), hibi_term(a, b, ctx.lattice))
            except NullconeError:
                bad += 1
    return CheckResult(4, "Hibi leading term", bad == 0 and d_pairs > 0 and n_pairs > 0,
                       f"{d_pairs} incomparable pairs in D(2,3), {n_pairs} in D(N_2,4), {bad} failures")


def check_counting(max_size: int = 4) -> CheckResult:
    checked = bad = 0
    for k in range(1, 4):
        for n in range(1, 4):
            ctx = NullconeContext(k, n)
            for d in range(1, max_size + 1):
                for shape in partitions(d):
                    if shape.length > min(k, n):
                        continue
                    checked += 1
                    gl, sp = dim_gl(shape, k), dim_sp(shape, n)
                    if gl != dim_gl_weyl(shape, k) or sp != dim_sp_weyl(shape, n):
                        bad += 1
                    elif len(enumerate_n_standard(shape, ctx)) != gl * sp:
                        bad += 1
    return CheckResult(5, "N-standard counting", bad == 0,
                       f"{checked} (k, n, shape) cases with k, n <= 3 and |D| <= {max_size}, {bad} mismatches")


def check_independence(seed: int = 0, degree: int = 3) -> CheckResult:
    parts = []
    ok = True
    for n in (1, 2):
        ctx = NullconeContext(2, n)
        cands = n_standard_up_to(degree, ctx)
        report = basis_independence_check(cands, ctx, seed=seed)
        ok = ok and report.full_rank
        parts.append(f"n={n}: rank {report.rank}/{report.candidates} at {report.points} points")
        if report.finding:
            parts.append(report.finding)
    return CheckResult(6, "independence on the nullcone", ok, "; ".join(parts))


def check_cones(max_size: int = 4) -> CheckResult:
    checked = bad = 0
    cases = [(GTPoset.gamma_nm(n, m), Lattice.D(n, m)) for n in range(1, 4) for m in range(1, 4)]
    cases += [(GTPoset.nullcone(k, n), Lattice.N(k, n)) for k in range(1, 3) for n in range(1, 3)]
    for poset, lattice in cases:
        for d in range(0, max_size + 1):
            for shape in partitions(d):
                if shape.length > lattice.max_length:
                    continue
                checked += 1
                points = len(enumerate_cone_points(poset, shape))
                tableaux = len(enumerate_standard(shape, lattice)) if d else 1
                if points != tableaux:
                    bad += 1
    return CheckResult(7, "cone bijections", bad == 0,
                       f"{checked} (poset, top row) cases, {bad} mismatches")


def check_omega_sums(n: int = 2) -> CheckResult:
    ctx = NullconeContext(1, n)
    checked = bad = found = 0
    for p in range(2, 5):
        for J in combinations(range(1, 2 * n + 1), p):
            checked += 1
            s = search_omega_sum(J, n)
            expect = not ctx.dominates_floor(J)
            if (s is not None) != expect:
                bad += 1
            elif s is not None:
                found += 1
                if s.leading != J or dict(s.terms)[J] != 1 or not s.verify():
                    bad += 1
    return CheckResult(8, "omega-sum characterization", bad == 0,
                       f"{checked} index sets, {found} omega-sums found and re-expanded, {bad} failures")


def check_semigroup() -> CheckResult:
    L = Lattice.L(3, 3)
    elems = enumerate_lattice(L)
    law_bad = 0
    for a, b in combinations_with_replacement(elems, 2):
        lhs = pattern_add(pattern_of_columns([a.J], 3), pattern_of_columns([b.J], 3))
        rhs = pattern_add(pattern_of_columns([L.meet(a, b).J], 3), pattern_of_columns([L.join(a, b).J], 3))
        law_bad += lhs != rhs
    counts = []
    cauchy_bad = 0
    D = Lattice.D(2, 2)
    for d in range(1, 5):
        standard = sum(len(enumerate_standard(s, D)) for s in partitions(d) if s.length <= 2)
        monomials = len(_monomials(4, d))
        counts.append(standard)
        cauchy_bad += not (standard == monomials == math.comb(3 + d, d))
    passed = law_bad == 0 and cauchy_bad == 0 and counts[1] == 10
    return CheckResult(9, "semigroup law and Cauchy count", passed,
                       f"{len(elems) * (len(elems) + 1) // 2} pairs in L(3,3) with {law_bad} failures; "
                       f"standard monomials of degree 1..4 in C[M_2,2]: {counts}")


def check_determinism(seed: int) -> CheckResult:
    first = check_independence(seed, degree=2).detail
    second = check_independence(seed, degree=2).detail
    ctx = NullconeContext(3, 2)
    same_points = sample_nullcone_point(ctx, seed) == sample_nullcone_point(ctx, seed)
    return CheckResult(10, "determinism", first == second and same_points,
                       f"seeded sampling and rank report reproduced: {first == second and same_points}")


def run_all(max_size: int = 4, seed: int = 0) -> list[CheckResult]:
    checks: list[Callable[[], CheckResult]] = [
        check_gl7_example,
        check_n46_example,
        check_straightening,
        check_hibi,
        lambda: check_counting(max_size),
        lambda: check_independence(seed),
        lambda: check_cones(max_size),
        check_omega_sums,
        check_semigroup,
        lambda: check_determinism(seed),
    ]
    return [c() for c in checks]
