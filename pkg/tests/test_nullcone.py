import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from nullcone_smt.errors import DomainError, ParameterError
from nullcone_smt.nullcone import (
    NullconeContext,
    basic_invariant,
    basis_independence_check,
    dim_gl,
    dim_gl_weyl,
    dim_sp,
    dim_sp_weyl,
    enumerate_n_standard,
    evaluation_matrix,
    in_ideal_exact,
    n_standard_up_to,
    n_straighten,
    omega_sum_for,
    sample_nullcone_point,
    sample_points,
    search_omega_sum,
    symplectic_pairing,
    theta_element,
    vanishes_on_nullcone,
)
from nullcone_smt.poly import Exterior, Poly, minor, omega, wedge
from nullcone_smt.straighten import hibi_term, weight
from nullcone_smt.tableaux import DoubleTableau, Order, compare, enumerate_lattice, partitions


def x(i, j, k, m):
    return Poly.var(i, j, k, m)


def brute_dominates_floor(J, n):
    return len(J) <= n and all(j >= 2 * d - 1 for d, j in enumerate(J, start=1))


def brute_omega_leading(J, n):
    """Does some combination of ``omega ^ e_K`` have lex-smallest term ``e_J``?  Exact elimination."""
    p = len(J)
    gens = [wedge(omega(n), Exterior.basis(K, 2 * n)) for K in itertools.combinations(range(1, 2 * n + 1), p - 2)]
    keys = [K for K in itertools.combinations(range(1, 2 * n + 1), p) if K <= J]
    rows = [[g.terms.get(K, 0) for g in gens] for K in keys]
    rhs = [int(K == J) for K in keys]
    # consistency of rows @ c = rhs via rank comparison
    return _rank(rows) == _rank([r + [b] for r, b in zip(rows, rhs)])


def _rank(rows):
    rows = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# basic invariants -----------------------------------------------------------------


def test_basic_invariant_examples():
    ctx = NullconeContext(2, 1)
    r = basic_invariant(1, 2, ctx)
    assert r == x(1, 1, 2, 2) * x(2, 2, 2, 2) - x(2, 1, 2, 2) * x(1, 2, 2, 2)
    assert r == minor(ctx.make([1, 2], [1, 2]))
    assert r.evaluate([[1, 0], [0, 1]]) == 1
    ctx2 = NullconeContext(3, 2)
    lagr = [[1, 0, 2, 0], [0, 0, 5, 0], [3, 0, -1, 0]]
    for i, j in itertools.combinations(range(1, 4), 2):
        assert basic_invariant(i, j, ctx2).evaluate(lagr) == 0


def test_basic_invariant_rejects_bad_indices():
    with pytest.raises(ParameterError):
        basic_invariant(2, 2, NullconeContext(2, 1))
    with pytest.raises(ParameterError):
        basic_invariant(1, 3, NullconeContext(2, 1))


def test_symplectic_pairing_convention():
    e = lambda i: [Fraction(int(j == i)) for j in range(4)]  # noqa: E731
    assert symplectic_pairing(e(0), e(1)) == 1
    assert symplectic_pairing(e(1), e(0)) == -1
    assert symplectic_pairing(e(0), e(2)) == 0
    with pytest.raises(ParameterError):
        symplectic_pairing([1, 2, 3], [1, 2, 3])


def test_context_floor_and_errors():
    assert NullconeContext(4, 3).floor == (1, 3, 5)
    with pytest.raises(ParameterError):
        NullconeContext(0, 1)
    with pytest.raises(ParameterError):
        NullconeContext(2, 1, base=5)


# omega-sums ---------------------------------------------------------------------------


def test_omega_sum_examples():
    ctx = NullconeContext(2, 2)
    s = omega_sum_for([1, 2], ctx)
    assert dict(s.terms) == {(1, 2): 1, (3, 4): 1}
    assert s.certificate.degree == 0 and s.verify()
    s3 = omega_sum_for([1, 2, 3], ctx)
    assert dict(s3.terms) == {(1, 2, 3): 1}
    assert s3.certificate.terms == {(3,): 1}
    with pytest.raises(DomainError):
        omega_sum_for([1, 3], ctx)


def test_omega_sum_rejects_malformed_sets():
    ctx = NullconeContext(2, 2)
    for J in ([1], [2, 1], [1, 5], []):
        with pytest.raises(ParameterError):
            omega_sum_for(J, ctx)


@pytest.mark.parametrize("n,max_p", [(2, 4), (3, 3)])
def test_omega_sum_exists_iff_floor_not_dominated(n, max_p):
    ctx = NullconeContext(1, n)
    for p in range(2, max_p + 1):
        for J in itertools.combinations(range(1, 2 * n + 1), p):
            expect = not brute_dominates_floor(J, n)
            assert expect == (not ctx.dominates_floor(J))
            assert brute_omega_leading(J, n) == expect
            s = search_omega_sum(J, n)
            assert (s is not None) == expect
            if s is None:
                with pytest.raises(DomainError):
                    omega_sum_for(J, ctx)
                continue
            assert s.leading == J and dict(s.terms)[J] == 1 and s.verify()
            assert all(K > J for K, _ in s.terms[1:])


# theta elements ----------------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_theta_reproduces_basic_invariant(n):
    ctx = NullconeContext(2, n)
    s = omega_sum_for([1, 2], ctx)
    assert [J for J, _ in s.terms] == [(2 * d - 1, 2 * d) for d in range(1, n + 1)]
    assert theta_element([1, 2], s, ctx) == basic_invariant(1, 2, ctx)


def test_theta_rejects_length_mismatch():
    ctx = NullconeContext(2, 2)
    with pytest.raises(ParameterError):
        theta_element([1, 2], omega_sum_for([1, 2, 3], ctx), ctx)


@pytest.mark.parametrize("k,n", [(2, 1), (2, 2), (3, 2)])
def test_theta_elements_vanish_on_nullcone(k, n):
    ctx = NullconeContext(k, n)
    points = sample_points(ctx, 50, seed=3)
    for p in range(2, min(k, 2 * n) + 1):
        for J in itertools.combinations(range(1, 2 * n + 1), p):
            if ctx.dominates_floor(J):
                continue
            s = omega_sum_for(J, ctx)
            for I in itertools.combinations(range(1, k + 1), p):  # noqa: E741
                f = theta_element(I, s, ctx)
                assert all(f.evaluate(pt) == 0 for pt in points)


def test_theta_elements_lie_in_the_ideal_exactly():
    ctx = NullconeContext(2, 2)
    for J in ([1, 2], [2, 3], [1, 4], [3, 4]):
        if ctx.dominates_floor(J):
            continue
        assert in_ideal_exact(theta_element([1, 2], omega_sum_for(J, ctx), ctx), ctx)
    assert not in_ideal_exact(minor(ctx.make([1], [1])), ctx)
    assert not in_ideal_exact(minor(ctx.make([1, 2], [1, 3])), ctx)


# n-straightening -------------------------------------------------------------------------------


def test_n_straighten_example():
    ctx = NullconeContext(2, 1)
    comb = n_straighten([ctx.make([1], [2]), ctx.make([2], [1])], ctx)
    assert comb.as_dict() == {DoubleTableau((ctx.make([1], [1]), ctx.make([2], [2])), 2, 2): 1}


def test_n_straighten_standard_input_is_identity():
    ctx = NullconeContext(2, 2)
    for t in enumerate_n_standard((2, 1), ctx):
        assert n_straighten(list(t.columns), ctx).as_dict() == {t: 1}


def test_n_straighten_rewrites_through_invariant():
    ctx1 = NullconeContext(2, 1)
    assert len(n_straighten([ctx1.make([1, 2], [1, 2])], ctx1)) == 0
    # for n = 2, r_12 = delta_[12:12] + delta_[12:34]
    ctx = NullconeContext(2, 2)
    comb = n_straighten([ctx.make([1, 2], [1, 2])], ctx)
    assert comb.as_dict() == {DoubleTableau((ctx.make([1, 2], [3, 4]),), 2, 4): -1}


def _products(ctx):
    elems = enumerate_lattice(ctx.ambient)
    return list(itertools.combinations_with_replacement(elems, 2))


def test_n_straighten_sound_on_all_two_factor_products():
    ctx = NullconeContext(2, 2)
    points = sample_points(ctx, 25, seed=11)
    for prod in _products(ctx):
        comb = n_straighten(list(prod), ctx)
        for _, t in comb:
            assert all(ctx.dominates_floor(c.J) and len(c) <= ctx.max_length for c in t.columns)
        diff = comb.expand() - minor(prod[0]) * minor(prod[1])
        assert all(diff.evaluate(pt) == 0 for pt in points)
        assert comb.is_integral()


def test_n_straighten_difference_in_ideal_exactly():
    ctx = NullconeContext(2, 2)
    for prod in _products(ctx)[::7]:
        comb = n_straighten(list(prod), ctx)
        assert in_ideal_exact(comb.expand() - minor(prod[0]) * minor(prod[1]), ctx)


def test_n_straighten_result_is_unique_by_resolve():
    # the same coefficients come back from an independent solve on nullcone values
    ctx = NullconeContext(2, 1)
    cands = n_standard_up_to(2, ctx)
    points = sample_points(ctx, 3 * len(cands), seed=5)
    matrix = evaluation_matrix(cands, points)
    for prod in _products(ctx):
        f = minor(prod[0]) * minor(prod[1])
        coeffs = oracles.solve_exact(matrix, [f.evaluate(pt) for pt in points])
        expected = {t: c for t, c in zip(cands, coeffs) if c}
        assert n_straighten(list(prod), ctx).as_dict() == expected


def test_n_straighten_hibi_term():
    ctx = NullconeContext(2, 2)
    elems = enumerate_lattice(ctx.lattice)
    pairs = 0
    for a, b in itertools.combinations(elems, 2):
        if compare(a, b) is not Order.INCOMPARABLE:
            continue
        pairs += 1
        comb = n_straighten([a, b], ctx)
        c0, t0 = comb.terms[0]
        assert (c0, t0) == (1, hibi_term(a, b, ctx.lattice))
        ws = comb.weights()
        assert all(w < ws[0] for w in ws[1:])
        assert ws[0] == weight(a, ctx.cfg) + weight(b, ctx.cfg)
    assert pairs > 0


# counting -------------------------------------------------------------------------------------------


def test_count_examples():
    ctx = NullconeContext(2, 1)
    assert len(enumerate_n_standard((1,), ctx)) == 4
    assert len(enumerate_n_standard((2,), ctx)) == 9
    assert enumerate_n_standard((1, 1), ctx) == []
    assert dim_gl((2,), 2) == 3
    assert dim_sp((1,), 3) == 6
    assert dim_sp((1, 1), 2) == 5


def test_dims_reject_long_shapes():
    with pytest.raises(DomainError):
        dim_gl((1, 1, 1), 2)
    with pytest.raises(DomainError):
        dim_sp((1, 1), 1)


@pytest.mark.parametrize("k,n", [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3)])
def test_n_standard_count_matches_dimensions(k, n):
    ctx = NullconeContext(k, n)
    for d in range(1, 4):
        for shape in partitions(d):
            if shape.length > min(k, n):
                continue
            gl = oracles.count_ssyt(list(shape), k)
            sp = oracles.count_ssyt(list(shape), 2 * n, floor=ctx.floor)
            assert gl == oracles.hook_content_gl(list(shape), k) == dim_gl_weyl(shape, k) == dim_gl(shape, k)
            assert sp == dim_sp_weyl(shape, n) == dim_sp(shape, n)
            assert len(enumerate_n_standard(shape, ctx)) == gl * sp


# sampling ------------------------------------------------------------------------------------------------


def test_seed_42_sample_is_isotropic():
    ctx = NullconeContext(3, 2)
    pt = sample_nullcone_point(ctx, 42)
    assert len(pt) == 3 and all(len(r) == 4 for r in pt)
    for i, j in itertools.combinations(range(1, 4), 2):
        assert basic_invariant(i, j, ctx).evaluate(pt) == 0
    assert any(v for row in pt for v in row)


def test_trivial_nullcone_points():
    ctx = NullconeContext(2, 2)
    assert oracles.isotropic([[0] * 4, [0] * 4])
    assert oracles.isotropic([[1, 0, 0, 0]] * 2)
    r = basic_invariant(1, 2, ctx)
    assert r.evaluate([[0] * 4] * 2) == 0
    assert r.evaluate([[1, 0, 0, 0]] * 2) == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 10**6))
def test_samples_are_isotropic_and_deterministic(k, n, seed):
    ctx = NullconeContext(k, n)
    pt = sample_nullcone_point(ctx, seed)
    assert oracles.isotropic(pt)
    assert pt == sample_nullcone_point(ctx, seed)


def test_vanishing_detects_non_members():
    ctx = NullconeContext(2, 2)
    assert vanishes_on_nullcone(basic_invariant(1, 2, ctx), ctx)
    assert not vanishes_on_nullcone(minor(ctx.make([1], [1])), ctx)


# independence ---------------------------------------------------------------------------------------------


def test_independence_examples():
    ctx = NullconeContext(2, 1)
    report = basis_independence_check(enumerate_n_standard((1,), ctx), ctx, num_points=4)
    assert (report.candidates, report.rank, report.full_rank, report.finding) == (4, 4, True, None)
    ctx2 = NullconeContext(2, 2)
    cands = [t for s in partitions(2) for t in enumerate_n_standard(s, ctx2)]
    expected = sum(dim_gl(s, 2) * dim_sp(s, 2) for s in partitions(2))
    report = basis_independence_check(cands, ctx2)
    assert report.rank == len(cands) == expected
    assert basis_independence_check([], ctx2).rank == 0


def test_independence_reports_dependence():
    ctx = NullconeContext(2, 1)
    t = enumerate_n_standard((1,), ctx)[0]
    report = basis_independence_check([t, t], ctx)
    assert not report.full_rank and report.rank == 1
    assert report.finding.startswith("FINDING")
    assert report.attempts == 3


def test_independence_needs_enough_points():
    ctx = NullconeContext(2, 1)
    with pytest.raises(ParameterError):
        basis_independence_check(enumerate_n_standard((1,), ctx), ctx, num_points=2)


@pytest.mark.parametrize("n", [1, 2])
def test_independence_up_to_degree_three(n):
    ctx = NullconeContext(2, n)
    report = basis_independence_check(n_standard_up_to(3, ctx), ctx, seed=1)
    assert report.full_rank
