import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from nullcone_smt.errors import DomainError, InvariantViolation, ParameterError
from nullcone_smt.poly import Poly
from nullcone_smt.straighten import (
    WeightConfig,
    dominates,
    expand_product,
    hibi_term,
    leading_term,
    product_columns,
    shape_leading,
    straighten,
    weight,
)
from nullcone_smt.tableaux import DoubleTableau, Lattice, Order, Shape, compare, enumerate_lattice, partitions
from nullcone_smt.tableaux import enumerate_standard


def laplace_product(product, n, m):
    out = Poly.one(n, m)
    for t in product:
        out = out * oracles.laplace_det(n, m, list(t.I), list(t.J))
    return out


def laplace_combination(comb, n, m):
    out = Poly(n, m)
    for c, t in comb:
        out = out + laplace_product(t.columns, n, m) * c
    return out


D22, D23, D33 = Lattice.D(2, 2), Lattice.D(2, 3), Lattice.D(3, 3)
E23 = enumerate_lattice(D23)


# weights ------------------------------------------------------------------------


def test_weight_examples():
    assert weight(DoubleTableau((), 4, 6), WeightConfig(4, 6)) == 0
    cfg = WeightConfig(4, 6, 21)
    assert weight(Lattice.D(4, 6).make([1], [4]), cfg) == 3 * 21**3 + 21**2 + 21 + 1 == 28246


def test_weight_config_rejects_small_base():
    with pytest.raises(ParameterError):
        WeightConfig(2, 2, 8)
    assert WeightConfig(2, 2).base == 9


def test_weight_rejects_foreign_ambient():
    with pytest.raises(ParameterError):
        weight(D23.make([1], [1]), WeightConfig(2, 2))


@pytest.mark.parametrize("base", [9, 10, 101])
def test_weight_additive_on_example(base):
    cfg = WeightConfig(2, 2, base)
    a, b = D22.make([1], [2]), D22.make([2], [1])
    assert weight(a, cfg) + weight(b, cfg) == weight(D22.meet(a, b), cfg) + weight(D22.join(a, b), cfg)


def test_weight_additive_equal_lengths_in_d33():
    cfg = WeightConfig(3, 3)
    elems = enumerate_lattice(D33)
    for a, b in itertools.combinations(elems, 2):
        if len(a) == len(b):
            lhs = weight(a, cfg) + weight(b, cfg)
            assert lhs == weight(D33.meet(a, b), cfg) + weight(D33.join(a, b), cfg)


def test_weight_additive_mixed_lengths_in_d22():
    cfg = WeightConfig(2, 2)
    wrap = [oracles._T(e) for e in oracles.all_one_line(2, 2)]
    for a, b in itertools.combinations(wrap, 2):
        lo, hi = oracles.glb(wrap, a, b), oracles.lub(wrap, a, b)
        w = lambda t: weight(D22.make(t.I, t.J), cfg)  # noqa: E731
        assert w(a) + w(b) == w(lo) + w(hi)


def test_weight_strictly_monotone():
    cfg = WeightConfig(3, 3)
    elems = enumerate_lattice(D33)
    for a, b in itertools.permutations(elems, 2):
        if compare(a, b) is Order.LESS:
            assert weight(a, cfg) > weight(b, cfg)


# straightening -----------------------------------------------------------------


def test_straighten_example():
    comb = straighten([D22.make([1], [2]), D22.make([2], [1])])
    expected = {
        DoubleTableau((D22.make([1], [1]), D22.make([2], [2])), 2, 2): 1,
        DoubleTableau((D22.make([1, 2], [1, 2]),), 2, 2): -1,
    }
    assert comb.as_dict() == expected
    assert [c for c, _ in comb] == [1, -1]


def test_straighten_standard_input_is_identity():
    for t in enumerate_standard((2, 1), D23):
        comb = straighten(list(t.columns), D23)
        assert comb.as_dict() == {t: 1}


def test_straighten_empty_product():
    comb = straighten([], D22)
    assert comb.as_dict() == {DoubleTableau((), 2, 2): 1}
    with pytest.raises(ParameterError):
        straighten([])


def test_straighten_rejects_bad_lattice():
    with pytest.raises(ParameterError):
        straighten([D22.make([1], [1])], Lattice.N(2, 1))
    with pytest.raises(ParameterError):
        straighten([D22.make([1], [1])], D23)


def test_straighten_three_factor_example():
    a, b = D23.make([1], [2]), D23.make([2], [1])
    comb = straighten([a, b, a], D23)
    assert comb.expand() == laplace_product([a, b, a], 2, 3)
    assert comb.is_integral()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(E23), min_size=1, max_size=3))
def test_straighten_sound_up_to_three_factors(product):
    comb = straighten(product, D23)
    assert laplace_combination(comb, 2, 3) == laplace_product(product, 2, 3)
    assert all(c for c, _ in comb)
    ws = comb.weights()
    assert ws == sorted(ws, reverse=True)


def test_straighten_sound_two_factors_d33_short():
    short = [t for t in enumerate_lattice(D33) if len(t) <= 2]
    for a, b in itertools.combinations_with_replacement(short, 2):
        comb = straighten([a, b], D33)
        assert comb.expand() == expand_product([a, b])


def _standard_by_brute_force(n, m, rows, cols):
    """Standard monomials with the given row and column content, from raw chains."""
    elems = oracles.all_one_line(n, m)
    out = []
    for size in range(1, len(rows) + 1):
        for chain in itertools.combinations_with_replacement(elems, size):
            if sorted(i for I, _ in chain for i in I) != rows or sorted(j for _, J in chain for j in J) != cols:
                continue
            for perm in set(itertools.permutations(chain)):
                if all(oracles.leq(oracles._T(x), oracles._T(y)) for x, y in zip(perm, perm[1:])):
                    out.append(perm)
                    break
    return out


@pytest.mark.parametrize("pair", list(itertools.combinations(E23, 2))[::5], ids=str)
def test_straighten_coefficients_match_independent_solve(pair):
    n, m = 2, 3
    target = laplace_product(pair, n, m)
    rows = sorted(i for t in pair for i in t.I)
    cols = sorted(j for t in pair for j in t.J)
    basis = _standard_by_brute_force(n, m, rows, cols)
    polys = [laplace_product([D23.make(I, J) for I, J in chain], n, m) for chain in basis]
    monos = sorted(set(target.terms) | {e for p in polys for e in p.terms})
    matrix = [[p.terms.get(e, 0) for p in polys] for e in monos]
    coeffs = oracles.solve_exact(matrix, [target.terms.get(e, 0) for e in monos])
    expected = {chain: c for chain, c in zip(basis, coeffs) if c}
    got = {tuple((t.I, t.J) for t in tab.columns): c for c, tab in straighten(list(pair), D23)}
    assert got == expected


# leading terms ---------------------------------------------------------------------


def test_leading_term_example():
    a, b = D22.make([1], [2]), D22.make([2], [1])
    t, c = leading_term(a, b)
    assert t == DoubleTableau((D22.make([1], [1]), D22.make([2], [2])), 2, 2) and c == 1


def test_leading_term_rejects_comparable():
    with pytest.raises(DomainError):
        leading_term(D22.make([1], [1]), D22.make([2], [2]))


@pytest.mark.parametrize("lattice,max_len", [(D23, 2), (D33, 2)], ids=["D23", "D33"])
def test_leading_term_is_hibi_for_every_incomparable_pair(lattice, max_len):
    elems = [t for t in enumerate_lattice(lattice) if len(t) <= max_len]
    cfg = WeightConfig(lattice.rows, lattice.cols)
    seen = 0
    for a, b in itertools.combinations(elems, 2):
        if compare(a, b) is not Order.INCOMPARABLE:
            continue
        seen += 1
        comb = straighten([a, b], lattice, cfg)
        top_coef, top = comb.terms[0]
        assert (top, top_coef) == (hibi_term(a, b, lattice), 1)
        ws = comb.weights()
        assert all(w < ws[0] for w in ws[1:])
        assert weight(top, cfg) == weight(a, cfg) + weight(b, cfg)
    assert seen > 0


# shape filtration -----------------------------------------------------------------------


def test_dominates_examples():
    assert dominates((2,), (1, 1))
    assert not dominates((1, 1), (2,))
    assert dominates((2, 1), (2, 1))


def test_shape_leading_examples():
    comb = straighten([D22.make([1], [2]), D22.make([2], [1])])
    assert shape_leading(comb, (1, 1)) == Shape([1, 1])
    t = enumerate_standard((2, 1), D23)[0]
    assert shape_leading(straighten(list(t.columns), D23)) == t.shape


def test_shape_leading_rejects_empty():
    comb = straighten([D22.make([1], [2]), D22.make([2], [1])])
    with pytest.raises(DomainError):
        shape_leading(type(comb)((), D22, comb.cfg))


def test_shape_leading_flags_dominance_violation():
    comb = straighten([D22.make([1, 2], [1, 2])])
    with pytest.raises(InvariantViolation):
        shape_leading(comb, (2, 2))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(E23), min_size=1, max_size=3))
def test_shape_filtration_dominance(product):
    comb = straighten(product, D23)
    lengths = product_columns(product)
    for _, t in comb:
        assert dominates(t.column_lengths, lengths)
    shape_leading(comb, lengths)


# Cauchy count --------------------------------------------------------------------------


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_standard_monomials_count_all_monomials(d):
    total = sum(len(enumerate_standard(s, D22)) for s in partitions(d) if s.length <= 2)
    assert total == oracles.monomial_count(4, d) == math.comb(3 + d, d)
    if d == 2:
        assert total == 10
