from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings

from projconf.acceptance import span_decomposition
from projconf.errors import InvalidRankMatrixError, NotAFaceError, ShapeError
from projconf.families import FamilyTag, family_rank_matrix
from projconf.rankmatrix import (
    RankMatrix,
    all_face_masks,
    compute_rank_matrix,
    faces,
    is_decomposable,
    leq,
    rank_type,
    rank_type_label,
    reduction,
    rho,
)
from projconf.subsets import Splitting, labels_of

from conftest import cfg, configs

EXAMPLE = cfg((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1))
PHI53 = family_rank_matrix(FamilyTag("phi[5^3]"))


def fs(*sets):
    return {frozenset(s) for s in sets}


def sympy_rank_matrix(v):
    values = []
    for mask in range(1 << v.m):
        cols = [list(v.point(i + 1)) for i in range(v.m) if mask >> i & 1]
        values.append(sympy.Matrix(cols).rank() if cols else 0)
    return tuple(values)


def test_worked_example_levels():
    phi = compute_rank_matrix(EXAMPLE)
    assert phi({2, 3, 4}) == 2 and phi({1, 2, 3, 4}) == 3
    level2 = {frozenset(labels_of(k)) for k in range(16) if phi(k) == 2}
    assert level2 == fs({1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {2, 3, 4})
    level3 = {frozenset(labels_of(k)) for k in range(16) if phi(k) == 3}
    assert level3 == fs({1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 2, 3, 4})


def test_worked_example_faces_and_type():
    phi = compute_rank_matrix(EXAMPLE)
    assert faces(phi, 2) == fs({1, 2}, {1, 3}, {1, 4}, {2, 3, 4})
    assert faces(phi, 1) == fs({1}, {2}, {3}, {4})
    assert faces(phi, 3) == fs({1, 2, 3, 4})
    assert faces(phi, 7) == set()
    assert rank_type(phi) == (4, 4, 1)
    assert rank_type_label(phi) == "(4,4)"


def test_all_equal_points():
    v = cfg(*[(1, 2, 0, 0)] * 5)
    phi = compute_rank_matrix(v)
    assert all(phi(k) == 1 for k in range(1, 32))
    assert rank_type(phi) == (1,) and rank_type_label(phi) == "(∅)"
    assert rho(phi) == Splitting.of(({1, 2, 3, 4, 5}, 1))


def test_rank_type_of_phi53():
    assert rank_type(PHI53) == (5, 10, 1)
    assert rank_type_label(PHI53) == "(5,10)"
    assert rho(PHI53) == Splitting.of(({1, 2, 3, 4, 5}, 3))


def test_block_formula_example():
    v = cfg((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 0, 1))
    phi = compute_rank_matrix(v)
    blocks = [({1}, 1), ({2}, 1), ({3}, 1), ({4, 5}, 1)]
    for k in range(32):
        I = labels_of(k)
        assert phi(k) == sum(min(len(I & B), r) for B, r in blocks)


def test_rho_examples():
    assert rho(compute_rank_matrix(cfg((1, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))) == Splitting.of(
        ({1, 2}, 1), ({3}, 1), ({4}, 1)
    )
    independent = compute_rank_matrix(cfg((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)))
    assert rho(independent) == Splitting.of(({1}, 1), ({2}, 1), ({3}, 1))
    assert is_decomposable(independent) and not is_decomposable(PHI53)


@settings(max_examples=200, deadline=None)
@given(configs())
def test_rank_matrix_matches_sympy_oracle(v):
    assert compute_rank_matrix(v).values == sympy_rank_matrix(v)


@settings(max_examples=200, deadline=None)
@given(configs())
def test_rank_matrix_axioms(v):
    phi = compute_rank_matrix(v)
    full = (1 << v.m) - 1
    assert phi(0) == 0
    for k in range(1, full + 1):
        assert phi(k) <= min(bin(k).count("1"), v.n)
        for i in range(v.m):
            bigger = k | (1 << i)
            assert phi(k) <= phi(bigger) <= phi(k) + 1
        for j in range(1, full + 1):
            assert phi(k | j) + phi(k & j) <= phi(k) + phi(j)


@settings(max_examples=200, deadline=None)
@given(configs())
def test_rho_matches_direct_span_decomposition(v):
    assert rho(compute_rank_matrix(v)) == span_decomposition(v)


@settings(max_examples=100, deadline=None)
@given(configs(n=4, m=5))
def test_faces_are_maximal_and_incomparable(v):
    phi = compute_rank_matrix(v)
    for r in range(1, phi.top + 1):
        fr = faces(phi, r)
        for a, b in combinations(fr, 2):
            assert not a <= b and not b <= a
        for F in fr:
            assert phi(F) == r
            assert all(phi(F | {i}) == r + 1 for i in range(1, 6) if i not in F)
    assert faces(phi, phi.top) == {frozenset(range(1, 6))}


@settings(max_examples=100, deadline=None)
@given(configs(n=4, m=5))
def test_reductions_are_rank_matrices_below(v):
    phi = compute_rank_matrix(v)
    for J in all_face_masks(phi):
        red = reduction(phi, J)
        assert leq(red, phi)
        for k in range(32):
            assert red(k) == phi(k | J) + phi(k & J) - phi(J)


def test_reduction_examples():
    for i in range(1, 6):
        assert reduction(PHI53, {i}) == family_rank_matrix(FamilyTag("phi[4^2;i]", (i,)))
    for i, j in combinations(range(1, 6), 2):
        rest = frozenset(range(1, 6)) - {i, j}
        assert rho(reduction(PHI53, {i, j})) == Splitting.of(({i}, 1), ({j}, 1), (rest, 1))
    assert reduction(PHI53, range(1, 6)) == PHI53


def test_reduction_by_non_face_names_larger_subset():
    phi = compute_rank_matrix(EXAMPLE)
    with pytest.raises(NotAFaceError) as info:
        reduction(phi, {2, 3})
    assert info.value.details["larger"] == [2, 3, 4]


def test_leq_examples_and_errors():
    ones = RankMatrix.from_function(5, lambda I: min(len(I), 1))
    assert leq(PHI53, PHI53)
    assert leq(ones, PHI53) and not leq(PHI53, ones)
    assert leq(family_rank_matrix(FamilyTag("phi[4^2;i]", (1,))), PHI53)
    with pytest.raises(ShapeError):
        leq(ones, compute_rank_matrix(EXAMPLE))


def test_invalid_rank_matrix_rejected():
    with pytest.raises(InvalidRankMatrixError):
        RankMatrix.from_function(3, lambda I: len(I) * 2)
    with pytest.raises(InvalidRankMatrixError):
        RankMatrix(2, (0, 1, 1, 3))
    with pytest.raises(ShapeError):
        RankMatrix(2, (0, 1, 1))


def test_permuted_and_json_round_trip():
    phi = compute_rank_matrix(EXAMPLE)
    sigma = {1: 4, 2: 3, 3: 2, 4: 1}
    moved = phi.permuted(sigma)
    assert all(moved({sigma[i] for i in labels_of(k)}) == phi(k) for k in range(16))
    assert RankMatrix.from_json(phi.to_json()) == phi
    assert phi.to_json()["values"][0b1110] == 2
