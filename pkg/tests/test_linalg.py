from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadalg.fields import QQ, PrimeField
from quadalg.linalg import (Matrix, Subspace, annihilator, contains,
                            intersect, kernel, matrix_rank, member,
                            quotient_data, reduce_against, rref, solve,
                            sparse_rank, subspace_sum)

F5 = PrimeField(5)


def mat(field, rows):
    return Matrix(field, [[field.coerce(x) for x in r] for r in rows],
                  cols=len(rows[0]) if rows else 0)


def gf5_matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.integers(1, max_dim).flatmap(
            lambda m: st.lists(
                st.lists(st.integers(0, 4), min_size=m, max_size=m),
                min_size=n, max_size=n).map(lambda rows: mat(F5, rows))))


def test_rref_known_example():
    M = mat(QQ, [[0, 2, 4], [1, 1, 1]])
    R, rank, pivots = rref(M)
    assert rank == 2 and pivots == [0, 1]
    assert R == mat(QQ, [[1, 0, -1], [0, 1, 2]])


def test_rref_idempotent_and_canonical():
    M = mat(F5, [[2, 1, 0], [4, 2, 0], [0, 0, 3]])
    R1, rank, _ = rref(M)
    R2, rank2, _ = rref(R1)
    assert R1 == R2 and rank == rank2 == 2


@settings(max_examples=60)
@given(gf5_matrices())
def test_rref_rank_bounds(M):
    _, rank, pivots = rref(M)
    assert 0 <= rank <= min(M.rows, M.cols)
    assert pivots == sorted(pivots)


@settings(max_examples=60)
@given(gf5_matrices())
def test_kernel_rank_nullity(M):
    K = kernel(M)
    _, rank, _ = rref(M)
    assert K.dim == M.cols - rank
    for row in K.basis.data:
        assert all(x == 0 for x in M.apply(row))


@settings(max_examples=60)
@given(gf5_matrices())
def test_row_space_invariant_under_scaling(M):
    S1 = Subspace(M.cols, M)
    scaled = Matrix(F5, [[F5.mul(3, x) for x in row] for row in M.data],
                    cols=M.cols)
    assert Subspace(M.cols, scaled) == S1


def test_subspace_set_equality_is_representation_equality():
    a = Subspace.span(QQ, [[1, 1], [0, 1]], 2)
    b = Subspace.span(QQ, [[1, 0], [1, 1]], 2)
    assert a == b and hash(a) == hash(b)


def test_annihilator_example():
    S = Subspace.span(QQ, [[1, 0, 1]], 3)
    A = annihilator(S)
    assert A.dim == 2
    for v in A.basis.data:
        assert sum(v[i] * [1, 0, 1][i] for i in range(3)) == 0


@settings(max_examples=40)
@given(gf5_matrices())
def test_annihilator_involution(M):
    S = Subspace(M.cols, M)
    assert annihilator(annihilator(S)) == S


@settings(max_examples=30)
@given(gf5_matrices(3), gf5_matrices(3))
def test_sum_intersection_dimension_formula(Ma, Mb):
    n = 3
    if Ma.cols != n or Mb.cols != n:
        pad = lambda r: list(r[:n]) + [0] * (n - len(r[:n]))
        Ma = mat(F5, [pad(r) for r in Ma.data])
        Mb = mat(F5, [pad(r) for r in Mb.data])
    A = Subspace(n, Ma)
    B = Subspace(n, Mb)
    total = subspace_sum(A, B)
    meet = intersect(A, B)
    assert total.dim + meet.dim == A.dim + B.dim
    assert contains(A, meet) and contains(B, meet)
    assert contains(total, A) and contains(total, B)


def test_quotient_data_projection_section():
    S = Subspace.span(QQ, [[1, -1, 0]], 3)
    proj, section = quotient_data(3, S)
    assert proj.rows == 2
    # proj kills S, and proj . section = identity on the quotient
    assert all(x == 0 for x in proj.apply([1, -1, 0]))
    assert proj @ section == Matrix.identity(QQ, 2)


def test_reduce_against_and_member():
    S = Subspace.span(QQ, [[1, 0, 0], [0, 1, 0]], 3)
    assert member(S, [2, 3, 0])
    assert not member(S, [0, 0, 1])
    residual = reduce_against(S, [[1, 1, 1]])
    assert residual is not None and residual[2] == 1


def test_solve_consistent_and_inconsistent():
    M = mat(QQ, [[1, 1], [0, 1]])
    x = solve(M, [QQ.coerce(3), QQ.coerce(1)])
    assert list(M.apply(x)) == [3, 1]
    M2 = mat(QQ, [[1, 0], [1, 0]])
    assert solve(M2, [QQ.one, QQ.zero]) is None


@settings(max_examples=40)
@given(gf5_matrices())
def test_matmul_matches_apply(M):
    v = [F5.coerce(i + 1) for i in range(M.cols)]
    col = Matrix(F5, [[x] for x in v], cols=1)
    assert list((M @ col).transpose().data[0]) == list(M.apply(v))


def test_sparse_rank_agrees_with_rref():
    rows = [[0, 2, 4], [1, 1, 1], [1, 3, 5]]
    M = mat(QQ, rows)
    sparse = sparse_rank(QQ, [{j: QQ.coerce(x) for j, x in enumerate(r)
                               if x} for r in rows])
    assert sparse == rref(M)[1] == matrix_rank(M) == 2


@settings(max_examples=40)
@given(gf5_matrices())
def test_matrix_rank_dispatch(M):
    assert matrix_rank(M) == rref(M)[1]


def test_fraction_entries_stay_exact():
    M = mat(QQ, [[Fraction(1, 3), Fraction(1, 6)], [1, 1]])
    R, rank, _ = rref(M)
    assert rank == 2
    assert R == Matrix.identity(QQ, 2)


def test_matrix_shape_errors():
    with pytest.raises(ValueError):
        mat(QQ, [[1, 2], [3]])
    with pytest.raises(ValueError):
        mat(QQ, [[1, 2]]) @ mat(QQ, [[1, 2]])
