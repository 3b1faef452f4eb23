from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from rearep.rmatrix import catalog_uq_sl2
from rearep.scalar import ONE, ZERO, lam, q, qpow, specialize
from rearep.tensor import (
    QMatrix,
    column_basis,
    embed,
    embed_at,
    inverse,
    kron,
    nullspace,
    partial_trace,
    partial_transpose,
    permutation,
    r_chain,
    rank_exact,
    solve_linear,
)

from conftest import laurent_polys


def small_matrices(rows, cols, zero_weight=2):
    entry = st.one_of(*([st.just(ZERO)] * zero_weight), laurent_polys)
    return st.lists(st.lists(entry, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(QMatrix)


def at(m: QMatrix, q0=2) -> sympy.Matrix:
    return sympy.Matrix(m.nrows, m.ncols,
                        lambda i, j: sympy.Rational(*_pair(specialize(m.rows[i][j], q0))))


def _pair(f: Fraction):
    return f.numerator, f.denominator


@given(small_matrices(2, 2), small_matrices(3, 2))
def test_kron_matches_sympy(a, b):
    assert at(kron(a, b)) == sympy.kronecker_product(at(a), at(b))


@given(small_matrices(4, 4), small_matrices(4, 4))
def test_embed_is_a_homomorphism(a, b):
    a, b = a.with_shape((2, 2)), b.with_shape((2, 2))
    for pos in (1, 2):
        assert embed_at(a @ b, pos, 3, 2) == embed_at(a, pos, 3, 2) @ embed_at(b, pos, 3, 2)


def test_embed_examples():
    r = catalog_uq_sl2()
    assert embed_at(r, 1, 2, 2) == r
    assert embed_at(QMatrix.identity((2, 2)), 2, 4, 2) == QMatrix.identity((2,) * 4)
    direct = sympy.kronecker_product(sympy.eye(2), at(r))
    assert at(embed_at(r, 2, 3, 2)) == direct
    with pytest.raises(ValueError):
        embed_at(r, 3, 3, 2)


def test_embed_reversed_positions_is_conjugation_by_flip():
    r, p = catalog_uq_sl2(), permutation(2)
    assert embed(r, (2, 1), 2, 2) == p @ r @ p
    p13 = embed(p, (1, 3), 3, 2)
    assert embed(r, (3, 2), 3, 2) == embed_at(p, 2, 3, 2) @ embed_at(r, 2, 3, 2) @ embed_at(p, 2, 3, 2)
    assert p13 @ p13 == QMatrix.identity((2, 2, 2))


@pytest.mark.parametrize("n", [2, 3])
def test_partial_trace_of_flip_is_identity(n):
    assert partial_trace(permutation(n), 2) == QMatrix.identity((n,))
    assert partial_trace(permutation(n), 1) == QMatrix.identity((n,))


def test_partial_trace_of_identity():
    assert partial_trace(QMatrix.identity((2, 2)), 1) == QMatrix.identity((2,)).scale(2)


@given(small_matrices(4, 4))
def test_partial_trace_of_inserted_identity(m):
    m = m.with_shape((2, 2))
    for s in (1, 2, 3):
        padded = embed(m, [i for i in (1, 2, 3) if i != s], 3, 2)
        assert partial_trace(padded, s) == m.scale(2)


def test_partial_trace_rejects_bad_factor():
    with pytest.raises(ValueError):
        partial_trace(QMatrix.identity((2, 2)), 3)


def test_partial_transpose_involution():
    r = catalog_uq_sl2()
    assert partial_transpose(partial_transpose(r, [1]), [1]) == r
    assert partial_transpose(r, [1, 2]) == r.transpose()


def test_r_chain_examples():
    r = catalog_uq_sl2()
    assert r_chain(r, 1, 1, 1, 2) == r
    stepwise = embed_at(r, 1, 4, 2) @ embed_at(r, 2, 4, 2) @ embed_at(r, 3, 4, 2)
    assert r_chain(r, 1, 3, 1, 4) == stepwise
    down = embed_at(r, 3, 4, 2) @ embed_at(r, 2, 4, 2) @ embed_at(r, 1, 4, 2)
    assert r_chain(r, 3, 1, 1, 4) == down
    assert r_chain(r, 1, 3, 1, 4) @ r_chain(r, 3, 1, -1, 4) == QMatrix.identity((2,) * 4)


def test_chain_absorbs_local_generator():
    # (R_1 ... R_k) R_i = R_{i+1} (R_1 ... R_k) on k+1 factors
    r, k = catalog_uq_sl2(), 3
    chain = r_chain(r, 1, k, 1, k + 1)
    for i in range(1, k):
        assert chain @ embed_at(r, i, k + 1, 2) == embed_at(r, i + 1, k + 1, 2) @ chain


def test_braid_relation_for_flip():
    p = permutation(2)
    p12, p23 = embed_at(p, 1, 3, 2), embed_at(p, 2, 3, 2)
    assert p12 @ p23 @ p12 == p23 @ p12 @ p23


def test_rank_examples():
    assert rank_exact(QMatrix.zeros((3,))) == 0
    assert rank_exact(QMatrix.identity((2, 2))) == 4
    r = catalog_uq_sl2()
    assert rank_exact(r - QMatrix.identity((2, 2)).scale(q)) == 1


@given(small_matrices(4, 3, zero_weight=1))
def test_rank_bounds_specialized_rank(m):
    exact = rank_exact(m)
    assert at(m).rank() <= exact
    assert rank_exact(m.transpose()) == exact


@given(small_matrices(3, 3, zero_weight=0))
def test_rank_full_rank_agrees_after_specialization(m):
    special = at(m, 3).rank()
    if special == 3:
        assert rank_exact(m) == 3


def test_solve_linear_examples():
    m = QMatrix.from_rows([[q, 1], [0, lam]])
    assert solve_linear(QMatrix.identity((2,)), m) == m
    assert solve_linear(QMatrix.zeros((2,)), m) is None
    a = QMatrix.from_rows([[1, q], [2, 2 * q]])
    x = solve_linear(a, QMatrix.from_rows([[1], [2]]))
    assert a @ x == QMatrix.from_rows([[1], [2]])
    # free variable set to zero
    assert x.rows[1][0] is ZERO


@given(small_matrices(3, 4, zero_weight=1))
def test_nullspace_vectors_are_annihilated(m):
    basis = nullspace(m)
    assert len(basis) == 4 - rank_exact(m)
    for vec in basis:
        assert (m @ QMatrix([[x] for x in vec])).is_zero()


@given(small_matrices(3, 3, zero_weight=0))
def test_inverse_round_trip(m):
    if rank_exact(m) < 3:
        with pytest.raises(ZeroDivisionError):
            inverse(m)
        return
    assert m @ inverse(m) == QMatrix.identity((3,))


@given(small_matrices(3, 4, zero_weight=1))
def test_column_basis_factorizes(m):
    u, w = column_basis(m)
    if u.ncols:
        assert u @ w == m
    assert u.ncols == rank_exact(m)


def test_json_round_trip():
    r = catalog_uq_sl2().scale(qpow(-1) / (q + 2))
    back = QMatrix.from_json(r.to_json())
    assert back == r and back.row_shape == (2, 2)
    assert r.to_json()["shape_rows"] == [2, 2]


def test_scale_and_map():
    m = QMatrix.identity((2,)).scale(q)
    assert m.map(lambda x: x * x) == QMatrix.identity((2,)).scale(q * q)
    assert m.trace() == 2 * q
    assert m.scale(ONE) == m
