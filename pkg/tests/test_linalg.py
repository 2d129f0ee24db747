"""Exact linear algebra: echelon forms, solving, subspaces, enumeration."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxsub.errors import InvalidInputError, NotFiniteFieldError
from maxsub.linalg import (
    GF,
    QQ,
    echelonize,
    enumerate_subspaces,
    full_subspace,
    gaussian_binomial,
    identity_matrix,
    kernel,
    mat_vec,
    quotient_space,
    solve_linear,
    subspace_contains,
    subspace_intersection,
    subspace_ops,
    subspace_sum,
    tensor_quotient,
    zero_subspace,
)

F2 = GF(2)
F3 = GF(3)


def test_field_rejects_composite():
    with pytest.raises(InvalidInputError):
        GF(6)


def test_echelonize_zero_matrix():
    s = echelonize([[0, 0, 0], [0, 0, 0]], 3, QQ)
    assert s.dim == 0
    assert s == zero_subspace(3, QQ)


def test_echelonize_identity():
    s = echelonize(identity_matrix(4, QQ), 4, QQ)
    assert s.dim == 4
    assert s == full_subspace(4, QQ)
    assert [list(r) for r in s.basis] == identity_matrix(4, QQ)


def test_echelonize_f2_hand_example():
    s = echelonize([(1, 1, 0), (0, 1, 1), (1, 0, 1)], 3, F2)
    assert s.dim == 2
    assert s.basis == ((1, 0, 1), (0, 1, 1))


def test_solve_identity():
    x, ker = solve_linear(identity_matrix(3, QQ), [[5], [7], [9]], QQ)
    assert [r[0] for r in x] == [5, 7, 9]
    assert ker.dim == 0


def test_solve_zero_system():
    x, ker = solve_linear([[0, 0], [0, 0]], [[0], [0]], QQ)
    assert x == [[0], [0]]
    assert ker.dim == 2


def test_solve_rank_deficient():
    x, ker = solve_linear([[1, 2], [2, 4]], [[3], [6]], QQ)
    assert x is not None
    # a * x == b exactly
    assert [Fraction(1) * x[0][0] + 2 * x[1][0]] == [Fraction(3)]
    assert ker.dim == 1
    v = ker.basis[0]
    assert v[0] + 2 * v[1] == 0


def test_solve_inconsistent():
    x, ker = solve_linear([[1, 2], [2, 4]], [[3], [7]], QQ)
    assert x is None
    assert ker.dim == 1


def test_subspace_ops_equal():
    u = echelonize([[1, 0], [0, 1]], 2, QQ)
    ops = subspace_ops(u, u)
    assert ops["sum"] == u and ops["intersection"] == u and ops["contains"]


def test_subspace_ops_complementary():
    u = echelonize([[1, 0, 0, 0], [0, 1, 0, 0]], 4, F2)
    w = echelonize([[0, 0, 1, 0], [0, 0, 0, 1]], 4, F2)
    ops = subspace_ops(u, w)
    assert ops["intersection"].dim == 0
    assert ops["sum"].dim == 4
    assert not ops["contains"]


def test_subspace_ops_f2_hand_example():
    u = echelonize([[1, 0, 0, 0], [0, 1, 0, 0]], 4, F2)
    w = echelonize([[0, 1, 1, 0], [0, 0, 0, 1]], 4, F2)
    ops = subspace_ops(u, w)
    assert ops["intersection"].dim == 0
    assert ops["sum"].dim == 4


def test_enumerate_dim_zero():
    out = list(enumerate_subspaces(3, 0, F2))
    assert len(out) == 1 and out[0].dim == 0


def test_enumerate_lines_of_f2_squared():
    out = list(enumerate_subspaces(2, 1, F2))
    assert len(out) == 3 == gaussian_binomial(2, 1, 2)


def test_enumerate_total_f2_4():
    total = sum(len(list(enumerate_subspaces(4, k, F2))) for k in range(5))
    assert total == 67


def test_enumerate_requires_finite_field():
    with pytest.raises(NotFiniteFieldError):
        list(enumerate_subspaces(2, 1, QQ))


@pytest.mark.parametrize("q,field", [(2, F2), (3, F3)])
@pytest.mark.parametrize("n", range(6))
def test_enumerate_counts_match_gaussian_binomials(n, q, field):
    for k in range(n + 1):
        count = sum(1 for _ in enumerate_subspaces(n, k, field))
        assert count == gaussian_binomial(n, k, q)


def test_enumerate_yields_no_duplicates():
    seen = set()
    for s in enumerate_subspaces(4, 2, F3):
        assert s.basis not in seen
        seen.add(s.basis)
    assert len(seen) == gaussian_binomial(4, 2, 3)


def test_tensor_quotient_no_relations():
    q = tensor_quotient(2, 3, [], QQ)
    assert q.dim == 6
    assert q.projection_matrix() == identity_matrix(6, QQ)


def test_tensor_quotient_everything():
    q = tensor_quotient(2, 2, identity_matrix(4, QQ), QQ)
    assert q.dim == 0


def test_tensor_quotient_kxk_over_itself():
    # relations for B (x)_B B with B = K x K: dim drops from 4 to 2
    rels = [[0, 1, 0, 0], [0, 0, 1, 0]]
    q = tensor_quotient(2, 2, rels, QQ)
    assert q.dim == 2


def test_projection_section_identity():
    q = quotient_space(5, [[1, 1, 0, 0, 0], [0, 0, 1, 2, 0]], QQ)
    assert q.dim == 3
    proj = q.projection_matrix()
    sect = q.section_matrix()
    comp = [[sum(proj[i][k] * sect[k][j] for k in range(5))
             for j in range(q.dim)] for i in range(q.dim)]
    assert comp == identity_matrix(3, QQ)


# ---------------------------------------------------------------------------
# properties

small_f2_matrices = st.lists(
    st.lists(st.integers(min_value=0, max_value=1), min_size=4, max_size=4),
    min_size=0, max_size=5)


@given(small_f2_matrices)
def test_echelonize_idempotent_f2(rows):
    s = echelonize(rows, 4, F2)
    again = echelonize([list(r) for r in s.basis], 4, F2)
    assert s == again


@given(st.lists(st.lists(st.fractions(max_denominator=6),
                         min_size=3, max_size=3), min_size=0, max_size=4))
def test_echelonize_idempotent_q(rows):
    s = echelonize(rows, 3, QQ)
    again = echelonize([list(r) for r in s.basis], 3, QQ)
    assert s == again


@given(st.integers(min_value=2, max_value=6), st.data())
@settings(max_examples=60)
def test_modular_law_f2(n, data):
    rows_u = data.draw(st.lists(
        st.lists(st.integers(0, 1), min_size=n, max_size=n),
        min_size=0, max_size=n))
    rows_w = data.draw(st.lists(
        st.lists(st.integers(0, 1), min_size=n, max_size=n),
        min_size=0, max_size=n))
    u = echelonize(rows_u, n, F2)
    w = echelonize(rows_w, n, F2)
    s = subspace_sum(u, w)
    i = subspace_intersection(u, w)
    assert u.dim + w.dim == s.dim + i.dim
    assert subspace_contains(s, u) and subspace_contains(s, w)
    assert subspace_contains(u, i) and subspace_contains(w, i)


@given(st.data())
@settings(max_examples=40)
def test_solve_exactness_f3(data):
    m = data.draw(st.integers(1, 4))
    n = data.draw(st.integers(1, 4))
    a = data.draw(st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n),
                           min_size=m, max_size=m))
    bvec = data.draw(st.lists(st.integers(0, 2), min_size=m, max_size=m))
    x, ker = solve_linear(a, [[v] for v in bvec], F3)
    if x is not None:
        got = mat_vec(a, [r[0] for r in x], F3)
        assert got == [v % 3 for v in bvec]
    for kv in ker.basis:
        assert mat_vec(a, list(kv), F3) == [0] * m


@given(st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4),
                min_size=1, max_size=4))
def test_kernel_vectors_annihilate(rows):
    ker = kernel(rows, 4, F3)
    for kv in ker.basis:
        assert mat_vec(rows, list(kv), F3) == [0] * len(rows)


def test_enumerate_filter_applied():
    fixed = (1, 1, 0)
    hits = list(enumerate_subspaces(3, 2, F2,
                                    filt=lambda s: s.contains_vec(fixed)))
    # planes of F_2^3 through a fixed nonzero vector: (2 choose 1)_2 = 3
    assert len(hits) == 3
    assert all(s.contains_vec(fixed) for s in hits)
