"""Structure-constant algebras: validation, products, closures, conjugation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import A3_QUIVER, f4_algebra, kxk, quiver_algebra
from maxsub.algebra import (
    Algebra,
    block_triangular,
    centralizer,
    conjugate_subalgebra,
    diagonal_subalgebra,
    direct_product,
    invert_element,
    matrix_algebra,
    subalgebra_from_rows,
    subalgebra_generated,
    validate_algebra,
)
from maxsub.errors import InvalidInputError
from maxsub.formats import dump_algebra, parse_algebra
from maxsub.linalg import GF, QQ, echelonize, full_subspace

F2 = GF(2)
F3 = GF(3)


def test_validate_matrix_algebra(m2q):
    assert validate_algebra(m2q).ok


def test_validate_flags_broken_table():
    # e*e = x and x*x = e is not associative together with x*e = e*x = x
    bad = Algebra(QQ, 2, ("e", "x"), (Fraction(1), Fraction(0)),
                  (((Fraction(0), Fraction(1)), (Fraction(0), Fraction(1))),
                   ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))))
    rep = validate_algebra(bad)
    assert not rep.ok
    assert any("associativity" in v or "unit" in v for v in rep.violations)


def test_validate_path_algebra(a3_q):
    assert validate_algebra(a3_q).ok


def test_multiply_unit(m2q):
    y = [Fraction(1), Fraction(2), Fraction(3), Fraction(4)]
    assert m2q.multiply(list(m2q.unit), y) == y
    assert m2q.multiply(y, list(m2q.unit)) == y


def test_multiply_matrix_units(m2q):
    e12 = m2q.basis_vector(1)
    e21 = m2q.basis_vector(2)
    e11 = m2q.basis_vector(0)
    assert m2q.multiply(e12, e21) == e11


def test_multiply_paths(a3_q):
    ia = a3_q.basis_names.index("a")
    ib = a3_q.basis_names.index("b")
    iba = a3_q.basis_names.index("b.a")
    assert a3_q.multiply(a3_q.basis_vector(ib), a3_q.basis_vector(ia)) == \
        a3_q.basis_vector(iba)
    assert a3_q.multiply(a3_q.basis_vector(ia), a3_q.basis_vector(ib)) == \
        [0] * 6


def test_generated_empty_is_scalars(m2q):
    gen = subalgebra_generated(m2q, [])
    assert gen.dim == 1
    assert gen.space.contains_vec(list(m2q.unit))


def test_generated_offdiagonal_units_fill_m2(m2q):
    gen = subalgebra_generated(m2q, [m2q.basis_vector(1), m2q.basis_vector(2)])
    assert gen.dim == 4


def test_generated_companion_is_f4():
    m2 = matrix_algebra(2, F2)
    # companion matrix of x^2 + x + 1: [[0,1],[1,1]] -> coordinates e12+e21+e22
    comp = [0, 1, 1, 1]
    gen = subalgebra_generated(m2, [comp])
    assert gen.dim == 2


def test_centralizer_of_scalars_is_everything(m2q):
    c = centralizer(m2q, echelonize([list(m2q.unit)], 4, QQ))
    assert c.dim == 4


def test_centralizer_of_m2_is_center(m2q):
    c = centralizer(m2q, full_subspace(4, QQ))
    assert c.dim == 1
    assert c.space.contains_vec(list(m2q.unit))


def test_centralizer_of_f4_in_m2f2_is_f4():
    m2 = matrix_algebra(2, F2)
    f4 = subalgebra_generated(m2, [[0, 1, 1, 1]])
    c = centralizer(m2, f4.space)
    assert c.dim == 2
    assert c.space == f4.space


def test_bicommutant_stabilizes(m2q):
    seeds = [[1, 1, 0, 0], [0, 0, 0, 1]]
    s = echelonize(seeds, 4, QQ)
    c1 = centralizer(m2q, s)
    c2 = centralizer(m2q, c1.space)
    c3 = centralizer(m2q, c2.space)
    assert c3.space == c1.space


def test_invert_unit(m2q):
    assert invert_element(m2q, list(m2q.unit)) == list(m2q.unit)


def test_invert_nilpotent_fails(m2q):
    assert invert_element(m2q, m2q.basis_vector(1)) is None


def test_invert_unitriangular(m2q):
    inv = invert_element(m2q, [1, 1, 0, 1])
    assert inv == [Fraction(1), Fraction(-1), Fraction(0), Fraction(1)]


def test_conjugate_by_unit_is_identity(m2q):
    ut = block_triangular(2, (1, 1), QQ, ambient=m2q)
    same = conjugate_subalgebra(m2q, list(m2q.unit), ut)
    assert same.space == ut.space


def test_conjugate_triangular_by_permutation(m2q):
    ut = block_triangular(2, (1, 1), QQ, ambient=m2q)
    perm = [0, 1, 1, 0]   # the transposition matrix
    lt = conjugate_subalgebra(m2q, perm, ut)
    lower = subalgebra_from_rows(
        m2q, [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert lt.space == lower.space


def test_conjugation_inverse_roundtrip(m2q):
    ut = block_triangular(2, (1, 1), QQ, ambient=m2q)
    u = [1, 2, 0, 1]
    uinv = invert_element(m2q, u)
    back = conjugate_subalgebra(m2q, uinv, conjugate_subalgebra(m2q, u, ut))
    assert back.space == ut.space


@given(st.lists(st.lists(st.integers(0, 2), min_size=9, max_size=9),
                min_size=1, max_size=2),
       st.lists(st.integers(0, 2), min_size=9, max_size=9))
@settings(max_examples=25, deadline=None)
def test_conjugation_commutes_with_generation(seeds, uvec):
    m3 = matrix_algebra(3, F3)
    uinv = invert_element(m3, uvec)
    if uinv is None:
        return
    gen_then_conj = conjugate_subalgebra(m3, uvec, subalgebra_generated(m3, seeds))
    conj_seeds = [m3.multiply(m3.multiply(uvec, s), uinv) for s in seeds]
    conj_then_gen = subalgebra_generated(m3, conj_seeds)
    assert gen_then_conj.space == conj_then_gen.space


def test_block_triangular_full():
    bt = block_triangular(3, (3,), QQ)
    assert bt.dim == 9


def test_block_triangular_upper(m2q):
    bt = block_triangular(2, (1, 1), QQ, ambient=m2q)
    assert bt.dim == 3


def test_block_triangular_1_2():
    bt = block_triangular(3, (1, 2), QQ)
    assert bt.dim == 7


def test_block_triangular_bad_composition():
    with pytest.raises(InvalidInputError):
        block_triangular(3, (1, 1), QQ)


def test_diagonal_merge_kxk():
    b = kxk(QQ)
    d = diagonal_subalgebra(1, [0, 1], b)
    assert d.dim == 1
    assert d.space.contains_vec([1, 1])


def test_diagonal_merge_m2_pair():
    b = direct_product([matrix_algebra(2, QQ), matrix_algebra(2, QQ)])
    d = diagonal_subalgebra(2, [0, 1], b)
    assert d.dim == 4
    from maxsub.maximal import certify_maximal
    assert certify_maximal(d, b).status == "maximal"


def test_subalgebra_closure_enforced(m2q):
    with pytest.raises(InvalidInputError):
        subalgebra_from_rows(m2q, [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]])


def test_subalgebra_needs_unit(m2q):
    with pytest.raises(InvalidInputError):
        subalgebra_from_rows(m2q, [[1, 0, 0, 0]])


def test_as_algebra_roundtrip(m2q):
    ut = block_triangular(2, (1, 1), QQ, ambient=m2q)
    uta = ut.as_algebra()
    assert validate_algebra(uta).ok
    assert uta.dim == 3
    # embedding of the abstract unit is the ambient unit
    assert ut.embed(list(uta.unit)) == list(m2q.unit)


def test_generated_is_closure_operator_f2():
    a3 = quiver_algebra(A3_QUIVER, F2)

    seeds = [[1, 0, 1, 0, 1, 0], [0, 0, 0, 1, 0, 0]]
    g1 = subalgebra_generated(a3, seeds)
    # extensive
    for s in seeds:
        assert g1.space.contains_vec(s)
    # idempotent
    g2 = subalgebra_generated(a3, [list(r) for r in g1.space.basis])
    assert g2.space == g1.space
    # monotone
    g3 = subalgebra_generated(a3, seeds[:1])
    assert all(g1.space.contains_vec(list(r)) for r in g3.space.basis)


def test_algebra_text_roundtrip(m2q, a3_q):
    for alg in (m2q, a3_q, f4_algebra()):
        text = dump_algebra(alg)
        back = parse_algebra(text)
        assert back.dim == alg.dim
        assert back.unit == alg.unit
        assert back.table == alg.table
        assert dump_algebra(back) == text
