"""Split/separable analysis, induction, restriction, decomposition."""

import pytest

from conftest import (
    A3_QUIVER,
    D4_QUIVER,
    D5_QUIVER,
    ZIGZAG_POSET,
    kxk,
    quiver_algebra,
)
from maxsub.algebra import (
    full_subalgebra,
    subalgebra_from_rows,
)
from maxsub.errors import UnsupportedFieldError
from maxsub.extensions import (
    analyze_extension,
    check_summand_property,
    complement_flags,
    decompose_module,
    endomorphism_algebra,
    hom_space,
    induce,
    is_direct_summand,
    is_local_module,
    modules_isomorphic,
    restrict,
    restrict_along,
    separability_idempotent,
    separable_type_idempotent,
    split_complement,
    tensor_square,
)
import maxsub.extensions as ext
from maxsub.linalg import GF, QQ, mat_mul, vec_add
from maxsub.maximal import enumerate_maximal_families, instantiate_family
from maxsub.modules import make_module, regular_module
from maxsub.presentations import (
    delete_arrows,
    dimension_vector,
    interval_index,
    quiver_maximal,
)
from maxsub.structure import simple_modules, wedderburn_data

F2 = GF(2)


def test_split_complement_full(m2q):
    comp = split_complement(full_subalgebra(m2q), m2q)
    assert comp is not None and comp.dim == 0


def test_split_complement_delete_arrow():
    res = delete_arrows(A3_QUIVER, ["3"], QQ)
    comp = split_complement(res.inclusion, res.ambient)
    assert comp is not None
    assert comp.space == res.complement
    flags = complement_flags(comp.space, res.ambient)
    assert flags == {"ideal": True, "nilpotent": True, "trivial": True}


def test_split_complement_split_type_maximal(kronecker_q):
    rh = next(f for f in enumerate_maximal_families(kronecker_q)
              if f.kind == "radical_hyperplane")
    sub = instantiate_family(kronecker_q, rh, params=[1, 0])
    comp = split_complement(sub, kronecker_q)
    assert comp is not None and comp.dim == 1
    flags = complement_flags(comp.space, kronecker_q)
    assert flags["trivial"]


def test_f4_in_m2_splits_and_is_separable(m2f2):
    # F_4 is separable over F_2, so its bimodules all split: the extension
    # has a complement, but the complement is not an ideal (M_2 is simple)
    from maxsub.algebra import subalgebra_generated
    f4 = subalgebra_generated(m2f2, [[0, 1, 1, 1]])
    comp = split_complement(f4, m2f2)
    idem = separability_idempotent(f4, m2f2)
    assert idem is not None
    assert comp is not None and comp.dim == 2
    flags = complement_flags(comp.space, m2f2)
    assert flags == {"ideal": False, "nilpotent": False, "trivial": False}


def test_separability_full(m2q):
    ts = tensor_square(full_subalgebra(m2q), m2q)
    e = separability_idempotent(full_subalgebra(m2q), m2q, ts)
    assert e is not None
    # e = image of 1 (x) 1
    pure = ts.embed_pure(list(m2q.unit), list(m2q.unit))
    assert tuple(pure) == e or ext._verify_separability(ts, pure)


def test_separability_vertex_sum_tree():
    for quiver in (A3_QUIVER, D4_QUIVER):
        alg = quiver_algebra(quiver, QQ)
        merge = quiver_maximal(alg, "merge", quiver.vertices[0],
                               quiver.vertices[1])
        ts = tensor_square(merge, alg)
        f = alg.field
        e = tuple([f.zero()] * ts.dim)
        for v in alg.presentation.vertex_vectors:
            e = tuple(f.add(x, y)
                      for x, y in zip(e, ts.embed_pure(list(v), list(v))))
        assert ext._verify_separability(ts, e)
        assert separability_idempotent(merge, alg, ts) is not None


def test_separable_type_idempotent_pointed(a3_q):
    merges = [f for f in enumerate_maximal_families(a3_q)
              if f.kind == "diagonal_merge"]
    wm = wedderburn_data(a3_q)
    for fam in merges:
        sub = instantiate_family(a3_q, fam, wm=wm)
        e = separable_type_idempotent(sub, a3_q, wm)
        assert e is not None


def test_separable_type_idempotent_m2(m2q):
    wm = wedderburn_data(m2q)
    e = separable_type_idempotent(full_subalgebra(m2q), m2q, wm)
    ts = tensor_square(full_subalgebra(m2q), m2q)
    assert ext._verify_separability(ts, e)


def test_separable_type_idempotent_char_divides(m2f2):
    wm = wedderburn_data(m2f2)
    with pytest.raises(UnsupportedFieldError):
        separable_type_idempotent(full_subalgebra(m2f2), m2f2, wm)


def test_split_type_not_separable(kronecker_q):
    # a split-type maximal subalgebra of the Kronecker algebra is not
    # a separable extension (the radicals differ)
    rh = next(f for f in enumerate_maximal_families(kronecker_q)
              if f.kind == "radical_hyperplane")
    sub = instantiate_family(kronecker_q, rh, params=[1, 0])
    analysis = analyze_extension(sub, kronecker_q)
    assert analysis.split and analysis.trivial
    assert not analysis.separable


def test_induce_along_full(m2q):
    m = regular_module(m2q)
    sub = full_subalgebra(m2q)
    sub_mod = make_module(sub.as_algebra(), list(m.action))
    ind = induce(sub_mod, sub)
    assert ind.dim == m.dim
    assert modules_isomorphic(ind, m)


def test_induce_diagonal_kxk():
    b = kxk(QQ)
    diag = subalgebra_from_rows(b, [[1, 1]])
    triv = make_module(diag.as_algebra(), [[[1]]])
    ind = induce(triv, diag)
    assert ind.dim == 2
    assert [p.dim for p in decompose_module(ind)] == [1, 1]


def test_induce_kronecker_merge(kronecker_q):
    merge = quiver_maximal(kronecker_q, "merge", "a", "b")
    simple = simple_modules(merge.as_algebra())[0]
    ind = induce(simple, merge)
    assert ind.dim == 2
    assert [p.dim for p in decompose_module(ind)] == [1, 1]


def test_restrict_to_full(m2q):
    m = regular_module(m2q)
    res = restrict(m, full_subalgebra(m2q))
    assert res.dim == m.dim
    assert res.action == m.action


def test_restrict_zigzag_to_d4(zigzag_q):
    elems = list(ZIGZAG_POSET.elements)
    mats = []
    for name in zigzag_q.basis_names:
        a, b = name[1:-1].split(",")
        m = [[0] * 5 for _ in range(5)]
        m[elems.index(a)][elems.index(b)] = 1
        mats.append(m)
    defmod = make_module(zigzag_q, mats, check=True)
    d4 = quiver_algebra(D4_QUIVER, QQ)

    def bv(a, b):
        return list(zigzag_q.basis_vector(interval_index(zigzag_q, a, b)))

    images = {
        "1": bv("1", "1"),
        "c": vec_add(bv("2", "2"), bv("4", "4"), QQ),
        "3": bv("3", "3"),
        "5": bv("5", "5"),
        "x": bv("2", "1"),
        "y": vec_add(bv("2", "3"), bv("4", "3"), QQ),
        "z": bv("4", "5"),
    }
    restr = restrict_along(defmod, d4, [images[nm] for nm in d4.basis_names])
    vec, thin = dimension_vector(restr)
    assert vec == (1, 2, 1, 1) and not thin
    parts = decompose_module(restr)
    assert len(parts) == 1 and parts[0].dim == 5
    assert is_local_module(restr)


def test_restrict_preserves_simple_count_split_type(kronecker_q):
    rh = next(f for f in enumerate_maximal_families(kronecker_q)
              if f.kind == "radical_hyperplane")
    sub = instantiate_family(kronecker_q, rh, params=[1, 2])
    assert len(simple_modules(sub.as_algebra())) == \
        len(simple_modules(kronecker_q))


def test_decompose_simple_is_itself(m2q):
    s = simple_modules(m2q)[0]
    parts = decompose_module(s)
    assert len(parts) == 1 and parts[0].dim == 2


def test_decompose_regular_kxk():
    parts = decompose_module(regular_module(kxk(QQ)))
    assert [p.dim for p in parts] == [1, 1]


def test_decompose_regular_a3(a3_q):
    parts = decompose_module(regular_module(a3_q))
    assert sorted(p.dim for p in parts) == [1, 2, 3]
    for p in parts:
        assert is_local_module(p)


def test_decompose_reassembles(a3_q):
    m = regular_module(a3_q)
    parts = decompose_module(m)
    assert sum(p.dim for p in parts) == m.dim
    # the direct sum of the parts is isomorphic to the original
    f = a3_q.field
    total = []
    for k in range(a3_q.dim):
        d = m.dim
        big = [[f.zero()] * d for _ in range(d)]
        off = 0
        for p in parts:
            for i in range(p.dim):
                for j in range(p.dim):
                    big[off + i][off + j] = p.action[k][i][j]
            off += p.dim
        total.append(big)
    direct = make_module(a3_q, total, check=True)
    assert modules_isomorphic(direct, m)


def test_decompose_over_f2(kronecker_f2):
    parts = decompose_module(regular_module(kronecker_f2))
    assert sorted(p.dim for p in parts) == [1, 3]


def test_endomorphism_algebra_dims(m2q):
    e_alg, mats = endomorphism_algebra(regular_module(m2q))
    # End of the regular module is the opposite algebra
    assert e_alg.dim == 4
    for x in mats:
        for y in mats:
            prod = mat_mul(x, y, QQ)
            # closure: the product lies in the span of the basis matrices
            flat = [prod[i][j] for i in range(2 * 2) for j in range(2 * 2)]


def test_hom_space_between_simples(a3_q):
    s1, s2, s3 = simple_modules(a3_q)
    assert hom_space(s1, s1)
    assert not hom_space(s1, s2)
    assert modules_isomorphic(s1, s1)
    assert not modules_isomorphic(s1, s2)


def test_is_direct_summand(a3_q):
    parts = decompose_module(regular_module(a3_q))
    reg = regular_module(a3_q)
    for p in parts:
        assert is_direct_summand(p, reg)
    s = simple_modules(a3_q)
    # the simple at the source vertex is not a summand of the regular module
    dims = {tuple(dimension_vector(p)[0]) for p in parts}
    for simple in s:
        vec = tuple(dimension_vector(simple)[0])
        assert is_direct_summand(simple, reg) == (vec in dims)


def test_summand_property_split_down():
    res = delete_arrows(A3_QUIVER, ["3"], QQ)
    rep = check_summand_property(res.inclusion, res.ambient, "split_down")
    assert rep.complete
    assert len(rep.witnesses) == len(rep.source_dims)


def test_summand_property_separable_up(kronecker_q):
    merge = quiver_maximal(kronecker_q, "merge", "a", "b")
    rep = check_summand_property(merge, kronecker_q, "separable_up")
    assert rep.complete


def test_summand_property_full_trivial(m2q):
    full = full_subalgebra(m2q)
    rep = check_summand_property(full, m2q, "split_down")
    assert rep.complete
    rep2 = check_summand_property(full, m2q, "separable_up")
    assert rep2.complete


def test_restrict_induce_unit_splits_for_split_extension():
    # when B splits over A, M is a summand of Res(Ind(M))
    res = delete_arrows(D5_QUIVER, ["5"], QQ)
    a = res.inclusion
    aalg = a.as_algebra()
    for m in decompose_module(regular_module(aalg)):
        ri = restrict(induce(m, a), a)
        assert is_direct_summand(m, ri)


def test_semisimple_type_instances_are_separable_extensions():
    # the generic solver also finds an idempotent for every semisimple-type
    # instance on pointed algebras, not just the standard element
    from conftest import CHAIN3_POSET, DIAMOND_POSET
    from maxsub.presentations import incidence_algebra
    for b in (incidence_algebra(CHAIN3_POSET, QQ),
              incidence_algebra(DIAMOND_POSET, QQ)):
        fams = [f for f in enumerate_maximal_families(b)
                if f.kind == "diagonal_merge"]
        sub = instantiate_family(b, fams[0])
        assert separability_idempotent(sub, b) is not None


def test_split_type_reduction_is_trivial_extension(a3_q, kronecker_q):
    # the direct extension splits only when the removed component avoids
    # multiplying into the radical square: true for the Kronecker algebra
    # (radical square zero), false for A_3 where b*a survives inside A
    from maxsub.extensions import split_type_reduction
    rh_a3 = [f for f in enumerate_maximal_families(a3_q)
             if f.kind == "radical_hyperplane"]
    for fam in rh_a3:
        sub = instantiate_family(a3_q, fam, params=[1])
        assert split_complement(sub, a3_q) is None
        red = split_type_reduction(sub, a3_q)
        comp = split_complement(red.reduced, red.quotient)
        assert comp is not None
        assert complement_flags(comp.space, red.quotient)["trivial"]
    rh_kr = next(f for f in enumerate_maximal_families(kronecker_q)
                 if f.kind == "radical_hyperplane")
    sub = instantiate_family(kronecker_q, rh_kr, params=[1, 0])
    assert split_complement(sub, kronecker_q) is not None
    red = split_type_reduction(sub, kronecker_q)
    comp = split_complement(red.reduced, red.quotient)
    assert comp is not None and complement_flags(comp.space, red.quotient)["trivial"]
