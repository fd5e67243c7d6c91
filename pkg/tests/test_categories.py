import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfbiprod import (
    INT,
    MOD,
    IllDefinedMorphism,
    SamplePlan,
    cyclic_tensor_functor,
    embed_int_matrix,
    fgab_category,
    mat_category,
    product_category,
)


def test_mat_sample_objects():
    C = mat_category(INT)
    assert [A.data for A in C.sample_objects(SamplePlan(max_dim=3))] == [0, 1, 2, 3]


def test_fgab_sample_objects():
    G = fgab_category()
    objs = G.sample_objects(SamplePlan(orders=(0, 2, 3, 4, 6), max_generators=2))
    assert len(objs) == 1 + 5 + 25
    assert objs[0] == G.zero_object()


def test_fgab_well_definedness():
    G = fgab_category()
    Z2, Z4, Z = G.obj((2,)), G.obj((4,)), G.obj((0,))
    assert G.is_well_defined(Z2, Z4, [[2]])
    assert not G.is_well_defined(Z2, Z4, [[1]])
    assert not G.is_well_defined(Z2, Z, [[1]])
    assert G.is_well_defined(Z, Z2, [[1]])
    with pytest.raises(IllDefinedMorphism):
        G.morphism(Z2, Z4, [[1]])
    assert G.morphism(Z, Z4, [[7]]).data.tolist() == [[3]]


def test_fgab_torsion_arithmetic():
    G = fgab_category()
    Z6 = G.obj((6,))
    f = G.morphism(Z6, Z6, [[5]])
    assert G.compose(f, f) == G.identity(Z6)
    assert G.add(f, G.identity(Z6)) == G.zero(Z6, Z6)
    assert G.neg(G.identity(Z6)) == f


def test_embed_int_matrix():
    C, G = mat_category(INT), fgab_category()
    f = C.morphism(C.obj(2), C.obj(1), [[1, -2]])
    g = embed_int_matrix(G, f)
    assert g.dom == G.obj((0, 0)) and g.data.tolist() == [[1, -2]]


def test_product_category_componentwise():
    C = product_category(mat_category(INT), mat_category(MOD(3)))
    A = C.obj((C.left.obj(1), C.right.obj(2)))
    assert C.identity(A).data[0] == C.left.identity(C.left.obj(1))
    bp = C.biproduct(A, A)
    assert bp.total.data[1] == C.right.obj(4)
    assert C.name == "(Mat(INT) x Mat(MOD(3)))"


def test_cyclic_tensor_functor_on_objects():
    on_obj, on_mor, kept = cyclic_tensor_functor(2)
    G = fgab_category()
    assert on_obj(G.obj((0, 3, 4, 6))).data == (2, 2, 2)
    assert kept(G.obj((0, 3, 4))) == [0, 2]
    on6, _, _ = cyclic_tensor_functor(6)
    assert on6(G.obj((0, 4, 9, 5))).data == (6, 2, 3)


@given(st.integers(2, 12), st.lists(st.sampled_from([0, 2, 3, 4, 5, 6, 8, 9]), max_size=3))
def test_cyclic_tensor_orders_are_gcds(n, orders):
    on_obj, _, _ = cyclic_tensor_functor(n)
    G = fgab_category()
    expected = tuple(d for d in (n if o == 0 else math.gcd(n, o) for o in orders) if d != 1)
    assert on_obj(G.obj(tuple(orders))).data == expected


def test_cyclic_tensor_functor_laws():
    G = fgab_category()
    on_obj, on_mor, _ = cyclic_tensor_functor(2, G)
    rng = np.random.default_rng(0)
    objs = G.sample_objects(SamplePlan(orders=(0, 2, 3, 4), max_generators=2))
    for A in objs:
        assert on_mor(G.identity(A)) == G.identity(on_obj(A))
        for B in objs[::3]:
            f = G.random_morphism(A, B, rng)
            g = G.random_morphism(B, objs[-1], rng)
            assert on_mor(G.compose(g, f)) == G.compose(on_mor(g), on_mor(f))
            assert on_mor(G.add(f, f)) == G.add(on_mor(f), on_mor(f))


def test_hom_enumeration_respects_bound():
    C = mat_category(INT)
    homs = list(C.enumerate_hom(C.obj(1), C.obj(1), 1))
    assert [h.data.tolist() for h in homs] == [[[-1]], [[0]], [[1]]]
    assert C.hom_size(C.obj(2), C.obj(2), 1) == 81
    G = fgab_category()
    homs = list(G.enumerate_hom(G.obj((2,)), G.obj((4,)), 5))
    assert [h.data.tolist() for h in homs] == [[[0]], [[2]]]
