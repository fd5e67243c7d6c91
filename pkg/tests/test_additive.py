import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbiprod import (
    BOOL,
    INT,
    MOD,
    NAT,
    CategoryMismatch,
    DomainMismatch,
    NegationUnsupported,
    SamplePlan,
    ShapeMismatch,
    fgab_category,
    mat_category,
    product_category,
)

PLAN = SamplePlan(max_dim=3, orders=(0, 2, 4, 6), max_generators=2)
CATEGORIES = [
    mat_category(INT),
    mat_category(NAT),
    mat_category(BOOL),
    mat_category(MOD(6)),
    fgab_category(),
    product_category(mat_category(INT), fgab_category()),
]
IDS = [C.name for C in CATEGORIES]


def _pick(C, data):
    objs = C.sample_objects(SamplePlan(max_dim=2, orders=(0, 2, 4), max_generators=2))
    return [objs[data.draw(st.integers(0, len(objs) - 1))] for _ in range(4)]


def _mor(C, A, B, data):
    rng = np.random.default_rng(data.draw(st.integers(0, 2**32 - 1)))
    return C.random_morphism(A, B, rng)


@pytest.mark.parametrize("C", CATEGORIES, ids=IDS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_category_and_enrichment_laws(C, data):
    A, B, D, E = _pick(C, data)
    f, f2 = _mor(C, A, B, data), _mor(C, A, B, data)
    g, g2 = _mor(C, B, D, data), _mor(C, B, D, data)
    k = _mor(C, D, E, data)
    assert C.compose(k, C.compose(g, f)) == C.compose(C.compose(k, g), f)
    assert C.compose(f, C.identity(A)) == f == C.compose(C.identity(B), f)
    assert C.add(f, f2) == C.add(f2, f)
    assert C.add(f, C.zero(A, B)) == f
    assert C.compose(g, C.add(f, f2)) == C.add(C.compose(g, f), C.compose(g, f2))
    assert C.compose(C.add(g, g2), f) == C.add(C.compose(g, f), C.compose(g2, f))
    assert C.is_zero(C.compose(g, C.zero(A, B)))
    if C.has_negatives:
        assert C.is_zero(C.add(f, C.neg(f)))
        assert C.sub(C.add(f, f2), f2) == f


@pytest.mark.parametrize("C", CATEGORIES, ids=IDS)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_biproduct_equations(C, data):
    A, B, D, E = _pick(C, data)
    bp = C.biproduct(A, B)
    assert C.compose(bp.proj1, bp.inj1) == C.identity(A)
    assert C.compose(bp.proj2, bp.inj2) == C.identity(B)
    assert C.is_zero(C.compose(bp.proj1, bp.inj2))
    assert C.is_zero(C.compose(bp.proj2, bp.inj1))
    assert C.add(C.compose(bp.inj1, bp.proj1), C.compose(bp.inj2, bp.proj2)) == C.identity(bp.total)
    f, g = _mor(C, A, D, data), _mor(C, B, E, data)
    out = C.biproduct(D, E)
    fg = C.oplus(f, g)
    assert C.compose(out.proj1, fg, bp.inj1) == f
    assert C.compose(out.proj2, fg, bp.inj2) == g


@pytest.mark.parametrize("C", CATEGORIES, ids=IDS)
def test_zero_object(C):
    Z = C.zero_object()
    A = C.sample_objects(PLAN)[-1]
    assert C.is_zero(C.identity(Z))
    assert C.zero(A, Z) == C.compose(C.zero(Z, Z), C.zero(A, Z))
    bp = C.biproduct(A, Z)
    assert C.compose(bp.proj1, bp.inj1) == C.identity(A)


def test_nary_biproduct_layout():
    C = mat_category(INT)
    nb = C.biproduct_n([C.obj(1), C.obj(2), C.obj(1)])
    assert nb.total == C.obj(4)
    assert nb.inj(2).data.tolist() == [[0, 0], [1, 0], [0, 1], [0, 0]]
    assert C.sum([C.compose(nb.inj(k), nb.proj(k)) for k in (1, 2, 3)]) == C.identity(nb.total)


def test_errors():
    C = mat_category(INT)
    N = mat_category(NAT)
    f = C.identity(C.obj(2))
    with pytest.raises(DomainMismatch):
        C.compose(f, C.identity(C.obj(1)))
    with pytest.raises(ShapeMismatch):
        C.add(f, C.zero(C.obj(2), C.obj(1)))
    with pytest.raises(CategoryMismatch):
        C.identity(N.obj(1))
    with pytest.raises(NegationUnsupported):
        N.neg(N.identity(N.obj(1)))
    with pytest.raises(ShapeMismatch):
        C.morphism(C.obj(2), C.obj(1), [[1, 2, 3]])


def test_morphisms_are_immutable_values():
    C = mat_category(INT)
    f = C.morphism(C.obj(1), C.obj(2), [[1], [2]])
    with pytest.raises(ValueError):
        f.data[0, 0] = 5
    assert f == C.morphism(C.obj(1), C.obj(2), np.array([[1], [2]]))
    assert f != C.morphism(C.obj(1), C.obj(2), [[1], [3]])
    assert len({f, C.morphism(C.obj(1), C.obj(2), [[1], [2]])}) == 1


@pytest.mark.parametrize("C", CATEGORIES, ids=IDS)
def test_json_round_trip(C):
    rng = np.random.default_rng(3)
    objs = C.sample_objects(SamplePlan(max_dim=2, orders=(0, 2), max_generators=2))
    for A in objs:
        assert C.object_from_json(C.object_to_json(A)) == A
        for B in objs[:4]:
            f = C.random_morphism(A, B, rng)
            assert C.morphism_from_json(C.morphism_to_json(f)) == f
