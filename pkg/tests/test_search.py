import pytest

from hopfbiprod import (
    BOOL,
    INT,
    MOD,
    NAT,
    SearchSpaceTooLarge,
    candidate_idempotent,
    candidate_negatives,
    cyclic_tensor_monad,
    fgab_category,
    mat_category,
    representable_invertor,
    representable_monad,
    search_invertor,
)
from hopfbiprod.fusion import check_fi1, check_fi2, check_fi30

from conftest import example_product_monad, split_idempotents_monad


def _brute(M, A, bound):
    """Plain enumeration of the whole hom-set, for cross-checking the column search."""
    C = M.base
    TA = M.T(A)
    cod = M.T(C.biproduct(A, M.T(C.zero_object())).total)
    for h in C.enumerate_hom(TA, cod, bound):
        if check_fi1(M, h, A) and check_fi2(M, h, A) and check_fi30(M, h, A):
            return h
    return None


def test_search_finds_representable_invertor():
    C = mat_category(INT)
    M = representable_monad(C, C.obj(1))
    h = search_invertor(M, C.obj(1), 1)
    assert h.data.tolist() == [[1, 0], [0, 1], [-1, 0]]
    assert h == representable_invertor(C, C.obj(1), C.obj(1))


@pytest.mark.parametrize("a", [0, 1, 2])
def test_search_over_nat_finds_nothing(a):
    C = mat_category(NAT)
    M = representable_monad(C, C.obj(1))
    assert search_invertor(M, C.obj(a), 3) is None


def test_search_cyclic():
    G = fgab_category()
    M = cyclic_tensor_monad(2, G)
    assert search_invertor(M, G.obj((0,)), 1).data.tolist() == [[1]]
    A = G.obj((0, 4))
    assert search_invertor(M, A, 1) == candidate_idempotent(M).at(A)


@pytest.mark.parametrize(
    "M, objs",
    [
        (representable_monad(mat_category(INT), mat_category(INT).obj(1)), [0, 1]),
        (representable_monad(mat_category(NAT), mat_category(NAT).obj(1)), [0, 1]),
        (representable_monad(mat_category(BOOL), mat_category(BOOL).obj(1)), [0, 1]),
        (representable_monad(mat_category(MOD(3)), mat_category(MOD(3)).obj(1)), [0, 1]),
        (split_idempotents_monad(mat_category(INT)), [0, 1]),
    ],
)
def test_column_search_agrees_with_plain_enumeration(M, objs):
    C = M.base
    for a in objs:
        assert search_invertor(M, C.obj(a), 1) == _brute(M, C.obj(a), 1)


def test_search_on_fgab_agrees_with_plain_enumeration():
    G = fgab_category()
    M = representable_monad(G, G.obj((2,)))
    for A in (G.obj(()), G.obj((2,)), G.obj((3,)), G.obj((4,))):
        found = search_invertor(M, A, 1)
        assert found == _brute(M, A, 1)
        assert found == candidate_negatives(M).at(A)


def test_search_mod_representable_matches_closed_form():
    C = mat_category(MOD(3))
    M = representable_monad(C, C.obj(1))
    assert search_invertor(M, C.obj(1), 0) == representable_invertor(C, C.obj(1), C.obj(1))


def test_product_search_is_componentwise():
    M = example_product_monad()
    P = M.base
    A = P.obj((P.left.obj(1), P.right.obj(1)))
    h = search_invertor(M, A, 1)
    assert h.data[0].data.tolist() == [[1, 0], [0, 1], [-1, 0]]
    assert h.data[1].data.shape == (0, 0)


def test_search_cap():
    C = mat_category(INT)
    M = representable_monad(C, C.obj(2))
    with pytest.raises(SearchSpaceTooLarge):
        search_invertor(M, C.obj(3), 5, cap=1000)
