import numpy as np
import pytest

from hopfbiprod import (
    INT,
    MonadInstance,
    SamplePlan,
    fgab_category,
    mat_category,
    product_category,
    product_monad,
    representable_monad,
    zero_monad,
)

SMALL = SamplePlan(max_dim=2, orders=(0, 2, 3), max_generators=1, morphisms_per_hom=3, naturality_samples=1)


@pytest.fixture
def small_plan():
    return SMALL


@pytest.fixture(scope="session")
def mat_int():
    return mat_category(INT)


@pytest.fixture(scope="session")
def fgab():
    return fgab_category()


def split_idempotents_monad(C):
    """``T(A) = A + A`` from the ring Z x Z; a monad that is not Hopf."""

    def obj(A):
        return C.obj(2 * A.data)

    def mor(f):
        return C.oplus(f, f)

    def mu(A):
        a = A.data
        m = np.zeros((2 * a, 4 * a), dtype=np.int64)
        m[:a, :a] = np.eye(a, dtype=np.int64)
        m[a:, 3 * a:] = np.eye(a, dtype=np.int64)
        return C.morphism(C.obj(4 * a), C.obj(2 * a), m)

    def eta(A):
        a = A.data
        return C.morphism(A, C.obj(2 * a), np.vstack([np.eye(a, dtype=np.int64)] * 2))

    return MonadInstance(C, obj, mor, mu, eta, "split_idempotents", kind="custom")


def example_product_monad():
    """``(Z + -, 0)`` on ``Mat(INT) x Mat(INT)``."""
    C = mat_category(INT)
    P = product_category(C, C)
    return product_monad(representable_monad(C, C.obj(1)), zero_monad(C), P)
