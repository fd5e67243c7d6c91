"""Executable checks for Hopf monads on categories with finite biproducts."""

from .additive import AdditiveCategory, Biproduct, Morphism, NaryBiproduct, Obj
from .categories import (
    FgAbCategory,
    MatCategory,
    ProductCategory,
    cyclic_tensor_functor,
    embed_int_matrix,
    fgab_category,
    mat_category,
    product_category,
)
from .errors import (
    CategoryMismatch,
    DomainMismatch,
    HopfError,
    IllDefinedMorphism,
    InvertorNotFound,
    NegationUnsupported,
    NotInvertible,
    ParseError,
    PreconditionViolated,
    SearchSpaceTooLarge,
    SemanticError,
    ShapeMismatch,
)
from .fusion import (
    HopfReport,
    InvertorCandidate,
    build_inverse,
    candidate_idempotent,
    candidate_negatives,
    candidate_representable,
    candidate_search,
    check_fi1,
    check_fi2,
    check_fi3,
    check_fi30,
    check_hinvi2,
    replay_counterexample,
    extract_invertor,
    fusion_operator,
    idempotent_inverse_form,
    negatives_inverse_form,
    representable_invertor,
    search_invertor,
    shortcut_idempotent,
    shortcut_negatives,
    verify_hopf,
    verify_two_sided,
)
from .monads import (
    LawReport,
    MonadInstance,
    check_monad_laws,
    cyclic_tensor_monad,
    identity_monad,
    is_idempotent,
    preserves_zero_maps,
    product_monad,
    representable_monad,
    with_mu,
    zero_monad,
)
from .plan import DEFAULT_PLAN, SamplePlan
from .semiring import BOOL, INT, MOD, NAT, Semiring
from .snf import canonical_orders, invariant_factors, smith_normal_form

__version__ = "0.1.0"
