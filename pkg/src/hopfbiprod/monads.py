"""Monads on additive categories, their standard constructions and law checks."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .additive import AdditiveCategory, Morphism, Obj
from .categories import FgAbCategory, ProductCategory, cyclic_tensor_functor, product_category
from .errors import HopfError
from .plan import SamplePlan


@dataclass(frozen=True, eq=False)
class MonadInstance:
    """A monad ``(T, mu, eta)`` on ``base``.

    ``kind`` records which construction produced the monad (``representable``,
    ``cyclic_tensor``, ...); ``H`` is the representing object of a
    representable monad and ``components`` the factors of a product monad.
    """

    base: AdditiveCategory
    obj: Callable[[Obj], Obj]
    mor: Callable[[Morphism], Morphism]
    mu: Callable[[Obj], Morphism]
    eta: Callable[[Obj], Morphism]
    label: str
    kind: str = "custom"
    H: Optional[Obj] = None
    components: tuple = ()
    params: dict = field(default_factory=dict)

    def T(self, x):
        """Apply the functor to an object or a morphism."""
        return self.obj(x) if isinstance(x, Obj) else self.mor(x)

    def __repr__(self):
        return f"<MonadInstance {self.label} on {self.base.name}>"


def identity_monad(C: AdditiveCategory) -> MonadInstance:
    return MonadInstance(
        base=C,
        obj=lambda A: A,
        mor=lambda f: f,
        mu=C.identity,
        eta=C.identity,
        label="identity",
        kind="identity",
    )


def zero_monad(C: AdditiveCategory) -> MonadInstance:
    """``T(A) = 0`` with every structure map zero."""
    Z = C.zero_object()
    return MonadInstance(
        base=C,
        obj=lambda A: Z,
        mor=lambda f: C.identity(Z),
        mu=lambda A: C.identity(Z),
        eta=lambda A: C.zero(A, Z),
        label="zero",
        kind="zero",
    )


DEFAULT_MU_TERMS = ((1, 1), (1, 2), (2, 3))


def representable_monad(C: AdditiveCategory, H: Obj, mu_terms=DEFAULT_MU_TERMS) -> MonadInstance:
    """``T(A) = H + A`` with ``mu = i1 p1 + i1 p2 + i2 p3`` and ``eta = i2``.

    ``mu_terms`` lists the ``(injection, projection)`` index pairs summed to
    form ``mu_A : H + (H + A) -> H + A``; overriding it produces deliberately
    broken multiplications for mutation tests.
    """
    C._own(H)
    mu_terms = tuple((int(i), int(j)) for i, j in mu_terms)

    def obj(A):
        return C.biproduct(H, A).total

    def mor(f):
        return C.oplus(C.identity(H), f)

    def mu(A):
        two = C.biproduct_n([H, A])
        three = C.biproduct_n([H, H, A])
        return C.sum(
            (C.compose(two.inj(i), three.proj(j)) for i, j in mu_terms),
            dom=three.total,
            cod=two.total,
        )

    def eta(A):
        return C.biproduct(H, A).inj2

    label = f"representable(H={C.object_to_json(H)})"
    if mu_terms != DEFAULT_MU_TERMS:
        label += f" mu_terms={[list(t) for t in mu_terms]}"
    return MonadInstance(C, obj, mor, mu, eta, label, kind="representable", H=H,
                         params={"mu_terms": mu_terms})


def cyclic_tensor_monad(n: int, fgab: FgAbCategory | None = None) -> MonadInstance:
    """``Z/n (x) -`` on finitely generated abelian groups.

    ``mu`` is the identification ``Z/n (x) Z/n (x) G = Z/n (x) G`` and ``eta``
    sends each surviving generator ``g`` to ``1 (x) g``.
    """
    fgab = fgab or FgAbCategory()
    on_obj, on_mor, kept = cyclic_tensor_functor(n, fgab)

    def mu(A):
        TA = on_obj(A)
        TTA = on_obj(TA)
        k = len(TA.data)
        return fgab.morphism(TTA, TA, np.eye(k, dtype=np.int64))

    def eta(A):
        TA = on_obj(A)
        m = np.zeros((len(TA.data), len(A.data)), dtype=np.int64)
        for r, j in enumerate(kept(A)):
            m[r, j] = 1
        return fgab.morphism(A, TA, m)

    return MonadInstance(fgab, on_obj, on_mor, mu, eta, f"cyclic_tensor(n={n})",
                         kind="cyclic_tensor", params={"n": int(n)})


def product_monad(M1: MonadInstance, M2: MonadInstance, base: ProductCategory | None = None) -> MonadInstance:
    """The componentwise monad ``(T1 x T2)`` on ``M1.base x M2.base``."""
    P = base or product_category(M1.base, M2.base)
    if P.left.name != M1.base.name or P.right.name != M2.base.name:
        raise HopfError("product category factors do not match the component monads")

    def obj(A):
        a, b = A.data
        return P.obj((M1.obj(a), M2.obj(b)))

    def mor(f):
        return P.pair(M1.mor(f.data[0]), M2.mor(f.data[1]))

    def mu(A):
        a, b = A.data
        return P.pair(M1.mu(a), M2.mu(b))

    def eta(A):
        a, b = A.data
        return P.pair(M1.eta(a), M2.eta(b))

    return MonadInstance(P, obj, mor, mu, eta, f"product({M1.label}, {M2.label})",
                         kind="product", components=(M1, M2))


def with_mu(M: MonadInstance, mu: Callable[[Obj], Morphism], label: str | None = None) -> MonadInstance:
    """Copy of ``M`` with its multiplication replaced (for mutation tests)."""
    return MonadInstance(M.base, M.obj, M.mor, mu, M.eta, label or f"{M.label}[mu replaced]",
                         kind="custom", components=())


# -- law checking ------------------------------------------------------------

def parallel_map(fn, items, jobs: int = 1) -> list:
    """``list(map(fn, items))``, optionally on a thread pool; order is preserved."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _functor_identity(M, A):
    C = M.base
    return M.T(C.identity(A)), C.identity(M.T(A))


def _functor_composition(M, f, g):
    C = M.base
    return M.T(C.compose(g, f)), C.compose(M.T(g), M.T(f))


def _mu_naturality(M, f):
    C = M.base
    return C.compose(M.T(f), M.mu(f.dom)), C.compose(M.mu(f.cod), M.T(M.T(f)))


def _eta_naturality(M, f):
    C = M.base
    return C.compose(M.T(f), M.eta(f.dom)), C.compose(M.eta(f.cod), f)


def _associativity(M, A):
    C = M.base
    return C.compose(M.mu(A), M.T(M.mu(A))), C.compose(M.mu(A), M.mu(M.T(A)))


def _left_unit(M, A):
    C = M.base
    return C.compose(M.mu(A), M.eta(M.T(A))), C.identity(M.T(A))


def _right_unit(M, A):
    C = M.base
    return C.compose(M.mu(A), M.T(M.eta(A))), C.identity(M.T(A))


def _structure_types(M, A):
    TA, TTA = M.T(A), M.T(M.T(A))
    mu, eta = M.mu(A), M.eta(A)
    ok = mu.dom == TTA and mu.cod == TA and eta.dom == A and eta.cod == TA
    return ok, True


# law name -> (evaluator, argument kinds); every evaluator returns (lhs, rhs)
OBJECT_LAWS = {
    "structure_types": _structure_types,
    "functor_identity": _functor_identity,
    "associativity": _associativity,
    "left_unit": _left_unit,
    "right_unit": _right_unit,
}
MORPHISM_LAWS = {
    "mu_naturality": _mu_naturality,
    "eta_naturality": _eta_naturality,
}
LAW_ORDER = (
    "structure_types",
    "functor_identity",
    "functor_composition",
    "mu_naturality",
    "eta_naturality",
    "associativity",
    "left_unit",
    "right_unit",
)


@dataclass
class LawResult:
    name: str
    checked: int = 0
    failed: int = 0
    counterexample: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "failed": self.failed,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


@dataclass
class LawReport:
    monad: str
    seed: int
    objects: int
    laws: dict

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.laws.values())

    def failing(self) -> list:
        return [name for name, r in self.laws.items() if not r.passed]

    def to_dict(self) -> dict:
        return {
            "monad": self.monad,
            "seed": self.seed,
            "objects": self.objects,
            "passed": self.passed,
            "laws": {name: r.to_dict() for name, r in self.laws.items()},
        }


def _evaluate(fn, M, *args):
    try:
        lhs, rhs = fn(M, *args)
    except HopfError as exc:
        return False, None, None, str(exc)
    return lhs == rhs, lhs, rhs, None


def _counterexample(M, law, objects=(), morphisms=None, lhs=None, rhs=None, error=None) -> dict:
    C = M.base

    def enc(x):
        return C.morphism_to_json(x) if isinstance(x, Morphism) else x

    cx = {
        "law": law,
        "objects": [C.object_to_json(A) for A in objects],
        "morphisms": [C.morphism_to_json(f) for f in (morphisms or [])],
    }
    if error is not None:
        cx["error"] = error
    else:
        cx["lhs"] = enc(lhs)
        cx["rhs"] = enc(rhs)
    return cx


def replay_law(M: MonadInstance, cx: dict) -> bool:
    """Re-evaluate a recorded counterexample; returns whether the law holds there."""
    C = M.base
    objects = [C.object_from_json(o) for o in cx["objects"]]
    morphisms = [C.morphism_from_json(f) for f in cx["morphisms"]]
    law = cx["law"]
    if law in OBJECT_LAWS:
        ok, *_ = _evaluate(OBJECT_LAWS[law], M, objects[0])
    elif law in MORPHISM_LAWS:
        ok, *_ = _evaluate(MORPHISM_LAWS[law], M, morphisms[0])
    elif law == "functor_composition":
        ok, *_ = _evaluate(_functor_composition, M, morphisms[0], morphisms[1])
    else:
        raise KeyError(law)
    return ok


def check_monad_laws(M: MonadInstance, plan: SamplePlan | None = None, jobs: int = 1) -> LawReport:
    """Evaluate functoriality, naturality, associativity and unit laws on ``plan``.

    The first failure of each law (in object enumeration order) is kept as a
    serialized counterexample.
    """
    plan = plan or SamplePlan()
    C = M.base
    objs = C.sample_objects(plan)
    results = {name: LawResult(name) for name in LAW_ORDER}

    def per_object(i):
        A = objs[i]
        out = []
        for name, fn in OBJECT_LAWS.items():
            ok, lhs, rhs, err = _evaluate(fn, M, A)
            out.append((name, ok, None if ok else _counterexample(M, name, [A], None, lhs, rhs, err)))
            if name == "structure_types" and not ok:
                break
        return out

    def per_hom(ij):
        i, j = ij
        rng = plan.rng(i, j, 0)
        out = []
        for _ in range(plan.morphisms_per_hom):
            f = C.random_morphism(objs[i], objs[j], rng)
            for name, fn in MORPHISM_LAWS.items():
                ok, lhs, rhs, err = _evaluate(fn, M, f)
                out.append((name, ok, None if ok else _counterexample(M, name, [], [f], lhs, rhs, err)))
            k = int(rng.integers(len(objs)))
            g = C.random_morphism(objs[j], objs[k], rng)
            ok, lhs, rhs, err = _evaluate(_functor_composition, M, f, g)
            out.append(("functor_composition", ok,
                        None if ok else _counterexample(M, "functor_composition", [], [f, g], lhs, rhs, err)))
        return out

    batches = parallel_map(per_object, range(len(objs)), jobs)
    typed = all(ok for batch in batches for name, ok, _ in batch if name == "structure_types")
    if typed:
        pairs = [(i, j) for i in range(len(objs)) for j in range(len(objs))]
        batches += parallel_map(per_hom, pairs, jobs)
    for batch in batches:
        for name, ok, cx in batch:
            r = results[name]
            r.checked += 1
            if not ok:
                r.failed += 1
                if r.counterexample is None:
                    r.counterexample = cx
    return LawReport(M.label, plan.seed, len(objs), results)


@dataclass(frozen=True)
class IdempotenceResult:
    idempotent: bool
    witness: Optional[Obj] = None

    def __bool__(self):
        return self.idempotent


def is_idempotent_at(M: MonadInstance, A: Obj) -> bool:
    """``eta_{T(A)} . mu_A == 1_{TT(A)}``."""
    C = M.base
    try:
        return C.compose(M.eta(M.T(A)), M.mu(A)) == C.identity(M.T(M.T(A)))
    except HopfError:
        return False


def is_idempotent(M: MonadInstance, plan: SamplePlan | None = None) -> IdempotenceResult:
    plan = plan or SamplePlan()
    for A in M.base.sample_objects(plan):
        if not is_idempotent_at(M, A):
            return IdempotenceResult(False, A)
    return IdempotenceResult(True)


def preserves_zero_maps(M: MonadInstance, plan: SamplePlan | None = None):
    """Whether ``T(0) = 0`` for the zero map between every pair of sampled objects.

    Returns ``(flag, witness)`` where ``witness`` is an offending ``(A, B)``.
    """
    plan = plan or SamplePlan()
    C = M.base
    objs = C.sample_objects(plan)
    for A in objs:
        for B in objs:
            if not C.is_zero(M.T(C.zero(A, B))):
                return False, (A, B)
    return True, None
