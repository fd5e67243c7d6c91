"""Fusion operators, fusion invertors and Hopf-monad verification.

For a monad ``T`` on a category with finite biproducts the fusion operator is

    h_{A,B} = i1 . T(p1) + i2 . mu_B . T(p2) : T(A + T(B)) -> T(A) + T(B)

and ``T`` is Hopf exactly when ``h`` is invertible.  The inverse is determined
by a single family ``hc_A : T(A) -> T(A + T(0))`` (the fusion invertor) subject
to three axioms, checked here as exact equalities of morphisms:

    FI.1  T(p1) . hc_A = 1
    FI.2  mu_0 . T(p2) . hc_A = 0
    FI.3  T(1 + T(0)) . hc_A . T(p1) + T(i2) . eta_{T(B)} . mu_B . T(p2) = 1

Closed-form candidates exist for representable monads, idempotent monads and
categories with negatives; a bounded exhaustive search serves as an
independent oracle.  :func:`verify_hopf` runs all of it over a sample plan.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .additive import Morphism, Obj
from .categories import MatrixBacked, ProductCategory
from .errors import (
    HopfError,
    InvertorNotFound,
    NegationUnsupported,
    NotInvertible,
    PreconditionViolated,
    SearchSpaceTooLarge,
)
from .monads import MonadInstance, is_idempotent, is_idempotent_at, parallel_map
from .plan import SamplePlan

PROVENANCES = ("representable", "idempotent_form", "negatives_form", "extracted", "searched", "user")
DEFAULT_SEARCH_BOUND = 2
SEARCH_CAP = 2_000_000
COUNTEREXAMPLES_PER_CHECK = 3


@dataclass(frozen=True, eq=False)
class InvertorCandidate:
    """A proposed fusion invertor: ``at(A) : T(A) -> T(A + T(0))``."""

    monad: MonadInstance
    at: Callable[[Obj], Morphism]
    provenance: str = "user"

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")


def _cached(fn):
    return lru_cache(maxsize=None)(fn)


def _h(cand, A) -> Morphism:
    return cand if isinstance(cand, Morphism) else cand.at(A)


# -- the fusion operator and its inverse --------------------------------------

def fusion_operator(M: MonadInstance, A: Obj, B: Obj) -> Morphism:
    """``h_{A,B} : T(A + T(B)) -> T(A) + T(B)``."""
    C, T = M.base, M.T
    TB = T(B)
    X = C.biproduct(A, TB)
    out = C.biproduct(T(A), TB)
    return C.add(
        C.compose(out.inj1, T(X.proj1)),
        C.compose(out.inj2, M.mu(B), T(X.proj2)),
    )


def _widen(M: MonadInstance, A: Obj, B: Obj) -> Morphism:
    """``T(1_A + T(0)) : T(A + T(0)) -> T(A + T(B))`` with ``0 : 0 -> B``."""
    C = M.base
    return M.T(C.oplus(C.identity(A), M.T(C.zero(C.zero_object(), B))))


def _inverse_from(M: MonadInstance, hc: Morphism, A: Obj, B: Obj) -> Morphism:
    C, T = M.base, M.T
    TB = T(B)
    X = C.biproduct(A, TB)
    out = C.biproduct(T(A), TB)
    return C.add(
        C.compose(_widen(M, A, B), hc, out.proj1),
        C.compose(T(X.inj2), M.eta(TB), out.proj2),
    )


def build_inverse(M: MonadInstance, cand, A: Obj, B: Obj) -> Morphism:
    """Candidate inverse ``T(1 + T(0)) . hc_A . p1 + T(i2) . eta_{T(B)} . p2``.

    Nothing is assumed about the candidate; use :func:`verify_two_sided`.
    """
    return _inverse_from(M, _h(cand, A), A, B)


def _two_sided(M, h, inv):
    C = M.base
    left = C.compose(inv, h) == C.identity(h.dom)
    right = C.compose(h, inv) == C.identity(h.cod)
    return left, right


def verify_two_sided(M: MonadInstance, cand, A: Obj, B: Obj):
    """``(h^-1 . h == 1, h . h^-1 == 1)`` for the inverse built from ``cand``."""
    return _two_sided(M, fusion_operator(M, A, B), build_inverse(M, cand, A, B))


def extract_invertor(M: MonadInstance, A: Obj, inverse: Optional[Morphism]) -> Morphism:
    """``hc_A = h^-1_{A,0} . i1`` from a verified inverse of ``h_{A,0}``."""
    C = M.base
    Z = C.zero_object()
    if inverse is None:
        raise NotInvertible(f"no inverse of h_(A,0) supplied for A={A!r}")
    h = fusion_operator(M, A, Z)
    try:
        ok = all(_two_sided(M, h, inverse))
    except HopfError as exc:
        raise NotInvertible(str(exc)) from exc
    if not ok:
        raise NotInvertible(f"supplied morphism is not a two-sided inverse of h_(A,0) at A={A!r}")
    return C.compose(inverse, C.biproduct(M.T(A), M.T(Z)).inj1)


# -- the invertor axioms -------------------------------------------------------

def _fi1_sides(M, hc, A):
    C = M.base
    X0 = C.biproduct(A, M.T(C.zero_object()))
    return C.compose(M.T(X0.proj1), hc), C.identity(M.T(A))


def _fi2_sides(M, hc, A):
    C = M.base
    Z = C.zero_object()
    X0 = C.biproduct(A, M.T(Z))
    return C.compose(M.mu(Z), M.T(X0.proj2), hc), C.zero(M.T(A), M.T(Z))


def _fi3_sides(M, hc, A, B):
    C, T = M.base, M.T
    TB = T(B)
    X = C.biproduct(A, TB)
    lhs = C.add(
        C.compose(_widen(M, A, B), hc, T(X.proj1)),
        C.compose(T(X.inj2), M.eta(TB), M.mu(B), T(X.proj2)),
    )
    return lhs, C.identity(T(X.total))


def _fi30_sides(M, hc, A):
    C, T = M.base, M.T
    Z = C.zero_object()
    T0 = T(Z)
    X0 = C.biproduct(A, T0)
    lhs = C.add(
        C.compose(hc, T(X0.proj1)),
        C.compose(T(X0.inj2), M.eta(T0), M.mu(Z), T(X0.proj2)),
    )
    return lhs, C.identity(T(X0.total))


def _holds(sides) -> bool:
    try:
        lhs, rhs = sides()
    except HopfError:
        return False
    return lhs == rhs


def check_fi1(M: MonadInstance, cand, A: Obj) -> bool:
    return _holds(lambda: _fi1_sides(M, _h(cand, A), A))


def check_fi2(M: MonadInstance, cand, A: Obj) -> bool:
    return _holds(lambda: _fi2_sides(M, _h(cand, A), A))


def check_fi3(M: MonadInstance, cand, A: Obj, B: Obj) -> bool:
    return _holds(lambda: _fi3_sides(M, _h(cand, A), A, B))


def check_fi30(M: MonadInstance, cand, A: Obj) -> bool:
    return _holds(lambda: _fi30_sides(M, _h(cand, A), A))


def _hinvi2_sides(M, hc, A, B):
    C, T = M.base, M.T
    Z = C.zero_object()
    TB = T(B)
    X = C.biproduct(A, TB)
    out = C.biproduct(T(A), TB)
    out0 = C.biproduct(T(A), T(Z))
    inv = _inverse_from(M, hc, A, B)
    inv0 = _inverse_from(M, hc, A, Z)
    for pair, h, i in ((f"({A}, {B})", fusion_operator(M, A, B), inv), (f"({A}, 0)", fusion_operator(M, A, Z), inv0)):
        if not all(_two_sided(M, h, i)):
            raise NotInvertible(f"inverse at {pair} is not verified")
    left = (C.compose(inv, out.inj1), C.compose(_widen(M, A, B), inv0, out0.inj1))
    right = (C.compose(inv, out.inj2), C.compose(T(X.inj2), M.eta(TB)))
    return left, right


def check_hinvi2(M: MonadInstance, cand, A: Obj, B: Obj):
    """Both squares relating ``h^-1_{A,B}`` to ``h^-1_{A,0}`` and to ``eta``."""
    (l1, r1), (l2, r2) = _hinvi2_sides(M, _h(cand, A), A, B)
    return l1 == r1, l2 == r2


# -- closed-form candidates ---------------------------------------------------

def representable_invertor(C, H: Obj, A: Obj) -> Morphism:
    """``i1 p1 + i2 p2 + i3 (-1_H) p1 : H + A -> H + A + H + 0``."""
    if not C.has_negatives:
        raise NegationUnsupported(f"{C.name} has no negatives, so -1_H does not exist")
    src = C.biproduct_n([H, A])
    tgt = C.biproduct_n([H, A, H, C.zero_object()])
    return C.sum([
        C.compose(tgt.inj(1), src.proj(1)),
        C.compose(tgt.inj(2), src.proj(2)),
        C.compose(tgt.inj(3), C.neg(C.identity(H)), src.proj(1)),
    ])


def candidate_representable(M: MonadInstance) -> InvertorCandidate:
    if M.kind != "representable" or M.H is None:
        raise PreconditionViolated(f"{M.label} is not a representable monad")
    if not M.base.has_negatives:
        raise NegationUnsupported(f"{M.base.name} has no negatives")
    return InvertorCandidate(M, _cached(lambda A: representable_invertor(M.base, M.H, A)), "representable")


def candidate_idempotent(M: MonadInstance) -> InvertorCandidate:
    """``hc_A = T(i1)``."""
    C = M.base

    def at(A):
        return M.T(C.biproduct(A, M.T(C.zero_object())).inj1)

    return InvertorCandidate(M, _cached(at), "idempotent_form")


def candidate_negatives(M: MonadInstance) -> InvertorCandidate:
    """``hc_A = T(i1) - T(i2) . eta_{T(0)} . T(0)`` with ``0 : A -> 0``."""
    C = M.base
    if not C.has_negatives:
        raise NegationUnsupported(f"{C.name} has no negatives")
    Z = C.zero_object()

    def at(A):
        T0 = M.T(Z)
        X0 = C.biproduct(A, T0)
        return C.sub(M.T(X0.inj1), C.compose(M.T(X0.inj2), M.eta(T0), M.T(C.zero(A, Z))))

    return InvertorCandidate(M, _cached(at), "negatives_form")


def idempotent_inverse_form(M: MonadInstance, A: Obj, B: Obj) -> Morphism:
    """``T(i1) . p1 + T(i2) . eta_{T(B)} . p2``."""
    C, T = M.base, M.T
    TB = T(B)
    X = C.biproduct(A, TB)
    out = C.biproduct(T(A), TB)
    return C.add(C.compose(T(X.inj1), out.proj1), C.compose(T(X.inj2), M.eta(TB), out.proj2))


def negatives_inverse_form(M: MonadInstance, A: Obj, B: Obj) -> Morphism:
    """``T(i1) . p1 - T(i2) . eta_{T(B)} . T(0) . p1 + T(i2) . eta_{T(B)} . p2``."""
    C, T = M.base, M.T
    TB = T(B)
    X = C.biproduct(A, TB)
    out = C.biproduct(T(A), TB)
    correction = C.compose(T(X.inj2), M.eta(TB), T(C.zero(A, B)), out.proj1)
    return C.add(
        C.sub(C.compose(T(X.inj1), out.proj1), correction),
        C.compose(T(X.inj2), M.eta(TB), out.proj2),
    )


# -- single-identity shortcuts -----------------------------------------------

def _shortcut_idempotent_sides(M, A, B):
    C, T = M.base, M.T
    TB = T(B)
    lhs = C.add(
        T(C.oplus(C.identity(A), C.zero(TB, TB))),
        T(C.oplus(C.zero(A, A), C.identity(TB))),
    )
    return lhs, C.identity(T(C.biproduct(A, TB).total))


def shortcut_idempotent(M: MonadInstance, A: Obj, B: Obj) -> bool:
    """``T(1_A + 0) + T(0 + 1_{T(B)}) == 1``; only meaningful for idempotent monads."""
    C = M.base
    for X in (A, B, C.biproduct(A, M.T(B)).total):
        if not is_idempotent_at(M, X):
            raise PreconditionViolated(f"{M.label} is not idempotent at {X!r}")
    return _holds(lambda: _shortcut_idempotent_sides(M, A, B))


def _shortcut_negatives_sides(M, A, B):
    C, T = M.base, M.T
    TB = T(B)
    X = C.biproduct(A, TB)
    inject = C.compose(T(X.inj2), M.eta(TB))
    lhs = C.sub(
        C.add(
            T(C.oplus(C.identity(A), C.zero(TB, TB))),
            C.compose(inject, M.mu(B), T(X.proj2)),
        ),
        C.compose(inject, T(C.zero(X.total, B))),
    )
    return lhs, C.identity(T(X.total))


def shortcut_negatives(M: MonadInstance, A: Obj, B: Obj) -> bool:
    """The single identity characterising Hopf monads when hom-sets are groups."""
    if not M.base.has_negatives:
        raise NegationUnsupported(f"{M.base.name} has no negatives")
    return _holds(lambda: _shortcut_negatives_sides(M, A, B))


# -- bounded exhaustive search -------------------------------------------------

def _search_matrix(M, A, bound, cap):
    C, T = M.base, M.T
    Z = C.zero_object()
    TA = T(A)
    X0 = C.biproduct(A, T(Z))
    cod = T(X0.total)
    L1 = T(X0.proj1)
    L2 = C.compose(M.mu(Z), T(X0.proj2))
    one = C.identity(TA).data
    nil = C.zero(TA, T(Z)).data
    survivors = []
    for j, gen in enumerate(C.generators(TA)):
        size = C.column_space_size(gen, cod, bound)
        if size > cap:
            raise SearchSpaceTooLarge(size, cap)
        cols = C.column_space(gen, cod, bound)
        # FI.1 and FI.2 are post-compositions, so they can be checked column by column
        keep = np.all(C.batch_left(L1, cols) == one[:, j], axis=1)
        keep &= np.all(C.batch_left(L2, cols) == nil[:, j], axis=1)
        if not keep.any():
            return None
        survivors.append(cols[keep])
    total = math.prod(len(s) for s in survivors)
    if total > cap:
        raise SearchSpaceTooLarge(total, cap)
    for choice in itertools.product(*survivors):
        hc = C.from_columns(TA, cod, list(choice))
        if check_fi1(M, hc, A) and check_fi2(M, hc, A) and check_fi30(M, hc, A):
            return hc
    return None


def search_invertor(M: MonadInstance, A: Obj, bound: int = DEFAULT_SEARCH_BOUND, cap: int = SEARCH_CAP):
    """First morphism ``T(A) -> T(A + T(0))`` satisfying FI.1, FI.2 and FI.3.0.

    Entries range over ``-bound..bound`` (``0..bound`` without negatives, the
    whole carrier for finite semirings and torsion targets).  Candidates are
    visited in lexicographic order of their column-major entries.  Returns
    ``None`` when the bounded hom-set holds no solution.
    """
    C = M.base
    if isinstance(C, ProductCategory) and M.kind == "product":
        M1, M2 = M.components
        a, b = A.data
        left = search_invertor(M1, a, bound, cap)
        if left is None:
            return None
        right = search_invertor(M2, b, bound, cap)
        return None if right is None else C.pair(left, right)
    if isinstance(C, MatrixBacked):
        return _search_matrix(M, A, bound, cap)
    Z = C.zero_object()
    TA, cod = M.T(A), M.T(C.biproduct(A, M.T(Z)).total)
    size = C.hom_size(TA, cod, bound)
    if size > cap:
        raise SearchSpaceTooLarge(size, cap)
    for hc in C.enumerate_hom(TA, cod, bound):
        if check_fi1(M, hc, A) and check_fi2(M, hc, A) and check_fi30(M, hc, A):
            return hc
    return None


def candidate_search(M: MonadInstance, bound: int = DEFAULT_SEARCH_BOUND, cap: int = SEARCH_CAP) -> InvertorCandidate:
    def at(A):
        hc = search_invertor(M, A, bound, cap)
        if hc is None:
            raise InvertorNotFound(A, bound)
        return hc

    return InvertorCandidate(M, _cached(at), "searched")


# -- naturality ----------------------------------------------------------------

def _fusion_naturality_sides(M, f, g):
    C, T = M.base, M.T
    lhs = C.compose(C.oplus(T(f), T(g)), fusion_operator(M, f.dom, g.dom))
    rhs = C.compose(fusion_operator(M, f.cod, g.cod), T(C.oplus(f, T(g))))
    return lhs, rhs


def _invertor_naturality_sides(M, cand, f):
    C, T = M.base, M.T
    T0 = T(C.zero_object())
    lhs = C.compose(T(C.oplus(f, C.identity(T0))), cand.at(f.dom))
    rhs = C.compose(cand.at(f.cod), T(f))
    return lhs, rhs


# -- verification driver --------------------------------------------------------

@dataclass
class CheckTally:
    run: int = 0
    failed: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, cx: Optional[dict]) -> None:
        self.run += 1
        if not ok:
            self.failed += 1
            if len(self.counterexamples) < COUNTEREXAMPLES_PER_CHECK:
                self.counterexamples.append(cx)

    def to_dict(self) -> dict:
        return {
            "run": self.run,
            "failed": self.failed,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
        }


@dataclass
class HopfReport:
    """Outcome of :func:`verify_hopf`.

    ``verdict`` is ``verified_hopf`` (every check passed on the plan),
    ``refuted`` (a failing identity that every Hopf monad must satisfy) or
    ``inconclusive`` (no candidate could be established within the bounds).
    """

    monad: str
    category: str
    verdict: str
    reason: str
    primary: Optional[str]
    idempotent: bool
    has_negatives: bool
    candidates: dict
    checks: dict
    shortcuts: dict
    search: dict
    objects: int
    seed: int

    def counterexamples(self) -> list:
        out = []
        for tally in self.checks.values():
            out.extend(tally.counterexamples)
        for info in self.candidates.values():
            for tally in info["checks"].values():
                out.extend(tally.counterexamples)
        return out

    def to_dict(self) -> dict:
        return {
            "monad": self.monad,
            "category": self.category,
            "verdict": self.verdict,
            "reason": self.reason,
            "primary": self.primary,
            "idempotent": self.idempotent,
            "has_negatives": self.has_negatives,
            "candidates": {
                prov: {
                    "status": info["status"],
                    "detail": info["detail"],
                    "checks": {k: t.to_dict() for k, t in info["checks"].items()},
                }
                for prov, info in self.candidates.items()
            },
            "checks": {k: t.to_dict() for k, t in self.checks.items()},
            "shortcuts": self.shortcuts,
            "search": self.search,
            "objects": self.objects,
            "seed": self.seed,
        }


class _Recorder:
    """Collects ``(check, ok, counterexample)`` triples for one work item."""

    def __init__(self, M, A=None, B=None, provenance=None, invertor=None):
        self.M = M
        self.A = A
        self.B = B
        self.provenance = provenance
        self.invertor = invertor
        self.items = []

    def _cx(self, name, lhs=None, rhs=None, error=None, extra=None):
        C = self.M.base
        cx = {"check": name}
        if self.provenance:
            cx["candidate"] = self.provenance
        objs = {}
        if self.A is not None:
            objs["A"] = C.object_to_json(self.A)
        if self.B is not None:
            objs["B"] = C.object_to_json(self.B)
        cx["objects"] = objs
        if self.invertor is not None:
            cx["invertor"] = C.morphism_to_json(self.invertor)
        if extra:
            cx.update(extra)
        if error is not None:
            cx["error"] = error
        else:
            cx["lhs"] = C.morphism_to_json(lhs)
            cx["rhs"] = C.morphism_to_json(rhs)
        return cx

    def sides(self, name, fn, *args, extra=None):
        try:
            lhs, rhs = fn(*args)
        except HopfError as exc:
            self.items.append((name, False, self._cx(name, error=f"{type(exc).__name__}: {exc}", extra=extra)))
            return False
        ok = lhs == rhs
        self.items.append((name, ok, None if ok else self._cx(name, lhs, rhs, extra=extra)))
        return ok


def _evaluate_candidate(M, cand, objs, plan, jobs):
    """FI checks of one candidate over the plan; returns ``(status, detail, tallies)``."""
    C = M.base

    def per_object(i):
        A = objs[i]
        rec = _Recorder(M, A, provenance=cand.provenance)
        try:
            hc = cand.at(A)
        except InvertorNotFound as exc:
            return ("not_found", str(exc)), rec.items
        except SearchSpaceTooLarge as exc:
            return ("too_large", str(exc)), rec.items
        except HopfError as exc:
            return ("unavailable", f"{type(exc).__name__}: {exc}"), rec.items
        rec.invertor = hc
        rec.sides("FI.1", _fi1_sides, M, hc, A)
        rec.sides("FI.2", _fi2_sides, M, hc, A)
        rec.sides("FI.3.0", _fi30_sides, M, hc, A)
        rng = plan.rng(i, 101)
        for _ in range(plan.naturality_samples):
            k = int(rng.integers(len(objs)))
            f = C.random_morphism(A, objs[k], rng)
            rec.sides("naturality", _invertor_naturality_sides, M, cand, f,
                      extra={"morphisms": [C.morphism_to_json(f)]})
        return None, rec.items

    per_obj = parallel_map(per_object, range(len(objs)), jobs)
    available = [i for i, (miss, _) in enumerate(per_obj) if miss is None]

    def per_pair(ij):
        i, j = ij
        A, B = objs[i], objs[j]
        hc = cand.at(A)
        rec = _Recorder(M, A, B, provenance=cand.provenance, invertor=hc)
        rec.sides("FI.3", _fi3_sides, M, hc, A, B)
        return rec.items

    pairs = [(i, j) for i in available for j in range(len(objs))]
    per_pr = parallel_map(per_pair, pairs, jobs)

    tallies = {name: CheckTally() for name in ("FI.1", "FI.2", "FI.3", "FI.3.0", "naturality")}
    missing = []
    for miss, items in per_obj:
        if miss is not None:
            missing.append(miss)
        for name, ok, cx in items:
            tallies[name].record(ok, cx)
    for items in per_pr:
        for name, ok, cx in items:
            tallies[name].record(ok, cx)

    if any(not t.passed for t in tallies.values()):
        failed = [k for k, t in tallies.items() if not t.passed]
        return "failed", f"fails {', '.join(failed)}", tallies
    if missing:
        status, detail = missing[0]
        return status, detail, tallies
    return "passed", f"passes FI.1, FI.2, FI.3, FI.3.0 on {len(objs)} objects", tallies


def _replay_sides(M, cx):
    C = M.base
    objs = cx.get("objects", {})
    A = C.object_from_json(objs["A"]) if "A" in objs else None
    B = C.object_from_json(objs["B"]) if "B" in objs else None
    hc = C.morphism_from_json(cx["invertor"]) if "invertor" in cx else None
    mors = [C.morphism_from_json(f) for f in cx.get("morphisms", [])]
    Z = C.zero_object()
    name = cx["check"]
    if name == "FI.1":
        return _fi1_sides(M, hc, A)
    if name == "FI.2":
        return _fi2_sides(M, hc, A)
    if name == "FI.3.0":
        return _fi30_sides(M, hc, A)
    if name == "FI.3":
        return _fi3_sides(M, hc, A, B)
    if name in ("inverse_left", "inverse_right"):
        h, inv = fusion_operator(M, A, B), _inverse_from(M, hc, A, B)
        if name == "inverse_left":
            return C.compose(inv, h), C.identity(h.dom)
        return C.compose(h, inv), C.identity(h.cod)
    if name in ("hinvi2_left", "hinvi2_right"):
        left, right = _hinvi2_sides(M, hc, A, B)
        return left if name == "hinvi2_left" else right
    if name == "roundtrip_extract":
        return extract_invertor(M, A, _inverse_from(M, hc, A, Z)), hc
    if name == "roundtrip_build":
        hc2 = extract_invertor(M, A, _inverse_from(M, hc, A, Z))
        return _inverse_from(M, hc2, A, B), _inverse_from(M, hc, A, B)
    if name == "eq_idempotent_inverse":
        return idempotent_inverse_form(M, A, B), _inverse_from(M, hc, A, B)
    if name == "eq_negatives_inverse":
        return negatives_inverse_form(M, A, B), _inverse_from(M, hc, A, B)
    if name == "shortcut_idempotent":
        return _shortcut_idempotent_sides(M, A, B)
    if name == "shortcut_negatives":
        return _shortcut_negatives_sides(M, A, B)
    if name == "fusion_naturality":
        return _fusion_naturality_sides(M, *mors)
    raise KeyError(f"check {name!r} cannot be replayed from its record")


def replay_counterexample(M: MonadInstance, cx: dict) -> bool:
    """Re-evaluate a serialized counterexample; returns whether the check holds there."""
    return _holds(lambda: _replay_sides(M, cx))


STRATEGIES = ("auto", "idempotent_form", "negatives_form", "representable", "search", "user")


def _candidates_for(M, strategy, idempotent, candidate, bound, cap):
    """Ordered ``(provenance, candidate-or-error)`` pairs for a strategy."""
    out = []

    def attempt(prov, make):
        try:
            out.append((prov, make()))
        except HopfError as exc:
            out.append((prov, f"{type(exc).__name__}: {exc}"))

    if strategy == "user":
        if candidate is None:
            raise ValueError("strategy 'user' needs an explicit candidate")
        out.append((candidate.provenance, candidate))
        return out
    if strategy in ("auto", "idempotent_form"):
        if idempotent or strategy == "idempotent_form":
            attempt("idempotent_form", lambda: candidate_idempotent(M))
    if strategy in ("auto", "negatives_form"):
        if M.base.has_negatives or strategy == "negatives_form":
            attempt("negatives_form", lambda: candidate_negatives(M))
    if strategy in ("auto", "representable"):
        if M.kind == "representable" or strategy == "representable":
            attempt("representable", lambda: candidate_representable(M))
    if strategy in ("auto", "search"):
        attempt("searched", lambda: candidate_search(M, bound, cap))
    return out


def verify_hopf(
    M: MonadInstance,
    plan: SamplePlan | None = None,
    strategy: str = "auto",
    candidate: InvertorCandidate | None = None,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    search_cap: int = SEARCH_CAP,
    jobs: int = 1,
) -> HopfReport:
    """Decide, relative to ``plan``, whether ``M`` is a Hopf monad.

    The ``auto`` strategy evaluates every applicable closed-form invertor
    (idempotent form, negatives form, representable form) and the bounded
    search; the first one passing all axioms becomes the primary invertor.
    From it the inverse of the fusion operator is built and checked on every
    pair of sampled objects, together with the companion identities.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if candidate is not None and strategy == "auto":
        strategy = "user"
    plan = plan or SamplePlan()
    C = M.base
    Z = C.zero_object()
    objs = C.sample_objects(plan)
    idempotent = is_idempotent(M, plan).idempotent
    negs = C.has_negatives

    candidates = {}
    passing = []
    for prov, cand in _candidates_for(M, strategy, idempotent, candidate, search_bound, search_cap):
        if isinstance(cand, str):
            candidates[prov] = {"status": "unavailable", "detail": cand, "checks": {}}
            continue
        status, detail, tallies = _evaluate_candidate(M, cand, objs, plan, jobs)
        candidates[prov] = {"status": status, "detail": detail, "checks": tallies}
        if status == "passed":
            passing.append(cand)

    checks = {}
    shortcuts = {}
    search_info = {
        "bound": search_bound,
        "cap": search_cap,
        "status": candidates.get("searched", {}).get("status", "not_run"),
    }

    def tally(items):
        for name, ok, cx in items:
            checks.setdefault(name, CheckTally()).record(ok, cx)

    def shortcut_pass(pairs):
        def per_pair(ij):
            i, j = ij
            rec = _Recorder(M, objs[i], objs[j])
            if idempotent:
                rec.sides("shortcut_idempotent", _shortcut_idempotent_sides, M, objs[i], objs[j])
            if negs:
                rec.sides("shortcut_negatives", _shortcut_negatives_sides, M, objs[i], objs[j])
            return rec.items

        for items in parallel_map(per_pair, pairs, jobs):
            tally(items)

    pairs = [(i, j) for i in range(len(objs)) for j in range(len(objs))]
    primary = passing[0] if passing else None

    if primary is not None:
        def per_object(i):
            A = objs[i]
            hc = primary.at(A)
            rec = _Recorder(M, A, provenance=primary.provenance, invertor=hc)
            rec.sides("FI.1", _fi1_sides, M, hc, A)
            rec.sides("FI.2", _fi2_sides, M, hc, A)
            rec.sides("FI.3.0", _fi30_sides, M, hc, A)
            extracted = None
            try:
                extracted = extract_invertor(M, A, _inverse_from(M, hc, A, Z))
            except NotInvertible as exc:
                rec.items.append(("roundtrip_extract", False, rec._cx("roundtrip_extract", error=str(exc))))
            if extracted is not None:
                rec.sides("roundtrip_extract", lambda: (extracted, hc))
            others = [c for c in passing[1:]]
            for other in others:
                rec.sides("uniqueness", lambda o=other: (o.at(A), hc),
                          extra={"against": other.provenance})
            if extracted is not None:
                rec.sides("uniqueness", lambda: (extracted, hc), extra={"against": "extracted"})
            return rec.items

        def per_pair(ij):
            i, j = ij
            A, B = objs[i], objs[j]
            hc = primary.at(A)
            rec = _Recorder(M, A, B, provenance=primary.provenance, invertor=hc)
            h = fusion_operator(M, A, B)
            inv = _inverse_from(M, hc, A, B)
            rec.sides("FI.3", _fi3_sides, M, hc, A, B)
            rec.sides("inverse_left", lambda: (C.compose(inv, h), C.identity(h.dom)))
            rec.sides("inverse_right", lambda: (C.compose(h, inv), C.identity(h.cod)))
            try:
                left, right = _hinvi2_sides(M, hc, A, B)
            except HopfError as exc:
                for name in ("hinvi2_left", "hinvi2_right"):
                    rec.items.append((name, False, rec._cx(name, error=str(exc))))
            else:
                rec.sides("hinvi2_left", lambda: left)
                rec.sides("hinvi2_right", lambda: right)

            def rebuilt():
                hc2 = extract_invertor(M, A, _inverse_from(M, hc, A, Z))
                return _inverse_from(M, hc2, A, B), inv

            rec.sides("roundtrip_build", rebuilt)
            if idempotent:
                rec.sides("eq_idempotent_inverse", lambda: (idempotent_inverse_form(M, A, B), inv))
                rec.sides("shortcut_idempotent", _shortcut_idempotent_sides, M, A, B)
            if negs:
                rec.sides("eq_negatives_inverse", lambda: (negatives_inverse_form(M, A, B), inv))
                rec.sides("shortcut_negatives", _shortcut_negatives_sides, M, A, B)
            rng = plan.rng(i, j, 202)
            for _ in range(plan.naturality_samples):
                f = C.random_morphism(A, objs[int(rng.integers(len(objs)))], rng)
                g = C.random_morphism(B, objs[int(rng.integers(len(objs)))], rng)
                rec.sides("fusion_naturality", _fusion_naturality_sides, M, f, g,
                          extra={"morphisms": [C.morphism_to_json(f), C.morphism_to_json(g)]})
            return rec.items

        for items in parallel_map(per_object, range(len(objs)), jobs):
            tally(items)
        for items in parallel_map(per_pair, pairs, jobs):
            tally(items)
        candidates["extracted"] = {
            "status": "passed" if checks["roundtrip_extract"].passed else "failed",
            "detail": f"h^-1_(A,0) . i1 built from the {primary.provenance} invertor",
            "checks": {"roundtrip_extract": checks["roundtrip_extract"]},
        }
        failed = [name for name, t in checks.items() if not t.passed]
        if failed:
            verdict = "refuted"
            reason = f"{primary.provenance} invertor passes FI but {', '.join(failed)} fail"
        else:
            verdict = "verified_hopf"
            reason = (
                f"{primary.provenance} invertor satisfies FI.1-FI.3 and the fusion operator "
                f"has a verified two-sided inverse on all {len(pairs)} sampled pairs"
            )
    else:
        shortcut_pass(pairs)
        forced = None
        if negs and candidates.get("negatives_form", {}).get("status") == "failed":
            forced = "negatives_form"
        elif idempotent and candidates.get("idempotent_form", {}).get("status") == "failed":
            forced = "idempotent_form"
        if forced:
            verdict = "refuted"
            reason = (
                f"every fusion invertor would have to equal the {forced} candidate, "
                f"which {candidates[forced]['detail']}"
            )
        else:
            verdict = "inconclusive"
            tried = ", ".join(f"{p}: {info['status']}" for p, info in candidates.items())
            reason = f"no invertor established ({tried}); bounded search used entry bound {search_bound}"

    hopf = verdict == "verified_hopf"
    for name, applicable in (("idempotent", idempotent), ("negatives", negs)):
        key = f"shortcut_{name}"
        if applicable and key in checks:
            holds = checks[key].passed
            shortcuts[name] = {"applicable": True, "holds": holds, "agrees_with_verdict": holds == hopf}
        else:
            shortcuts[name] = {"applicable": False, "holds": None, "agrees_with_verdict": None}

    return HopfReport(
        monad=M.label,
        category=C.name,
        verdict=verdict,
        reason=reason,
        primary=primary.provenance if primary else None,
        idempotent=idempotent,
        has_negatives=negs,
        candidates=candidates,
        checks=checks,
        shortcuts=shortcuts,
        search=search_info,
        objects=len(objs),
        seed=plan.seed,
    )
