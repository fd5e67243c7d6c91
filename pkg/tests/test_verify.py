import json

import pytest

from hopfbiprod import (
    INT,
    NAT,
    MOD,
    InvertorCandidate,
    SamplePlan,
    cyclic_tensor_monad,
    fgab_category,
    identity_monad,
    mat_category,
    representable_monad,
    replay_counterexample,
    verify_hopf,
    zero_monad,
)

from conftest import SMALL, example_product_monad, split_idempotents_monad

C = mat_category(INT)


def test_representable_int_verified():
    r = verify_hopf(representable_monad(C, C.obj(1)), SMALL)
    assert r.verdict == "verified_hopf"
    assert r.primary == "negatives_form"
    for prov in ("negatives_form", "representable", "searched", "extracted"):
        assert r.candidates[prov]["status"] == "passed"
    assert all(t.passed for t in r.checks.values())
    assert r.shortcuts["negatives"] == {"applicable": True, "holds": True, "agrees_with_verdict": True}


def test_representable_nat_inconclusive_discloses_bound():
    N = mat_category(NAT)
    r = verify_hopf(representable_monad(N, N.obj(1)), SMALL, search_bound=3)
    assert r.verdict == "inconclusive"
    assert r.search["bound"] == 3 and "bound 3" in r.reason
    assert r.candidates["representable"]["status"] == "unavailable"
    assert r.candidates["searched"]["status"] == "not_found"
    assert not r.shortcuts["idempotent"]["applicable"] and not r.shortcuts["negatives"]["applicable"]


def test_cyclic_tensor_verified_with_coinciding_candidates():
    r = verify_hopf(cyclic_tensor_monad(2, fgab_category()), SMALL)
    assert r.verdict == "verified_hopf" and r.primary == "idempotent_form"
    assert r.checks["uniqueness"].run > 0 and r.checks["uniqueness"].passed
    assert r.shortcuts["idempotent"]["holds"]


@pytest.mark.parametrize("M", [identity_monad(C), zero_monad(mat_category(NAT)), example_product_monad()])
def test_other_shipped_instances_verified(M):
    assert verify_hopf(M, SMALL).verdict == "verified_hopf"


def test_non_hopf_monad_is_refuted_with_replayable_counterexample():
    M = split_idempotents_monad(C)
    r = verify_hopf(M, SMALL)
    assert r.verdict == "refuted"
    assert r.candidates["negatives_form"]["status"] == "failed"
    assert r.shortcuts["negatives"]["holds"] is False
    assert r.shortcuts["negatives"]["agrees_with_verdict"] is True
    cxs = [cx for cx in r.counterexamples() if cx["check"].startswith("FI")]
    assert cxs
    for cx in cxs:
        assert replay_counterexample(M, cx) is False


def test_strategies():
    M = representable_monad(C, C.obj(1))
    assert list(verify_hopf(M, SMALL, strategy="representable").candidates) == ["representable", "extracted"]
    r = verify_hopf(M, SMALL, strategy="idempotent_form")
    assert r.candidates["idempotent_form"]["status"] == "failed"
    # the idempotent form is not forced for a non-idempotent monad
    assert r.verdict == "inconclusive"
    assert verify_hopf(M, SMALL, strategy="search", search_bound=1).primary == "searched"
    with pytest.raises(ValueError):
        verify_hopf(M, SMALL, strategy="guess")


def test_user_candidate():
    M = representable_monad(C, C.obj(1))
    Z = C.zero_object()

    def wrong(A):
        return C.zero(M.T(A), M.T(C.biproduct(A, M.T(Z)).total))

    r = verify_hopf(M, SMALL, candidate=InvertorCandidate(M, wrong, "user"))
    assert r.candidates["user"]["status"] == "failed"
    assert r.verdict == "inconclusive"


def test_search_too_large_is_reported():
    M = representable_monad(C, C.obj(2))
    r = verify_hopf(M, SMALL, search_cap=10)
    assert r.candidates["searched"]["status"] == "too_large"
    assert r.verdict == "verified_hopf"


def test_report_serializes_and_is_deterministic():
    M = representable_monad(mat_category(MOD(4)), mat_category(MOD(4)).obj(1))
    a = json.dumps(verify_hopf(M, SMALL, jobs=1).to_dict(), sort_keys=True)
    b = json.dumps(verify_hopf(M, SMALL, jobs=4).to_dict(), sort_keys=True)
    assert a == b
    assert json.loads(a)["verdict"] == "verified_hopf"


def test_seed_changes_samples_not_verdict():
    M = representable_monad(C, C.obj(1))
    for seed in (0, 1, 7):
        assert verify_hopf(M, SamplePlan(max_dim=2, seed=seed, morphisms_per_hom=2)).verdict == "verified_hopf"
