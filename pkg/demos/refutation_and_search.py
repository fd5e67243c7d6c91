"""
A monad that is not Hopf
========================

T(A) = A + A comes from the ring Z x Z.  Over a category with negatives any
invertor must have the closed form T(i1) - T(i2) eta T(0), so one failing
axiom refutes the whole monad.  The counterexample is stored as plain JSON and
can be replayed.
"""

import json

import numpy as np

from hopfbiprod import (
    INT,
    MonadInstance,
    SamplePlan,
    check_monad_laws,
    mat_category,
    replay_counterexample,
    search_invertor,
    verify_hopf,
)

C = mat_category(INT)


def obj(A):
    return C.obj(2 * A.data)


def mu(A):
    a = A.data
    m = np.zeros((2 * a, 4 * a), dtype=np.int64)
    m[:a, :a] = np.eye(a, dtype=np.int64)
    m[a:, 3 * a:] = np.eye(a, dtype=np.int64)
    return C.morphism(C.obj(4 * a), C.obj(2 * a), m)


def eta(A):
    return C.morphism(A, obj(A), np.vstack([np.eye(A.data, dtype=np.int64)] * 2))


M = MonadInstance(C, obj, lambda f: C.oplus(f, f), mu, eta, "Z x Z (x) -")

plan = SamplePlan(max_dim=2)
print("monad laws hold:", check_monad_laws(M, plan).passed)

# T(0) = 0 here, so FI.1, FI.2 and FI.3.0 alone are satisfied by the identity;
# the search returns it and FI.3 then rejects it at B != 0
found = search_invertor(M, C.obj(1), 1)
print("search at dim 1:", found.data.tolist())

report = verify_hopf(M, plan)
print(report.verdict, "-", report.reason)

cx = next(c for c in report.counterexamples() if c["check"].startswith("FI"))
print(json.dumps({k: cx[k] for k in ("check", "candidate", "objects")}))
print("lhs", cx["lhs"]["matrix"])
print("rhs", cx["rhs"]["matrix"])
print("replayed, holds:", replay_counterexample(M, cx))
