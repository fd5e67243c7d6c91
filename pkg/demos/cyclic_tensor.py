"""
Tensoring with Z/2
==================

Z/2 (x) - is an idempotent monad on finitely generated abelian groups, so its
invertor is just T(i1) and a single identity decides Hopf-ness.
"""

from hopfbiprod import (
    SamplePlan,
    candidate_idempotent,
    cyclic_tensor_monad,
    fgab_category,
    is_idempotent,
    preserves_zero_maps,
    shortcut_idempotent,
    verify_hopf,
)

G = fgab_category()
M = cyclic_tensor_monad(2, G)

# Z + Z/3 + Z/4 becomes Z/2 + Z/2: the Z/3 summand dies
A = G.obj((0, 3, 4))
print(A.data, "->", M.T(A).data)
print("eta =")
print(M.eta(A).data)

plan = SamplePlan(orders=(0, 2, 3, 4, 6), max_generators=2)
print("idempotent:", is_idempotent(M, plan).idempotent)
print("T(0) = 0:", preserves_zero_maps(M, plan)[0])

Z = G.obj((0,))
print("T(i1) at Z:", candidate_idempotent(M).at(Z).data.tolist())
print("shortcut at (Z, Z):", shortcut_idempotent(M, Z, Z))

report = verify_hopf(M, plan)
print(report.verdict, "-", report.reason)
for name, t in report.checks.items():
    print(f"  {name:<24}{t.run:>5} run {t.failed:>3} failed")
