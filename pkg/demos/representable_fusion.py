"""
Fusion operator of a representable monad
========================================

T(A) = H + A on integer matrices, with H = Z.  We build the fusion operator,
its inverse and the invertor by hand, then watch the same construction fail
over the natural numbers where -1 does not exist.
"""

from hopfbiprod import (
    INT,
    NAT,
    build_inverse,
    candidate_representable,
    check_fi1,
    check_fi2,
    fusion_operator,
    mat_category,
    representable_monad,
    search_invertor,
    verify_two_sided,
)

C = mat_category(INT)
M = representable_monad(C, C.obj(1))
one = C.obj(1)

# coordinates of T(A + T(B)) are (g, a, h, b)
h = fusion_operator(M, one, one)
print("h =")
print(h.data)

hc = candidate_representable(M)
print("invertor at Z:")
print(hc.at(one).data)

inv = build_inverse(M, hc, one, one)
print("h^-1 =")
print(inv.data)
print("two-sided:", verify_two_sided(M, hc, one, one))

# the invertor works at every small dimension
for a in range(4):
    A = C.obj(a)
    print(a, check_fi1(M, hc, A), check_fi2(M, hc, A))

# over N the same monad has no invertor with entries up to 3
N = mat_category(NAT)
MN = representable_monad(N, N.obj(1))
for a in range(3):
    print("NAT, dim", a, "->", search_invertor(MN, N.obj(a), 3))
