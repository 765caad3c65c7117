# coding: utf-8

# # Signatures for GL(n, R)
#
# A finite-dimensional irreducible representation of GL(n, R) is labelled by a
# decreasing integer vector.  It carries an invariant Hermitian form exactly
# when the vector is minus its own reverse.  This script computes a few
# signatures, compares the general formula with the closed form, and looks at
# how slowly the signature grows compared with the dimension.

from hermsig import gl_closed_form, gl_signature
from hermsig.signature import ratio_identity, self_dual_weights, sig_degree_probe

# The adjoint representation first.  Its weight is (1, 0, ..., 0, -1).

for n in range(2, 8):
    lam = (1,) + (0,) * (n - 2) + (-1,)
    res = gl_signature(n, lam)
    print(f"GL({n}) adjoint: dim {res.dim:3d}  p={res.p:3d} q={res.q:3d}  Sig={res.sig}")


# The full result carries the individual terms of the sum, one per coset
# representative, with its sign and the dimension of a K-type.

res = gl_signature(4, (2, 1, -1, -2))
print()
print("GL(4), lambda = (2, 1, -1, -2)")
print("  dim", res.dim, " {p, q} =", res.pair, " r =", res.r)
for c in res.contributions:
    w = "".join(f"s{i}" for i in c.word) or "1"
    print(f"  w = {w:<4} eps = {c.epsilon:+d}  dim E_w = {c.dim_E}")


# For GL(n) there is also a spin-group closed form, and the dimension factors
# as Sig^2 times a simple product.  Both are exact.

print()
print(f"{'n':>2} {'lambda':<22}{'dim':>6}{'Sig':>5}{'closed':>7}  ratio")
for n in (3, 4, 5):
    for lam in self_dual_weights(n, 2)[:4]:
        res = gl_signature(n, lam)
        lhs, rhs = ratio_identity(n, lam)
        print(f"{n:>2} {str(lam):<22}{res.dim:>6}{res.sig:>5}{gl_closed_form(n, lam):>7}  {lhs == rhs}")


# Along a ray k * lambda0 the signature is a polynomial in k of low degree,
# so finite differences eventually vanish.  The dimension has twice the degree.

print()
for n, lam0 in [(2, (1, -1)), (3, (1, 0, -1)), (4, (2, 1, -1, -2)), (5, (2, 1, 0, -1, -2))]:
    probe = sig_degree_probe(n, lam0, method="closed")
    print(f"GL({n}) along {lam0}: Sig = {probe.values}, degree {probe.degree}")


# A lower bound of n - 1 holds for every nonzero weight in the sweeps we ran
# except one: GL(4) with lambda = (1, 1, -1, -1).  Through SL(4) = Spin(3, 3)
# this is the traceless symmetric square of a 6-dimensional space with a form
# of signature (3, 3), which has signature (11, 9).

res = gl_signature(4, (1, 1, -1, -1))
print()
print("GL(4), lambda = (1, 1, -1, -1):", res.pair, "Sig", res.sig)
