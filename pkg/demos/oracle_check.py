# coding: utf-8

# # Checking the formula against explicit matrices
#
# For a split group we can write down the representation itself, find the
# invariant form by linear algebra and count its positive and negative
# directions.  Nothing in this computation uses the signature formula.

from hermsig import builtin_group, compute_signature, construct_irrep, invariant_symmetric_form
from hermsig.oracle import oracle_sig_equal_rank, oracle_sig_split
from hermsig.restricted import highest_weight_spec
from hermsig.rootdata import cartan_matrix_of_type

# The adjoint representation of sl(3): eight dimensions, a two-dimensional
# zero weight space.

A2 = cartan_matrix_of_type("A", 2)
M = construct_irrep(A2, (1, 1))
print("dim", M.dim, " multiplicities", M.multiplicities())
M.check_relations()

form = invariant_symmetric_form(M)
print("inertia of the invariant form:", form.inertia)


# Compare a handful of weights for split C2 with the formula.

C2 = cartan_matrix_of_type("C", 2)
rf = builtin_group("split(C2)")
print()
for lam in [(1, 0), (0, 1), (2, 0), (1, 1), (2, 1), (0, 2)]:
    o = oracle_sig_split(C2, lam)
    f = compute_signature(rf, highest_weight_spec(rf, lam)).sig
    print(f"  C2 {lam}: oracle {o}  formula {f}")


# For an equal-rank group such as Sp(4, R) the invariant form is the compact
# one twisted by an element of the torus, so its signature is a character
# value.  The value is computed exactly in a cyclotomic ring.

rf = builtin_group("Sp(4)")
print()
for lam in [(1, 0), (2, 0), (1, 1), (3, 1)]:
    o = oracle_sig_equal_rank(rf, lam)
    f = compute_signature(rf, highest_weight_spec(rf, lam)).sig
    print(f"  Sp(4) {lam}: oracle {o}  formula {f}")
