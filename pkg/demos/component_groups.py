# coding: utf-8

# # Disconnected groups and where the form is invariant
#
# When the real group has several components the form may be invariant only
# under the subgroup generated by the identity component and the compact
# torus.  The relevant finite group is built from the singular noncompact
# roots and a lattice test.

from hermsig import builtin_group, component_group, compute_signature
from hermsig.realform import HighestWeightSpec

for label in ["SL(2)", "Sp(4)", "PSp(4)", "PSp(6)", "SO(4,4)", "PSO(4,4)", "GL(2)", "GL(4)"]:
    cg = component_group(builtin_group(label))
    print(f"  {label:<9} order {cg.order}  {cg.describe()}")


# GL(2): lambda_c odd gives the standard representation twisted by
# |det|^(-1/2).  Its form changes sign under an element of determinant -1.

rf = builtin_group("GL(2)")
for lc in range(4):
    res = compute_signature(rf, HighestWeightSpec((lc,), (0,)))
    print(f"GL(2) lambda_c = {lc}: Sig {res.sig}  {res.invariance}")


# GL(4) has examples of both kinds.

rf = builtin_group("GL(4)")
print()
for lc in [(0, 0), (2, 0), (1, 1), (3, 1), (2, 2)]:
    res = compute_signature(rf, HighestWeightSpec(lc, (0, 0)))
    print(f"GL(4) lambda_c = {lc}: Sig {res.sig}  {res.invariance}  literal reading {res.invariance_literal}")
