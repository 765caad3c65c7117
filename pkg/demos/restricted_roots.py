# coding: utf-8

# # Restricted roots on the fundamental Cartan
#
# The Cartan involution acts on the roots of the complexified group.  Folding
# the roots along it produces the restricted root system, which may be
# non-reduced.  Here we look at SL(5, R) and at the split form of E6.

from hermsig import builtin_group, fold_diagram, restrict, restricted_type
from hermsig.restricted import render_diagram
from hermsig.tables import table3

# SL(5, R): every simple root is complex, the middle two are swapped into
# each other, and the sum of the middle pair is an imaginary root.

rf = builtin_group("SL(5)")
rd = restrict(rf)
print("SL(5) restricted types:", restricted_type(rd))
for r in rd.roots:
    if r.value in [rd.roots[i].value for i in rd.positive]:
        print(f"  value {r.value}  coroot {r.coroot}  {r.case}")


# The four diagrams: the original one, the one with the reduced imaginary
# roots, and the folded ones before and after throwing away doubled roots.
# '*' is an imaginary vertex, 'o' a complex one, '@' a complex vertex joined
# to its image.

d = fold_diagram(rf)
for key in ("R", "R_red", "res", "res_red"):
    print(f"  {key:<8}{render_diagram(d[key])}")


# Split E6 folds to F4.

d = fold_diagram(builtin_group("split(E6)"))
print()
print("split E6:")
print("  R       ", render_diagram(d["R"]))
print("  res     ", render_diagram(d["res"]))


# The table of restricted types for the families with a nontrivial diagram
# automorphism, computed from scratch and compared with the expected rows.

print()
for got, _, bad in table3():
    print(f"  {got.name:<4}{got.res:<5}{got.cplx:<6}{got.imag:<6}{got.sing_cplx:<4}{got.sing_imag:<4}"
          f"{got.cplx_by_sing_imag}  {got.sing_cplx_by_imag}  {'ok' if not bad else bad}")
