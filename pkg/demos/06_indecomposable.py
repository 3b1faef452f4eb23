"""A two-dimensional module with an invariant line but no invariant complement."""
from rearep import indecomposable_example
from rearep.scalar import q

an = indecomposable_example(q, 2, 5)
for name, mat in an.matrices.items():
    print(f"rho({name}) =")
    print(mat.pretty())
print("relation holds:", an.relation_holds)
print("e1 spans a submodule:", an.submodule_e1)
print("invariant complement:", an.complement)

flat = indecomposable_example(0, 2, 5)
print("x = 0 complement functional:", [str(v) for v in flat.complement])
