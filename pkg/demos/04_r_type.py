"""Modules of R type: the fundamental one is R^2, higher ones come from
Jucys-Murphy operators."""
from rearep import check_relations, project_r, r_type_rep, sl_reduce_r, validate, zeta_r_s1
from rearep.hecke import Partition, StandardTableau
from rearep.oracle import central_spectrum
from rearep.rep_r import sl_closed_form_r, sl_zeta_r
from rearep.rmatrix import catalog_standard_hecke

pr = validate(catalog_standard_hecke(3))

theta = r_type_rep(pr, 1)
print("R^2 block:", theta.algebra_block() == pr.R @ pr.R)

for k in (1, 2):
    base = r_type_rep(pr, k)
    print(f"k={k}:", check_relations(base, pr).lines())
    for shape in dict.fromkeys((Partition((k,)), Partition((1,) * k))):
        rep = project_r(base, StandardTableau.row_reading(shape), pr)
        print(f"  {shape}: s1 = {central_spectrum(rep, 1, pr)}  (closed form {zeta_r_s1(shape, pr.p)})")

# traceless quotient of the symmetric square and its second central character
rep = sl_reduce_r(project_r(r_type_rep(pr, 2), StandardTableau.row_reading(Partition((2,))), pr), pr)
print("closed form block:", rep.algebra_block() == sl_closed_form_r(pr, 2, "row"))
print("s2:", central_spectrum(rep, 2, pr) == sl_zeta_r(2, 2, pr.p, "row"))
