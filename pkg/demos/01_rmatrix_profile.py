"""Validate the two catalog R-matrices and look at the derived data."""
from rearep import catalog_standard_hecke, catalog_uq_sl2, validate

sl2 = validate(catalog_uq_sl2())
print("n =", sl2.n, " symmetry rank p =", sl2.p)
print("B =")
print(sl2.B.pretty())
print("C =")
print(sl2.C.pretty())

for name, ok in sl2.flags.items():
    print(f"  {name:22s} {ok}")

# the same pipeline for sl(3); nothing here assumes p = n
h3 = validate(catalog_standard_hecke(3))
print("sl(3): p =", h3.p, " Tr C =", h3.C.trace())
