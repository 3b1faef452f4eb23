"""B-type module on the (p-1)-antisymmetric power versus the R-type
fundamental module."""
from rearep import catalog_standard_hecke, catalog_uq_sl2, check_b_r_equivalence, validate

for r in (catalog_uq_sl2(), catalog_standard_hecke(3)):
    pr = validate(r)
    report = check_b_r_equivalence(pr)
    print(f"p = {pr.p}")
    for line in report.lines():
        print("  " + line)
