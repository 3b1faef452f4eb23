"""Split V (x) V (x) V into Young components and compare central characters
with their closed forms."""
from rearep import (
    central_spectrum,
    char_b_s1,
    partitions_of,
    project_b,
    standard_tableaux,
    tensor_power_b,
    validate,
    young_projector,
)
from rearep.cli import character_table
from rearep.rmatrix import catalog_uq_sl2
from rearep.tensor import rank_exact

pr = validate(catalog_uq_sl2())
k = 3
t3 = tensor_power_b(pr, k)

for shape in partitions_of(k):
    for t in standard_tableaux(shape):
        y = young_projector(pr, t)
        if y.is_zero():
            print(f"{shape} {t}: empty (taller than p)")
            continue
        rep = project_b(t3, t, pr)
        s1 = central_spectrum(rep, 1, pr)
        print(f"{shape} {t}: dim {rank_exact(y)}  s1 = {s1}  closed form agrees: {s1 == char_b_s1(shape, pr.p)}")

print()
for row in character_table(pr, "B", k, 3):
    print(row)
