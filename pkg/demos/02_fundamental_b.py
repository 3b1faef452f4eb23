"""The two-dimensional B-type module, its traceless quotient, and rescaling."""
from rearep import catalog_uq_sl2, check_relations, fundamental_b, renormalize, sl_reduce, validate
from rearep.scalar import q

pr = validate(catalog_uq_sl2())
pi = fundamental_b(pr)

for name, (i, j) in {"a": (0, 0), "b": (0, 1), "c": (1, 0), "d": (1, 1)}.items():
    print(f"pi({name}) =")
    print(pi.generator(i, j).pretty())
print("\n".join(check_relations(pi, pr).lines()))

bar = sl_reduce(pi, pr)
print("normalization omega =", bar.meta["omega"])
print("h =")
print((bar.generator(0, 0) - bar.generator(1, 1)).pretty())
print("\n".join(check_relations(bar, pr).lines()))

# rescaling the unshifted generators does not change the quotient
for z in (q, q * q):
    same = sl_reduce(renormalize(pi, z), pr).block == bar.block
    print(f"z = {z}: same traceless module -> {same}")
