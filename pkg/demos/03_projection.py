"""Reading a U(m)-structure off a primitive idempotent by projection."""

from cliffkahler import Signature, induce_idempotent, recover_by_projection, recover_structure
from cliffkahler.blades import blade_name

# direct recovery: (3,3) gives back omega and J
st = recover_structure(Signature(3, 3), induce_idempotent(3, Signature(3, 3)).f)
print("omega =", st.omega)
for row in st.J.entries:
    print("  ", " ".join(f"{int(v):2d}" for v in row))

# signatures away from (p,p), (p,p+1), (p,p+2) need extra involutions
for p, q in [(5, 2), (2, 5), (1, 4), (6, 1), (4, 3)]:
    d = recover_by_projection(Signature(p, q))
    extras = ", ".join(blade_name(g) for g in d.extra_generators)
    print(f"({p},{q}) m={d.m} pairs={d.pairs} extra=[{extras}] "
          f"primitive={d.report.is_primitive} splits={d.splitting_holds}")
