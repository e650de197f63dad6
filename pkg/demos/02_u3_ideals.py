"""The U(3) idempotent in R_{3,3}, R_{3,4} and R_{3,5} and its division ring."""

from cliffkahler import (Multivector, Signature, induce_idempotent, pseudoscalar,
                         quaternion_relations_check, rational_kahler_polynomial)

print("P^Q(omega) =", rational_kahler_polynomial(3))

for q in (3, 4, 5):
    sig = Signature(3, q)
    rep = induce_idempotent(3, sig)
    print(f"\n({sig.p},{sig.q}): {rep.matrix_type}, ideal_dim={rep.ideal_dim}, "
          f"division ring {rep.division_type} spanned by {', '.join(rep.division_labels())}")
    print("  basis labels:", " ".join(rep.basis_labels()))

# in R_{3,4} minus the pseudoscalar acts as i
sig = Signature(3, 4)
f = induce_idempotent(3, sig).f
i = f * -pseudoscalar(sig) * f
print("\n(f(-Gamma)f)^2 == -f:", i * i == -f)

# in R_{3,5} e7, e8, e78 give a quaternion basis of f R f
sig = Signature(3, 5)
f = induce_idempotent(3, sig).f
e7, e8 = Multivector.generator(sig, 7), Multivector.generator(sig, 8)
qi, qj, qk = f * e7 * f, f * e8 * f, f * e7 * e8 * f
print("quaternion relations hold:", quaternion_relations_check(f, qi, qj, qk))
print("swapping i and j breaks them:", not quaternion_relations_check(f, qj, qi, qk))
