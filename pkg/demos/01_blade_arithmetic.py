"""Blade arithmetic in R_{3,3}: signs, squares, wedges and grades."""

from fractions import Fraction

from cliffkahler import Multivector, Signature, blade, mul_blades, pseudoscalar

sig = Signature(3, 3)
e = {i: Multivector.generator(sig, i) for i in range(1, 7)}

# generators square to +1 or -1 and anticommute
print("e1^2 =", e[1] * e[1], "  e4^2 =", e[4] * e[4])
print("e1 e2 + e2 e1 =", e[1] * e[2] + e[2] * e[1])

# a pair blade e_j e_{j+3} mixes one sign of each kind and squares to +1
e14 = e[1] * e[4]
print("(e14)^2 =", e14 * e14)
print("sign, blade of e14*e14:", mul_blades(sig, blade(1, 4), blade(1, 4)))

# reordering a product picks up a sign
print("e1 e4 e2 e5 =", e[1] * e[4] * e[2] * e[5])

# the exterior product ignores the metric
omega = e[1] * e[4] + e[2] * e[5] + e[3] * e[6]
print("omega ^ omega / 2 =", (omega ^ omega) / 2)

# (1 + e14)/2 is an idempotent, (1 - e14)/2 is orthogonal to it
plus = (1 + e14) / 2
minus = (1 - e14) / 2
print("plus^2 == plus:", plus * plus == plus, "  plus*minus =", plus * minus)

g = pseudoscalar(sig)
print("Gamma^2 in R_{3,3} =", g * g)
print("exact coefficients:", Multivector.scalar(sig, Fraction(1, 3)) * 3)
