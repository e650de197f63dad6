"""U(n)-structures, Kahler polynomials and the idempotents they induce.

The standard structure on R^{2n} pairs e_k with e_{k+n}:

    J e_k = e_{k+n},  J e_{k+n} = -e_k,  omega = sum_k e^k ^ e^{k+n}.

Forms over R^{2n} are carried as multivectors over the signature (n, n),
which is also the home of the induced idempotent f_U(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .blades import Blade, Multivector, Signature, blade, grade_project
from .errors import DimensionMismatch, NotAKahlerIdempotent, NotInSubalgebra, UnsupportedSignature
from .ideals import IdempotentReport, build_idempotent, find_generators, verify_idempotent
from .maps import GeneratorSubset, embed, identity_placement, quantize, restrict_symbol, symbolize
from .ratlinalg import RationalMatrix


def gram_matrix(omega: Multivector, dim: int) -> RationalMatrix:
    """Matrix of the bilinear form omega(e_a, e_b) for a 2-form ``omega``."""
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for b, c in grade_project(omega, 2).items():
        lo, hi = (b & -b).bit_length() - 1, b.bit_length() - 1
        if hi >= dim:
            raise DimensionMismatch(f"2-form uses e^{hi + 1} beyond R^{dim}")
        rows[lo][hi] += c
        rows[hi][lo] -= c
    return RationalMatrix(rows)


@dataclass(frozen=True)
class UnitaryStructure:
    """Compatible triple (g, J, omega) on R^{2n}; g is the standard inner product."""

    n: int
    J: RationalMatrix
    omega: Multivector

    def __post_init__(self):
        dim = 2 * self.n
        if self.J.shape != (dim, dim):
            raise DimensionMismatch(f"J must be {dim}x{dim}, got {self.J.shape}")
        ident = RationalMatrix.identity(dim)
        if self.J @ self.J != -ident:
            raise ValueError("J does not square to -1")
        if self.J.T @ self.J != ident:
            raise ValueError("J is not orthogonal")
        if gram_matrix(self.omega, dim) != self.J.T:
            raise ValueError("omega(v, w) != g(Jv, w)")


def kahler_form(n: int) -> Multivector:
    sig = Signature(n, n)
    return Multivector(sig, {blade(j, n + j): 1 for j in range(1, n + 1)})


def standard_complex_structure(n: int) -> RationalMatrix:
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        rows[k + n][k] = 1   # J e_k = e_{k+n}
        rows[k][k + n] = -1  # J e_{k+n} = -e_k
    return RationalMatrix(rows)


def standard_structure(n: int) -> UnitaryStructure:
    if n < 1:
        raise ValueError("n must be at least 1")
    return UnitaryStructure(n, standard_complex_structure(n), kahler_form(n))


def kahler_power(omega: Multivector, n: int, m: int) -> Multivector:
    """omega^m / m! with omega^0 = 1."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= {n}, got {m}")
    out = Multivector.scalar(omega.sig, 1)
    for _ in range(m):
        out = out ^ omega
    return out / factorial(m)


def _exp_wedge(omega: Multivector, top: int) -> Multivector:
    return sum((kahler_power(omega, top, m) for m in range(top + 1)),
               Multivector(omega.sig))


def kahler_polynomial(n: int) -> Multivector:
    """P(omega) = sum_{m=0}^{n} omega^m / m! for the standard form on R^{2n}."""
    return _exp_wedge(kahler_form(n), n)


def rational_kahler_polynomial(n: int) -> Multivector:
    return kahler_polynomial(n) / 2 ** n


def pair_blades(pairs) -> list[Blade]:
    return [blade(a, b) for a, b in pairs]


def _check_family(n: int, target: Signature):
    if n < 1 or target.p != n or target.q not in (n, n + 1, n + 2):
        raise UnsupportedSignature(
            f"U({n}) induces idempotents only in ({n},{n}), ({n},{n + 1}), ({n},{n + 2}); "
            f"got {target}")


def induce_idempotent(n: int, target: Signature) -> IdempotentReport:
    """Quantize the rational Kahler polynomial into ``target`` and verify it.

    The result is checked against the factorized form prod (1 + e_j e_{n+j})/2
    before the ideal report is built.
    """
    _check_family(n, target)
    f = embed(quantize(rational_kahler_polynomial(n)), target, identity_placement(2 * n))
    gens = pair_blades((j, n + j) for j in range(1, n + 1))
    if f != build_idempotent(target, gens):
        raise AssertionError("quantized Kahler polynomial does not factorize")
    return verify_idempotent(target, f, gens)


# an SU(n)-structure with the same J and omega induces the same idempotent
induce_su_idempotent = induce_idempotent


def recover_structure(sig: Signature, f: Multivector) -> UnitaryStructure:
    """Read the Kahler form off 2^p <f>_2 and rebuild J from it.

    For (p, p+1) and (p, p+2) the symbol map is restricted to the
    subalgebra on e_1..e_{2p} first.
    """
    p = sig.p
    _check_family(p, sig)
    if f.sig != sig:
        raise ValueError(f"element lives in {f.sig}, not {sig}")
    if f.is_zero() or f * f != f:
        raise NotAKahlerIdempotent("element is not a nonzero idempotent")
    two_form = grade_project(f, 2) * 2 ** p
    used = 0
    for b, c in two_form.items():
        if c != 1 or b & used:
            raise NotAKahlerIdempotent(
                "scaled grade-2 part is not a sum of disjoint unit 2-blades")
        used |= b
    if len(two_form) != p:
        raise NotAKahlerIdempotent(f"expected {p} 2-blades, found {len(two_form)}")
    if set(two_form) != set(pair_blades((j, p + j) for j in range(1, p + 1))):
        raise NotAKahlerIdempotent(
            "2-blades do not pair e_j with e_{p+j}; only the standard structure is recovered")
    subset = GeneratorSubset(sig, range(1, 2 * p + 1))
    try:
        omega, _ = restrict_symbol(two_form, subset)
        whole, _ = restrict_symbol(f, subset)
    except NotInSubalgebra as exc:
        raise NotAKahlerIdempotent(str(exc)) from exc
    if whole != _exp_wedge(omega, p) / 2 ** p:
        raise NotAKahlerIdempotent("symbol of f is not the rational Kahler polynomial")
    J = gram_matrix(omega, 2 * p).T
    try:
        return UnitaryStructure(p, J, omega)
    except ValueError as exc:
        raise NotAKahlerIdempotent(str(exc)) from exc


@dataclass
class ProjectionDecomposition:
    sig: Signature
    pairs: tuple[tuple[int, int], ...]
    f_tilde: Multivector
    extra_generators: tuple[Blade, ...]
    e: Multivector
    h: Multivector
    subalgebra: GeneratorSubset
    omega_tilde: Multivector
    report: IdempotentReport
    splitting_holds: bool
    restriction_is_kahler: bool

    @property
    def m(self) -> int:
        return len(self.pairs)


def recover_by_projection(sig: Signature) -> ProjectionDecomposition:
    """Split a primitive idempotent h = f_tilde e / 2^m of R_{p,q}.

    Positive generator j is paired with negative generator p+j for
    j = 1..min(p, q); the remaining generators supply the extra
    involutions in ``e``.
    """
    p, q = sig.p, sig.q
    if p < 1 or q < 1 or p == q or q in (p + 1, p + 2):
        raise UnsupportedSignature(
            f"projection recovery needs p != q, p,q >= 1, q not in {{p+1, p+2}}; got {sig}")
    m = min(p, q)
    pairs = tuple((j, p + j) for j in range(1, m + 1))
    seed = pair_blades(pairs)
    paired = [i for pair in pairs for i in pair]
    complement = GeneratorSubset(sig, [i for i in range(1, sig.n + 1) if i not in paired])
    gens = find_generators(sig, seed, complement)
    extras = tuple(gens[m:])

    f_tilde = Multivector.scalar(sig, 1)
    for g in seed:
        f_tilde = f_tilde * Multivector(sig, {0: 1, g: 1})
    e = build_idempotent(sig, extras)
    h = f_tilde * e / 2 ** m

    omega_tilde = Multivector(sig, {g: 1 for g in seed})
    rational_tilde = _exp_wedge(omega_tilde, m) / 2 ** m
    splitting = symbolize(h) == rational_tilde ^ symbolize(e)

    subalgebra = GeneratorSubset(sig, paired)
    restricted, _ = restrict_symbol(f_tilde, subalgebra)
    restriction_ok = restricted == kahler_polynomial(m)

    return ProjectionDecomposition(
        sig=sig, pairs=pairs, f_tilde=f_tilde, extra_generators=extras, e=e, h=h,
        subalgebra=subalgebra, omega_tilde=omega_tilde,
        report=verify_idempotent(sig, h, gens),
        splitting_holds=splitting, restriction_is_kahler=restriction_ok)


def is_unitary_member(n: int, M: RationalMatrix) -> bool:
    """Membership in U(n) = O(2n) intersect Sp(2n) for the standard omega."""
    if not isinstance(M, RationalMatrix):
        M = RationalMatrix(M)
    if M.shape != (2 * n, 2 * n):
        raise DimensionMismatch(f"expected a {2 * n}x{2 * n} matrix, got {M.shape}")
    omega = gram_matrix(kahler_form(n), 2 * n)
    return M.T @ M == RationalMatrix.identity(2 * n) and M.T @ omega @ M == omega
