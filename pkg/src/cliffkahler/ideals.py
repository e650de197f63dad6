"""Primitive idempotents, minimal left ideals and their division rings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .blades import (Blade, Multivector, Signature, blade_name,
                     blade_square, blades_commute, canonical_blades, mul_blades)
from .errors import InvalidGeneratorSet, SearchExhausted
from .maps import GeneratorSubset
from .ratlinalg import independent_indices


@lru_cache(maxsize=None)
def radon_hurwitz(i: int) -> int:
    """Radon-Hurwitz number r_i, extended to negative i by the usual recurrence."""
    if i >= 8:
        return radon_hurwitz(i - 8) + 4
    if i >= 0:
        return (0, 1, 2, 2, 3, 3, 3, 3)[i]
    if i == -1:
        return -1
    j = -i
    return 1 - j + radon_hurwitz(j - 2)


def involution_count(sig: Signature) -> int:
    """Number k of commuting involutions in a primitive idempotent of R_{p,q}."""
    return sig.q - radon_hurwitz(sig.q - sig.p)


_BASE_DIM = {"R": 1, "C": 2, "H": 4}


@dataclass(frozen=True)
class MatrixType:
    """``field(size)``, doubled when ``double`` is set (R+R or H+H types)."""

    field: str
    size: int
    double: bool = False

    @property
    def base(self) -> str:
        return f"{self.field}⊕{self.field}" if self.double else self.field

    @property
    def field_dim(self) -> int:
        return _BASE_DIM[self.field]

    @property
    def minimal_ideal_dim(self) -> int:
        """Real dimension of a minimal left ideal of one simple summand."""
        return self.size * self.field_dim

    @property
    def real_dim(self) -> int:
        return (2 if self.double else 1) * self.size ** 2 * self.field_dim

    def __str__(self):
        one = f"{self.field}({self.size})"
        return f"{one}⊕{one}" if self.double else one


def classify(sig: Signature) -> MatrixType:
    n = sig.n
    r = (sig.q - sig.p) % 8
    if r in (0, 6):
        return MatrixType("R", 2 ** (n // 2))
    if r in (1, 5):
        return MatrixType("C", 2 ** ((n - 1) // 2))
    if r in (2, 4):
        return MatrixType("H", 2 ** ((n - 2) // 2))
    if r == 3:
        return MatrixType("H", 2 ** ((n - 3) // 2), double=True)
    return MatrixType("R", 2 ** ((n - 1) // 2), double=True)


def _check_generators(sig: Signature, generators: Sequence[Blade]):
    for g in generators:
        if g == 0 or g & ~sig.full_mask:
            raise InvalidGeneratorSet(f"{blade_name(g)} is not a non-scalar blade of {sig}")
        if blade_square(sig, g) != 1:
            raise InvalidGeneratorSet(f"{blade_name(g)} squares to -1 in {sig}")
    for i, a in enumerate(generators):
        for b in generators[i + 1:]:
            if not blades_commute(sig, a, b):
                raise InvalidGeneratorSet(
                    f"{blade_name(a)} and {blade_name(b)} anticommute")


def build_idempotent(sig: Signature, generators: Sequence[Blade]) -> Multivector:
    """Expanded product of ``(1 + g)/2`` over the generators.

    Generators must be commuting involutive blades.  A set whose generated
    group contains -1 is accepted and yields 0.
    """
    generators = list(generators)
    _check_generators(sig, generators)
    f = Multivector.scalar(sig, 1)
    for g in generators:
        f = f * Multivector(sig, {0: Fraction(1, 2), g: Fraction(1, 2)})
    return f


def generated_group(sig: Signature, generators: Iterable[Blade]) -> Optional[dict[Blade, int]]:
    """Signed blades generated by commuting blades, keyed by bitmask.

    Returns None unless the group has order ``2**len(generators)`` and
    excludes -1 (both failures show up as a repeated bitmask).
    """
    group = {0: 1}
    for g in generators:
        group = _grow(sig, group, g)
        if group is None:
            return None
    return group


def _as_mask(support, sig: Signature) -> int:
    if support is None:
        return sig.full_mask
    if isinstance(support, GeneratorSubset):
        return support.mask
    mask = 0
    for i in support:
        mask |= 1 << (i - 1)
    return mask


def find_generators(sig: Signature, seed: Sequence[Blade] = (),
                    support=None) -> list[Blade]:
    """Extend ``seed`` to ``involution_count(sig)`` commuting involutive blades.

    Candidates are the blades inside ``support`` (a :class:`GeneratorSubset`,
    an iterable of generator indices, or None for all generators) that square
    to +1, tried in canonical order.  Depth-first search; the first complete
    set wins.
    """
    seed = list(seed)
    _check_generators(sig, seed)
    if generated_group(sig, seed) is None:
        raise InvalidGeneratorSet("seed generates a group containing -1 or repeats")
    k = involution_count(sig)
    if len(seed) >= k:
        if len(seed) > k:
            raise InvalidGeneratorSet(f"seed has {len(seed)} blades, more than k={k}")
        return seed
    mask = _as_mask(support, sig)
    candidates = [b for b in canonical_blades(sig.n, mask)
                  if b and blade_square(sig, b) == 1
                  and all(blades_commute(sig, b, s) for s in seed)]
    best = list(seed)

    def usable(b, chosen, group):
        if b in group or not all(blades_commute(sig, b, c) for c in chosen):
            return None
        return _grow(sig, group, b)

    def greedy(start, chosen, group):
        # a pruned branch cannot finish, but may still beat the best partial set
        nonlocal best
        chosen = list(chosen)
        for b in candidates[start:]:
            grown = usable(b, chosen, group)
            if grown is not None:
                chosen.append(b)
                group = grown
        if len(chosen) > len(best):
            best = chosen

    def extend(start, chosen, group):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) == k:
            return chosen
        if len(candidates) - start < k - len(chosen):
            greedy(start, chosen, group)
            return None
        for idx in range(start, len(candidates)):
            b = candidates[idx]
            grown = usable(b, chosen, group)
            if grown is None:
                continue
            found = extend(idx + 1, chosen + [b], grown)
            if found:
                return found
        return None

    result = extend(0, seed, generated_group(sig, seed))
    if result is None:
        raise SearchExhausted(
            f"cannot extend to {k} commuting involutions in {sig}; "
            f"best has {len(best)}: {[blade_name(b) for b in best]}", best)
    return result


def _grow(sig, group, g):
    new = {}
    for m, s in group.items():
        sign, r = mul_blades(sig, m, g)
        if r in group or r in new:
            return None
        new[r] = s * sign
    out = dict(group)
    out.update(new)
    return out


def _sandwiches(sig: Signature, f: Multivector, products=None) -> list[Multivector]:
    """f b f for every canonical blade b, given the products b f if known."""
    blades = canonical_blades(sig.n)
    if products is None:
        products = [Multivector.from_blade(sig, b) * f for b in blades]
    # b f is often a multiple of an earlier b' f, so left-multiply each ray once
    cache: dict[Multivector, Multivector] = {}
    out = []
    for bf in products:
        if not bf:
            out.append(bf)
            continue
        lead = next(iter(bf.items()))[1]
        ray = bf.scale(1 / lead)
        if ray not in cache:
            cache[ray] = f * ray
        out.append(cache[ray].scale(lead))
    return out


def division_ring_data(sig: Signature, f: Multivector,
                       products=None) -> tuple[list[Blade], list[Multivector]]:
    """Blades b and elements f b f forming a basis of f R_{p,q} f."""
    blades = canonical_blades(sig.n)
    sandwiches = _sandwiches(sig, f, products)
    keep = independent_indices(sandwiches)
    return [blades[i] for i in keep], [sandwiches[i] for i in keep]


def division_ring_basis(sig: Signature, f: Multivector) -> list[Multivector]:
    """Basis of f R_{p,q} f drawn from {f b f : b canonical}, f first."""
    return division_ring_data(sig, f)[1]


def division_type(f: Multivector, basis: Sequence[Multivector]) -> Optional[str]:
    """'R', 'C' or 'H' when f R f is that division algebra, else None."""
    if not basis or basis[0] != f:
        return None
    if len(basis) == 1:
        return "R"
    if len(basis) not in (2, 4):
        return None
    if all(x * x == -f for x in basis[1:]):
        return "C" if len(basis) == 2 else "H"
    return None


def quaternion_relations_check(f: Multivector, i: Multivector, j: Multivector,
                               k: Multivector) -> bool:
    minus_f = -f
    return (i * i == minus_f and j * j == minus_f and k * k == minus_f
            and i * j == k and j * k == i and k * i == j
            and j * i == -k and k * j == -i and i * k == -j)


@dataclass
class IdempotentReport:
    sig: Signature
    f: Multivector
    generators: tuple[Blade, ...]
    k: Optional[int]
    is_idempotent: bool
    is_primitive: bool
    ideal_dim: int
    division_type: Optional[str]
    ideal_basis: list[Multivector] = field(repr=False)
    ideal_blades: list[Blade] = field(repr=False)
    division_basis: list[Multivector] = field(repr=False)
    division_blades: list[Blade] = field(repr=False)
    matrix_type: MatrixType = None

    def basis_labels(self) -> list[str]:
        return ["f" if b == 0 else blade_name(b) + "f" for b in self.ideal_blades]

    def division_labels(self) -> list[str]:
        return ["f" if b == 0 else f"f{blade_name(b)}f" for b in self.division_blades]


def verify_idempotent(sig: Signature, f: Multivector,
                      generators: Sequence[Blade] = ()) -> IdempotentReport:
    """Check idempotency and primitivity of ``f`` and collect its ideal data.

    Primitivity is decided by comparing dim(R_{p,q} f) with the minimal left
    ideal dimension implied by :func:`classify`.
    """
    if f.sig != sig:
        raise ValueError(f"element lives in {f.sig}, not {sig}")
    is_idem = f * f == f
    blades = canonical_blades(sig.n)
    products = [Multivector.from_blade(sig, b) * f for b in blades]
    keep = independent_indices(products)
    ideal_dim = len(keep)
    mtype = classify(sig)
    primitive = is_idem and bool(f) and ideal_dim == mtype.minimal_ideal_dim
    dblades, dbasis = division_ring_data(sig, f, products) if is_idem and f else ([], [])
    if generators:
        k = len(generators)
    elif ideal_dim and (1 << sig.n) % ideal_dim == 0 and \
            ((1 << sig.n) // ideal_dim).bit_count() == 1:
        k = ((1 << sig.n) // ideal_dim).bit_length() - 1
    else:
        k = None
    return IdempotentReport(
        sig=sig, f=f, generators=tuple(generators), k=k, is_idempotent=is_idem,
        is_primitive=primitive, ideal_dim=ideal_dim,
        division_type=division_type(f, dbasis) if primitive else None,
        ideal_basis=[products[i] for i in keep],
        ideal_blades=[blades[i] for i in keep],
        division_basis=dbasis, division_blades=dblades, matrix_type=mtype)


def primitive_idempotent(sig: Signature) -> tuple[list[Blade], Multivector]:
    """Some primitive idempotent of R_{p,q}, via :func:`find_generators`."""
    gens = find_generators(sig)
    return gens, build_idempotent(sig, gens)
