"""Exact arithmetic in the real Clifford algebra R_{p,q}.

Blades are encoded as integer bitmasks: bit ``i - 1`` set means generator
``e_i`` is present.  Coefficients are :class:`fractions.Fraction`, so every
product, sum and projection is exact.

The same :class:`Multivector` type carries exterior forms; the geometric
product is :func:`mv_mul` (``*``) and the exterior product is :func:`mv_wedge`
(``^``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

from .errors import SignatureMismatch

MAX_GENERATORS = 16

Blade = int
Scalar = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Signature:
    """Generator squares: ``e_1..e_p`` square to +1, ``e_{p+1}..e_{p+q}`` to -1."""

    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("signature entries must be integers")
        if self.p < 0 or self.q < 0:
            raise ValueError(f"negative signature entry in ({self.p},{self.q})")
        if not 1 <= self.p + self.q <= MAX_GENERATORS:
            raise ValueError(
                f"need 1 <= p+q <= {MAX_GENERATORS}, got ({self.p},{self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def neg_mask(self) -> int:
        return self.full_mask & ~((1 << self.p) - 1)

    def square(self, i: int) -> int:
        """Square of generator ``e_i`` (1-based)."""
        return 1 if i <= self.p else -1

    def __str__(self):
        return f"({self.p},{self.q})"


# -- blades -----------------------------------------------------------------

def blade(*indices: int) -> Blade:
    """Bitmask of the canonical blade with the given (distinct) indices."""
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"generator indices start at 1, got {i}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator index {i}")
        mask |= bit
    return mask


def blade_indices(b: Blade) -> tuple[int, ...]:
    out = []
    i = 1
    while b:
        if b & 1:
            out.append(i)
        b >>= 1
        i += 1
    return tuple(out)


def grade(b: Blade) -> int:
    return b.bit_count()


def blade_key(b: Blade):
    """Canonical ordering: by grade, then lexicographically by indices."""
    return (b.bit_count(), blade_indices(b))


def canonical_blades(n: int, support: int | None = None) -> list[Blade]:
    """All blades on ``n`` generators (optionally inside ``support``), canonically ordered."""
    pool = [i for i in range(1, n + 1) if support is None or support >> (i - 1) & 1]
    out = []
    for g in range(len(pool) + 1):
        for combo in combinations(pool, g):
            out.append(blade(*combo))
    return out


def blade_name(b: Blade) -> str:
    if b == 0:
        return "1"
    return "e{" + ",".join(map(str, blade_indices(b))) + "}"


def reorder_parity(a: Blade, b: Blade) -> int:
    """Transpositions needed to sort the concatenation of ``a`` then ``b`` (mod 2)."""
    a >>= 1
    count = 0
    while a:
        count += (a & b).bit_count()
        a >>= 1
    return count & 1


@lru_cache(maxsize=1 << 16)
def _blade_product(neg_mask: int, a: Blade, b: Blade) -> int:
    parity = reorder_parity(a, b) + (a & b & neg_mask).bit_count()
    return -1 if parity & 1 else 1


def mul_blades(sig: Signature, a: Blade, b: Blade) -> tuple[int, Blade]:
    """Geometric product of two canonical blades as ``(sign, blade)``."""
    return _blade_product(sig.neg_mask, a, b), a ^ b


def wedge_blades(a: Blade, b: Blade) -> tuple[int, Blade]:
    """Exterior product of two blades; sign 0 when they share a generator."""
    if a & b:
        return 0, 0
    return (-1 if reorder_parity(a, b) else 1), a | b


def blade_square(sig: Signature, b: Blade) -> int:
    return mul_blades(sig, b, b)[0]


def blades_commute(sig: Signature, a: Blade, b: Blade) -> bool:
    return mul_blades(sig, a, b)[0] == mul_blades(sig, b, a)[0]


# -- multivectors -----------------------------------------------------------

def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Multivector:
    """Finite exact-rational combination of canonical blades over a signature.

    Instances are immutable; zero coefficients are never stored and terms are
    kept in canonical blade order.
    """

    __slots__ = ("sig", "_terms", "_hash")

    def __init__(self, sig: Signature, terms: Mapping[Blade, Scalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Blade, Fraction] = {}
        full = sig.full_mask
        for b, c in items:
            if b & ~full or b < 0:
                raise ValueError(f"blade {blade_name(b)} outside signature {sig}")
            acc[b] = acc.get(b, 0) + _as_fraction(c)
        self.sig = sig
        self._terms = {b: acc[b] for b in sorted(acc, key=blade_key) if acc[b] != 0}
        self._hash = None

    @classmethod
    def _raw(cls, sig, acc):
        mv = cls.__new__(cls)
        mv.sig = sig
        mv._terms = {b: acc[b] for b in sorted(acc, key=blade_key) if acc[b] != 0}
        mv._hash = None
        return mv

    @classmethod
    def scalar(cls, sig: Signature, c: Scalar = 1) -> "Multivector":
        return cls(sig, {0: c})

    @classmethod
    def from_blade(cls, sig: Signature, b: Blade, c: Scalar = 1) -> "Multivector":
        return cls(sig, {b: c})

    @classmethod
    def generator(cls, sig: Signature, i: int) -> "Multivector":
        return cls(sig, {blade(i): 1})

    @property
    def terms(self) -> Mapping[Blade, Fraction]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[Blade]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, b: Blade) -> Fraction:
        return self._terms.get(b, Fraction(0))

    def grades(self) -> set[int]:
        return {b.bit_count() for b in self._terms}

    def support(self) -> int:
        mask = 0
        for b in self._terms:
            mask |= b
        return mask

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "Multivector"):
        if self.sig != other.sig:
            raise SignatureMismatch(f"signatures differ: {self.sig} vs {other.sig}")

    def _coerce(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Multivector.scalar(self.sig, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for b, c in other._terms.items():
            acc[b] = acc.get(b, 0) + c
        return Multivector._raw(self.sig, acc)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.sig, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Multivector":
        c = _as_fraction(c)
        return Multivector._raw(self.sig, {b: v * c for b, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Multivector):
            return mv_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return mv_wedge(self, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.sig == other.sig and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {0: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sig, tuple(self._terms.items())))
        return self._hash

    def grade(self, k: int) -> "Multivector":
        return grade_project(self, k)

    def __str__(self):
        from .textio import render_multivector
        return render_multivector(self)

    def __repr__(self):
        return f"Multivector({self.sig}, {str(self)!r})"


def mv_mul(x: Multivector, y: Multivector) -> Multivector:
    """Geometric (Clifford) product, the bilinear extension of :func:`mul_blades`."""
    x._check(y)
    neg = x.sig.neg_mask
    acc: dict[Blade, Fraction] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            r = a ^ b
            if _blade_product(neg, a, b) > 0:
                acc[r] = acc.get(r, 0) + ca * cb
            else:
                acc[r] = acc.get(r, 0) - ca * cb
    return Multivector._raw(x.sig, acc)


def mv_wedge(x: Multivector, y: Multivector) -> Multivector:
    """Exterior product: metric-free, zero on overlapping blades."""
    x._check(y)
    acc: dict[Blade, Fraction] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            if a & b:
                continue
            r = a | b
            if reorder_parity(a, b):
                acc[r] = acc.get(r, 0) - ca * cb
            else:
                acc[r] = acc.get(r, 0) + ca * cb
    return Multivector._raw(x.sig, acc)


def grade_project(x: Multivector, k: int) -> Multivector:
    return Multivector._raw(x.sig, {b: c for b, c in x._terms.items() if b.bit_count() == k})


def pseudoscalar(sig: Signature) -> Multivector:
    return Multivector.from_blade(sig, sig.full_mask)
