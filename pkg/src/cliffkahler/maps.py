"""Quantization and symbol maps between exterior forms and Clifford elements.

Both carriers share the canonical blade basis, so ``quantize`` and
``symbolize`` copy coefficients verbatim.  What they add is a change of
reading: after ``quantize`` the ``*`` operator is the Clifford product,
before it only ``^`` is meaningful.  The interesting work lives in the
restricted and embedded variants, which re-index generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .blades import Multivector, Signature, blade, blade_indices
from .errors import InvalidPlacement, NotInSubalgebra


@dataclass(frozen=True)
class GeneratorSubset:
    """Generators spanning a Clifford subalgebra of ``R_sig``."""

    sig: Signature
    members: tuple[int, ...]

    def __init__(self, sig: Signature, members: Iterable[int]):
        members = tuple(sorted(set(members)))
        if not members:
            raise ValueError("generator subset must be nonempty")
        if members[0] < 1 or members[-1] > sig.n:
            raise ValueError(f"generator subset {members} outside 1..{sig.n}")
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "members", members)

    @property
    def mask(self) -> int:
        return blade(*self.members)

    @property
    def induced_signature(self) -> Signature:
        pos = sum(1 for i in self.members if i <= self.sig.p)
        return Signature(pos, len(self.members) - pos)

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i in self.members


def quantize(x: Multivector) -> Multivector:
    """q*: exterior form -> Clifford element with the same canonical coefficients."""
    if not isinstance(x, Multivector):
        raise TypeError("quantize expects a Multivector")
    return Multivector(x.sig, x.terms)


def symbolize(x: Multivector) -> Multivector:
    """sigma*: inverse of :func:`quantize`."""
    if not isinstance(x, Multivector):
        raise TypeError("symbolize expects a Multivector")
    return Multivector(x.sig, x.terms)


def _rename(b: int, mapping: Mapping[int, int]) -> tuple[int, int]:
    """Rename the generators of ``b``; returns (sign, new blade).

    The sign is the parity of the permutation that re-sorts the renamed indices.
    """
    image = [mapping[i] for i in blade_indices(b)]
    inversions = sum(1 for i in range(len(image))
                     for j in range(i + 1, len(image)) if image[i] > image[j])
    return (-1 if inversions & 1 else 1), blade(*image)


def restrict_symbol(x: Multivector, subset: GeneratorSubset) -> tuple[Multivector, dict[int, int]]:
    """sigma* restricted to the subalgebra on ``subset``, re-indexed to 1..|subset|.

    Re-indexing is order preserving, so no signs appear.  The returned form
    lives over ``subset.induced_signature``.
    """
    if x.sig != subset.sig:
        raise ValueError(f"subset belongs to {subset.sig}, element to {x.sig}")
    outside = x.support() & ~subset.mask
    if outside:
        raise NotInSubalgebra(
            f"generators {blade_indices(outside)} are outside {subset.members}")
    reindex = {g: k for k, g in enumerate(subset.members, start=1)}
    target = subset.induced_signature
    terms = {}
    for b, c in x.items():
        _, nb = _rename(b, reindex)
        terms[nb] = c
    return Multivector(target, terms), reindex


def embed(form: Multivector, target: Signature, placement: Mapping[int, int]) -> Multivector:
    """Extended q* composed with a renaming of generators into ``target``.

    ``placement`` must be an injective map defined on every generator index
    the form uses, with images in ``1..target.n``.
    """
    images = list(placement.values())
    if len(set(images)) != len(images):
        raise InvalidPlacement(f"placement {dict(placement)} is not injective")
    if any(not 1 <= v <= target.n for v in images):
        raise InvalidPlacement(f"placement {dict(placement)} leaves 1..{target.n}")
    missing = set(blade_indices(form.support())) - set(placement)
    if missing:
        raise InvalidPlacement(f"placement does not cover generators {sorted(missing)}")
    terms = {}
    for b, c in form.items():
        sign, nb = _rename(b, placement)
        terms[nb] = c * sign
    return Multivector(target, terms)


def identity_placement(n: int) -> dict[int, int]:
    return {i: i for i in range(1, n + 1)}
