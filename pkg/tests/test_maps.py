from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffkahler import (GeneratorSubset, InvalidPlacement, Multivector, NotInSubalgebra,
                         Signature, blade, canonical_blades, embed, quantize,
                         rational_kahler_polynomial, restrict_symbol, symbolize)
from cliffkahler.maps import identity_placement
from conftest import multivectors, sig_and_mvs

S33 = Signature(3, 3)


def mv(sig, terms):
    return Multivector(sig, {blade(*k): c for k, c in terms.items()})


FU3 = {(): 1, (1, 4): 1, (2, 5): 1, (3, 6): 1, (1, 2, 4, 5): -1, (1, 3, 4, 6): -1,
       (2, 3, 5, 6): -1, (1, 2, 3, 4, 5, 6): -1}


class TestGeneratorSubset:
    def test_induced_signature(self):
        a = GeneratorSubset(Signature(5, 2), [7, 1, 6, 2])
        assert a.members == (1, 2, 6, 7)
        assert a.induced_signature == Signature(2, 2)

    @pytest.mark.parametrize("members", [[], [0, 1], [8]])
    def test_rejects(self, members):
        with pytest.raises(ValueError):
            GeneratorSubset(Signature(5, 2), members)

    def test_closed_under_product(self):
        a = GeneratorSubset(Signature(2, 3), [2, 4, 5])
        blades = canonical_blades(5, a.mask)
        sig = a.sig
        for x in blades:
            for y in blades:
                prod = Multivector.from_blade(sig, x) * Multivector.from_blade(sig, y)
                assert prod.support() & ~a.mask == 0


class TestQuantize:
    def test_rational_kahler_quantizes_to_fu3(self):
        assert quantize(rational_kahler_polynomial(3)) == mv(S33, FU3) / 8

    def test_unit(self):
        assert quantize(Multivector.scalar(S33, 1)) == 1

    def test_carrier_change_negative_square(self):
        sig = Signature(0, 2)
        form = mv(sig, {(1,): 1}) ^ mv(sig, {(2,): 1})
        x = quantize(form)
        assert x == mv(sig, {(1, 2): 1})
        assert x * x == -1

    def test_not_an_algebra_map(self):
        sig = Signature(1, 0)
        e1 = mv(sig, {(1,): 1})
        assert quantize(e1 ^ e1) != quantize(e1) * quantize(e1)

    def test_multiplicative_on_disjoint_supports(self):
        sig = Signature(2, 2)
        x = mv(sig, {(1,): 2, (1, 2): Fraction(1, 3)})
        y = mv(sig, {(3,): 1, (3, 4): -1, (): 5})
        assert quantize(x ^ y) == quantize(x) * quantize(y)

    def test_type_checked(self):
        with pytest.raises(TypeError):
            quantize(3)


class TestSymbolize:
    def test_kahler_polynomial(self):
        from cliffkahler import kahler_polynomial
        assert symbolize(mv(S33, FU3)) == kahler_polynomial(3)

    def test_zero(self):
        assert symbolize(Multivector(S33)).is_zero()

    def test_reordering_before_carrier_change(self):
        e = [Multivector.generator(S33, i) for i in range(7)[1:]]
        x = e[0] * e[3] * e[1] * e[4]
        assert symbolize(x) == mv(S33, {(1, 2, 4, 5): -1})


@settings(max_examples=200, deadline=None)
@given(sig_and_mvs(1, max_n=5))
def test_round_trips_random(data):
    _, x = data
    assert symbolize(quantize(x)) == x
    assert quantize(symbolize(x)) == x


def test_round_trips_exhaustive_blades():
    for n in range(1, 6):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            for b in canonical_blades(n):
                x = Multivector.from_blade(sig, b, Fraction(3, 4))
                assert symbolize(quantize(x)) == x and quantize(symbolize(x)) == x


class TestRestrict:
    def test_example_52(self):
        sig = Signature(5, 2)
        x = mv(sig, {(1, 6): 1, (2, 7): 1})
        form, reindex = restrict_symbol(x, GeneratorSubset(sig, [1, 2, 6, 7]))
        assert reindex == {1: 1, 2: 2, 6: 3, 7: 4}
        assert form.sig == Signature(2, 2)
        assert form == mv(Signature(2, 2), {(1, 3): 1, (2, 4): 1})

    def test_scalar(self):
        sig = Signature(5, 2)
        form, _ = restrict_symbol(Multivector.scalar(sig, 7), GeneratorSubset(sig, [3]))
        assert form == 7

    def test_outside(self):
        sig = Signature(5, 2)
        with pytest.raises(NotInSubalgebra):
            restrict_symbol(mv(sig, {(3,): 1}), GeneratorSubset(sig, [1, 2]))

    def test_fu3_in_34(self):
        from cliffkahler import kahler_polynomial
        sig = Signature(3, 4)
        f_tilde = mv(sig, FU3)
        form, _ = restrict_symbol(f_tilde, GeneratorSubset(sig, range(1, 7)))
        assert form == kahler_polynomial(3)


class TestEmbed:
    def test_identity_into_34(self):
        sig = Signature(3, 4)
        got = embed(rational_kahler_polynomial(3), sig, identity_placement(6))
        assert got == mv(sig, FU3) / 8

    def test_scalar(self):
        sig = Signature(2, 5)
        assert embed(Multivector.scalar(S33, 3), sig, {}) == 3

    def test_renaming(self):
        src = Signature(2, 0)
        form = mv(src, {(1, 2): 1})
        assert embed(form, Signature(5, 2), {1: 1, 2: 6}) == mv(Signature(5, 2), {(1, 6): 1})

    def test_renaming_sign(self):
        src = Signature(2, 0)
        form = mv(src, {(1, 2): 1})
        assert embed(form, Signature(3, 0), {1: 3, 2: 1}) == mv(Signature(3, 0), {(1, 3): -1})

    @pytest.mark.parametrize("placement", [{1: 1, 2: 1}, {1: 1, 2: 9}, {1: 1}])
    def test_invalid(self, placement):
        form = mv(Signature(2, 0), {(1, 2): 1})
        with pytest.raises(InvalidPlacement):
            embed(form, Signature(5, 2), placement)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_restrict_after_embed_is_identity(data):
    target = Signature(4, 3)
    members = sorted(data.draw(st.sets(st.integers(1, 7), min_size=1, max_size=7)))
    subset = GeneratorSubset(target, members)
    form = data.draw(multivectors(subset.induced_signature))
    placement = {k: g for k, g in enumerate(members, start=1)}
    back, _ = restrict_symbol(embed(form, target, placement), subset)
    assert back == form
