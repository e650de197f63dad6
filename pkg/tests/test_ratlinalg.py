from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffkahler import (Multivector, RationalMatrix, Signature, SignatureMismatch,
                         build_idempotent, blade, canonical_blades, extract_basis, row_reduce)
from cliffkahler.errors import DimensionMismatch
from cliffkahler.ratlinalg import EchelonSpan, coordinate_matrix, rank, span_rank
from conftest import fractions, multivectors


def fu3(sig):
    return build_idempotent(sig, [blade(1, 4), blade(2, 5), blade(3, 6)])


def left_products(sig, f):
    return [Multivector.from_blade(sig, b) * f for b in canonical_blades(sig.n)]


class TestRationalMatrix:
    def test_ragged(self):
        with pytest.raises(DimensionMismatch):
            RationalMatrix([[1, 2], [3]])

    def test_matmul_shape(self):
        with pytest.raises(DimensionMismatch):
            RationalMatrix.identity(2) @ RationalMatrix.zeros(3, 3)

    def test_basic_algebra(self):
        m = RationalMatrix([[1, 2], [3, 4]])
        assert m.T == RationalMatrix([[1, 3], [2, 4]])
        assert m @ RationalMatrix.identity(2) == m
        assert (-m)[1, 0] == -3


class TestRowReduce:
    def test_identity(self):
        rref, r, piv = row_reduce(RationalMatrix.identity(4))
        assert r == 4 and piv == [0, 1, 2, 3]
        assert rref == RationalMatrix.identity(4)

    def test_exact_fractions(self):
        m = RationalMatrix([[2, 4, 1], [1, 2, Fraction(1, 3)]])
        rref, r, piv = row_reduce(m)
        assert r == 2 and piv == [0, 2]
        assert rref == RationalMatrix([[1, 2, 0], [0, 0, 1]])

    def test_fu3_ideal_rank(self):
        sig = Signature(3, 3)
        f = fu3(sig)
        gens = [Multivector.from_blade(sig, blade(*i)) * f
                for i in [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]]
        assert rank(coordinate_matrix(gens)) == 8

    def test_absorbed_pair(self):
        sig = Signature(3, 3)
        f = fu3(sig)
        e14f = Multivector.from_blade(sig, blade(1, 4)) * f
        assert e14f == f
        assert rank(coordinate_matrix([f, e14f])) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 32), st.integers(1, 64), st.data())
def test_rank_transpose(rows, cols, data):
    entries = data.draw(st.lists(st.lists(st.one_of(st.just(Fraction(0)), fractions()),
                                          min_size=cols, max_size=cols),
                                 min_size=rows, max_size=rows))
    m = RationalMatrix(entries)
    assert rank(m) == rank(m.T)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.data())
def test_rank_against_numpy_integer_matrices(rows, cols, data):
    entries = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols),
                                 min_size=rows, max_size=rows))
    assert rank(RationalMatrix(entries)) == np.linalg.matrix_rank(np.array(entries, float))


class TestExtractBasis:
    def test_duplicate_removed(self):
        sig = Signature(3, 3)
        f = fu3(sig)
        e1f = Multivector.generator(sig, 1) * f
        assert extract_basis([f, e1f, f]) == [f, e1f]

    def test_ideal_33(self):
        sig = Signature(3, 3)
        assert len(extract_basis(left_products(sig, fu3(sig)))) == 8

    def test_ideal_35(self):
        sig = Signature(3, 5)
        assert len(extract_basis(left_products(sig, fu3(sig)))) == 32

    def test_mixed_signatures(self):
        with pytest.raises(SignatureMismatch):
            extract_basis([Multivector.scalar(Signature(1, 0), 1),
                           Multivector.scalar(Signature(0, 1), 1)])

    def test_zero_vectors_skipped(self):
        sig = Signature(1, 1)
        assert extract_basis([Multivector(sig), Multivector.scalar(sig, 2)]) == \
            [Multivector.scalar(sig, 2)]


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_extract_basis_independent_and_spanning(data):
    sig = Signature(2, 2)
    vecs = data.draw(st.lists(multivectors(sig), min_size=1, max_size=12))
    # include scalar multiples and sums to exercise dependence
    if len(vecs) > 1:
        vecs = vecs + [vecs[0] * 3, vecs[0] + vecs[1]]
    basis = extract_basis(vecs)
    full = rank(coordinate_matrix(vecs))
    assert len(basis) == full
    if basis:
        assert rank(coordinate_matrix(basis)) == len(basis)
    # greedy first-seen: positions match the dense pivot columns of the column matrix
    if vecs:
        _, _, pivots = row_reduce(coordinate_matrix(vecs, as_columns=True))
        assert basis == [vecs[i] for i in pivots]


def test_echelon_span_matches_dense():
    sig = Signature(3, 3)
    vecs = left_products(sig, fu3(sig))
    span = EchelonSpan()
    for v in vecs:
        span.add(dict(v.items()))
    assert len(span) == rank(coordinate_matrix(vecs)) == span_rank(vecs) == 8
