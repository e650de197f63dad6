"""Exact linear algebra over Q for spans of multivectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .blades import Multivector
from .errors import DimensionMismatch, SignatureMismatch


@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if entries and len({len(r) for r in entries}) != 1:
            raise DimensionMismatch("matrix rows have different lengths")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.entries)) if self.entries else self

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries))
        return RationalMatrix([[sum((a * b for a, b in zip(row, col)), Fraction(0))
                                for col in cols] for row in self.entries])

    def __neg__(self):
        return RationalMatrix([[-v for v in row] for row in self.entries])

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]


def row_reduce(m: RationalMatrix) -> tuple[RationalMatrix, int, list[int]]:
    """Reduced row echelon form; returns ``(rref, rank, pivot_columns)``."""
    a = m.tolist()
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [vi - factor * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RationalMatrix(a) if a else m, len(pivots), pivots


def rank(m: RationalMatrix) -> int:
    return row_reduce(m)[1]


def coordinate_matrix(vectors: Sequence[Multivector], as_columns: bool = False) -> RationalMatrix:
    """Dense blade-coordinate matrix (one row per vector, columns by bitmask)."""
    if not vectors:
        return RationalMatrix([])
    size = 1 << vectors[0].sig.n
    rows = []
    for v in vectors:
        row = [Fraction(0)] * size
        for b, c in v.items():
            row[b] = c
        rows.append(row)
    m = RationalMatrix(rows)
    return m.T if as_columns else m


class EchelonSpan:
    """Incrementally maintained reduced echelon basis of sparse vectors.

    Each stored row has coefficient 1 at its pivot and 0 at every other
    pivot, so reducing a new vector takes one pass over its keys.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        v = dict(vec)
        for key in [k for k in v if k in self.rows]:
            c = v.get(key, 0)
            if c == 0:
                continue
            for k2, c2 in self.rows[key].items():
                nv = v.get(k2, 0) - c * c2
                if nv:
                    v[k2] = nv
                else:
                    v.pop(k2, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec`` if it is independent of the span; report whether it was."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        inv = 1 / v[pivot]
        v = {k: c * inv for k, c in v.items()}
        for row in self.rows.values():
            c = row.get(pivot, 0)
            if c:
                for k2, c2 in v.items():
                    nv = row.get(k2, 0) - c * c2
                    if nv:
                        row[k2] = nv
                    else:
                        row.pop(k2, None)
        self.rows[pivot] = v
        return True


def independent_indices(vectors: Iterable[Multivector]) -> list[int]:
    """Positions of the first-seen greedy basis among ``vectors``."""
    span = EchelonSpan()
    seen = set()
    keep = []
    for i, v in enumerate(vectors):
        if not v:
            continue
        # a scalar multiple of an earlier vector adds nothing to the span
        lead = next(iter(v.items()))[1]
        key = v.scale(1 / lead)
        if key in seen:
            continue
        seen.add(key)
        if span.add(dict(v.items())):
            keep.append(i)
    return keep


def extract_basis(vectors: Sequence[Multivector]) -> list[Multivector]:
    """Greedy first-seen basis of the span, preserving input order."""
    sigs = {v.sig for v in vectors}
    if len(sigs) > 1:
        raise SignatureMismatch("extract_basis needs vectors of one signature")
    return [vectors[i] for i in independent_indices(vectors)]


def span_rank(vectors: Iterable[Multivector]) -> int:
    return len(independent_indices(vectors))
