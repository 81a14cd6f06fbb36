"""Dense matrices over a field with involution."""
from __future__ import annotations

from fractions import Fraction

from . import linalg
from .scalars.base import FieldElement


class Matrix:
    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.rows = [[field(v) for v in r] for r in rows]
        if self.rows and any(len(r) != len(self.rows[0]) for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, field, n):
        return cls(field, linalg.identity(n, field.one))

    @classmethod
    def zero(cls, field, n, m=None):
        m = n if m is None else m
        return cls(field, [[field.zero] * m for _ in range(n)])

    @classmethod
    def diag(cls, field, entries):
        n = len(entries)
        M = cls.zero(field, n)
        for i, e in enumerate(entries):
            M.rows[i][i] = field(e)
        return M

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def copy(self):
        return Matrix(self.field, [list(r) for r in self.rows])

    def __add__(self, other):
        return Matrix(self.field, [[a + b for a, b in zip(r, s)]
                                   for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return Matrix(self.field, linalg.matmul(self.rows, other.rows))
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self.field(other)
            return Matrix(self.field, [[a * c for a in r] for r in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self.field(other)
            return Matrix(self.field, [[c * a for a in r] for r in self.rows])
        return NotImplemented

    def transpose(self):
        return Matrix(self.field, linalg.transpose(self.rows))

    def star(self, conj=None):
        """Conjugate transpose ``[a_ij]* = [a_ji*]``."""
        conj = conj or self.field.conj
        return Matrix(self.field, [[conj(a) for a in r] for r in linalg.transpose(self.rows)])

    def det(self):
        return linalg.bareiss_det(self.rows)

    def inverse(self):
        return Matrix(self.field, linalg.inverse(self.rows))

    def solve(self, b):
        return linalg.solve(self.rows, list(b))

    def trace(self):
        acc = self.field.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def is_diagonal(self):
        return all(self.rows[i][j].is_zero() for i in range(self.n)
                   for j in range(len(self.rows[i])) if i != j)

    def diagonal(self):
        return [self.rows[i][i] for i in range(self.n)]

    def column(self, j):
        return [r[j] for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return False
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(tuple(tuple(a._key() for a in r) for r in self.rows))

    def tolist(self):
        return [list(r) for r in self.rows]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows) + "]"

    __repr__ = __str__
