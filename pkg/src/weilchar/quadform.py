"""Symmetric matrices over GF(q) viewed as quadratic forms.

A ``QuadForm`` is immutable.  Its rank, discriminant character ``delta``
(chi of the product of the nonzero diagonal entries after congruence
diagonalization, +1 for the zero form) and type are computed once on first
use and cached.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import DimensionMismatch, NotSymmetric, check_budget
from .finite_field import FieldElement, FieldSpec, delta, nonsquare_index
from .linalg import Matrix, identity

ENUM_LIMIT = 10**7


class FormType(str, enum.Enum):
    ZERO = "zero"
    ODD = "odd-rank"
    HYPERBOLIC = "hyperbolic"
    ELLIPTIC = "elliptic"


def _index(spec: FieldSpec, v) -> int:
    if isinstance(v, FieldElement):
        if v.spec != spec:
            raise ValueError(f"entry from {v.spec!r}, expected {spec!r}")
        return v.value
    v = int(v)
    if not 0 <= v < spec.q:
        raise ValueError(f"entry {v} out of range for {spec!r}")
    return v


class QuadForm:
    __slots__ = ("spec", "n", "entries", "__dict__")

    def __init__(self, spec: FieldSpec, rows: Sequence[Sequence]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix is not square")
        entries = tuple(tuple(_index(spec, v) for v in r) for r in rows)
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise NotSymmetric(f"entry ({i},{j}) differs from ({j},{i})")
        self.spec = spec
        self.n = n
        self.entries = entries

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> QuadForm:
        return cls(spec, [[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, spec: FieldSpec, diag: Sequence) -> QuadForm:
        n = len(diag)
        return cls(spec, [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_upper(cls, spec: FieldSpec, n: int, upper: Sequence[int]) -> QuadForm:
        rows = [[0] * n for _ in range(n)]
        it = iter(upper)
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = next(it)
        return cls(spec, rows)

    @classmethod
    def parse(cls, spec: FieldSpec, text: str) -> QuadForm:
        """Parse ``"1,0;0,1"`` (rows by ';', entries by ',', integer indices)."""
        rows = [[int(tok) for tok in row.split(",")] for row in text.strip().split(";")]
        return cls(spec, rows)

    def upper(self) -> tuple[int, ...]:
        return tuple(self.entries[i][j] for i in range(self.n) for j in range(i, self.n))

    def to_string(self) -> str:
        return ";".join(",".join(str(v) for v in row) for row in self.entries)

    # -- algebra --

    def _same(self, other: QuadForm) -> None:
        if self.spec != other.spec or self.n != other.n:
            raise DimensionMismatch("forms of different size or field")

    def __add__(self, other: QuadForm) -> QuadForm:
        self._same(other)
        F = self.spec
        return QuadForm(F, [[F.add(a, b) for a, b in zip(r, s)]
                            for r, s in zip(self.entries, other.entries)])

    def __neg__(self) -> QuadForm:
        F = self.spec
        return QuadForm(F, [[F.neg(a) for a in r] for r in self.entries])

    def __sub__(self, other: QuadForm) -> QuadForm:
        return self + (-other)

    def scale(self, c) -> QuadForm:
        F = self.spec
        c = _index(F, c)
        return QuadForm(F, [[F.mul(c, a) for a in r] for r in self.entries])

    def congruent(self, M: Sequence[Sequence[int]]) -> QuadForm:
        """M Q M^T."""
        from .linalg import matmul, transpose

        F = self.spec
        return QuadForm(F, matmul(F, matmul(F, M, self.entries), transpose(M)))

    def evaluate(self, x: Sequence) -> int:
        """x Q x^T as a field index."""
        if len(x) != self.n:
            raise DimensionMismatch(f"vector of length {len(x)} for {self.n}x{self.n} form")
        F = self.spec
        x = [_index(F, v) for v in x]
        s = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.entries[i]
            t = 0
            for j, xj in enumerate(x):
                if xj and row[j]:
                    t = F.add(t, F.mul(row[j], xj))
            s = F.add(s, F.mul(xi, t))
        return s

    def trace_pairing(self, other: QuadForm) -> int:
        """Tr(S Q) for S = self, Q = other."""
        self._same(other)
        F = self.spec
        s = 0
        for i in range(self.n):
            for j in range(self.n):
                a, b = self.entries[i][j], other.entries[j][i]
                if a and b:
                    s = F.add(s, F.mul(a, b))
        return s

    # -- classification --

    @cached_property
    def _diagonalization(self) -> tuple[list[int], Matrix]:
        return _diagonalize(self.spec, self.entries)

    @property
    def rank(self) -> int:
        return sum(1 for d in self._diagonalization[0] if d)

    @cached_property
    def delta(self) -> int:
        F = self.spec
        prod = 1
        for d in self._diagonalization[0]:
            if d:
                prod = F.mul(prod, d)
        return F.chi(prod)

    @cached_property
    def type(self) -> FormType:
        r = self.rank
        if r == 0:
            return FormType.ZERO
        if r % 2:
            return FormType.ODD
        k = r // 2
        return FormType.HYPERBOLIC if self.delta == delta(self.spec) ** k else FormType.ELLIPTIC

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadForm):
            return NotImplemented
        return self.spec == other.spec and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.spec, self.entries))

    def __repr__(self) -> str:
        return f"QuadForm({self.spec!r}, {self.to_string()!r})"


def _diagonalize(F: FieldSpec, entries) -> tuple[list[int], Matrix]:
    n = len(entries)
    A = [list(r) for r in entries]
    M = identity(n)

    def add_multiple(i: int, j: int, c: int) -> None:
        # row_i += c row_j and col_i += c col_j, i.e. A <- E A E^T with E = I + c e_ij
        A[i] = [F.add(x, F.mul(c, y)) for x, y in zip(A[i], A[j])]
        for row in A:
            row[i] = F.add(row[i], F.mul(c, row[j]))
        M[i] = [F.add(x, F.mul(c, y)) for x, y in zip(M[i], M[j])]

    def swap(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        M[i], M[j] = M[j], M[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(k, n)
                         if i != j and A[i][j]), None)
            if pair is None:
                break
            # all remaining diagonal entries are zero: new A_ii = 2 A_ij != 0 (odd char)
            add_multiple(pair[0], pair[1], 1)
            piv = pair[0]
        if piv != k:
            swap(piv, k)
        inv = F.inv(A[k][k])
        for i in range(k + 1, n):
            if A[i][k]:
                add_multiple(i, k, F.neg(F.mul(A[i][k], inv)))
    return [A[i][i] for i in range(n)], M


def diagonalize(Q: QuadForm) -> tuple[list[int], Matrix]:
    """Diagonal entries D and invertible M with M Q M^T = diag(D)."""
    diag, M = Q._diagonalization
    return list(diag), [list(r) for r in M]


def classify(Q: QuadForm) -> FormType:
    return Q.type


def evaluate(Q: QuadForm, x: Sequence) -> int:
    return Q.evaluate(x)


def form_count(n: int, spec: FieldSpec) -> int:
    return spec.q ** (n * (n + 1) // 2)


def enumerate_forms(n: int, spec: FieldSpec, limit: int = ENUM_LIMIT) -> Iterator[QuadForm]:
    """Every n x n symmetric matrix once; upper triangle read as base-q digits,
    most significant first."""
    check_budget(f"S_{n} over {spec!r}", form_count(n, spec), limit)
    for upper in itertools.product(range(spec.q), repeat=n * (n + 1) // 2):
        yield QuadForm.from_upper(spec, n, upper)


@dataclass(frozen=True)
class Rank1Label:
    """x^T x (or nu x^T x when ``scaled``) for a vector x taken up to sign."""

    x: tuple[int, ...]
    scaled: bool

    def form(self, spec: FieldSpec) -> QuadForm:
        c = nonsquare_index(spec) if self.scaled else 1
        x = self.x
        return QuadForm(spec, [[spec.mul(c, spec.mul(a, b)) for b in x] for a in x])


def _sign_canonical(spec: FieldSpec, x: Sequence[int]) -> bool:
    lead = next(v for v in x if v)
    return lead < spec.neg(lead)


def rank1_all(n: int, spec: FieldSpec, limit: int = ENUM_LIMIT) -> list[tuple[Rank1Label, QuadForm]]:
    """All q^n - 1 symmetric matrices of rank 1."""
    check_budget(f"rank-1 forms of size {n} over {spec!r}", spec.q**n, limit)
    out = []
    for scaled in (False, True):
        for x in itertools.product(range(spec.q), repeat=n):
            if any(x) and _sign_canonical(spec, x):
                label = Rank1Label(tuple(x), scaled)
                out.append((label, label.form(spec)))
    return out
