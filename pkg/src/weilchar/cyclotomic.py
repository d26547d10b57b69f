"""Exact arithmetic in Z[zeta_p] and in its subring Z[rho].

``CycInt`` stores an element of Z[zeta_p] on the basis 1, zeta, ...,
zeta^(p-2); the relation zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) is
applied on construction so the coordinate vector is unique.  Sums of
additive character values are accumulated as length-p exponent counts and
reduced once (``CycInt.from_counts``).

``GaussElem`` is the compact a + b*rho form where rho is the quadratic Gauss
sum of GF(q), rho^2 = delta*q.
"""

from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NonIntegralResult, NotInGaussRing
from .finite_field import FieldElement, FieldSpec, delta, field_new, parse_order

_INT64_SAFE = 2**62


class CycInt:
    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords: Sequence[int]):
        if len(coords) != p - 1:
            raise ValueError(f"expected {p - 1} coordinates, got {len(coords)}")
        self.p = p
        self.coords = tuple(int(c) for c in coords)

    @classmethod
    def from_counts(cls, p: int, counts: Sequence[int]) -> CycInt:
        """Element sum(counts[k] * zeta^k) for k in range(p)."""
        top = counts[p - 1]
        return cls(p, [counts[i] - top for i in range(p - 1)])

    @classmethod
    def from_int(cls, p: int, n: int) -> CycInt:
        return cls(p, [n] + [0] * (p - 2))

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> CycInt:
        counts = [0] * p
        counts[k % p] = 1
        return cls.from_counts(p, counts)

    def full(self) -> list[int]:
        """Length-p coefficient vector with a zero zeta^(p-1) entry."""
        return list(self.coords) + [0]

    def _lift(self, other) -> CycInt:
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise ValueError(f"mixed cyclotomic orders {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return CycInt(self.p, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return CycInt(self.p, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycInt(self.p, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.p, [a * other for a in self.coords])
        o = self._lift(other)
        if o is NotImplemented:
            return o
        p = self.p
        a, b = self.coords, o.coords
        bound = sum(abs(x) for x in a) * max((abs(y) for y in b), default=0)
        if bound < _INT64_SAFE:
            conv = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
            counts = [0] * p
            for k, v in enumerate(conv.tolist()):
                counts[k % p] += v
        else:
            counts = [0] * p
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            counts[(i + j) % p] += x * y
        return CycInt.from_counts(p, counts)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycInt:
        if k < 0:
            raise ValueError("negative powers are not integral in general")
        result = CycInt.from_int(self.p, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> CycInt:
        """Apply the automorphism zeta -> zeta^k (k prime to p)."""
        if k % self.p == 0:
            raise ValueError("k must be prime to p")
        counts = [0] * self.p
        for i, c in enumerate(self.coords):
            counts[(i * k) % self.p] += c
        return CycInt.from_counts(self.p, counts)

    def conj(self) -> CycInt:
        return self.galois(-1)

    def exact_div(self, d: int) -> CycInt:
        if any(c % d for c in self.coords):
            raise NonIntegralResult(f"{self} is not divisible by {d}")
        return CycInt(self.p, [c // d for c in self.coords])

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise NonIntegralResult(f"{self} is not a rational integer")
        return self.coords[0]

    def to_complex(self) -> complex:
        """Floating-point shadow, for display only."""
        w = cmath.exp(2j * cmath.pi / self.p)
        return sum(c * w**k for k, c in enumerate(self.coords))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.p, self.coords))

    def __repr__(self) -> str:
        return f"CycInt({self.p}, {list(self.coords)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"p": self.p, "coords": list(self.coords)}


@dataclass(frozen=True)
class GaussElem:
    """a + b*rho with rho^2 = delta*q."""

    a: int
    b: int
    delta: int
    q: int

    def _check(self, other: GaussElem) -> None:
        if (self.delta, self.q) != (other.delta, other.q):
            raise ValueError("GaussElem values from different fields")

    def __add__(self, other):
        if isinstance(other, int):
            return GaussElem(self.a + other, self.b, self.delta, self.q)
        self._check(other)
        return GaussElem(self.a + other.a, self.b + other.b, self.delta, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GaussElem(-self.a, -self.b, self.delta, self.q)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussElem(self.a * other, self.b * other, self.delta, self.q)
        self._check(other)
        dq = self.delta * self.q
        return GaussElem(
            self.a * other.a + self.b * other.b * dq,
            self.a * other.b + self.b * other.a,
            self.delta,
            self.q,
        )

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_int(self) -> int:
        if self.b:
            raise NonIntegralResult(f"{self} has a rho component")
        return self.a

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*rho"
        return f"{self.a} + {self.b}*rho" if self.b > 0 else f"{self.a} - {-self.b}*rho"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "delta": self.delta, "q": self.q}


def psi(a: FieldElement) -> CycInt:
    """Canonical additive character: zeta_p^tr(a)."""
    return CycInt.zeta(a.spec.p, a.spec.abs_trace(a.value))


@functools.cache
def gauss_rho(spec: FieldSpec) -> CycInt:
    """rho = sum over alpha of psi(alpha^2), cross-checked against sum chi(b) psi(b)."""
    p = spec.p
    counts = [0] * p
    for x in range(spec.q):
        counts[spec.abs_trace(spec.mul(x, x))] += 1
    rho = CycInt.from_counts(p, counts)
    signed = [0] * p
    for b in range(1, spec.q):
        signed[spec.abs_trace(b)] += spec.chi(b)
    if CycInt.from_counts(p, signed) != rho:
        raise AssertionError(f"Gauss sum expressions disagree for {spec!r}")
    if rho * rho != delta(spec) * spec.q:
        raise AssertionError(f"rho^2 != delta*q for {spec!r}")
    return rho


def gauss_pow(spec: FieldSpec, k: int) -> GaussElem:
    """rho^k for k >= 0."""
    if k < 0:
        raise ValueError("use q_rho_pow for negative exponents")
    return q_rho_pow(spec, 0, k)


def q_rho_pow(spec: FieldSpec, e: int, k: int) -> GaussElem:
    """q^e * rho^k in Z[rho]; raises NonIntegralResult if it leaves Z[rho]."""
    d, q = delta(spec), spec.q
    j, s = divmod(k, 2)
    qexp = e + j
    if qexp < 0:
        raise NonIntegralResult(f"q^{e} rho^{k} is not in Z[rho] for q={q}")
    c = d ** (j % 2) * q**qexp
    return GaussElem(0, c, d, q) if s else GaussElem(c, 0, d, q)


def qn_rho_pow(spec: FieldSpec, n: int, r: int) -> GaussElem:
    """q^n * rho^(-r), integral whenever r <= 2n."""
    return q_rho_pow(spec, n, -r)


def square_class_sums(spec: FieldSpec) -> tuple[CycInt, CycInt]:
    """Sums of psi over the nonzero squares and over the nonsquares."""
    p = spec.p
    sq, ns = [0] * p, [0] * p
    for a in range(1, spec.q):
        (sq if spec.chi(a) == 1 else ns)[spec.abs_trace(a)] += 1
    squares, nonsquares = CycInt.from_counts(p, sq), CycInt.from_counts(p, ns)
    rho = gauss_rho(spec)
    if squares != (rho - 1).exact_div(2) or nonsquares != (-rho - 1).exact_div(2):
        raise AssertionError(f"square-class sums disagree with rho for {spec!r}")
    return squares, nonsquares


def _spec_of(g: GaussElem) -> FieldSpec:
    return field_new(*parse_order(str(g.q)))


def embed(g: GaussElem, spec: FieldSpec | None = None) -> CycInt:
    """Replace rho by the explicit Gauss sum."""
    spec = spec or _spec_of(g)
    rho = gauss_rho(spec)
    return rho * g.b + g.a


def try_recognize(c: CycInt, spec: FieldSpec) -> GaussElem:
    """Write ``c`` as a + b*rho with integers a, b, or raise NotInGaussRing.

    When q is an even power of p, rho is itself a rational integer; the
    representation is then taken with b = 0.
    """
    rho = gauss_rho(spec)
    d = delta(spec)
    if c.p != spec.p:
        raise NotInGaussRing(f"order mismatch: {c.p} vs {spec.p}")
    if rho.is_rational():
        if not c.is_rational():
            raise NotInGaussRing(f"{c} is not rational")
        return GaussElem(c.coords[0], 0, d, spec.q)
    i = next(i for i in range(1, spec.p - 1) if rho.coords[i])
    b, rem = divmod(c.coords[i], rho.coords[i])
    if rem:
        raise NotInGaussRing(f"{c} is not in Z + Z*rho")
    a = c.coords[0] - b * rho.coords[0]
    g = GaussElem(a, b, d, spec.q)
    if rho * b + a != c:
        raise NotInGaussRing(f"{c} is not in Z + Z*rho")
    return g
