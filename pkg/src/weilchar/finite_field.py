"""Finite fields GF(q), q a power of an odd prime.

Elements are identified with integer indices in ``[0, q)``: the index of an
element is its coordinate vector over GF(p), read as base-p digits with the
constant coordinate least significant.  For a field built as an extension of
another field the coordinates over the base are base-``|base|`` digits, and
since base elements are themselves base-p numbers the two readings agree.
In particular, the elements of every field in the tower below a given field
are exactly the indices smaller than that subfield's order, and a rational
integer ``c`` always sits at index ``c mod p``.

All heavy loops elsewhere in the package work on these indices through the
``FieldSpec`` methods (``add``, ``mul``, ...).  ``FieldElement`` is the thin
operator-overloading wrapper for interactive use and tests.
"""

from __future__ import annotations

import functools
import itertools
import re
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldTooLarge,
    MixedFields,
    NotASubfield,
    NotPrime,
)

MAX_ORDER = 10**4
_ADD_TABLE_MAX = 729


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def parse_order(text: str) -> tuple[int, int]:
    """Parse ``"p^m"`` or a plain prime power ``"q"`` into ``(p, m)``.

    Only syntax and prime-power structure are checked here; characteristic and
    size restrictions are enforced by :func:`field_new`.
    """
    text = text.strip()
    m = re.fullmatch(r"(\d+)\s*\^\s*(\d+)", text)
    if m:
        p, e = int(m.group(1)), int(m.group(2))
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        return p, e
    if not text.isdigit():
        raise ValueError(f"cannot parse field order {text!r}")
    q = int(text)
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise NotPrime(f"{text} is not a prime power")
    return p, e


# -- polynomials over a field, coefficient lists of indices, constant first --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(F.sub(x, y))
    return _trim(out)


def _poly_mod(F: FieldSpec, a: Sequence[int], f: Sequence[int]) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    lead_inv = F.inv(f[-1])
    while len(a) - 1 >= df:
        c = F.mul(a[-1], lead_inv)
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            if fi:
                a[shift + i] = F.sub(a[shift + i], F.mul(c, fi))
        _trim(a)
    return a


def _poly_mulmod(F: FieldSpec, a: Sequence[int], b: Sequence[int], f: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _poly_mod(F, out, f)


def _poly_powmod(F: FieldSpec, a: Sequence[int], e: int, f: Sequence[int]) -> list[int]:
    result = [1]
    base = _poly_mod(F, a, f)
    while e:
        if e & 1:
            result = _poly_mulmod(F, result, base, f)
        base = _poly_mulmod(F, base, base, f)
        e >>= 1
    return result


def _poly_gcd(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(F, a, b)
    return a


def is_irreducible(F: FieldSpec, f: Sequence[int]) -> bool:
    """Test a polynomial over ``F`` for irreducibility (gcd with x^(Q^i) - x)."""
    f = _trim(list(f))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(d // 2):
        h = _poly_powmod(F, h, F.q, f)
        g = _poly_gcd(F, f, _poly_sub(F, h, x))
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(F: FieldSpec, d: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``d`` over ``F``.

    Coefficient lists are compared constant term first.
    """
    for low in itertools.product(range(F.q), repeat=d):
        f = list(low) + [1]
        if is_irreducible(F, f):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {d}")  # pragma: no cover


class FieldSpec:
    """A finite field, either GF(p) or a simple extension of another FieldSpec.

    Instances are immutable and cached; obtain them through :func:`field_new`
    or :func:`field_extension`.
    """

    def __init__(self, p: int, base: FieldSpec | None, modulus: Sequence[int]):
        self.p = p
        self.base = base
        self.modulus = tuple(modulus)
        self.degree = len(self.modulus) - 1
        self.base_q = p if base is None else base.q
        self.m = self.degree * (1 if base is None else base.m)
        self.q = p**self.m
        self._key = (p, None if base is None else base._key, self.modulus)
        self._build_tables()

    # -- construction --

    def _build_tables(self) -> None:
        q = self.q
        if self.base is None:
            g = next(g for g in range(2 if q > 2 else 1, q)
                     if all(pow(g, (q - 1) // l, q) != 1 for l in prime_factors(q - 1)))
            exp = [1] * (q - 1)
            for k in range(1, q - 1):
                exp[k] = exp[k - 1] * g % q
        else:
            F = self.base
            f = list(self.modulus)
            factors = prime_factors(q - 1)
            for cand in range(2, q):
                poly = self._coords(cand)
                if all(_poly_powmod(F, poly, (q - 1) // l, f) != [1] for l in factors):
                    break
            gen = _trim(self._coords(cand))
            exp = [0] * (q - 1)
            cur = [1]
            for k in range(q - 1):
                exp[k] = self._from_coords(cur)
                cur = _poly_mulmod(F, cur, gen, f)
        log = [0] * q
        for k, v in enumerate(exp):
            log[v] = k
        self._exp = exp + exp
        self._log = log
        self.generator = exp[1] if q > 2 else 1
        self._add_table = None
        self._neg_table = None
        self._trace_table = None
        if self.m > 1 and q <= _ADD_TABLE_MAX:
            digits = np.array([self._digits(i) for i in range(q)], dtype=np.int64)
            powers = self.p ** np.arange(self.m, dtype=np.int64)
            summed = (digits[:, None, :] + digits[None, :, :]) % self.p
            self._add_table = (summed @ powers).tolist()
            self._neg_table = (((-digits) % self.p) @ powers).tolist()

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _coords(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, self.base_q)
            out.append(r)
        return out

    def _from_coords(self, coords: Sequence[int]) -> int:
        v = 0
        for c in reversed(coords):
            v = v * self.base_q + c
        return v

    # -- identity --

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    @property
    def label(self) -> str:
        return f"{self.p}^{self.m}"

    def tower(self) -> list[FieldSpec]:
        """This field and every field below it, largest first."""
        out = [self]
        while out[-1].base is not None:
            out.append(out[-1].base)
        return out

    # -- arithmetic on indices --

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        p, r, place = self.p, 0, 1
        while a or b:
            r += ((a + b) % p) * place
            a //= p
            b //= p
            place *= p
        return r

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self._neg_table is not None:
            return self._neg_table[a]
        p, r, place = self.p, 0, 1
        while a:
            r += (-a % p) * place
            a //= p
            place *= p
        return r

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self!r}")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero(f"negative power of zero in {self!r}")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def chi(self, a: int) -> int:
        if a == 0:
            return 0
        return 1 if self._log[a] % 2 == 0 else -1

    def abs_trace(self, a: int) -> int:
        if self._trace_table is None:
            self._trace_table = [self._trace_to(x, self.p, self.m) for x in range(self.q)]
        return self._trace_table[a]

    def _trace_to(self, a: int, sub_q: int, d: int) -> int:
        t = 0
        conj = a
        for _ in range(d):
            t = self.add(t, conj)
            conj = self.power(conj, sub_q)
        return t

    def _subfield_degree(self, sub: FieldSpec) -> int:
        if sub.p == self.p and sub.m == 1 and sub.base is None:
            return self.m
        for f in self.tower():
            if f == sub:
                return self.m // sub.m
        raise NotASubfield(f"{sub!r} is not a subfield in the tower of {self!r}")

    def rel_trace(self, a: int, sub: FieldSpec) -> int:
        d = self._subfield_degree(sub)
        return self._trace_to(a, sub.q, d)

    def norm(self, a: int, sub: FieldSpec) -> int:
        self._subfield_degree(sub)
        return self.power(a, (self.q - 1) // (sub.q - 1))

    # -- element views --

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value % self.p if value < 0 else value)

    def __len__(self) -> int:
        return self.q

    def __iter__(self) -> Iterator[FieldElement]:
        return (FieldElement(self, i) for i in range(self.q))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)


class FieldElement:
    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        if not 0 <= value < spec.q:
            raise ValueError(f"index {value} out of range for {spec!r}")
        self.spec = spec
        self.value = value

    @property
    def coeffs(self) -> list[int]:
        """Coordinates over GF(p), constant term first."""
        return self.spec._digits(self.value)

    def _other(self, other: object) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise MixedFields(f"{self.spec!r} vs {other.spec!r}")
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.spec, self.spec.power(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.spec.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.spec!r}({self.value})"


@functools.cache
def _prime_field(p: int) -> FieldSpec:
    return FieldSpec(p, None, (0, 1))


def field_new(p: int, m: int = 1) -> FieldSpec:
    """GF(p^m) modulo the smallest monic irreducible polynomial over GF(p)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if m < 1:
        raise ValueError("m must be positive")
    if p**m > MAX_ORDER:
        raise FieldTooLarge(f"{p}^{m} exceeds {MAX_ORDER}")
    if m == 1:
        return _prime_field(p)
    return field_extension(_prime_field(p), m)


@functools.cache
def field_extension(base: FieldSpec, n: int) -> FieldSpec:
    """Degree-``n`` extension of ``base`` by its smallest monic irreducible."""
    if base.q**n > MAX_ORDER:
        raise FieldTooLarge(f"{base.q}^{n} exceeds {MAX_ORDER}")
    if n == 1:
        return base
    return FieldSpec(base.p, base, smallest_irreducible(base, n))


def field_from_string(text: str) -> FieldSpec:
    return field_new(*parse_order(text))


def quadratic_character(a: FieldElement) -> int:
    return a.spec.chi(a.value)


def delta(spec: FieldSpec) -> int:
    """chi(-1); +1 exactly when q = 1 mod 4."""
    return spec.chi(spec.neg(1))


def abs_trace(a: FieldElement) -> int:
    return a.spec.abs_trace(a.value)


def rel_trace(a: FieldElement, sub: FieldSpec) -> FieldElement:
    return FieldElement(sub, a.spec.rel_trace(a.value, sub))


def norm(a: FieldElement, sub: FieldSpec) -> FieldElement:
    return FieldElement(sub, a.spec.norm(a.value, sub))


def nonsquare_index(spec: FieldSpec) -> int:
    return next(i for i in range(1, spec.q) if spec.chi(i) == -1)


def nonsquare(spec: FieldSpec) -> FieldElement:
    """First nonsquare in index order."""
    return FieldElement(spec, nonsquare_index(spec))
