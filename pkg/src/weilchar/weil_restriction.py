"""The Weil character of Sp(2n, q) restricted to G = <-I> x B.

B is the elementary abelian group of matrices g_Q = [[I, 0], [Q, I]] with Q
symmetric, so an element of G is a pair (sign, Q) multiplying as
(s1, Q1)(s2, Q2) = (s1 s2, Q1 + Q2).  Its linear characters are

    lambda_S^{+-}(g_Q) = psi(Tr(SQ)),   lambda_S^{+-}(-g_Q) = +-psi(Tr(SQ)).

The Weil character on G is taken from its closed form,
omega(g_Q) = q^n rho^(-rank Q) Delta(Q) and omega(-g_Q) = delta^n;
``omega_charsum_oracle`` recomputes omega on B as an explicit character sum
over GF(q)^n, independently of rank and Delta.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .cyclotomic import CycInt, GaussElem, embed, gauss_rho, qn_rho_pow
from .errors import NonIntegralMultiplicity, NonIntegralResult, check_budget
from .finite_field import FieldSpec, delta, nonsquare_index
from .quadform import ENUM_LIMIT, QuadForm, enumerate_forms, form_count, rank1_all

ORACLE_LIMIT = 10**6
TABLE_LIMIT = 10**6
ORBIT_LIMIT = 10**8


@dataclass(frozen=True)
class GElement:
    sign: int
    Q: QuadForm

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> GElement:
        return cls(1, QuadForm.zero(spec, n))

    @property
    def n(self) -> int:
        return self.Q.n

    @property
    def spec(self) -> FieldSpec:
        return self.Q.spec

    def __mul__(self, other: GElement) -> GElement:
        return GElement(self.sign * other.sign, self.Q + other.Q)

    def key(self) -> tuple:
        return (self.sign, self.Q.upper())

    def act(self, v: Sequence[int]) -> tuple[int, ...]:
        """Right action on V = GF(q)^(2n): (x, y) -> sign * (x + yQ, y)."""
        F, n = self.spec, self.n
        x, y = v[:n], v[n:]
        out = []
        for j in range(n):
            s = x[j]
            for i in range(n):
                if y[i] and self.Q.entries[i][j]:
                    s = F.add(s, F.mul(y[i], self.Q.entries[i][j]))
            out.append(s)
        out.extend(y)
        if self.sign == -1:
            out = [F.neg(c) for c in out]
        return tuple(out)


def group_order(n: int, spec: FieldSpec) -> int:
    return 2 * form_count(n, spec)


def group_elements(n: int, spec: FieldSpec, limit: int = ENUM_LIMIT) -> Iterator[GElement]:
    for Q in enumerate_forms(n, spec, limit):
        yield GElement(1, Q)
        yield GElement(-1, Q)


@dataclass(frozen=True)
class CharacterLabel:
    """lambda_S^sign; ``sign`` is '+', '-', or None for a character of B."""

    S: QuadForm
    sign: str | None = None

    def __post_init__(self):
        if self.sign not in ("+", "-", None):
            raise ValueError(f"bad sign {self.sign!r}")

    def name(self) -> str:
        return f"lambda[{self.S.to_string()}]{self.sign or ''}"


def omega_value(g: GElement) -> GaussElem:
    spec, n = g.spec, g.n
    if g.sign == -1:
        return GaussElem(delta(spec) ** n, 0, delta(spec), spec.q)
    return qn_rho_pow(spec, n, g.Q.rank) * g.Q.delta


def omega_charsum_oracle(Q: QuadForm, limit: int = ORACLE_LIMIT) -> CycInt:
    """sum over x of ((1+d)/2) psi(Q(x)) + ((1-d)/2) psi(nu Q(x)), by enumeration."""
    F, n = Q.spec, Q.n
    check_budget(f"GF({F.q})^{n}", F.q**n, limit)
    c = 1 if delta(F) == 1 else nonsquare_index(F)
    counts = [0] * F.p
    for x in itertools.product(range(F.q), repeat=n):
        counts[F.abs_trace(F.mul(c, Q.evaluate(x)))] += 1
    return CycInt.from_counts(F.p, counts)


def lambda_value(label: CharacterLabel, g: GElement) -> CycInt:
    F = g.spec
    val = CycInt.zeta(F.p, F.abs_trace(label.S.trace_pairing(g.Q)))
    if g.sign == -1:
        if label.sign is None:
            raise ValueError("characters of B are not defined on -B")
        if label.sign == "-":
            val = -val
    return val


# -- inner products --

def _weighted_upper(S: QuadForm) -> list[int]:
    # Tr(SQ) = sum_i S_ii Q_ii + 2 sum_{i<j} S_ij Q_ij
    F, n = S.spec, S.n
    return [S.entries[i][j] if i == j else F.add(S.entries[i][j], S.entries[i][j])
            for i in range(n) for j in range(i, n)]


class _OmegaTable:
    """omega(g_Q) as (a, b) over all Q, with upper-triangle vectors."""

    def __init__(self, n: int, spec: FieldSpec, limit: int):
        self.n, self.spec = n, spec
        self.forms = list(enumerate_forms(n, spec, limit))
        self.uppers = [Q.upper() for Q in self.forms]
        self.omega = []
        for Q in self.forms:
            w = omega_value(GElement(1, Q))
            self.omega.append((w.a, w.b))

    def sums(self, S: QuadForm) -> tuple[CycInt, CycInt]:
        """(sum_Q omega(g_Q) conj(lambda_S(g_Q)), sum_Q conj(lambda_S(g_Q)))."""
        F = self.spec
        p = F.p
        A, Bc, C = [0] * p, [0] * p, [0] * p
        ws = [(k, w) for k, w in enumerate(_weighted_upper(S)) if w]
        add, mul, tr = F.add, F.mul, F.abs_trace
        for u, (a, b) in zip(self.uppers, self.omega):
            t = 0
            for k, w in ws:
                if u[k]:
                    t = add(t, mul(w, u[k]))
            e = -tr(t) % p
            A[e] += a
            Bc[e] += b
            C[e] += 1
        rho = gauss_rho(F)
        return CycInt.from_counts(p, A) + rho * CycInt.from_counts(p, Bc), CycInt.from_counts(p, C)


def _as_multiplicity(total: CycInt, order: int, label: CharacterLabel) -> int:
    try:
        m = total.exact_div(order).to_int()
    except NonIntegralResult as exc:
        raise NonIntegralMultiplicity(f"{label.name()}: {exc}") from None
    if m < 0:
        raise NonIntegralMultiplicity(f"{label.name()}: negative multiplicity {m}")
    return m


def _label_multiplicities(table: _OmegaTable, S: QuadForm) -> dict[CharacterLabel, int]:
    n, F = table.n, table.spec
    on_B, plain = table.sums(S)
    on_minus = plain * (delta(F) ** n)
    order = group_order(n, F)
    out = {}
    for sign, eps in (("+", 1), ("-", -1)):
        label = CharacterLabel(S, sign)
        out[label] = _as_multiplicity(on_B + on_minus * eps, order, label)
    label = CharacterLabel(S, None)
    out[label] = _as_multiplicity(on_B, order // 2, label)
    return out


def multiplicity(label: CharacterLabel, limit: int = ENUM_LIMIT) -> int:
    """(omega, lambda) over G, or over B when ``label.sign`` is None."""
    table = _OmegaTable(label.S.n, label.S.spec, limit)
    return _label_multiplicities(table, label.S)[label]


def multiplicity_table(n: int, spec: FieldSpec, limit: int = TABLE_LIMIT,
                       labels: Iterable[QuadForm] | None = None) -> dict[CharacterLabel, int]:
    """Inner products of omega with lambda_S^+, lambda_S^-, lambda_S for every S
    (or for the given S only).  Cost is |S_n| per S."""
    N = form_count(n, spec)
    forms = list(labels) if labels is not None else None
    check_budget(f"inner-product table over S_{n}({spec!r})",
                 N * (len(forms) if forms is not None else N), limit)
    table = _OmegaTable(n, spec, ENUM_LIMIT)
    out: dict[CharacterLabel, int] = {}
    for S in forms if forms is not None else table.forms:
        out.update(_label_multiplicities(table, S))
    return out


# -- decompositions --

@dataclass
class Decomposition:
    q: int
    n: int
    entries: list[tuple[CharacterLabel, int]]
    verified: bool | None = field(default=None, compare=False)

    def as_dict(self) -> dict[CharacterLabel, int]:
        out: dict[CharacterLabel, int] = {}
        for label, m in self.entries:
            out[label] = out.get(label, 0) + m
        return {k: v for k, v in out.items() if v}

    def degree(self) -> int:
        return sum(m for _, m in self.entries)

    def evaluate(self, g: GElement) -> CycInt:
        total = CycInt.from_int(g.spec.p, 0)
        for label, m in self.entries:
            total = total + lambda_value(label, g) * m
        return total

    def __add__(self, other: Decomposition) -> Decomposition:
        merged = self.as_dict()
        for label, m in other.as_dict().items():
            merged[label] = merged.get(label, 0) + m
        return Decomposition(self.q, self.n, list(merged.items()))

    def same_as(self, other: Decomposition) -> bool:
        return self.as_dict() == other.as_dict()

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "constituents": [
                {
                    "S": label.S.to_string(),
                    "sign": label.sign or "none",
                    "multiplicity": m,
                    "deltaS": label.S.delta,
                    "rankS": label.S.rank,
                }
                for label, m in self.entries
            ],
        }


def surviving_rank1(n: int, spec: FieldSpec) -> list[QuadForm]:
    """Rank-1 S with Delta(S) = delta, in enumeration order of x."""
    d = delta(spec)
    out = []
    for label, S in rank1_all(n, spec):
        if S.delta != (-1 if label.scaled else 1):
            raise AssertionError(f"unexpected Delta for {label}")
        if S.delta == d:
            out.append(S)
    return out


def _closed_G(n: int, spec: FieldSpec) -> Decomposition:
    dn = delta(spec) ** n
    zero = QuadForm.zero(spec, n)
    entries = []
    if (1 + dn) // 2:
        entries.append((CharacterLabel(zero, "+"), (1 + dn) // 2))
    if (1 - dn) // 2:
        entries.append((CharacterLabel(zero, "-"), (1 - dn) // 2))
    for S in surviving_rank1(n, spec):
        entries.append((CharacterLabel(S, "+"), 1))
        entries.append((CharacterLabel(S, "-"), 1))
    return Decomposition(spec.q, n, entries)


def _verify_against_table(dec: Decomposition, table: dict[CharacterLabel, int], signs) -> bool:
    want = dec.as_dict()
    got = {k: v for k, v in table.items() if v and k.sign in signs}
    return want == got


def decompose_G(n: int, spec: FieldSpec, verify: bool = True,
                limit: int = TABLE_LIMIT) -> Decomposition:
    """omega restricted to G, from the closed form; checked against all inner
    products when the table fits in ``limit``."""
    dec = _closed_G(n, spec)
    if verify and form_count(n, spec) ** 2 <= limit:
        dec.verified = _verify_against_table(dec, multiplicity_table(n, spec, limit), ("+", "-"))
    return dec


def decompose_B(n: int, spec: FieldSpec, verify: bool = True,
                limit: int = TABLE_LIMIT) -> Decomposition:
    entries = [(CharacterLabel(QuadForm.zero(spec, n)), 1)]
    entries += [(CharacterLabel(S), 2) for S in surviving_rank1(n, spec)]
    dec = Decomposition(spec.q, n, entries)
    if verify and form_count(n, spec) ** 2 <= limit:
        dec.verified = _verify_against_table(dec, multiplicity_table(n, spec, limit), (None,))
    return dec


def decompose_plusminus(n: int, spec: FieldSpec) -> tuple[Decomposition, Decomposition]:
    """Restrictions of the two irreducible Weil characters omega_+ and omega_-."""
    dn = delta(spec) ** n
    plus_sign, minus_sign = ("+", "-") if dn == 1 else ("-", "+")
    zero = QuadForm.zero(spec, n)
    plus = []
    if (1 + dn) // 2:
        plus.append((CharacterLabel(zero, "+"), (1 + dn) // 2))
    if (1 - dn) // 2:
        plus.append((CharacterLabel(zero, "-"), (1 - dn) // 2))
    minus = []
    for S in surviving_rank1(n, spec):
        plus.append((CharacterLabel(S, plus_sign), 1))
        minus.append((CharacterLabel(S, minus_sign), 1))
    return Decomposition(spec.q, n, plus), Decomposition(spec.q, n, minus)


def pointwise_check(dec: Decomposition, n: int, spec: FieldSpec,
                    limit: int = ENUM_LIMIT) -> list[GElement]:
    """Elements g of G where embed(omega(g)) differs from the decomposition."""
    bad = []
    for g in group_elements(n, spec, limit):
        if embed(omega_value(g), spec) != dec.evaluate(g):
            bad.append(g)
    return bad


# -- orbits --

def _vectors(n: int, spec: FieldSpec) -> list[tuple[int, ...]]:
    return list(itertools.product(range(spec.q), repeat=2 * n))


def fixed_points(g: GElement) -> int:
    """Number of v in V with v g = v."""
    F, n = g.spec, g.n
    total = 0
    for y in itertools.product(range(F.q), repeat=n):
        if g.sign == -1:
            # -(x + yQ, y) = (x, y) forces y = 0 and then x = 0
            total += 1 if not any(y) else 0
            continue
        if all(_dot_col(F, y, g.Q, j) == 0 for j in range(n)):
            total += F.q**n
    return total


def _dot_col(F: FieldSpec, y, Q: QuadForm, j: int) -> int:
    s = 0
    for i, yi in enumerate(y):
        if yi and Q.entries[i][j]:
            s = F.add(s, F.mul(yi, Q.entries[i][j]))
    return s


def orbit_count(H: Sequence[GElement], n: int, spec: FieldSpec, limit: int = ORBIT_LIMIT) -> int:
    """Orbits of the subgroup H (listed extensionally) on GF(q)^(2n), by Burnside."""
    check_budget("orbit count", spec.q ** (2 * n) * len(H), limit)
    total = sum(fixed_points(h) for h in H)
    count, rem = divmod(total, len(H))
    if rem:
        raise AssertionError("Burnside average is not an integer; H is not a group")
    return count


def is_weil_free(H: Sequence[GElement], n: int, spec: FieldSpec, limit: int = ORBIT_LIMIT) -> bool:
    return orbit_count(H, n, spec, limit) == spec.q**n


def orbit_partition(gens: Sequence[GElement], n: int, spec: FieldSpec) -> list[int]:
    """Orbit representative index of each vector of V under <gens>, by union-find."""
    vecs = _vectors(n, spec)
    index = {v: i for i, v in enumerate(vecs)}
    parent = list(range(len(vecs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in gens:
        for i, v in enumerate(vecs):
            a, b = find(i), find(index[g.act(v)])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(i) for i in range(len(vecs))]


def subgroup_generated(gens: Sequence[GElement], n: int, spec: FieldSpec) -> list[GElement]:
    """All elements of <gens>, by closure."""
    start = GElement.identity(spec, n)
    seen = {start.key(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = h * g
                if k.key() not in seen:
                    seen[k.key()] = k
                    nxt.append(k)
        frontier = nxt
    return list(seen.values())
