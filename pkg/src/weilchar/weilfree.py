"""Weil-free subgroups of G of the minimum order 2q^n.

GF(q)^n is identified with GF(q^n) through the basis 1, t, ..., t^(n-1) of a
degree-n extension of GF(q).  The trace forms Q_alpha(z) = tr(alpha z^2)
have Gram matrices [tr(alpha b_i b_j)]; they form an n-dimensional subspace
of S_n whose nonzero members are nonsingular, and
H = <-I> x {g_Q : Q = Q_alpha} is Weil-free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cyclotomic import CycInt, embed, gauss_rho
from .errors import NonIntegralMultiplicity, NonIntegralResult, SingularMember, check_budget
from .finite_field import FieldSpec, delta, field_extension
from .linalg import det
from .quadform import QuadForm, enumerate_forms
from .weil_restriction import GElement, omega_value, orbit_count

EXT_LIMIT = 10**4


@dataclass
class TraceFormFamily:
    base: FieldSpec
    ext: FieldSpec
    n: int
    basis: list[int]
    forms: list[QuadForm]

    def form(self, alpha: int) -> QuadForm:
        return self.forms[alpha]


def trace_form_family(n: int, spec: FieldSpec) -> TraceFormFamily:
    ext = field_extension(spec, n)
    basis = [spec.q**i for i in range(n)]
    forms = []
    for alpha in range(ext.q):
        rows = [[ext.rel_trace(ext.mul(alpha, ext.mul(bi, bj)), spec) for bj in basis]
                for bi in basis]
        forms.append(QuadForm(spec, rows))
    return TraceFormFamily(spec, ext, n, basis, forms)


def build_subgroup(n: int, spec: FieldSpec,
                   limit: int = EXT_LIMIT) -> tuple[TraceFormFamily, list[GElement]]:
    check_budget(f"GF({spec.q}^{n})", spec.q**n, limit)
    family = trace_form_family(n, spec)
    for alpha, Q in enumerate(family.forms):
        if alpha and Q.rank != n:
            raise SingularMember(f"Q_alpha for alpha={alpha} has rank {Q.rank} < {n}")
    H = [GElement(s, Q) for Q in family.forms for s in (1, -1)]
    return family, H


def delta_of_trace_form(alpha: int, family: TraceFormFamily) -> int:
    """Delta(Q_alpha) by diagonalization, checked against (-1)^(n-1) X(alpha)
    and against the discriminant-times-norm factorization."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    base, ext, n = family.base, family.ext, family.n
    got = family.forms[alpha].delta
    sign = (-1) ** (n - 1)
    if got != sign * ext.chi(alpha):
        raise AssertionError(f"Delta(Q_{alpha}) = {got}, expected {sign * ext.chi(alpha)}")
    # D_ij = b_i^(q^j); (det D)^2 lies in GF(q) and chi((det D)^2) = (-1)^(n-1)
    D = [[ext.power(b, base.q**j) for j in range(n)] for b in family.basis]
    disc = ext.power(det(ext, D), 2)
    nrm = ext.norm(alpha, base)
    if disc >= base.q or nrm >= base.q:
        raise AssertionError("discriminant or norm not in the base field")
    if base.chi(disc) != sign or base.chi(nrm) != ext.chi(alpha):
        raise AssertionError(f"discriminant factorization fails for alpha={alpha}")
    if base.chi(base.mul(disc, nrm)) != got:
        raise AssertionError(f"chi(det Q_alpha) != Delta for alpha={alpha}")
    return got


def lifted_gauss_sum(n: int, spec: FieldSpec, limit: int = EXT_LIMIT) -> CycInt:
    """sum over z in GF(q^n) of psi(z^2), psi the canonical character of GF(q^n)."""
    check_budget(f"GF({spec.q}^{n})", spec.q**n, limit)
    ext = field_extension(spec, n)
    counts = [0] * spec.p
    for z in range(ext.q):
        counts[ext.abs_trace(ext.mul(z, z))] += 1
    return CycInt.from_counts(spec.p, counts)


def davenport_hasse_check(n: int, spec: FieldSpec,
                          limit: int = EXT_LIMIT) -> tuple[CycInt, CycInt, bool]:
    """(P, (-1)^(n-1) rho^n, P == (-1)^(n-1) rho^n)."""
    P = lifted_gauss_sum(n, spec, limit)
    rhs = gauss_rho(spec) ** n * (-1) ** (n - 1)
    return P, rhs, P == rhs


def trace_form_sums_check(family: TraceFormFamily) -> bool:
    """sum over z of psi(tr(beta z^2)) equals X(beta) P for every beta != 0."""
    base, ext = family.base, family.ext
    P = lifted_gauss_sum(family.n, base)
    for beta in range(1, ext.q):
        counts = [0] * base.p
        for z in range(ext.q):
            t = ext.rel_trace(ext.mul(beta, ext.mul(z, z)), base)
            counts[base.abs_trace(t)] += 1
        if CycInt.from_counts(base.p, counts) != P * ext.chi(beta):
            return False
    return True


def multiplicity_census(family: TraceFormFamily) -> dict[tuple[int, int], int]:
    """(omega, mu)_H for every linear character mu = (eps, beta) of H, where
    mu(s g_{Q_alpha}) = eps^[s = -1] psi(tr(alpha beta))."""
    base, ext, n = family.base, family.ext, family.n
    p = base.p
    omega = [omega_value(GElement(1, Q)) for Q in family.forms]
    on_minus = delta(base) ** n
    rho = gauss_rho(base)
    order = 2 * ext.q
    out = {}
    for beta in range(ext.q):
        A, Bc, C = [0] * p, [0] * p, [0] * p
        for alpha, w in enumerate(omega):
            e = -base.abs_trace(ext.rel_trace(ext.mul(alpha, beta), base)) % p
            A[e] += w.a
            Bc[e] += w.b
            C[e] += 1
        on_B = CycInt.from_counts(p, A) + rho * CycInt.from_counts(p, Bc)
        plain = CycInt.from_counts(p, C) * on_minus
        for eps in (1, -1):
            try:
                m = (on_B + plain * eps).exact_div(order).to_int()
            except NonIntegralResult as exc:
                raise NonIntegralMultiplicity(f"mu=({eps},{beta}): {exc}") from None
            out[(eps, beta)] = m
    return out


@dataclass
class MinimalityReport:
    omega_nonzero_on_B: bool
    elements_checked: int
    trivial_stabilizers: bool
    stabilizers_checked: int
    orbit_sum: int
    orbit_sum_bound: int

    @property
    def ok(self) -> bool:
        return (self.omega_nonzero_on_B and self.trivial_stabilizers
                and self.orbit_sum == self.orbit_sum_bound)


def minimality_certificates(n: int, spec: FieldSpec, limit: int = 10**6) -> MinimalityReport:
    """Checkable facts behind the lower bound |H| >= 2q^n for Weil-free H."""
    nonzero = True
    checked = 0
    for Q in enumerate_forms(n, spec, limit):
        w = omega_value(GElement(1, Q))
        checked += 1
        if w.is_zero() or embed(w, spec) == 0:
            nonzero = False
    family, H = build_subgroup(n, spec)
    q = spec.q
    check_budget("stabilizer check", q ** (2 * n) * len(H), limit)
    trivial = True
    stabs = 0
    for x in itertools.product(range(q), repeat=n):
        for y in itertools.product(range(q), repeat=n):
            if not any(y):
                continue
            v = x + y
            fixers = [h for h in H if h.act(v) == v]
            stabs += 1
            if len(fixers) != 1 or fixers[0].sign != 1 or not fixers[0].Q.is_zero():
                trivial = False
    orbit_sum = len(H) * orbit_count(H, n, spec)
    return MinimalityReport(nonzero, checked, trivial, stabs, orbit_sum, 2 * q ** (2 * n))
