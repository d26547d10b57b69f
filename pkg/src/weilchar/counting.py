"""Solution counts of Q(x) = alpha, group orders, q-binomials and the
q-binomial identity counting skew-symmetric matrices by rank."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .cyclotomic import GaussElem, embed, q_rho_pow, qn_rho_pow, try_recognize
from .errors import NonIntegralCount, check_budget
from .finite_field import FieldElement, FieldSpec, delta
from .linalg import rank as matrix_rank
from .quadform import ENUM_LIMIT, FormType, QuadForm, enumerate_forms

BRUTE_LIMIT = 10**6


@dataclass(frozen=True)
class SolutionCounts:
    """Z: zeros of Q (x = 0 included); S: solutions of Q(x) = a for a fixed
    nonzero square a; N: the same for a fixed nonsquare."""

    Z: int
    S: int
    N: int

    def total(self, q: int) -> int:
        return self.Z + (self.S + self.N) * (q - 1) // 2


def _alpha_index(spec: FieldSpec, alpha) -> int:
    if isinstance(alpha, FieldElement):
        return alpha.value
    return int(alpha)


def count_brute(Q: QuadForm, alpha, limit: int = BRUTE_LIMIT) -> int:
    F, n = Q.spec, Q.n
    check_budget(f"GF({F.q})^{n}", F.q**n, limit)
    a = _alpha_index(F, alpha)
    return sum(1 for x in itertools.product(range(F.q), repeat=n) if Q.evaluate(x) == a)


def value_histogram(Q: QuadForm, limit: int = BRUTE_LIMIT) -> list[int]:
    F, n = Q.spec, Q.n
    check_budget(f"GF({F.q})^{n}", F.q**n, limit)
    hist = [0] * F.q
    for x in itertools.product(range(F.q), repeat=n):
        hist[Q.evaluate(x)] += 1
    return hist


def brute_counts(Q: QuadForm, limit: int = BRUTE_LIMIT) -> SolutionCounts:
    """Z, S, N by enumeration, checking that counts depend only on square class."""
    F = Q.spec
    hist = value_histogram(Q, limit)
    squares = {hist[a] for a in range(1, F.q) if F.chi(a) == 1}
    nonsquares = {hist[a] for a in range(1, F.q) if F.chi(a) == -1}
    if len(squares) != 1 or len(nonsquares) != 1:
        raise AssertionError(f"counts of {Q!r} are not constant on square classes")
    return SolutionCounts(hist[0], squares.pop(), nonsquares.pop())


def _collapse(value: GaussElem, spec: FieldSpec, what: str) -> int:
    g = try_recognize(embed(value, spec), spec)
    if g.b:
        raise NonIntegralCount(f"{what} = {g} is not a rational integer")
    return g.a


def count_closed(Q: QuadForm) -> SolutionCounts:
    """Z, S, N from the uniform expressions valid for both parities of rank."""
    F, n, r, D = Q.spec, Q.n, Q.rank, Q.delta
    q, d = F.q, delta(F)
    zero = GaussElem(0, 0, d, q)
    base = GaussElem(q ** (n - 1), 0, d, q)
    even_term = qn_rho_pow(F, n - 1, r) * D if r % 2 == 0 else zero
    odd_term = q_rho_pow(F, n, -r - 1) * (d * D) if r % 2 else zero
    S = _collapse(base - even_term + odd_term, F, "S")
    N = _collapse(base - even_term - odd_term, F, "N")
    Z = _collapse(base + even_term * (q - 1), F, "Z")
    return SolutionCounts(Z, S, N)


def count_table(Q: QuadForm) -> SolutionCounts:
    """Z, S, N from the two-row parity table (even rank / odd rank)."""
    F, n, r, D = Q.spec, Q.n, Q.rank, Q.delta
    q, d = F.q, delta(F)
    if r == 0:
        return SolutionCounts(q**n, 0, 0)
    if r % 2 == 0:
        S = q ** (n - 1) - d ** (r // 2) * D * q ** (n - r // 2 - 1)
        N = S
    else:
        t = d ** ((r - 1) // 2) * q ** (n - (r + 1) // 2) * D
        S, N = q ** (n - 1) + t, q ** (n - 1) - t
    return SolutionCounts(q**n - (S + N) * (q - 1) // 2, S, N)


# -- group orders and q-binomials --

def group_order(kind: str, size: int, q: int) -> int:
    """Order of GL(size), O+(size), O-(size), Oodd(size) or Sp(size) over GF(q).

    ``size`` is the matrix dimension; O+, O- and Sp need it even, Oodd odd.
    """
    if size < 0:
        raise ValueError("size must be nonnegative")
    if kind == "GL":
        return q ** (size * (size - 1) // 2) * prod(q**i - 1 for i in range(1, size + 1))
    if kind == "Oodd":
        if size % 2 == 0:
            raise ValueError("Oodd needs odd size")
        k = size // 2
        return 2 * q ** (k * k) * prod(q ** (2 * i) - 1 for i in range(1, k + 1))
    if size % 2:
        raise ValueError(f"{kind} needs even size")
    k = size // 2
    if kind == "Sp":
        return q ** (k * k) * prod(q ** (2 * i) - 1 for i in range(1, k + 1))
    if kind in ("O+", "O-"):
        if k == 0:
            if kind == "O-":
                raise ValueError("O-(0) does not exist")
            return 1
        factor = q**k - 1 if kind == "O+" else q**k + 1
        return 2 * q ** (k * (k - 1)) * factor * prod(q ** (2 * i) - 1 for i in range(1, k))
    raise ValueError(f"unknown group kind {kind!r}")


def qbinom(n: int, r: int, q: int) -> int:
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    num = prod(q ** (n - i) - 1 for i in range(r))
    den = prod(q ** (i + 1) - 1 for i in range(r))
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def _class_size(n: int, r: int, kind: str, q: int) -> int:
    value, rem = divmod(qbinom(n, r, q) * group_order("GL", r, q), group_order(kind, r, q))
    if rem:
        raise NonIntegralCount(f"class size for rank {r} ({kind}) is not an integer")
    return value


def congruence_class_size(S: QuadForm) -> int:
    """Number of symmetric matrices congruent to S."""
    r, q = S.rank, S.spec.q
    if r == 0:
        return 1
    kind = {FormType.ODD: "Oodd", FormType.HYPERBOLIC: "O+", FormType.ELLIPTIC: "O-"}[S.type]
    return _class_size(S.n, r, kind, q)


def class_sizes(n: int, q: int) -> dict[tuple[int, str], int]:
    """Sizes of all congruence classes of S_n, keyed by (rank, type).

    Odd ranks have two classes (Delta = +1 and -1) of equal size; they appear
    as ``(r, "odd-rank+")`` and ``(r, "odd-rank-")``.
    """
    out = {(0, FormType.ZERO.value): 1}
    for r in range(1, n + 1):
        if r % 2:
            size = _class_size(n, r, "Oodd", q)
            out[(r, "odd-rank+")] = size
            out[(r, "odd-rank-")] = size
        else:
            out[(r, FormType.HYPERBOLIC.value)] = _class_size(n, r, "O+", q)
            out[(r, FormType.ELLIPTIC.value)] = _class_size(n, r, "O-", q)
    return out


def census(n: int, spec: FieldSpec, limit: int = ENUM_LIMIT) -> dict[tuple[int, str], int]:
    """Exhaustive classification of S_n, keyed like :func:`class_sizes`."""
    out: dict[tuple[int, str], int] = {}
    for Q in enumerate_forms(n, spec, limit):
        key = Q.type.value
        if Q.type == FormType.ODD:
            key += "+" if Q.delta == 1 else "-"
        out[(Q.rank, key)] = out.get((Q.rank, key), 0) + 1
    return out


def orthogonal_difference(k: int, q: int) -> Fraction:
    """1/|O+(2k)| - 1/|O-(2k)| as an exact rational."""
    return Fraction(1, group_order("O+", 2 * k, q)) - Fraction(1, group_order("O-", 2 * k, q))


# -- the sum over S_n and the skew-symmetric identity --

def sum1(n: int, spec: FieldSpec, limit: int = ENUM_LIMIT) -> GaussElem:
    """sum over Q in S_n of rho^(-rank Q) Delta(Q), exactly in Z[rho]."""
    d, q = delta(spec), spec.q
    total = GaussElem(0, 0, d, q)
    for Q in enumerate_forms(n, spec, limit):
        total = total + qn_rho_pow(spec, n, Q.rank) * Q.delta
    scale = q**n
    if total.a % scale or total.b % scale:
        raise NonIntegralCount(f"{total} is not divisible by q^n")
    return GaussElem(total.a // scale, total.b // scale, d, q)


def verify_sum1(n: int, spec: FieldSpec, limit: int = ENUM_LIMIT) -> bool:
    return sum1(n, spec, limit) == GaussElem(spec.q ** (n * (n - 1) // 2), 0, delta(spec), spec.q)


def skew_term(n: int, k: int, q: int) -> int:
    """qbinom(n, 2k) q^(k^2 - k) prod_{i<k} (q^(2i+1) - 1)."""
    return qbinom(n, 2 * k, q) * q ** (k * k - k) * prod(q ** (2 * i + 1) - 1 for i in range(k))


def skew_rank_counts(n: int, spec: FieldSpec, limit: int = ENUM_LIMIT) -> dict[int, int]:
    """Skew-symmetric n x n matrices by rank, by enumeration."""
    F = spec
    check_budget("skew-symmetric matrices", F.q ** (n * (n - 1) // 2), limit)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out: dict[int, int] = {}
    for vals in itertools.product(range(F.q), repeat=len(pairs)):
        A = [[0] * n for _ in range(n)]
        for (i, j), v in zip(pairs, vals):
            A[i][j] = v
            A[j][i] = F.neg(v)
        r = matrix_rank(F, A)
        out[r] = out.get(r, 0) + 1
    return out


def verify_qbinom_identity(n: int, q: int, spec: FieldSpec | None = None) -> bool:
    """q^(n(n-1)/2) = sum_k skew_term(n, k, q), with each term cross-checked
    against the symplectic and orthogonal group-order routes.  When ``spec``
    is given, the terms are also compared with brute-force skew counts."""
    ok = sum(skew_term(n, k, q) for k in range(n // 2 + 1)) == q ** (n * (n - 1) // 2)
    for k in range(1, n // 2 + 1):
        term = skew_term(n, k, q)
        via_sp = Fraction(qbinom(n, 2 * k, q) * group_order("GL", 2 * k, q),
                          group_order("Sp", 2 * k, q))
        via_orth = (Fraction(1, q**k) * qbinom(n, 2 * k, q) * group_order("GL", 2 * k, q)
                    * orthogonal_difference(k, q))
        closed = Fraction(1, q ** (k * (k - 1)) * prod(q ** (2 * i) - 1 for i in range(1, k + 1)))
        ok &= via_sp == term and via_orth == term and orthogonal_difference(k, q) == closed
    if spec is not None:
        counts = skew_rank_counts(n, spec)
        ok &= all(counts.get(2 * k, 0) == skew_term(n, k, q) for k in range(n // 2 + 1))
        ok &= sum(counts.values()) == q ** (n * (n - 1) // 2)
    return ok
