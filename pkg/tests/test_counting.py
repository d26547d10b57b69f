import itertools
from fractions import Fraction

import pytest

from weilchar.counting import (
    SolutionCounts,
    brute_counts,
    census,
    class_sizes,
    congruence_class_size,
    count_brute,
    count_closed,
    count_table,
    group_order,
    orthogonal_difference,
    qbinom,
    skew_rank_counts,
    skew_term,
    sum1,
    verify_qbinom_identity,
    verify_sum1,
)
from weilchar.finite_field import field_from_string, field_new, nonsquare_index
from weilchar.linalg import det, matmul, transpose
from weilchar.quadform import FormType, QuadForm, enumerate_forms, rank1_all


def F(q):
    return field_from_string(str(q))


def test_count_examples():
    F3 = field_new(3)
    Q = QuadForm.diagonal(F3, [1, 1])
    assert count_brute(Q, 0) == 1
    assert count_brute(Q, 1) == 4
    assert count_closed(Q) == SolutionCounts(1, 4, 4)
    assert count_closed(QuadForm.diagonal(F3, [1])) == SolutionCounts(1, 2, 0)
    zero = QuadForm.zero(F(5), 3)
    assert count_closed(zero) == SolutionCounts(125, 0, 0)
    assert count_brute(zero, 2) == 0


@pytest.mark.parametrize("q, n", [(3, 1), (5, 1), (7, 1), (9, 1), (25, 1), (49, 1),
                                  (3, 2), (5, 2), (7, 2), (3, 3)])
def test_closed_form_equals_enumeration(q, n):
    spec = F(q)
    for Q in enumerate_forms(n, spec):
        c = count_closed(Q)
        assert c == brute_counts(Q) == count_table(Q), Q.to_string()
        assert c.total(q) == q**n


def test_group_order_examples():
    assert group_order("GL", 1, 3) == 2
    assert group_order("O+", 2, 3) == 4
    assert group_order("Sp", 2, 3) == 24
    assert group_order("O+", 0, 3) == 1
    with pytest.raises(ValueError):
        group_order("O-", 0, 3)
    with pytest.raises(ValueError):
        group_order("Sp", 3, 3)


def _preserving(spec, A):
    n = len(A)
    count = 0
    for flat in itertools.product(range(spec.q), repeat=n * n):
        M = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if det(spec, M) == 0:
            continue
        if matmul(spec, matmul(spec, M, A), transpose(M)) == A:
            count += 1
    return count


@pytest.mark.parametrize("q", [3, 5])
def test_small_group_orders_by_enumeration(q):
    spec = F(q)
    assert _preserving(spec, [[0, 1], [1, 0]]) == group_order("O+", 2, q)
    ell = QuadForm.diagonal(spec, [1, spec.neg(nonsquare_index(spec))])
    assert _preserving(spec, [list(r) for r in ell.entries]) == group_order("O-", 2, q)
    assert _preserving(spec, [[1]]) == group_order("Oodd", 1, q)
    J = [[0, 1], [spec.neg(1), 0]]
    assert _preserving(spec, J) == group_order("Sp", 2, q)
    gl = sum(1 for flat in itertools.product(range(q), repeat=4)
             if det(spec, [list(flat[:2]), list(flat[2:])]))
    assert gl == group_order("GL", 2, q)


def _span(spec, vecs):
    out = set()
    for coeffs in itertools.product(range(spec.q), repeat=len(vecs)):
        v = [0] * len(vecs[0])
        for c, w in zip(coeffs, vecs):
            v = [spec.add(a, spec.mul(c, b)) for a, b in zip(v, w)]
        out.add(tuple(v))
    return frozenset(out)


def test_qbinom_examples():
    spec = field_new(3)
    assert qbinom(2, 1, 3) == 4
    assert qbinom(7, 0, 5) == 1
    assert qbinom(4, 2, 3) == 130
    vecs = list(itertools.product(range(3), repeat=4))
    planes = {_span(spec, [u, v]) for u in vecs for v in vecs}
    assert sum(1 for s in planes if len(s) == 9) == 130
    lines = {_span(spec, [u]) for u in itertools.product(range(3), repeat=2)}
    assert sum(1 for s in lines if len(s) == 3) == 4


@pytest.mark.parametrize("q, n", [(3, 1), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_class_sizes_match_census(q, n):
    sizes = class_sizes(n, q)
    assert census(n, F(q)) == {k: v for k, v in sizes.items() if v}
    assert sum(sizes.values()) == q ** (n * (n + 1) // 2)


@pytest.mark.parametrize("q, n", [(3, 1), (3, 2), (5, 2), (3, 3)])
def test_rank1_class_size(q, n):
    spec = F(q)
    for _, S in rank1_all(n, spec):
        assert congruence_class_size(S) == (q**n - 1) // 2
    assert congruence_class_size(QuadForm.zero(spec, n)) == 1


def test_hyperbolic_class_size_q3_n2():
    spec = field_new(3)
    hyp = [Q for Q in enumerate_forms(2, spec) if Q.type == FormType.HYPERBOLIC]
    assert congruence_class_size(hyp[0]) == len(hyp) == class_sizes(2, 3)[(2, "hyperbolic")]


def test_identity_examples():
    assert skew_term(2, 0, 3) + skew_term(2, 1, 3) == 1 + 2 == 3
    for q in (3, 5, 7, 9):
        assert verify_qbinom_identity(1, q)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_qbinom_identity(n, q):
    assert verify_qbinom_identity(n, q)


@pytest.mark.parametrize("n", range(1, 5))
def test_skew_counts_by_enumeration(n):
    spec = field_new(3)
    counts = skew_rank_counts(n, spec)
    assert set(counts) <= set(range(0, n + 1, 2))
    for k in range(n // 2 + 1):
        assert counts.get(2 * k, 0) == skew_term(n, k, 3)
    assert verify_qbinom_identity(n, 3, spec)


def test_orthogonal_difference_closed_form():
    for q in (3, 5, 7):
        assert orthogonal_difference(1, q) == Fraction(1, q**2 - 1)


@pytest.mark.parametrize("q, n, value", [(3, 1, 1), (3, 2, 3), (3, 3, 27), (5, 1, 1), (5, 2, 5),
                                         (7, 1, 1), (7, 2, 7), (9, 2, 9)])
def test_sum1(q, n, value):
    s = sum1(n, F(q))
    assert s.is_rational() and s.a == value
    assert verify_sum1(n, F(q))
