import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from weilchar.errors import DimensionMismatch, EnumerationTooLarge, NotSymmetric
from weilchar.finite_field import delta, field_from_string, field_new, nonsquare_index
from weilchar.linalg import det, matmul, rank, transpose
from weilchar.properties import random_form
from weilchar.quadform import (
    FormType,
    QuadForm,
    classify,
    diagonalize,
    enumerate_forms,
    evaluate,
    form_count,
    rank1_all,
)


def histogram(Q):
    F = Q.spec
    hist = [0] * F.q
    for x in itertools.product(range(F.q), repeat=Q.n):
        hist[Q.evaluate(x)] += 1
    return hist


def delta_by_counting(Q):
    """Delta read off from point counts alone (no diagonalization)."""
    F, n, r = Q.spec, Q.n, Q.rank
    if r == 0:
        return 1
    hist = histogram(Q)
    d = delta(F)
    if r % 2 == 0:
        sign = 1 if hist[0] > F.q ** (n - 1) else -1
        return sign * d ** (r // 2)
    s = hist[1]
    ns = hist[nonsquare_index(F)]
    return (1 if s > ns else -1) * d ** ((r - 1) // 2)


def test_zero_form():
    F = field_new(3)
    Q = QuadForm.zero(F, 3)
    diag, _ = diagonalize(Q)
    assert diag == [0, 0, 0]
    assert (Q.rank, Q.delta, Q.type) == (0, 1, FormType.ZERO)


def test_hyperbolic_plane_gf3():
    F = field_new(3)
    Q = QuadForm(F, [[0, 1], [1, 0]])
    diag, M = diagonalize(Q)
    assert matmul(F, matmul(F, M, Q.entries), transpose(M)) == [[diag[0], 0], [0, diag[1]]]
    assert sorted(diag) == [1, 2]
    assert (Q.rank, Q.delta) == (2, -1)
    assert Q.type == FormType.HYPERBOLIC


def test_diag_120_gf3():
    Q = QuadForm.diagonal(field_new(3), [1, 2, 0])
    assert (Q.rank, Q.delta, Q.type) == (2, -1, FormType.HYPERBOLIC)


def test_gf5_planes():
    F = field_new(5)
    nu = nonsquare_index(F)
    hyp = QuadForm.diagonal(F, [1, F.neg(1)])
    ell = QuadForm.diagonal(F, [1, F.neg(nu)])
    assert classify(hyp) == FormType.HYPERBOLIC
    assert classify(ell) == FormType.ELLIPTIC
    assert histogram(hyp)[0] == 2 * 5 - 1
    assert histogram(ell)[0] == 1


def test_odd_rank():
    assert classify(QuadForm.diagonal(field_new(5), [1, 0])) == FormType.ODD


@pytest.mark.parametrize("q, n, count", [(3, 1, 3), (3, 2, 27), (5, 3, 15625)])
def test_form_count(q, n, count):
    F = field_new(q)
    assert form_count(n, F) == count
    if count < 1000:
        forms = list(enumerate_forms(n, F))
        assert len(forms) == len(set(forms)) == count


def test_enumeration_guard():
    with pytest.raises(EnumerationTooLarge):
        next(enumerate_forms(4, field_new(7), limit=10**6))


def test_rank1_examples():
    F3 = field_new(3)
    forms = [Q for _, Q in rank1_all(1, F3)]
    assert sorted(Q.entries[0][0] for Q in forms) == [1, 2]
    assert len(rank1_all(2, F3)) == 8
    F5 = field_new(5)
    r1 = [Q for _, Q in rank1_all(2, F5)]
    assert len(r1) == len(set(r1)) == 24
    assert sum(Q.delta == 1 for Q in r1) == 12


@pytest.mark.parametrize("q, n", [(3, 1), (3, 2), (3, 3), (5, 2), (7, 2), (9, 2)])
def test_rank1_list_is_exactly_the_rank1_forms(q, n):
    F = field_from_string(str(q))
    listed = {Q for _, Q in rank1_all(n, F)}
    brute = {Q for Q in enumerate_forms(n, F) if Q.rank == 1}
    assert listed == brute and len(listed) == q**n - 1


def test_evaluate_examples():
    F = field_new(3)
    Q = QuadForm.diagonal(F, [1, 1])
    assert evaluate(Q, (1, 1)) == 2
    assert Q.evaluate((0, 0)) == 0


def test_parse_and_errors():
    F = field_new(3)
    Q = QuadForm.parse(F, "1,0;0,1")
    assert Q == QuadForm.diagonal(F, [1, 1])
    assert QuadForm.parse(F, Q.to_string()) == Q
    with pytest.raises(NotSymmetric):
        QuadForm.parse(F, "1,1;0,1")
    with pytest.raises(DimensionMismatch):
        QuadForm.parse(F, "1,0;0")
    with pytest.raises(ValueError):
        QuadForm.parse(F, "1,0;0,x")
    with pytest.raises(ValueError):
        QuadForm.parse(F, "1,0;0,3")


@pytest.mark.parametrize("q, n", [(3, 1), (3, 2), (3, 3), (5, 2), (7, 2), (9, 2)])
def test_invariants_against_counting_oracle(q, n):
    F = field_from_string(str(q))
    for Q in enumerate_forms(n, F):
        assert Q.rank == rank(F, Q.entries)
        assert Q.delta == delta_by_counting(Q), Q.to_string()
        if Q.rank == n:
            assert Q.delta == F.chi(det(F, Q.entries))


@pytest.mark.parametrize("q, n", [(3, 2), (3, 3), (5, 2), (5, 3), (9, 2), (25, 2)])
def test_diagonalization_is_a_congruence(q, n):
    F = field_from_string(str(q))
    rng = random.Random(q * 10 + n)
    for _ in range(100):
        Q = random_form(F, n, rng)
        diag, M = diagonalize(Q)
        assert det(F, M) != 0
        assert Q.congruent(M) == QuadForm.diagonal(F, diag)
        assert sum(1 for v in diag if v) == Q.rank


forms = st.builds(
    lambda q, n, seed: random_form(field_from_string(q), n, random.Random(seed)),
    st.sampled_from(["3", "5", "7", "9", "25"]), st.integers(1, 4), st.integers(0, 10**9),
)


@settings(max_examples=200, deadline=None)
@given(forms, st.integers(0, 10**9))
def test_scaling_law(Q, seed):
    rng = random.Random(seed)
    F = Q.spec
    x = [rng.randrange(F.q) for _ in range(Q.n)]
    beta = rng.randrange(F.q)
    assert Q.evaluate([F.mul(beta, v) for v in x]) == F.mul(F.mul(beta, beta), Q.evaluate(x))


@settings(max_examples=200, deadline=None)
@given(forms)
def test_additive_group_laws(Q):
    R = Q + Q - Q
    assert R == Q
    assert Q.scale(1) == Q
    assert (Q - Q).is_zero()
