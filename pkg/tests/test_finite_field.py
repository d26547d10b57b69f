import itertools

import pytest
from hypothesis import given, settings, strategies as st

from weilchar.errors import EvenCharacteristic, FieldTooLarge, MixedFields, NotPrime
from weilchar.finite_field import (
    FieldElement,
    abs_trace,
    delta,
    field_extension,
    field_from_string,
    field_new,
    is_irreducible,
    nonsquare,
    norm,
    parse_order,
    quadratic_character,
)

ORDERS = ["3", "5", "7", "9", "25", "27", "49", "81", "125", "343"]


def squares(F):
    return {F.mul(x, x) for x in range(1, F.q)}


def test_prime_field_modulus_is_x():
    F = field_new(3, 1)
    assert F.q == 3 and F.modulus == (0, 1)


def test_gf9_modulus_is_smallest_irreducible_quadratic():
    F = field_new(3, 2)
    # lexicographic scan of monic quadratics, root test as irreducibility oracle
    first = next(
        (c0, c1, 1)
        for c0, c1 in itertools.product(range(3), repeat=2)
        if all((c0 + c1 * x + x * x) % 3 for x in range(3))
    )
    assert F.modulus == first == (1, 0, 1)


@pytest.mark.parametrize("p, m, exc", [(2, 1, EvenCharacteristic), (9, 1, NotPrime),
                                       (1, 1, NotPrime), (3, 9, FieldTooLarge)])
def test_field_new_errors(p, m, exc):
    with pytest.raises(exc):
        field_new(p, m)


@pytest.mark.parametrize("text, expected", [("3^2", (3, 2)), ("9", (3, 2)), ("5", (5, 1)), ("343", (7, 3))])
def test_parse_order(text, expected):
    assert parse_order(text) == expected


@pytest.mark.parametrize("text", ["6", "abc", "3^0", "0"])
def test_parse_order_rejects(text):
    with pytest.raises(ValueError):
        field_from_string(text)


def test_small_arithmetic():
    F3, F5 = field_new(3), field_new(5)
    assert F3.mul(2, 2) == 1
    assert F5.inv(2) == 3
    assert F3.chi(2) == -1
    assert F5.chi(4) == 1


def test_gf9_x_times_x_reduces_mod_modulus():
    F = field_new(3, 2)
    x = FieldElement(F, 3)
    assert x.coeffs == [0, 1]
    # x^2 = -1 modulo x^2 + 1
    assert (x * x).coeffs == [2, 0]


def test_gf9_generator_is_nonsquare():
    F = field_new(3, 2)
    assert F.generator not in squares(F)
    assert F.chi(F.generator) == -1


@pytest.mark.parametrize("q, d", [(3, -1), (5, 1), (7, -1), (9, 1), (27, -1), (25, 1)])
def test_delta(q, d):
    assert delta(field_from_string(str(q))) == d


@pytest.mark.parametrize("q, first", [(3, 2), (5, 2)])
def test_nonsquare_small(q, first):
    assert nonsquare(field_new(q)).value == first


@pytest.mark.parametrize("text", ORDERS)
def test_chi_matches_square_table(text):
    F = field_from_string(text)
    sq = squares(F)
    assert len(sq) == (F.q - 1) // 2
    for a in range(F.q):
        assert F.chi(a) == (0 if a == 0 else 1 if a in sq else -1)
    assert nonsquare(F).value == min(set(range(1, F.q)) - sq)


def test_trace_on_prime_field_is_identity():
    F = field_new(3)
    assert abs_trace(FieldElement(F, 2)) == 2


def test_gf9_trace_is_a_plus_a_cubed_and_additive():
    F, K = field_new(3, 2), field_new(3)
    for a in range(F.q):
        assert F.abs_trace(a) == F.add(a, F.power(a, 3))
        for b in range(F.q):
            assert F.abs_trace(F.add(a, b)) == K.add(F.abs_trace(a), F.abs_trace(b))


def test_gf9_norm_of_generator_generates_gf3():
    F, K = field_new(3, 2), field_new(3)
    g = FieldElement(F, F.generator)
    assert norm(g, K).value == 2
    assert {F.norm(a, K) for a in range(1, F.q)} == {1, 2}


@pytest.mark.parametrize("p, m, n", [(3, 1, 2), (3, 2, 2), (5, 1, 3), (3, 1, 4)])
def test_relative_trace_and_norm_land_in_subfield(p, m, n):
    K = field_new(p, m)
    F = field_extension(K, n)
    assert F.q == K.q**n
    Kq = K.q
    traces = [F.rel_trace(a, K) for a in range(F.q)]
    assert all(t < Kq for t in traces)
    # trace is surjective and each fiber has q^(n-1) elements
    assert all(traces.count(t) == Kq ** (n - 1) for t in range(Kq))
    norms = [F.norm(a, K) for a in range(1, F.q)]
    assert all(0 < v < Kq for v in norms)
    assert all(norms.count(v) == (F.q - 1) // (Kq - 1) for v in range(1, Kq))


def test_subfield_embedding_is_prefix_of_indices():
    K = field_new(3, 2)
    F = field_extension(K, 2)
    for a in range(K.q):
        for b in range(K.q):
            assert F.mul(a, b) == K.mul(a, b)
            assert F.add(a, b) == K.add(a, b)


def test_mixed_fields_rejected():
    a = FieldElement(field_new(3), 1)
    b = FieldElement(field_new(5), 1)
    with pytest.raises(MixedFields):
        a + b


def test_division_by_zero():
    F = field_new(5)
    with pytest.raises(ZeroDivisionError):
        FieldElement(F, 1) / FieldElement(F, 0)


def test_is_irreducible_rejects_products():
    F = field_new(3)
    assert is_irreducible(F, [1, 0, 1])
    assert not is_irreducible(F, [2, 0, 1])  # x^2 - 1


def test_quadratic_character_wrapper():
    F = field_new(7)
    assert [quadratic_character(FieldElement(F, a)) for a in range(7)] == [0, 1, 1, -1, 1, -1, -1]


@st.composite
def triples(draw):
    F = field_from_string(draw(st.sampled_from(ORDERS)))
    a, b, c = (FieldElement(F, draw(st.integers(0, F.q - 1))) for _ in range(3))
    return F, a, b, c


@settings(max_examples=300, deadline=None)
@given(triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == F.zero
    if a:
        assert a * a.inverse() == F.one
        assert a ** (F.q - 1) == F.one
    assert quadratic_character(a * b) == quadratic_character(a) * quadratic_character(b)
    assert abs_trace(a + b) == (abs_trace(a) + abs_trace(b)) % F.p
    assert abs_trace(a ** F.p) == abs_trace(a)
