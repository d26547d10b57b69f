import pytest

from weilchar.cyclotomic import gauss_rho
from weilchar.finite_field import field_from_string, field_new
from weilchar.weil_restriction import group_elements, omega_value, orbit_count
from weilchar.weilfree import (
    build_subgroup,
    davenport_hasse_check,
    delta_of_trace_form,
    lifted_gauss_sum,
    minimality_certificates,
    multiplicity_census,
    trace_form_family,
    trace_form_sums_check,
)


def F(q):
    return field_from_string(str(q))


def test_zero_alpha_gives_zero_form():
    family = trace_form_family(2, field_new(3))
    assert family.forms[0].is_zero()
    with pytest.raises(ValueError):
        delta_of_trace_form(0, family)


def test_q3_n2_family():
    family, H = build_subgroup(2, field_new(3))
    assert len(H) == 18
    assert all(Q.rank == 2 for Q in family.forms[1:])
    assert orbit_count(H, 2, field_new(3)) == 9
    ext = family.ext
    for alpha in range(1, ext.q):
        want = -1 if ext.chi(alpha) == 1 else 1
        assert family.forms[alpha].delta == want == delta_of_trace_form(alpha, family)


def test_q5_n3_alpha1():
    family = trace_form_family(3, field_new(5))
    assert family.forms[1].delta == 1 == delta_of_trace_form(1, family)


def test_davenport_hasse_examples():
    P, rhs, ok = davenport_hasse_check(2, field_new(3))
    assert ok and P == 3 and rhs == 3
    rho3 = gauss_rho(field_new(3))
    P, _, ok = davenport_hasse_check(3, field_new(3))
    assert ok and P == rho3 * rho3 * rho3 == rho3 * -3
    P, _, ok = davenport_hasse_check(2, field_new(5))
    assert ok and P == -5


@pytest.mark.parametrize("q, n", [(3, 1), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (9, 2)])
def test_davenport_hasse(q, n):
    spec = F(q)
    P, rhs, ok = davenport_hasse_check(n, spec)
    assert ok
    # the lifted sum of GF(q^n) is the Gauss sum of that field, computed independently
    assert P == gauss_rho(field_from_string(str(q**n)))


@pytest.mark.parametrize("q, n", [(3, 2), (3, 3), (5, 2), (7, 2)])
def test_trace_form_sums(q, n):
    family = trace_form_family(n, F(q))
    assert trace_form_sums_check(family)
    for alpha in range(1, family.ext.q):
        delta_of_trace_form(alpha, family)


def test_omega_nonzero_on_B_q3_n1():
    spec = field_new(3)
    rho = gauss_rho(spec)
    values = {omega_value(g) for g in group_elements(1, spec) if g.sign == 1}
    embedded = {tuple((rho * v.b + v.a).coords) for v in values}
    assert embedded == {(3, 0), tuple((-rho).coords), tuple(rho.coords)}


def test_stabilizer_of_e4_is_trivial():
    spec = field_new(3)
    _, H = build_subgroup(2, spec)
    v = (0, 0, 0, 1)
    fixers = [h for h in H if h.sign == 1 and h.act(v) == v]
    assert len(fixers) == 1 and fixers[0].Q.is_zero()


@pytest.mark.parametrize("q, n", [(3, 1), (3, 2), (3, 3), (5, 2)])
def test_census(q, n):
    family, H = build_subgroup(n, F(q))
    census = multiplicity_census(family)
    assert len(census) == len(H) == 2 * q**n
    assert set(census.values()) <= {0, 1}
    assert sum(census.values()) == q**n
    assert orbit_count(H, n, F(q)) == q**n


@pytest.mark.parametrize("q, n", [(3, 1), (3, 2), (5, 1)])
def test_minimality(q, n):
    report = minimality_certificates(n, F(q))
    assert report.ok
    assert report.orbit_sum == 2 * q ** (2 * n)


def test_minimality_q3_n2_orbit_sum():
    assert minimality_certificates(2, field_new(3)).orbit_sum == 2 * 81


def test_lifted_sum_n1_is_rho():
    for q in (3, 5, 7, 9):
        assert lifted_gauss_sum(1, F(q)) == gauss_rho(F(q))
