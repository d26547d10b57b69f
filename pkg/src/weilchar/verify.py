"""Named exact-verification suites used by the ``verify`` command."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import counting, properties
from .cyclotomic import embed, gauss_rho, square_class_sums
from .errors import check_budget
from .finite_field import FieldSpec, delta
from .quadform import ENUM_LIMIT, QuadForm, enumerate_forms, form_count
from .weil_restriction import (
    TABLE_LIMIT,
    GElement,
    decompose_G,
    decompose_plusminus,
    group_elements,
    omega_charsum_oracle,
    omega_value,
    orbit_count,
    pointwise_check,
)
from .weilfree import build_subgroup, davenport_hasse_check, delta_of_trace_form, multiplicity_census


@dataclass
class Check:
    name: str
    passed: bool
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class Options:
    limit: int = ENUM_LIMIT
    seed: int = 0
    cases: int = 200


def suite_gauss(spec: FieldSpec, n: int, opts: Options) -> list[Check]:
    rho = gauss_rho(spec)
    d = delta(spec)
    sq, ns = square_class_sums(spec)
    return [
        Check("gauss: rho^2 = delta*q", rho * rho == d * spec.q, str(rho * rho), str(d * spec.q)),
        Check("gauss: square + nonsquare sums = -1", sq + ns == -1, str(sq + ns), "-1"),
        Check("gauss: square - nonsquare sums = rho", sq - ns == rho, str(sq - ns), str(rho)),
    ]


def suite_sum1(spec: FieldSpec, n: int, opts: Options) -> list[Check]:
    lhs = counting.sum1(n, spec, opts.limit)
    rhs = spec.q ** (n * (n - 1) // 2)
    return [Check(f"sum1: n={n}", lhs.is_rational() and lhs.a == rhs, str(lhs), str(rhs))]


def suite_qbinom(spec: FieldSpec, n: int, opts: Options) -> list[Check]:
    q = spec.q
    rhs = sum(counting.skew_term(n, k, q) for k in range(n // 2 + 1))
    brute = spec if q ** (n * (n - 1) // 2) <= opts.limit else None
    ok = counting.verify_qbinom_identity(n, q, brute)
    label = "qbinom: identity" + (" + skew enumeration" if brute else "")
    return [Check(label, ok, str(q ** (n * (n - 1) // 2)), str(rhs))]


def suite_sn(spec: FieldSpec, n: int, opts: Options) -> list[Check]:
    check_budget("S_n x GF(q)^n", form_count(n, spec) * spec.q**n, opts.limit)
    bad_closed = bad_table = bad_total = 0
    forms = 0
    for Q in enumerate_forms(n, spec, opts.limit):
        forms += 1
        brute = counting.brute_counts(Q)
        closed = counting.count_closed(Q)
        bad_closed += closed != brute
        bad_table += counting.count_table(Q) != closed
        bad_total += closed.total(spec.q) != spec.q**n
    return [
        Check("sn: closed form = enumeration", bad_closed == 0, f"{bad_closed} mismatches", f"0 of {forms}"),
        Check("sn: parity table = closed form", bad_table == 0, f"{bad_table} mismatches", f"0 of {forms}"),
        Check("sn: Z + (S+N)(q-1)/2 = q^n", bad_total == 0, f"{bad_total} mismatches", f"0 of {forms}"),
    ]


def suite_decomposition(spec: FieldSpec, n: int, opts: Options) -> list[Check]:
    q, dn = spec.q, delta(spec) ** n
    check_budget("G x S_n", 2 * form_count(n, spec) * spec.q**n, opts.limit)
    check_budget("inner-product table", form_count(n, spec) ** 2, max(opts.limit, TABLE_LIMIT))
    dec = decompose_G(n, spec, verify=True, limit=max(opts.limit, TABLE_LIMIT))
    bad_points = pointwise_check(dec, n, spec, opts.limit)
    oracle_bad = sum(
        embed(omega_value(g), spec) != omega_charsum_oracle(g.Q)
        for g in group_elements(n, spec, opts.limit) if g.sign == 1
    )
    plus, minus = decompose_plusminus(n, spec)
    minus_I = GElement(-1, QuadForm.zero(spec, n))
    checks = [
        Check("decomposition: degree", dec.degree() == q**n, str(dec.degree()), str(q**n)),
        Check("decomposition: inner products", dec.verified is True, str(dec.verified), "True"),
        Check("decomposition: pointwise on G", not bad_points, f"{len(bad_points)} mismatches", "0"),
        Check("decomposition: character-sum oracle", oracle_bad == 0, f"{oracle_bad} mismatches", "0"),
        Check("decomposition: omega+ + omega- = omega", (plus + minus).same_as(dec),
              f"{len((plus + minus).as_dict())} constituents", f"{len(dec.as_dict())} constituents"),
        Check("decomposition: omega+ degree", plus.degree() == (q**n + 1) // 2,
              str(plus.degree()), str((q**n + 1) // 2)),
        Check("decomposition: omega- degree", minus.degree() == (q**n - 1) // 2,
              str(minus.degree()), str((q**n - 1) // 2)),
        Check("decomposition: omega+(-I)", plus.evaluate(minus_I) == dn * (q**n + 1) // 2,
              str(plus.evaluate(minus_I)), str(dn * (q**n + 1) // 2)),
        Check("decomposition: omega-(-I)", minus.evaluate(minus_I) == -dn * (q**n - 1) // 2,
              str(minus.evaluate(minus_I)), str(-dn * (q**n - 1) // 2)),
    ]
    return checks


def suite_davenport_hasse(spec: FieldSpec, n: int, opts: Options) -> list[Check]:
    P, rhs, equal = davenport_hasse_check(n, spec)
    family, _ = build_subgroup(n, spec)
    try:
        for alpha in range(1, family.ext.q):
            delta_of_trace_form(alpha, family)
        law = True
    except AssertionError:
        law = False
    return [
        Check("davenport-hasse: P = (-1)^(n-1) rho^n", equal, str(P), str(rhs)),
        Check("davenport-hasse: Delta(Q_alpha) = (-1)^(n-1) X(alpha)", law, str(law), "True"),
    ]


def suite_weilfree(spec: FieldSpec, n: int, opts: Options) -> list[Check]:
    q = spec.q
    family, H = build_subgroup(n, spec)
    orbits = orbit_count(H, n, spec)
    census = multiplicity_census(family)
    values = sorted(set(census.values()))
    ones = sum(1 for v in census.values() if v == 1)
    return [
        Check("weilfree: |H| = 2q^n", len(H) == 2 * q**n, str(len(H)), str(2 * q**n)),
        Check("weilfree: orbit count = q^n", orbits == q**n, str(orbits), str(q**n)),
        Check("weilfree: census in {0,1}", set(values) <= {0, 1}, str(values), "[0, 1]"),
        Check("weilfree: census has q^n ones", ones == q**n, str(ones), str(q**n)),
    ]


def suite_properties(spec: FieldSpec, n: int, opts: Options) -> list[Check]:
    out = []
    for name, fn in properties.SUITES.items():
        failures = fn(opts.seed, opts.cases)
        out.append(Check(f"properties: {name}", not failures, f"{len(failures)} failures",
                         f"0 of {opts.cases}"))
    return out


SUITES: dict[str, Callable[[FieldSpec, int, Options], list[Check]]] = {
    "davenport-hasse": suite_davenport_hasse,
    "decomposition": suite_decomposition,
    "gauss": suite_gauss,
    "properties": suite_properties,
    "qbinom": suite_qbinom,
    "sn": suite_sn,
    "sum1": suite_sum1,
    "weilfree": suite_weilfree,
}


def run(which: str, spec: FieldSpec, n: int, opts: Options | None = None) -> list[Check]:
    opts = opts or Options()
    names = sorted(SUITES) if which == "all" else [which]
    checks: list[Check] = []
    for name in names:
        checks.extend(SUITES[name](spec, n, opts))
    return checks
