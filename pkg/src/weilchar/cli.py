"""Command-line interface.

Examples:
  weilchar decompose --q 3 --n 2 --format json
  weilchar count --q 3 --form "1,0;0,1" --alpha 1
  weilchar verify all --q 3 --n 2
  weilchar weilfree --q 3 --n 2
  weilchar gauss --q 3^2

Exit codes: 0 success, 2 a verification mismatch, 64 usage error,
65 enumeration guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import counting, verify
from .cyclotomic import gauss_rho, square_class_sums
from .errors import (
    DimensionMismatch,
    EnumerationTooLarge,
    EvenCharacteristic,
    FieldTooLarge,
    NotPrime,
    NotSymmetric,
)
from .finite_field import FieldSpec, delta, field_from_string
from .quadform import ENUM_LIMIT, QuadForm
from .weil_restriction import TABLE_LIMIT, decompose_B, decompose_G, decompose_plusminus, orbit_count
from .weilfree import build_subgroup, davenport_hasse_check, multiplicity_census

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 2, 64, 65
SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser, need_n: bool = True, n_default: int | None = 1) -> None:
    p.add_argument("--q", required=True, help='field order, "p^m" or a prime power')
    if need_n:
        p.add_argument("--n", type=int, default=n_default, help=f"dimension n (default {n_default})")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.add_argument("--max-enum", type=int, default=None, help="override enumeration cap")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="weilchar", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="decompose omega restricted to G or B")
    _common(p)
    p.add_argument("--group", choices=("G", "B", "plus", "minus"), default="G")

    p = sub.add_parser("count", help="solution counts of Q(x) = alpha")
    _common(p, n_default=None)
    p.add_argument("--form", required=True, help='symmetric matrix, e.g. "1,0;0,1"')
    p.add_argument("--alpha", type=int, default=None, help="field element index")

    p = sub.add_parser("verify", help="run an exact verification suite")
    p.add_argument("which", choices=sorted(verify.SUITES) + ["all"])
    _common(p)
    p.add_argument("--cases", type=int, default=200, help="cases per randomized suite")

    p = sub.add_parser("weilfree", help="construct and check a Weil-free subgroup of order 2q^n")
    _common(p)

    p = sub.add_parser("gauss", help="the quadratic Gauss sum of GF(q)")
    _common(p, need_n=False)
    return ap


def _field(text: str) -> FieldSpec:
    try:
        return field_from_string(text)
    except (NotPrime, EvenCharacteristic, FieldTooLarge, ValueError) as exc:
        raise UsageError(f"bad --q {text!r}: {exc}") from None


def _emit(report: dict, fmt: str, lines: list[str]) -> None:
    report = {"schema": SCHEMA, **report}
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _check_n(n: int) -> None:
    if n < 1:
        raise UsageError(f"--n must be positive, got {n}")


def cmd_decompose(args) -> int:
    F = _field(args.q)
    n = args.n
    _check_n(n)
    limit = args.max_enum or TABLE_LIMIT
    if args.group == "G":
        dec = decompose_G(n, F, verify=True, limit=limit)
    elif args.group == "B":
        dec = decompose_B(n, F, verify=True, limit=limit)
    else:
        plus, minus = decompose_plusminus(n, F)
        dec = plus if args.group == "plus" else minus
    body = dec.to_json()
    body.update(command="decompose", group=args.group, degree=dec.degree(), verified=dec.verified)
    lines = [f"omega|{args.group} over GF({F.q}), n={n}: {len(dec.entries)} constituents, "
             f"degree {dec.degree()}"]
    for c in body["constituents"]:
        lines.append(f"  S={c['S']:<24} sign={c['sign']:<4} mult={c['multiplicity']} "
                     f"rank={c['rankS']} Delta={c['deltaS']:+d}")
    verdict = {True: "verified by inner products", False: "MISMATCH", None: "closed form only"}
    lines.append(verdict[dec.verified])
    _emit(body, args.format, lines)
    return EXIT_MISMATCH if dec.verified is False else EXIT_OK


def cmd_count(args) -> int:
    F = _field(args.q)
    try:
        Q = QuadForm.parse(F, args.form)
    except (NotSymmetric, DimensionMismatch, ValueError) as exc:
        raise UsageError(f"bad --form: {exc}") from None
    if args.n is not None and args.n != Q.n:
        raise UsageError(f"--n {args.n} does not match a {Q.n}x{Q.n} form")
    if args.alpha is not None and not 0 <= args.alpha < F.q:
        raise UsageError(f"--alpha must be an index in [0, {F.q})")
    closed = counting.count_closed(Q)
    limit = args.max_enum or counting.BRUTE_LIMIT
    verified = None
    if F.q**Q.n <= limit:
        verified = counting.brute_counts(Q, limit) == closed
    body = {
        "command": "count", "q": F.q, "n": Q.n, "form": Q.to_string(),
        "Z": closed.Z, "S": closed.S, "N": closed.N,
        "rank": Q.rank, "Delta": Q.delta, "type": Q.type.value, "verified": verified,
    }
    lines = [f"Q = {Q.to_string()} over GF({F.q}): rank {Q.rank}, Delta {Q.delta:+d}, {Q.type.value}",
             f"Z = {closed.Z}, S = {closed.S}, N = {closed.N}"]
    if args.alpha is not None:
        chi = F.chi(args.alpha)
        count = closed.Z if chi == 0 else closed.S if chi == 1 else closed.N
        body.update(alpha=args.alpha, count=count)
        lines.append(f"#{{x : Q(x) = {args.alpha}}} = {count}")
        if verified is not None:
            verified = verified and counting.count_brute(Q, args.alpha, limit) == count
            body["verified"] = verified
    lines.append({True: "verified by enumeration", False: "MISMATCH", None: "closed form only"}[verified])
    _emit(body, args.format, lines)
    return EXIT_MISMATCH if verified is False else EXIT_OK


def cmd_verify(args) -> int:
    F = _field(args.q)
    _check_n(args.n)
    opts = verify.Options(limit=args.max_enum or ENUM_LIMIT, seed=args.seed, cases=args.cases)
    checks = verify.run(args.which, F, args.n, opts)
    ok = all(c.passed for c in checks)
    body = {"command": "verify", "which": args.which, "q": F.q, "n": args.n, "seed": args.seed,
            "checks": [c.to_json() for c in checks], "passed": ok}
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.lhs} | {c.rhs}" for c in checks]
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    _emit(body, args.format, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_weilfree(args) -> int:
    F = _field(args.q)
    n = args.n
    _check_n(n)
    family, H = build_subgroup(n, F)
    orbits = orbit_count(H, n, F, args.max_enum or 10**8)
    census = multiplicity_census(family)
    ones = sum(1 for v in census.values() if v == 1)
    P, rhs, equal = davenport_hasse_check(n, F)
    ok = orbits == F.q**n and set(census.values()) <= {0, 1} and ones == F.q**n and equal
    body = {
        "command": "weilfree", "q": F.q, "n": n, "order": len(H),
        "family": [{"alpha": a, "Q": Q.to_string(), "rank": Q.rank, "Delta": Q.delta}
                   for a, Q in enumerate(family.forms)],
        "orbit_count": orbits, "weil_free": orbits == F.q**n,
        "census": {"values": sorted(set(census.values())), "ones": ones, "characters": len(census)},
        "davenport_hasse": {"P": P.to_json(), "rhs": rhs.to_json(), "equal": equal},
        "passed": ok,
    }
    lines = [f"H of order {len(H)} in G over GF({F.q}), n={n}"]
    lines += [f"  Q_{a:<4} = {Q.to_string():<24} rank {Q.rank} Delta {Q.delta:+d}"
              for a, Q in enumerate(family.forms)]
    lines += [f"orbits on V: {orbits} (q^n = {F.q**n})",
              f"multiplicity census: {ones} ones among {len(census)} characters",
              f"Davenport-Hasse: P = {P}, (-1)^(n-1) rho^n = {rhs}: {'equal' if equal else 'DIFFERENT'}"]
    _emit(body, args.format, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_gauss(args) -> int:
    F = _field(args.q)
    rho = gauss_rho(F)
    sq, ns = square_class_sums(F)
    z = rho.to_complex()
    body = {
        "command": "gauss", "q": F.q, "p": F.p, "delta": delta(F),
        "rho": rho.to_json(), "rho_squared": (rho * rho).to_json(),
        "square_sum": sq.to_json(), "nonsquare_sum": ns.to_json(),
        "rho_approx": [round(z.real, 12), round(z.imag, 12)],
    }
    lines = [f"GF({F.q}): delta = {delta(F):+d}",
             f"rho = {rho}  (~ {z.real:.6f}{z.imag:+.6f}i)",
             f"rho^2 = {rho * rho}",
             f"sum over squares = {sq}; over nonsquares = {ns}"]
    _emit(body, args.format, lines)
    return EXIT_OK


COMMANDS = {
    "decompose": cmd_decompose,
    "count": cmd_count,
    "verify": cmd_verify,
    "weilfree": cmd_weilfree,
    "gauss": cmd_gauss,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"weilchar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationTooLarge as exc:
        print(f"weilchar: {exc} (raise --max-enum to override)", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    raise SystemExit(main())
