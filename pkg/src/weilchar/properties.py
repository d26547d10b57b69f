"""Seeded randomized property suites.

Each suite draws ``count`` cases from ``random.Random(seed)`` and returns the
list of failing cases (empty on success).
"""

from __future__ import annotations

import random

from .finite_field import FieldSpec, field_from_string, nonsquare_index
from .linalg import random_invertible
from .quadform import QuadForm
from .weil_restriction import (
    CharacterLabel,
    GElement,
    lambda_value,
    orbit_count,
    orbit_partition,
    subgroup_generated,
)

FORM_PARAMS = [("3", 1), ("3", 2), ("3", 3), ("3", 4), ("5", 2), ("5", 3), ("7", 2), ("9", 2), ("25", 2)]
ORBIT_PARAMS = [("3", 1), ("5", 1), ("7", 1), ("3", 2)]


def random_form(spec: FieldSpec, n: int, rng: random.Random, max_rank: int | None = None) -> QuadForm:
    """Uniform random symmetric matrix, or a random M diag(...) M^T of bounded rank."""
    if max_rank is None:
        return QuadForm.from_upper(spec, n, [rng.randrange(spec.q) for _ in range(n * (n + 1) // 2)])
    r = rng.randint(0, min(max_rank, n))
    diag = [rng.randrange(1, spec.q) for _ in range(r)] + [0] * (n - r)
    return QuadForm.diagonal(spec, diag).congruent(random_invertible(spec, n, rng))


def _pick(rng: random.Random, params) -> tuple[FieldSpec, int]:
    q, n = rng.choice(params)
    return field_from_string(q), n


def congruence_invariance(seed: int = 0, count: int = 1000) -> list:
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        F, n = _pick(rng, FORM_PARAMS)
        Q = random_form(F, n, rng)
        M = random_invertible(F, n, rng)
        R = Q.congruent(M)
        if (R.rank, R.delta, R.type) != (Q.rank, Q.delta, Q.type):
            failures.append((Q, M))
    return failures


def nonsquare_scaling(seed: int = 0, count: int = 1000) -> list:
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        F, n = _pick(rng, FORM_PARAMS)
        Q = random_form(F, n, rng, max_rank=n if rng.random() < 0.5 else None)
        R = Q.scale(nonsquare_index(F))
        if R.rank != Q.rank or R.delta != (-1) ** Q.rank * Q.delta:
            failures.append(Q)
    return failures


def character_homomorphism(seed: int = 0, count: int = 1000) -> list:
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        F, n = _pick(rng, FORM_PARAMS)
        label = CharacterLabel(random_form(F, n, rng), rng.choice("+-"))
        g1 = GElement(rng.choice((1, -1)), random_form(F, n, rng))
        g2 = GElement(rng.choice((1, -1)), random_form(F, n, rng))
        lhs = lambda_value(label, g1 * g2)
        rhs = lambda_value(label, g1) * lambda_value(label, g2)
        if lhs != rhs:
            failures.append((label, g1, g2))
    return failures


def burnside_restriction(seed: int = 0, count: int = 1000) -> list:
    """For random H = <gens> <= G and K = <subset of gens>: Burnside counts match
    explicit orbit enumeration, K-orbits refine H-orbits, and #K-orbits >= #H-orbits."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        F, n = _pick(rng, ORBIT_PARAMS)
        gens = [GElement(rng.choice((1, -1)), random_form(F, n, rng))
                for _ in range(rng.randint(1, 3))]
        sub = gens[: rng.randint(0, len(gens))]
        H = subgroup_generated(gens, n, F)
        K = subgroup_generated(sub, n, F)
        part_H = orbit_partition(gens, n, F)
        part_K = orbit_partition(sub, n, F)
        nH, nK = orbit_count(H, n, F), orbit_count(K, n, F)
        refines = all(part_H[i] == part_H[part_K[i]] for i in range(len(part_K)))
        if (nH != len(set(part_H)) or nK != len(set(part_K)) or not refines or nK < nH):
            failures.append(gens)
    return failures


SUITES = {
    "congruence-invariance": congruence_invariance,
    "nonsquare-scaling": nonsquare_scaling,
    "character-homomorphism": character_homomorphism,
    "burnside-restriction": burnside_restriction,
}
