"""Seeded randomized verification campaigns over the built-in group suite.

Draws are deterministic given the seed, and the seed is embedded in every
report so a failing draw can be replayed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .characters import (
    BrauerSpec,
    BrauerSummand,
    ClassFunction,
    induce,
    inner_product,
    linear_character_of_cyclic,
    mackey_check,
    restrict,
    verify_conjugation_invariance,
)
from .cyclotomic import Cyclo
from .groups import FiniteGroup, Subgroup, builtin_group, generated_subgroup

SUITE_NAMES = tuple(f"C{n}" for n in range(1, 13)) + ("S3", "S4", "D4", "Q8")

_CONDUCTOR_POOL = (1, 3, 4, 5, 8, 12)


def suite_groups(names=SUITE_NAMES) -> dict[str, FiniteGroup]:
    return {name: builtin_group(name) for name in names}


def random_cyclo(rng: random.Random) -> Cyclo:
    n = rng.choice(_CONDUCTOR_POOL)
    powers = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
    return Cyclo(n, powers)


def random_class_function(rng: random.Random, group: FiniteGroup) -> ClassFunction:
    return ClassFunction(group, [random_cyclo(rng) for _ in group.classes])


def random_subgroup(rng: random.Random, group: FiniteGroup) -> Subgroup:
    gens = [rng.randrange(group.order) for _ in range(rng.randint(1, 2))]
    return generated_subgroup(group, gens)


def random_cyclic_subgroup(rng: random.Random, group: FiniteGroup) -> Subgroup:
    return generated_subgroup(group, [rng.randrange(group.order)])


@dataclass(frozen=True)
class CampaignReport:
    name: str
    seed: int
    draws: int
    groups: tuple[str, ...]
    checks_run: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "seed": self.seed,
            "draws": self.draws,
            "groups": list(self.groups),
            "checks_run": self.checks_run,
            "failures": list(self.failures),
            "verdict": "pass" if self.passed else "fail",
        }


def frobenius_campaign(draws: int = 50, seed: int = 0, names=SUITE_NAMES) -> CampaignReport:
    """Random (H, chi, psi) draws checking (Ind chi, psi)_G = (chi, Res psi)_H."""
    rng = random.Random(seed)
    failures = []
    checks = 0
    for name, G in suite_groups(names).items():
        for i in range(draws):
            H = random_subgroup(rng, G)
            chi = random_class_function(rng, H.group)
            psi = random_class_function(rng, G)
            lhs = inner_product(induce(G, H, chi), psi)
            rhs = inner_product(chi, restrict(G, H, psi))
            checks += 1
            if lhs != rhs:
                failures.append(f"{name} draw {i}: reciprocity broke on |H| = {H.order}")
    return CampaignReport(
        name="frobenius-reciprocity",
        seed=seed,
        draws=draws,
        groups=tuple(names),
        checks_run=checks,
        failures=tuple(failures),
    )


def mackey_campaign(draws: int = 50, seed: int = 0, names=SUITE_NAMES) -> CampaignReport:
    """Random (H, K, chi) draws checking the double-coset decomposition."""
    rng = random.Random(seed)
    failures = []
    checks = 0
    for name, G in suite_groups(names).items():
        for i in range(draws):
            H = random_subgroup(rng, G)
            K = random_subgroup(rng, G)
            chi = random_class_function(rng, H.group)
            report = mackey_check(G, H, K, chi)
            checks += 1
            if not report.equal:
                failures.append(
                    f"{name} draw {i}: Mackey broke with |H| = {H.order}, |K| = {K.order}"
                )
    return CampaignReport(
        name="mackey-decomposition",
        seed=seed,
        draws=draws,
        groups=tuple(names),
        checks_run=checks,
        failures=tuple(failures),
    )


def random_brauer_spec(rng: random.Random, group: FiniteGroup) -> BrauerSpec:
    """An integer combination of induced, twisted linear characters on
    random cyclic subgroups (so self products are genuine integers)."""
    summands = []
    for _ in range(rng.randint(1, 3)):
        H = random_cyclic_subgroup(rng, group)
        order = H.order
        chi = linear_character_of_cyclic(H.group, rng.randrange(order))
        twist = linear_character_of_cyclic(H.group, rng.randrange(order))
        coeff = rng.choice((-2, -1, 1, 2))
        summands.append(BrauerSummand(coeff, H, chi, twist))
    return BrauerSpec(group, summands)


def _random_coprime(rng: random.Random, n: int) -> int:
    if n <= 2:
        return 1
    candidates = [j for j in range(1, n) if gcd(j, n) == 1]
    return rng.choice(candidates)


def invariance_campaign(trials: int = 100, seed: int = 0, names=("S3", "S4", "Q8")) -> CampaignReport:
    """Randomized combinations: the conjugated self product must equal the
    Galois image of the original, exactly, and equal it outright whenever
    the original is rational."""
    rng = random.Random(seed)
    groups = suite_groups(names)
    failures = []
    checks = 0
    for i in range(trials):
        name = rng.choice(list(groups))
        G = groups[name]
        spec = random_brauer_spec(rng, G)
        j = _random_coprime(rng, spec.conductor())
        report = verify_conjugation_invariance(spec, j)
        checks += 1
        if not report.passed:
            failures.append(f"trial {i} on {name} with j = {j}")
        if report.rational and report.equal_exactly is not True:
            failures.append(f"trial {i} on {name}: rational product not preserved")
    return CampaignReport(
        name="conjugation-invariance",
        seed=seed,
        draws=trials,
        groups=tuple(names),
        checks_run=checks,
        failures=tuple(failures),
    )
