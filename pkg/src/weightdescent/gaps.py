"""Certified analytic-estimate audits.

Consecutive-prime ratio scans (plain and shifted by one), the Chebyshev
threshold a^(C/(a-C)) in enclosure arithmetic, the exact quotient grid for
the three twist-exponent families, and the m > 6 bound.  Every pass/fail
decision is an exact rational comparison.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .descent import choose_t
from .numeric import (
    CHEBYSHEV_A,
    CHEBYSHEV_B,
    RATIO_BOUND,
    SHIFTED_RATIO_BOUND,
    RealEnclosure,
    pow_enclosure,
)
from .primes import PrimeTable, consecutive_pairs, next_prime

X0 = 100000


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class GapReport:
    """Outcome of one ratio scan over (low, high]."""

    low: int
    high: int
    bound: Fraction
    shifted: bool
    violations: tuple[tuple[int, int], ...]
    max_ratio_pair: tuple[int, int] | None
    pairs_checked: int

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "range": [self.low, self.high],
            "bound": _frac_str(self.bound),
            "shifted": self.shifted,
            "violations": [list(v) for v in self.violations],
            "max_ratio_pair": list(self.max_ratio_pair) if self.max_ratio_pair else None,
            "pairs_checked": self.pairs_checked,
            "verdict": "pass" if self.passed else "fail",
        }


def _scan(table: PrimeTable, low: int, high: int, bound: Fraction, shift: int) -> GapReport:
    bound = Fraction(bound)
    num, den = bound.numerator, bound.denominator
    violations = []
    best = None  # (ratio numerator, ratio denominator, p, q)
    count = 0
    for p, q in consecutive_pairs(table, low, high):
        a, b = q - shift, p - shift
        count += 1
        if den * a >= num * b:
            violations.append((p, q))
        if best is None or a * best[1] > best[0] * b:
            best = (a, b, p, q)
    pair = (best[2], best[3]) if best else None
    return GapReport(
        low=low,
        high=high,
        bound=bound,
        shifted=bool(shift),
        violations=tuple(violations),
        max_ratio_pair=pair,
        pairs_checked=count,
    )


def verify_ratio(table: PrimeTable, low: int, high: int, bound=RATIO_BOUND) -> GapReport:
    """Check q/p < bound for all adjacent prime pairs with low < q <= high."""
    return _scan(table, low, high, bound, shift=0)


def verify_shifted_ratio(table: PrimeTable, low: int, high: int, bound=SHIFTED_RATIO_BOUND) -> GapReport:
    """Check (q-1)/(p-1) < bound for all adjacent pairs with low < q <= high."""
    return _scan(table, low, high, bound, shift=1)


@dataclass(frozen=True)
class ThresholdResult:
    """Certified enclosure of a^(C/(a-C)) with C = B/A, and its verdict
    against x0 = 100000."""

    A: Fraction
    B: Fraction
    a: Fraction
    C: Fraction
    exponent: RealEnclosure
    threshold: RealEnclosure
    below_x0: bool

    def to_dict(self) -> dict:
        return {
            "A": _frac_str(self.A),
            "B": _frac_str(self.B),
            "a": _frac_str(self.a),
            "C": _frac_str(self.C),
            "exponent": self.exponent.to_dict(),
            "threshold": self.threshold.to_dict(),
            "x0": X0,
            "below_x0": self.below_x0,
        }


def chebyshev_threshold(
    A=CHEBYSHEV_A,
    B=CHEBYSHEV_B,
    a=RATIO_BOUND,
    digits: int = 30,
    typo_variant: bool = False,
) -> ThresholdResult:
    """Enclosure of a^(C/(a-C)); typo_variant computes a*C/(a-C) instead.

    The exponent C/(a-C) is an exact rational, so only the final power needs
    enclosure arithmetic.
    """
    A, B, a = Fraction(A), Fraction(B), Fraction(a)
    if A <= 0 or B <= 0 or a <= 0:
        raise ValueError("A, B and a must be positive")
    C = B / A
    if a <= C:
        raise ValueError(f"degenerate: a <= C (a = {a}, C = {C})")
    exponent_value = C / (a - C)
    exponent = RealEnclosure.from_rational(exponent_value, digits)
    if typo_variant:
        threshold = RealEnclosure.from_rational(a * exponent_value, digits)
    else:
        threshold = pow_enclosure(a, exponent, digits)
    below_x0 = Fraction(threshold.upper) < X0
    return ThresholdResult(
        A=A, B=B, a=a, C=C,
        exponent=exponent, threshold=threshold, below_x0=below_x0,
    )


# Printed quotient families (m, t) for the three twist rules, heads at
# m = 7, 9, 11 / 10, 14, 18 / 8, 12, 16.
_PRINTED_HEADS = (
    (7, 4), (9, 5), (11, 6),
    (10, 7), (14, 9), (18, 11),
    (8, 5), (12, 7), (16, 9),
)


@dataclass(frozen=True)
class StarReport:
    """Exact check of p/k' > bound over the (m, d) grid, plus the symbolic
    family heads."""

    m_max: int
    d_max: int
    bound: Fraction
    failures: tuple[tuple[int, int, str], ...]
    family_heads: tuple[dict, ...]
    heads_match: bool
    checked: int

    @property
    def passed(self) -> bool:
        return not self.failures and self.heads_match

    def to_dict(self) -> dict:
        return {
            "m_max": self.m_max,
            "d_max": self.d_max,
            "bound": _frac_str(self.bound),
            "failures": [list(f) for f in self.failures],
            "family_heads": list(self.family_heads),
            "heads_match": self.heads_match,
            "checked": self.checked,
            "verdict": "pass" if self.passed else "fail",
        }


def star_inequality_check(m_max: int = 200, d_max: int = 200, bound=RATIO_BOUND) -> StarReport:
    """For every m in (6, m_max] and d in [1, d_max], with p = md+1 and
    t = choose_t(m), verify p/(dt+2) > bound and p/(p+1-dt) > bound exactly."""
    if m_max <= 6:
        raise ValueError("m_max must exceed 6")
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    bound = Fraction(bound)
    num, den = bound.numerator, bound.denominator
    failures = []
    checked = 0
    for m in range(7, m_max + 1):
        t = choose_t(m)  # every m >= 7 is admissible
        for d in range(1, d_max + 1):
            p = m * d + 1
            hi = d * t + 2
            lo = p + 1 - d * t
            checked += 1
            if den * p <= num * hi:
                failures.append((m, d, "hi"))
            if den * p <= num * lo:
                failures.append((m, d, "lo"))
    heads = []
    all_match = True
    for m, t_printed in _PRINTED_HEADS:
        t = choose_t(m)
        match = t == t_printed
        all_match = all_match and match
        heads.append({
            "m": m,
            "quotient": f"({m}d+1)/({t}d+2)",
            "printed": f"({m}d+1)/({t_printed}d+2)",
            "matches": match,
        })
    return StarReport(
        m_max=m_max,
        d_max=d_max,
        bound=bound,
        failures=tuple(failures),
        family_heads=tuple(heads),
        heads_match=all_match,
        checked=checked,
    )


@dataclass(frozen=True)
class MBoundReport:
    """Exact check that (p-1)/(k-2) < 6/5 and m > 6 for even k in (36, k_max]."""

    k_max: int
    failures: tuple[tuple[int, int], ...]
    checked: int
    near_miss: dict

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "k_range": [38, self.k_max],
            "failures": [list(f) for f in self.failures],
            "checked": self.checked,
            "near_miss": self.near_miss,
            "verdict": "pass" if self.passed else "fail",
        }


def m_bound_check(table: PrimeTable, k_max: int) -> MBoundReport:
    """For every even k in (36, k_max] with p the next prime after k, check
    5(p-1) < 6(k-2) and m = (p-1)/gcd(p-1, k-2) > 6 exactly."""
    if k_max < 38:
        raise ValueError("k_max must be >= 38")
    ps = table.primes
    idx = bisect_right(ps, 38)
    failures = []
    checked = 0
    for k in range(38, k_max + 1, 2):
        while idx < len(ps) and ps[idx] <= k:
            idx += 1
        p = ps[idx] if idx < len(ps) else next_prime(k, table)
        checked += 1
        m = (p - 1) // gcd(p - 1, k - 2)
        if 5 * (p - 1) >= 6 * (k - 2) or m <= 6:
            failures.append((k, p))
    # the motivating boundary case, outside the checked range: at k = 32 the
    # next prime 37 gives exactly 36/30 = 6/5 and m = 6
    near_miss = {"k": 32, "p": 37, "ratio": "36/30", "m": 6}
    return MBoundReport(k_max=k_max, failures=tuple(failures), checked=checked, near_miss=near_miss)
