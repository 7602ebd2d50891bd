"""Independent oracles for the test suite.

Everything here is deliberately naive (trial division, element-by-element
sums, direct fraction comparisons) and shares no code path with the package
implementations it checks.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from weightdescent.charconj.cyclotomic import Cyclo


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


def trial_division_primes(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if trial_division_is_prime(n)]


def max_ratio_pair_scan(primes, low: int, high: int) -> tuple[int, int] | None:
    """Exhaustive Fraction-based maximum of q/p over adjacent pairs with
    low < q <= high."""
    best = None
    best_ratio = None
    for i in range(1, len(primes)):
        p, q = primes[i - 1], primes[i]
        if q <= low or q > high:
            continue
        r = Fraction(q, p)
        if best_ratio is None or r > best_ratio:
            best, best_ratio = (p, q), r
    return best


def brute_force_induced_values(G, H, chi) -> list[Cyclo]:
    """(Ind chi)(g) = (1/|H|) sum over x in G with x^-1 g x in H of
    chi(x^-1 g x), evaluated at every class representative."""
    out = []
    for cls_elems in G.classes:
        g = cls_elems[0]
        total = Cyclo.from_rational(0)
        for x in range(G.order):
            conj = G.table[G.table[G.inverses[x]][g]][x]
            loc = H.to_local.get(conj)
            if loc is not None:
                total = total + chi.value(loc)
        out.append(total * Fraction(1, H.order))
    return out


def brute_force_inner(chi, psi) -> Cyclo:
    """(1/|G|) sum over every element g of chi(g) psi(g^-1)."""
    G = chi.group
    total = Cyclo.from_rational(0)
    for g in range(G.order):
        total = total + chi.value(g) * psi.value(G.inverses[g])
    return total * Fraction(1, G.order)
