"""Class functions with exact cyclotomic values.

Induction, restriction, inner products, the Mackey double-coset identity,
and integer combinations of induced twisted characters, all over `Cyclo`
values so that Galois conjugation acts exactly.  The inner product pairs
chi(g) with psi(g^-1), which agrees with the usual Hermitian product on
characters and never needs complex floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .cyclotomic import Cyclo
from .groups import (
    FiniteGroup,
    Subgroup,
    conjugate_subgroup,
    double_cosets,
)


class CharacterError(ValueError):
    pass


class ClassFunction:
    """A function on a group, constant on conjugacy classes, with values in
    a common cyclotomic field."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        values = [Cyclo._coerce(v) for v in values]
        if len(values) != len(group.classes):
            raise CharacterError(
                f"expected {len(group.classes)} class values, got {len(values)}"
            )
        n = 1
        for v in values:
            n = lcm(n, v.conductor)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "values", tuple(v.to_conductor(n) for v in values))

    def __setattr__(self, name, value):
        raise AttributeError("ClassFunction is immutable")

    @property
    def conductor(self) -> int:
        return self.values[0].conductor

    @classmethod
    def from_element_values(cls, group: FiniteGroup, element_values) -> "ClassFunction":
        element_values = [Cyclo._coerce(v) for v in element_values]
        if len(element_values) != group.order:
            raise CharacterError("need one value per element")
        out = []
        for cls_elems in group.classes:
            v = element_values[cls_elems[0]]
            for g in cls_elems[1:]:
                if element_values[g] != v:
                    raise CharacterError(f"values are not constant on the class of {cls_elems[0]}")
            out.append(v)
        return cls(group, out)

    @classmethod
    def trivial(cls, group: FiniteGroup) -> "ClassFunction":
        return cls(group, [1] * len(group.classes))

    @classmethod
    def regular(cls, group: FiniteGroup) -> "ClassFunction":
        vals = [group.order if 0 in c else 0 for c in group.classes]
        return cls(group, vals)

    @classmethod
    def zero(cls, group: FiniteGroup) -> "ClassFunction":
        return cls(group, [0] * len(group.classes))

    def value(self, g: int) -> Cyclo:
        return self.values[self.group.class_index[g]]

    def degree(self) -> Cyclo:
        return self.value(0)

    def _same_group(self, other: "ClassFunction") -> None:
        if self.group is not other.group:
            raise CharacterError("class functions live on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.group, [v * Fraction(c) for v in self.values])

    def galois(self, j: int) -> "ClassFunction":
        return ClassFunction(self.group, [v.galois(j) for v in self.values])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and all(
            a == b for a, b in zip(self.values, other.values)
        )

    def is_multiplicative_degree_one(self) -> bool:
        """True for homomorphisms to the roots of unity (degree-1 characters)."""
        g = self.group
        if self.value(0) != 1:
            return False
        for a in range(g.order):
            va = self.value(a)
            for b in range(g.order):
                if self.value(g.table[a][b]) != va * self.value(b):
                    return False
        return True

    def render(self) -> list[str]:
        return [str(v) for v in self.values]

    def __repr__(self):
        return f"ClassFunction({self.group.name}, {self.render()})"


def linear_character_of_cyclic(group: FiniteGroup, a: int = 1) -> ClassFunction:
    """The degree-1 character g^i -> zeta^(a i) of a cyclic group, taken on
    its smallest generator."""
    n = group.order
    gen = None
    for g in range(n):
        if group.element_order(g) == n:
            gen = g
            break
    if gen is None:
        raise CharacterError(f"{group.name} is not cyclic")
    element_values = [None] * n
    x, i = 0, 0
    while True:
        element_values[x] = Cyclo.zeta(n, (a * i) % n) if n > 1 else Cyclo.from_rational(1)
        x = group.table[x][gen]
        i += 1
        if x == 0:
            break
    return ClassFunction.from_element_values(group, element_values)


def induce(G: FiniteGroup, H: Subgroup, chi: ClassFunction) -> ClassFunction:
    """Induced class function: (Ind chi)(g) = (1/|H|) sum over x in G with
    x^-1 g x in H of chi(x^-1 g x); computed classwise."""
    if H.parent is not G:
        raise CharacterError("subgroup does not live in the ambient group")
    if chi.group is not H.group:
        raise CharacterError("character is not defined on the subgroup")
    index = Fraction(G.order, H.order)
    values = []
    for cls_elems in G.classes:
        total = Cyclo.from_rational(0)
        for g in cls_elems:
            loc = H.to_local.get(g)
            if loc is not None:
                total = total + chi.values[H.group.class_index[loc]]
        values.append(total * (index / len(cls_elems)))
    return ClassFunction(G, values)


def restrict(G: FiniteGroup, K: Subgroup, chi: ClassFunction) -> ClassFunction:
    """Restriction to a subgroup: each K-class takes the value of its
    containing G-class."""
    if K.parent is not G:
        raise CharacterError("subgroup does not live in the ambient group")
    if chi.group is not G:
        raise CharacterError("class function is not defined on the ambient group")
    values = []
    for cls_elems in K.group.classes:
        parent_elem = K.elements[cls_elems[0]]
        values.append(chi.values[G.class_index[parent_elem]])
    return ClassFunction(K.group, values)


def inner_product(chi: ClassFunction, psi: ClassFunction) -> Cyclo:
    """(1/|G|) sum over g of chi(g) psi(g^-1), computed with class sizes."""
    if chi.group is not psi.group:
        raise CharacterError("class functions live on different groups")
    G = chi.group
    total = Cyclo.from_rational(0)
    for idx, cls_elems in enumerate(G.classes):
        rep = cls_elems[0]
        inv_idx = G.class_index[G.inverses[rep]]
        total = total + chi.values[idx] * psi.values[inv_idx] * len(cls_elems)
    return total * Fraction(1, G.order)


@dataclass(frozen=True)
class MackeySummand:
    coset_rep: int
    intersection_order: int
    values: tuple[str, ...]


@dataclass(frozen=True)
class MackeyReport:
    group: str
    double_coset_count: int
    coset_reps: tuple[int, ...]
    summands: tuple[MackeySummand, ...]
    lhs_values: tuple[str, ...]
    rhs_values: tuple[str, ...]
    equal: bool

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "double_coset_count": self.double_coset_count,
            "coset_reps": list(self.coset_reps),
            "summands": [
                {
                    "coset_rep": s.coset_rep,
                    "intersection_order": s.intersection_order,
                    "values": list(s.values),
                }
                for s in self.summands
            ],
            "lhs": list(self.lhs_values),
            "rhs": list(self.rhs_values),
            "equal": self.equal,
        }


def mackey_check(G: FiniteGroup, H: Subgroup, K: Subgroup, chi: ClassFunction) -> MackeyReport:
    """Verify Res_K Ind_H^G chi = sum over double cosets KgH of
    Ind_{K meet gHg^-1}^K (x -> chi(g^-1 x g)), exactly."""
    lhs = restrict(G, K, induce(G, H, chi))
    reps = double_cosets(G, K, H)
    rhs = ClassFunction.zero(K.group)
    summands = []
    for g in reps:
        g_inv = G.inverses[g]
        conj_h = conjugate_subgroup(G, H, g)
        meet_parent = sorted(set(K.elements) & set(conj_h.elements))
        L = Subgroup(K.group, [K.to_local[x] for x in meet_parent], name="L")
        # chi^g at x in K meet gHg^-1 (parent coords): chi(g^-1 x g)
        elem_values = []
        for loc in L.elements:
            x = K.elements[loc]
            back = G.table[G.table[g_inv][x]][g]
            elem_values.append(chi.value(H.to_local[back]))
        chig = ClassFunction.from_element_values(L.group, elem_values)
        part = induce(K.group, L, chig)
        rhs = rhs + part
        summands.append(
            MackeySummand(
                coset_rep=g,
                intersection_order=L.order,
                values=tuple(part.render()),
            )
        )
    return MackeyReport(
        group=G.name,
        double_coset_count=len(reps),
        coset_reps=tuple(reps),
        summands=tuple(summands),
        lhs_values=tuple(lhs.render()),
        rhs_values=tuple(rhs.render()),
        equal=lhs == rhs,
    )


@dataclass(frozen=True)
class BrauerSummand:
    """One term n * Ind_H^G (chi * twist) of an integer combination."""

    coefficient: int
    subgroup: Subgroup
    character: ClassFunction
    twist: ClassFunction


class BrauerSpec:
    """An integer combination of induced, twisted subgroup characters."""

    __slots__ = ("group", "summands")

    def __init__(self, group: FiniteGroup, summands):
        summands = tuple(summands)
        for s in summands:
            if s.subgroup.parent is not group:
                raise CharacterError("summand subgroup does not live in the ambient group")
            if s.character.group is not s.subgroup.group:
                raise CharacterError("summand character is not on its subgroup")
            if s.twist.group is not s.subgroup.group:
                raise CharacterError("summand twist is not on its subgroup")
            if not s.twist.is_multiplicative_degree_one():
                raise CharacterError("twist must be multiplicative of degree 1")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "summands", summands)

    def __setattr__(self, name, value):
        raise AttributeError("BrauerSpec is immutable")

    def conductor(self) -> int:
        n = 1
        for s in self.summands:
            n = lcm(n, s.character.conductor, s.twist.conductor)
        return n

    def galois(self, j: int) -> "BrauerSpec":
        return BrauerSpec(
            self.group,
            [
                BrauerSummand(s.coefficient, s.subgroup, s.character.galois(j), s.twist.galois(j))
                for s in self.summands
            ],
        )


def brauer_combination(spec: BrauerSpec) -> ClassFunction:
    """The virtual class function sum of n_i * Ind(chi_i * twist_i)."""
    total = ClassFunction.zero(spec.group)
    for s in spec.summands:
        total = total + induce(spec.group, s.subgroup, s.character * s.twist).scale(s.coefficient)
    return total


@dataclass(frozen=True)
class InvarianceReport:
    j: int
    self_product: str
    conjugated_self_product: str
    galois_of_self_product: str
    equal_under_galois: bool
    rational: bool
    equal_exactly: bool | None

    @property
    def passed(self) -> bool:
        return self.equal_under_galois and (self.equal_exactly is not False)

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "self_product": self.self_product,
            "conjugated_self_product": self.conjugated_self_product,
            "galois_of_self_product": self.galois_of_self_product,
            "equal_under_galois": self.equal_under_galois,
            "rational": self.rational,
            "equal_exactly": self.equal_exactly,
            "verdict": "pass" if self.passed else "fail",
        }


def verify_conjugation_invariance(spec: BrauerSpec, j: int) -> InvarianceReport:
    """Build the combination and its Galois conjugate and compare self
    inner products: the conjugated product must equal the Galois image of
    the original, and equal it exactly whenever the original is rational."""
    n = spec.conductor()
    if gcd(j, n) != 1:
        raise CharacterError(f"{j} is not coprime to the spec conductor {n}")
    rho = brauer_combination(spec)
    rho_gamma = brauer_combination(spec.galois(j))
    ip = inner_product(rho, rho)
    ip_gamma = inner_product(rho_gamma, rho_gamma)
    galois_ip = ip.galois(j)  # ip's conductor divides the spec conductor
    equal_under = ip_gamma == galois_ip
    rational = ip.is_rational()
    equal_exactly = (ip_gamma == ip) if rational else None
    return InvarianceReport(
        j=j,
        self_product=str(ip),
        conjugated_self_product=str(ip_gamma),
        galois_of_self_product=str(galois_ip),
        equal_under_galois=equal_under,
        rational=rational,
        equal_exactly=equal_exactly,
    )


def is_irreducible(chi: ClassFunction) -> bool:
    """True iff the self inner product is exactly 1 and the degree is
    positive; raises on a non-rational self product."""
    ip = inner_product(chi, chi)
    if not ip.is_rational():
        raise CharacterError(f"self inner product is not rational: {ip}")
    deg = chi.degree()
    return ip == 1 and deg.is_rational() and deg.rational_value() > 0
