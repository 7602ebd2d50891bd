import random
from fractions import Fraction

import pytest

from weightdescent.charconj import (
    BrauerSpec,
    BrauerSummand,
    CharacterError,
    ClassFunction,
    Cyclo,
    brauer_combination,
    cyclic,
    frobenius_campaign,
    full_subgroup,
    generated_subgroup,
    induce,
    inner_product,
    invariance_campaign,
    is_irreducible,
    linear_character_of_cyclic,
    mackey_campaign,
    mackey_check,
    quaternion,
    restrict,
    suite_groups,
    symmetric,
    trivial_subgroup,
    verify_conjugation_invariance,
)
from weightdescent.charconj.campaigns import random_class_function, random_subgroup

from oracles import brute_force_induced_values, brute_force_inner


def c3_in_s3(s3):
    rot = next(x for x in range(6) if s3.element_order(x) == 3)
    return generated_subgroup(s3, [rot])


def c2_in_s3(s3):
    flip = next(x for x in range(6) if s3.element_order(x) == 2)
    return generated_subgroup(s3, [flip])


class TestClassFunctionBasics:
    def test_trivial_and_regular(self):
        g = cyclic(3)
        assert ClassFunction.trivial(g).values == (Cyclo.from_rational(1),) * 3
        reg = ClassFunction.regular(g)
        assert reg.value(0) == 3 and reg.value(1) == 0

    def test_class_constancy_enforced(self):
        s3 = symmetric(3)
        values = [0] * 6
        values[s3.classes[1][0]] = 1  # only one member of a class changed
        with pytest.raises(CharacterError, match="constant"):
            ClassFunction.from_element_values(s3, values)

    def test_linear_character_is_multiplicative(self):
        for n in (2, 3, 5, 8):
            chi = linear_character_of_cyclic(cyclic(n), 1)
            assert chi.is_multiplicative_degree_one()
        assert not ClassFunction.regular(cyclic(3)).is_multiplicative_degree_one()

    def test_linear_character_requires_cyclic(self):
        with pytest.raises(CharacterError, match="cyclic"):
            linear_character_of_cyclic(symmetric(3), 1)


class TestInduce:
    def test_full_subgroup_is_identity(self):
        s3 = symmetric(3)
        h = full_subgroup(s3)
        chi = ClassFunction(h.group, [1, 2, 3])
        ind = induce(s3, h, chi)
        # h.group relabels s3 with identical class structure
        assert [str(v) for v in ind.values] == [str(v) for v in chi.values]

    def test_s3_from_c3_zeta3(self):
        s3 = symmetric(3)
        c3 = c3_in_s3(s3)
        chi = linear_character_of_cyclic(c3.group, 1)
        ind = induce(s3, c3, chi)
        assert ind.degree() == 2
        by_size = {len(cls): ind.values[i] for i, cls in enumerate(s3.classes)}
        assert by_size[1] == 2       # identity
        assert by_size[2] == -1      # 3-cycles
        assert by_size[3] == 0       # transpositions

    def test_regular_from_trivial(self):
        c2 = cyclic(2)
        one = trivial_subgroup(c2)
        ind = induce(c2, one, ClassFunction.trivial(one.group))
        assert ind == ClassFunction.regular(c2)

    def test_degree_law(self):
        rng = random.Random(3)
        for g in (symmetric(4), quaternion(), cyclic(12)):
            h = random_subgroup(rng, g)
            chi = random_class_function(rng, h.group)
            ind = induce(g, h, chi)
            index = Fraction(g.order, h.order)
            assert ind.degree() == chi.degree() * index

    def test_matches_brute_force_on_order_le_24(self):
        rng = random.Random(99)
        for name, g in suite_groups().items():
            assert g.order <= 24
            for _ in range(3):
                h = random_subgroup(rng, g)
                chi = random_class_function(rng, h.group)
                assert list(induce(g, h, chi).values) == brute_force_induced_values(g, h, chi)


class TestRestrict:
    def test_full_subgroup_identity(self):
        s3 = symmetric(3)
        h = full_subgroup(s3)
        chi = ClassFunction(s3, [1, Cyclo.zeta(3), 0])
        res = restrict(s3, h, chi)
        assert [str(v) for v in res.values] == [str(v) for v in chi.values]

    def test_restrict_of_induced_is_sum_of_conjugates(self):
        s3 = symmetric(3)
        c3 = c3_in_s3(s3)
        chi = linear_character_of_cyclic(c3.group, 1)
        res = restrict(s3, c3, induce(s3, c3, chi))
        assert res == chi + linear_character_of_cyclic(c3.group, 2)

    def test_trivial_restricts_to_trivial(self):
        s3 = symmetric(3)
        c2 = c2_in_s3(s3)
        assert restrict(s3, c2, ClassFunction.trivial(s3)) == ClassFunction.trivial(c2.group)


class TestInnerProduct:
    def test_trivial_self_product(self):
        for g in (cyclic(5), symmetric(3), quaternion()):
            assert inner_product(ClassFunction.trivial(g), ClassFunction.trivial(g)) == 1

    def test_regular_self_product(self):
        c3 = cyclic(3)
        reg = ClassFunction.regular(c3)
        assert inner_product(reg, reg) == 3

    def test_induced_zeta3_is_irreducible(self):
        s3 = symmetric(3)
        c3 = c3_in_s3(s3)
        ind = induce(s3, c3, linear_character_of_cyclic(c3.group, 1))
        assert inner_product(ind, ind) == 1
        assert is_irreducible(ind)

    def test_matches_brute_force(self):
        rng = random.Random(42)
        for g in (symmetric(3), quaternion(), cyclic(6)):
            chi = random_class_function(rng, g)
            psi = random_class_function(rng, g)
            assert inner_product(chi, psi) == brute_force_inner(chi, psi)

    def test_group_mismatch(self):
        with pytest.raises(CharacterError):
            inner_product(ClassFunction.trivial(cyclic(3)), ClassFunction.trivial(cyclic(3)))

    def test_frobenius_reciprocity_random(self):
        rng = random.Random(17)
        for g in (symmetric(3), symmetric(4), quaternion()):
            for _ in range(5):
                h = random_subgroup(rng, g)
                chi = random_class_function(rng, h.group)
                psi = random_class_function(rng, g)
                assert inner_product(induce(g, h, chi), psi) == inner_product(
                    chi, restrict(g, h, psi)
                )

    def test_galois_equivariance(self):
        from math import gcd, lcm

        rng = random.Random(23)
        s3 = symmetric(3)
        for _ in range(6):
            chi = random_class_function(rng, s3)
            psi = random_class_function(rng, s3)
            n = lcm(chi.conductor, psi.conductor)
            chi_n = ClassFunction(s3, [v.to_conductor(n) for v in chi.values])
            psi_n = ClassFunction(s3, [v.to_conductor(n) for v in psi.values])
            j = next((j for j in range(2, n) if gcd(j, n) == 1), 1)
            lhs = inner_product(chi_n.galois(j), psi_n.galois(j))
            rhs = inner_product(chi_n, psi_n).galois(j)
            assert lhs == rhs


class TestMackey:
    def test_s3_c3_c3(self):
        s3 = symmetric(3)
        c3 = c3_in_s3(s3)
        chi = linear_character_of_cyclic(c3.group, 1)
        report = mackey_check(s3, c3, c3, chi)
        assert report.double_coset_count == 2
        assert report.equal
        # the two summands are chi and its conjugate
        values = sorted(tuple(s.values) for s in report.summands)
        expected = sorted(
            (
                tuple(chi.render()),
                tuple(linear_character_of_cyclic(c3.group, 2).render()),
            )
        )
        assert values == expected

    def test_full_subgroup_single_coset(self):
        s3 = symmetric(3)
        h = full_subgroup(s3)
        chi = ClassFunction(h.group, [1, Cyclo.zeta(4), -2])
        report = mackey_check(s3, h, h, chi)
        assert report.double_coset_count == 1
        assert report.equal

    def test_s4_d4_c4(self):
        s4 = symmetric(4)
        r = next(x for x in range(24) if s4.element_order(x) == 4)
        d4 = None
        for s in range(24):
            h = generated_subgroup(s4, [r, s])
            if h.order == 8:
                d4 = h
                break
        c4 = generated_subgroup(s4, [r])
        rng = random.Random(8)
        chi = random_class_function(rng, d4.group)
        report = mackey_check(s4, d4, c4, chi)
        assert report.equal

    def test_random_draws(self):
        rng = random.Random(31)
        for g in (symmetric(4), quaternion(), cyclic(12)):
            for _ in range(5):
                h = random_subgroup(rng, g)
                k = random_subgroup(rng, g)
                chi = random_class_function(rng, h.group)
                assert mackey_check(g, h, k, chi).equal


class TestBrauer:
    def test_single_full_summand_is_identity(self):
        s3 = symmetric(3)
        h = full_subgroup(s3)
        chi = ClassFunction(h.group, [2, 0, -1])
        spec = BrauerSpec(s3, [BrauerSummand(1, h, chi, ClassFunction.trivial(h.group))])
        rho = brauer_combination(spec)
        assert [str(v) for v in rho.values] == [str(v) for v in chi.values]

    def test_empty_spec_is_zero(self):
        s3 = symmetric(3)
        rho = brauer_combination(BrauerSpec(s3, []))
        assert all(v.is_zero() for v in rho.values)

    def test_s3_two_summand_example(self):
        s3 = symmetric(3)
        c3 = c3_in_s3(s3)
        c2 = c2_in_s3(s3)
        chi3 = linear_character_of_cyclic(c3.group, 1)
        sign2 = linear_character_of_cyclic(c2.group, 1)
        spec = BrauerSpec(
            s3,
            [
                BrauerSummand(1, c3, chi3, ClassFunction.trivial(c3.group)),
                BrauerSummand(1, c2, ClassFunction.trivial(c2.group), sign2),
            ],
        )
        rho = brauer_combination(spec)
        expected = [
            a + b
            for a, b in zip(
                brute_force_induced_values(s3, c3, chi3),
                brute_force_induced_values(s3, c2, sign2),
            )
        ]
        assert list(rho.values) == [v.to_conductor(rho.conductor) for v in expected]

    def test_twist_must_be_degree_one(self):
        s3 = symmetric(3)
        c3 = c3_in_s3(s3)
        bad_twist = ClassFunction(c3.group, [2, 1, 1])
        with pytest.raises(CharacterError, match="degree 1"):
            BrauerSpec(s3, [BrauerSummand(1, c3, ClassFunction.trivial(c3.group), bad_twist)])


class TestVirtualCharacterIntegrality:
    def test_random_combinations_have_integer_self_products(self):
        from weightdescent.charconj.campaigns import random_brauer_spec

        rng = random.Random(77)
        for g in (symmetric(3), symmetric(4), quaternion()):
            for _ in range(10):
                spec = random_brauer_spec(rng, g)
                ip = inner_product(brauer_combination(spec), brauer_combination(spec))
                assert ip.is_rational()
                assert ip.rational_value().denominator == 1


class TestConjugationInvariance:
    def test_c5_zeta_character(self):
        c5 = cyclic(5)
        h = full_subgroup(c5)
        chi = linear_character_of_cyclic(h.group, 1)
        spec = BrauerSpec(c5, [BrauerSummand(1, h, chi, ClassFunction.trivial(h.group))])
        report = verify_conjugation_invariance(spec, 2)
        assert report.passed
        assert report.rational and report.equal_exactly
        assert report.self_product == str(Cyclo.from_rational(1).to_conductor(5))

    def test_j_equals_one_is_identical(self):
        s3 = symmetric(3)
        c3 = c3_in_s3(s3)
        chi = linear_character_of_cyclic(c3.group, 1)
        spec = BrauerSpec(s3, [BrauerSummand(2, c3, chi, chi)])
        report = verify_conjugation_invariance(spec, 1)
        assert report.passed
        assert report.self_product == report.conjugated_self_product

    def test_j_must_be_coprime(self):
        c5 = cyclic(5)
        h = full_subgroup(c5)
        chi = linear_character_of_cyclic(h.group, 1)
        spec = BrauerSpec(c5, [BrauerSummand(1, h, chi, ClassFunction.trivial(h.group))])
        with pytest.raises(CharacterError, match="coprime"):
            verify_conjugation_invariance(spec, 5)


class TestIrreducibility:
    def test_trivial_true(self):
        assert is_irreducible(ClassFunction.trivial(symmetric(3)))

    def test_regular_false(self):
        assert not is_irreducible(ClassFunction.regular(cyclic(3)))

    def test_nonrational_self_product_raises(self):
        c3 = cyclic(3)
        chi = ClassFunction(c3, [0, Cyclo.zeta(3), Cyclo.zeta(3)])
        with pytest.raises(CharacterError, match="rational"):
            is_irreducible(chi)


class TestCampaigns:
    def test_small_runs_pass(self):
        assert frobenius_campaign(draws=3, seed=5).passed
        assert mackey_campaign(draws=3, seed=5).passed
        assert invariance_campaign(trials=10, seed=5).passed

    def test_deterministic_given_seed(self):
        a = invariance_campaign(trials=8, seed=12).to_dict()
        b = invariance_campaign(trials=8, seed=12).to_dict()
        assert a == b
        assert a["seed"] == 12

    def test_report_carries_counts(self):
        r = frobenius_campaign(draws=2, seed=0, names=("S3", "C4"))
        assert r.checks_run == 4
        assert r.groups == ("S3", "C4")
