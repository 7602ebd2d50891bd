import pytest

from weightdescent.charconj.groups import (
    FiniteGroup,
    GroupError,
    builtin_group,
    conjugate_subgroup,
    cyclic,
    dihedral,
    double_cosets,
    full_subgroup,
    generated_subgroup,
    load_group,
    quaternion,
    subgroup,
    symmetric,
    trivial_subgroup,
)


def three_cycle(g):
    return next(x for x in range(g.order) if g.element_order(x) == 3)


class TestBuiltins:
    def test_cyclic(self):
        for n in range(1, 13):
            g = cyclic(n)
            assert g.order == n
            assert len(g.classes) == n  # abelian: singleton classes

    def test_s3(self):
        g = symmetric(3)
        assert g.order == 6
        assert sorted(len(c) for c in g.classes) == [1, 2, 3]

    def test_s4(self):
        g = symmetric(4)
        assert g.order == 24
        assert sorted(len(c) for c in g.classes) == [1, 3, 6, 6, 8]

    def test_d4(self):
        g = dihedral(4)
        assert g.order == 8
        assert len(g.classes) == 5

    def test_q8(self):
        g = quaternion()
        assert g.order == 8
        assert sorted(len(c) for c in g.classes) == [1, 1, 2, 2, 2]
        minus_one = next(x for x in range(8) if x != 0 and g.element_order(x) == 2)
        assert g.table[minus_one][minus_one] == 0

    def test_builtin_names(self):
        assert builtin_group("C6").order == 6
        assert builtin_group("D5").order == 10
        assert builtin_group("q8").order == 8
        with pytest.raises(ValueError):
            builtin_group("E8")

    def test_identity_is_element_zero(self):
        for g in (cyclic(7), dihedral(3), symmetric(4), quaternion()):
            assert all(g.table[0][x] == x == g.table[x][0] for x in range(g.order))
            assert g.classes[0] == (0,)


class TestValidation:
    def test_broken_associativity_names_a_triple(self):
        table = [[0, 1, 2], [1, 0, 0], [2, 0, 1]]
        with pytest.raises(GroupError, match=r"associativity fails at triple \("):
            FiniteGroup(table)

    def test_missing_identity(self):
        with pytest.raises(GroupError, match="identity"):
            FiniteGroup([[1, 0], [0, 1]])

    def test_order_cap(self):
        with pytest.raises(GroupError, match="cap"):
            cyclic(49)
        with pytest.raises(GroupError, match="cap"):
            dihedral(25)

    def test_ragged_table(self):
        with pytest.raises(GroupError):
            FiniteGroup([[0, 1], [1]])

    def test_inverses(self):
        for g in (cyclic(9), dihedral(6), symmetric(4), quaternion()):
            for x in range(g.order):
                assert g.table[x][g.inverses[x]] == 0
                assert g.table[g.inverses[x]][x] == 0


class TestLoadGroup:
    def test_from_nested_table(self):
        g = load_group({"order": 2, "table": [[0, 1], [1, 0]], "name": "C2"})
        assert g.order == 2 and g.name == "C2"

    def test_from_row_major_flat_table(self):
        g = load_group({"order": 2, "table": [0, 1, 1, 0]})
        assert g.order == 2

    def test_from_name(self):
        assert load_group("S3").order == 6

    def test_wrong_length(self):
        with pytest.raises(GroupError):
            load_group({"order": 3, "table": [0, 1, 1, 0]})


class TestSubgroups:
    def test_generated_c3_in_s3(self):
        s3 = symmetric(3)
        h = generated_subgroup(s3, [three_cycle(s3)])
        assert h.order == 3
        assert h.elements[0] == 0

    def test_not_closed_subset_rejected(self):
        s3 = symmetric(3)
        transposition = next(x for x in range(6) if s3.element_order(x) == 2)
        other = next(
            x for x in range(6) if s3.element_order(x) == 2 and x != transposition
        )
        with pytest.raises(GroupError, match="closed"):
            subgroup(s3, [0, transposition, other])

    def test_must_contain_identity(self):
        with pytest.raises(GroupError, match="identity"):
            subgroup(cyclic(4), [1, 2, 3])

    def test_trivial_and_full(self):
        s3 = symmetric(3)
        assert trivial_subgroup(s3).order == 1
        assert full_subgroup(s3).order == 6

    def test_conjugate_subgroup(self):
        s3 = symmetric(3)
        c3 = generated_subgroup(s3, [three_cycle(s3)])
        for g in range(6):
            assert conjugate_subgroup(s3, c3, g).elements == c3.elements  # normal

    def test_double_cosets_s3(self):
        s3 = symmetric(3)
        c3 = generated_subgroup(s3, [three_cycle(s3)])
        reps = double_cosets(s3, c3, c3)
        assert len(reps) == 2
        assert reps[0] == 0

    def test_double_cosets_full_group(self):
        s3 = symmetric(3)
        assert double_cosets(s3, full_subgroup(s3), trivial_subgroup(s3)) == [0]
