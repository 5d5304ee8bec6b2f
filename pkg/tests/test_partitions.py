import math

import pytest

from overlapls.partitions import (
    Partition,
    add,
    binomial,
    complement,
    conjugate,
    contains_cell,
    index,
    partitions_in_box,
    rect,
    rho,
    shift_first,
    union,
)


class TestConstruction:
    def test_trailing_zeros_stripped(self):
        assert Partition((3, 1, 0, 0)) == Partition((3, 1))
        assert Partition((0, 0)) == Partition(())

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_size_and_length(self):
        lam = Partition((7, 4, 2, 2))
        assert lam.size == 15
        assert lam.length == 4

    def test_part_accessor_conventions(self):
        lam = Partition((3, 1))
        assert lam.part(0) == math.inf
        assert lam.part(1) == 3
        assert lam.part(5) == 0


class TestRho:
    def test_zero(self):
        assert rho(0) == Partition(())

    def test_one(self):
        assert rho(1) == Partition(())

    def test_five(self):
        assert rho(5) == Partition((4, 3, 2, 1))


class TestConjugate:
    def test_reference_example(self):
        assert conjugate(Partition((5, 5, 2))) == Partition((3, 3, 2, 2, 2))

    def test_empty(self):
        assert conjugate(Partition(())) == Partition(())

    def test_subpartition_example(self):
        assert conjugate(Partition((7, 3, 2, 1))) == Partition((4, 3, 2, 1, 1, 1, 1))

    def test_involution_and_size(self):
        for lam in partitions_in_box(5, 5):
            assert conjugate(conjugate(lam)) == lam
            assert conjugate(lam).size == lam.size


class TestContainsCell:
    def test_beyond_row(self):
        assert contains_cell(Partition((7, 4, 2, 2)), 6, 2) is False

    def test_zero_conventions(self):
        lam = Partition((2, 1))
        assert contains_cell(lam, 0, 9) is True
        assert contains_cell(lam, 9, 0) is True

    def test_inside(self):
        assert contains_cell(Partition((7, 4, 2, 2)), 2, 4) is True

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            contains_cell(Partition((1,)), -1, 0)


class TestAddUnion:
    def test_reference_add(self):
        assert add(Partition((5, 5, 2)), Partition((4, 3))) == Partition((9, 8, 2))

    def test_union_with_empty(self):
        lam = Partition((3, 2))
        assert union(lam, Partition(())) == lam

    def test_union_conjugate_is_add_of_conjugates(self):
        box = list(partitions_in_box(4, 4))
        for mu in box:
            for nu in box:
                lhs = conjugate(union(mu, nu))
                rhs = add(conjugate(mu), conjugate(nu))
                assert lhs == rhs


class TestIndex:
    def test_reference_values(self):
        lam = Partition((7, 4, 2, 2))
        assert index(lam, 6, 3) == 2
        assert index(lam, 3, 5) == 1
        assert index(lam, 2, 1) == -1

    def test_empty_partition(self):
        for m in range(5):
            for n in range(5):
                assert index(Partition(()), m, n) == min(m, n)

    def test_two_characterizations_agree(self):
        # the largest k with the outside cell is the smallest k with the inside cell
        for lam in partitions_in_box(4, 4):
            for m in range(5):
                for n in range(5):
                    k = index(lam, m, n)
                    assert not contains_cell(lam, m + 1 - k, n + 1 - k)
                    assert contains_cell(lam, m - k, n - k)

    def test_conjugation_invariance(self):
        for lam in partitions_in_box(5, 5):
            for m in range(6):
                for n in range(6):
                    assert index(lam, m, n) == index(conjugate(lam), n, m)


class TestComplement:
    def test_reference_example(self):
        assert complement(Partition((5, 5, 2)), 6, 3) == Partition((4, 1, 1))

    def test_full_rectangle(self):
        assert complement(rect(4, 3), 4, 3) == Partition(())

    def test_derived_example(self):
        assert complement(Partition((4, 4, 2, 2, 1, 1, 1)), 4, 7) == Partition((3, 3, 3, 2, 2))

    def test_rejects_oversized(self):
        with pytest.raises(ValueError):
            complement(Partition((5,)), 4, 2)

    def test_involution(self):
        for lam in partitions_in_box(4, 3):
            assert complement(complement(lam, 4, 3), 4, 3) == lam

    def test_commutes_with_conjugation(self):
        for m in range(1, 6):
            for n in range(1, 6):
                for lam in partitions_in_box(m, n):
                    lhs = conjugate(complement(lam, m, n))
                    rhs = complement(conjugate(lam), n, m)
                    assert lhs == rhs

    def test_commutes_with_addition(self):
        for lam in partitions_in_box(3, 2):
            for kappa in partitions_in_box(2, 2):
                lhs = complement(add(lam, kappa), 3 + 2, 2)
                rhs = add(complement(lam, 3, 2), complement(kappa, 2, 2))
                assert lhs == rhs


class TestHelpers:
    def test_take_drop(self):
        lam = Partition((5, 3, 1))
        assert lam.take(2) == Partition((5, 3))
        assert lam.take(5) == lam
        assert lam.drop(1) == Partition((3, 1))
        assert lam.drop(4) == Partition(())

    def test_select(self):
        lam = Partition((7, 4, 3, 3, 3, 1))
        assert lam.select((2, 3, 7)) == (4, 3, 0)

    def test_shift_first(self):
        assert shift_first(Partition((3, 2)), 2, 3) == Partition((5, 4, 2))
        assert shift_first(Partition((3, 2)), -2, 2) == Partition((1,))
        with pytest.raises(ValueError):
            shift_first(Partition((3, 2)), -3, 2)

    def test_partitions_in_box_count(self):
        for m in range(5):
            for n in range(5):
                assert len(list(partitions_in_box(m, n))) == binomial(m + n, m)

    def test_contains(self):
        assert Partition((3, 2)).contains(Partition((2, 2)))
        assert not Partition((3, 2)).contains(Partition((2, 2, 1)))

    def test_json(self):
        assert Partition((7, 4, 2, 2)).to_json() == [7, 4, 2, 2]
