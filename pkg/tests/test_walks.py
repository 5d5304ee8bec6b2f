import pytest

from overlapls.partitions import Partition, binomial, rho
from overlapls.walks import (
    StaircaseWalk,
    count_walks,
    complement_walk,
    enumerate_walks,
    h_times,
    is_quasi_partition,
    step_time_encoding,
    mu_of,
    nu_of,
    split_walk,
    v_times,
)

REFERENCE_WALK = StaircaseWalk("HVVHHHVHH")


class TestEnumeration:
    def test_1x1(self):
        assert [w.steps for w in enumerate_walks(1, 1)] == ["HV", "VH"]

    def test_6x3_contains_reference_walk(self):
        walks = list(enumerate_walks(6, 3))
        assert len(walks) == 84
        assert REFERENCE_WALK in walks

    def test_4x4_count(self):
        assert len(list(enumerate_walks(4, 4))) == 70

    def test_counts_match_binomial(self):
        for n in range(5):
            for m in range(5):
                walks = list(enumerate_walks(n, m))
                assert len(walks) == len(set(walks)) == binomial(n + m, m)
                assert count_walks(n, m) == binomial(n + m, m)


class TestStepTimes:
    def test_reference_walk(self):
        assert v_times(REFERENCE_WALK) == (2, 3, 7)
        assert h_times(REFERENCE_WALK) == (1, 4, 5, 6, 8, 9)

    def test_all_horizontal(self):
        w = StaircaseWalk("HHHH")
        assert v_times(w) == ()
        assert h_times(w) == (1, 2, 3, 4)

    def test_times_partition_the_interval(self):
        for n in range(5):
            for m in range(5):
                for w in enumerate_walks(n, m):
                    assert tuple(sorted(v_times(w) + h_times(w))) == tuple(range(1, n + m + 1))


class TestWalkPartitions:
    def test_reference_walk(self):
        assert mu_of(REFERENCE_WALK) == Partition((5, 5, 2))
        assert nu_of(REFERENCE_WALK) == Partition((4, 1, 1))

    def test_all_vertical_first(self):
        for n in range(1, 4):
            for m in range(1, 4):
                w = StaircaseWalk("V" * m + "H" * n)
                assert mu_of(w) == Partition((n,) * m)
                assert nu_of(w) == Partition(())

    def test_nu_is_complement_of_mu(self):
        for n in range(5):
            for m in range(5):
                for w in enumerate_walks(n, m):
                    assert nu_of(w) == mu_of(w).complement(n, m)

    def test_sizes_fill_rectangle(self):
        for n in range(5):
            for m in range(5):
                for w in enumerate_walks(n, m):
                    assert mu_of(w).size + nu_of(w).size == m * n

    def test_step_time_encoding_exhaustive(self):
        for n in range(7):
            for m in range(7):
                r_m, r_n = rho(m), rho(n)
                for w in enumerate_walks(n, m):
                    enc_v, enc_h = step_time_encoding(w)
                    assert mu_of(w).add(r_m).padded(m) == enc_v.padded(m)
                    assert w.nu_conj().add(r_n).padded(n) == enc_h.padded(n)


class TestSplit:
    def test_reference_nine_step_split(self):
        # 9-step walk, cut after n - k = 4 steps: 2x2 prefix and 4x1 suffix
        pi1, pi2 = split_walk(REFERENCE_WALK, 4)
        assert (pi1.n, pi1.m) == (2, 2)
        assert (pi2.n, pi2.m) == (4, 1)
        assert len(pi1) == 4 and len(pi2) == 5

    def test_zero_cut(self):
        pi1, pi2 = split_walk(REFERENCE_WALK, 0)
        assert pi1.steps == ""
        assert pi2 == REFERENCE_WALK

    def test_concatenation_reproduces_walk(self):
        for n in range(5):
            for m in range(5):
                if n + m > 8:
                    continue
                for w in enumerate_walks(n, m):
                    for c in range(len(w) + 1):
                        a, b = split_walk(w, c)
                        assert a.steps + b.steps == w.steps

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            split_walk(REFERENCE_WALK, 10)


class TestComplementWalk:
    def test_reversal(self):
        assert complement_walk(REFERENCE_WALK).steps == "HHVHHHVVH"

    def test_involution(self):
        for w in enumerate_walks(3, 2):
            assert complement_walk(complement_walk(w)) == w

    def test_swaps_partitions(self):
        for n in range(5):
            for m in range(5):
                for w in enumerate_walks(n, m):
                    tau = complement_walk(w)
                    assert mu_of(tau) == nu_of(w)
                    assert nu_of(tau) == mu_of(w)

    def test_step_time_reflection(self):
        for w in enumerate_walks(4, 3):
            tau = complement_walk(w)
            vt, vw = v_times(tau), v_times(w)
            total = len(w)
            for i in range(w.m):
                assert vw[w.m - 1 - i] == total + 1 - vt[i]


class TestQuasiPartitions:
    def test_reference_labels(self):
        w = StaircaseWalk.from_v_times((1, 3, 7), 9)
        assert is_quasi_partition((4, 2, 3, 1, 1, -1, -1, 0, 0), w)

    def test_partitions_always_pass(self):
        for n in range(5):
            for m in range(5):
                if n + m < 3:
                    continue
                from overlapls.partitions import partitions_in_box

                for lam in partitions_in_box(3, n + m):
                    labels = lam.padded(n + m)
                    for w in enumerate_walks(n, m):
                        assert is_quasi_partition(labels, w)

    def test_double_increase_rejected(self):
        assert not is_quasi_partition((0, 1, 2), StaircaseWalk("HVH"))

    def test_negative_tail_rejected(self):
        assert not is_quasi_partition((1, 1, -1), StaircaseWalk("HVH"))

    def test_same_type_increase_rejected(self):
        assert not is_quasi_partition((0, 1, 0), StaircaseWalk("HHV"))

    def test_cross_type_jump_rejected(self):
        assert not is_quasi_partition((0, 2, 0), StaircaseWalk("HVH"))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            is_quasi_partition((1, 2), StaircaseWalk("HVH"))


class TestConstruction:
    def test_from_v_times(self):
        assert StaircaseWalk.from_v_times((2, 3, 7), 9) == REFERENCE_WALK

    def test_invalid_steps(self):
        with pytest.raises(ValueError):
            StaircaseWalk("HXV")

    def test_invalid_v_times(self):
        with pytest.raises(ValueError):
            StaircaseWalk.from_v_times((0, 2), 3)
