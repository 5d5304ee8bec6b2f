from overlapls import identities
from overlapls.littlewood_schur import ls_combinatorial, ls_determinantal
from overlapls.overlap import enumerate_overlap_pairs, overlap
from overlapls.partitions import Partition, partitions_in_box
from overlapls.polyring import VarSeq, ZERO, as_fraction


class TestFirstOverlap:
    def test_l_zero_trivial(self):
        lam = Partition((2, 1))
        X, Y = VarSeq.make("x", 2), VarSeq.make("y", 1)
        k = lam.index(1, 2)
        mu, nu = Partition(()), lam.take(2 - k)
        r = identities.verify_first_overlap(lam, 1, 2, 0, mu, nu, X, Y)
        assert r.passed

    def test_sweep_small(self):
        Y = VarSeq.make("y", 1)
        for lam in partitions_in_box(2, 2):
            for n in (2, 3):
                X = VarSeq.make("x", n)
                k = lam.index(1, n)
                if k < 0:
                    continue
                for l in range(0, min(n - k, n) + 1):
                    for mu, nu, _ in enumerate_overlap_pairs(lam.take(n - k), l, n - k - l):
                        r = identities.verify_first_overlap(lam, 1, n, l, mu, nu, X, Y)
                        assert r.passed, r.witness

    def test_wrong_pair_is_inapplicable(self):
        lam = Partition((2, 1))
        X, Y = VarSeq.make("x", 2), VarSeq.make("y", 1)
        r = identities.verify_first_overlap(
            lam, 1, 2, 0, Partition((5,)), Partition(()), X, Y
        )
        assert r.inapplicable

    def test_grid_mode(self):
        lam = Partition((2, 1))
        X, Y = VarSeq.make("x", 2), VarSeq.make("y", 1)
        k = lam.index(1, 2)
        for mu, nu, _ in enumerate_overlap_pairs(lam.take(2 - k), 1, 2 - k - 1):
            r = identities.verify_first_overlap(lam, 1, 2, 1, mu, nu, X, Y, mode="grid")
            assert r.passed


class TestSortedSplitAndCounterexample:
    def test_counterexample_difference(self):
        r = identities.counterexample_regression()
        assert r.passed
        assert r.witness == "y1*y2*y3"

    def test_counterexample_grid_mode(self):
        assert identities.counterexample_regression(mode="grid").passed

    def test_l_zero_is_exact(self):
        lam = Partition((1, 1, 1))
        X, Y = VarSeq.make("x", 2), VarSeq.make("y", 3)
        naive = identities.sorted_split_sum(lam, 0, X, Y)
        assert as_fraction(ls_determinantal(lam, X, Y)) == naive

    def test_valid_range_has_no_correction(self):
        # same cut, but here the index keeps l = 1 inside the valid range
        lam = Partition((3, 1))
        X, Y = VarSeq.make("x", 2), VarSeq.make("y", 1)
        k = lam.index(1, 2)
        assert 1 <= 2 - k
        naive = identities.sorted_split_sum(lam, 1, X, Y)
        assert as_fraction(ls_determinantal(lam, X, Y)) == naive

    def test_both_sides_match_combinatorial_route(self):
        lam = Partition((1, 1, 1))
        X, Y = VarSeq.make("x", 2), VarSeq.make("y", 3)
        assert ls_determinantal(lam, X, Y) == ls_combinatorial(lam, X.negated(), Y)


class TestMaxIndex:
    def test_nu_empty_reduces_to_schur_like(self):
        mu = Partition((2, 1))
        X, Y = VarSeq.make("x", 3), VarSeq.of()
        r = identities.verify_cor_max_index(mu, Partition(()), 2, X, Y)
        assert not r.failed

    def test_sweep(self):
        X, Y = VarSeq.make("x", 2), VarSeq.make("y", 2)
        seen = 0
        for mu in partitions_in_box(2, 2):
            for nu in partitions_in_box(2, 2):
                for l in range(mu.length, 3):
                    r = identities.verify_cor_max_index(mu, nu, l, X, Y)
                    assert not r.failed, r.witness
                    seen += 0 if r.inapplicable else 1
        assert seen > 0

    def test_infinite_branch_both_sides_vanish(self):
        # mu and the head of nu collide, so the overlap is infinite
        X, Y = VarSeq.make("x", 3), VarSeq.make("y", 2)
        found = 0
        for mu in partitions_in_box(3, 2):
            for nu in partitions_in_box(3, 3):
                for l in range(mu.length, 4):
                    k = nu.index(2, 3 - l)
                    if l > 3 - k or mu.length > l:
                        continue
                    ov = overlap(mu, nu.take(3 - l - k), l, 3 - l - k)
                    if not ov.is_infinite:
                        continue
                    r = identities.verify_cor_max_index(mu, nu, l, X, Y)
                    if not r.inapplicable:
                        assert r.passed, r.witness
                        found += 1
        assert found > 0


class TestSecondOverlapAndWalkSplit:
    def test_y_empty_forces_p_zero(self):
        lam = Partition((2, 1))
        S, T = VarSeq.make("s", 1), VarSeq.make("t", 2)
        r = identities.verify_second_overlap(lam, S, T, VarSeq.of())
        assert r.passed

    def test_counterexample_instance_passes_here(self):
        # the fiber sum carries the correction term the naive cut misses
        lam = Partition((1, 1, 1))
        S, T = VarSeq.of("x1"), VarSeq.of("x2")
        Y = VarSeq.make("y", 3)
        r = identities.verify_second_overlap(lam, S, T, Y)
        assert r.passed
        r = identities.verify_walk_split(lam, S, T, Y)
        assert r.passed
        r = identities.walk_split_bijection_check(lam, S, T, Y)
        assert r.passed

    def test_sweep_with_bijection(self):
        for lam in partitions_in_box(2, 2):
            for n in range(0, 3):
                for l in range(0, n + 1):
                    S, T = VarSeq.make("s", l), VarSeq.make("t", n - l)
                    for m in range(0, 2):
                        Y = VarSeq.make("y", m)
                        r1 = identities.verify_second_overlap(lam, S, T, Y)
                        r2 = identities.verify_walk_split(lam, S, T, Y)
                        r3 = identities.walk_split_bijection_check(lam, S, T, Y)
                        for r in (r1, r2, r3):
                            assert not r.failed, (lam, n, l, m, r.witness)

    def test_grid_mode(self):
        lam = Partition((2, 1))
        S, T, Y = VarSeq.make("s", 1), VarSeq.make("t", 1), VarSeq.make("y", 1)
        assert identities.verify_second_overlap(lam, S, T, Y, mode="grid").passed


class TestSchurCorollaries:
    def test_first_overlap_schur_infinite_gives_zero(self):
        # both partitions demand the same staircase slot
        mu, nu = Partition((1,)), Partition(())
        X = VarSeq.make("x", 2)
        r = identities.verify_first_overlap_schur(mu, nu, 1, 1, X)
        assert not r.failed

    def test_first_overlap_schur_exhaustive_2x2(self):
        X = VarSeq.make("x", 4)
        for mu in partitions_in_box(2, 2):
            for nu in partitions_in_box(2, 2):
                r = identities.verify_first_overlap_schur(mu, nu, 2, 2, X)
                assert r.passed, (mu, nu, r.witness)

    def test_first_overlap_schur_intro_instance_on_grid(self):
        # eight variables: the split sum reassembles s of the overlap value
        mu, nu = Partition((9, 6, 1)), Partition((4, 3, 3, 2))
        assert overlap(mu, nu, 3, 5).value == Partition((4, 2, 2, 2, 2, 1))
        X = VarSeq.make("x", 8)
        r = identities.verify_first_overlap_schur(mu, nu, 3, 5, X, mode="grid")
        assert r.passed, r.witness

    def test_second_overlap_schur_sweep(self):
        for lam in partitions_in_box(3, 3):
            for m in range(0, 3):
                for n in range(0, 3):
                    if lam.length > m + n:
                        continue
                    S, T = VarSeq.make("s", m), VarSeq.make("t", n)
                    r = identities.verify_second_overlap_schur(lam, S, T)
                    assert r.passed, (lam, m, n, r.witness)

    def test_labeled_walk_matches_fiber_route(self):
        for lam in partitions_in_box(3, 3):
            for m in range(0, 3):
                for n in range(0, 3):
                    if lam.length > m + n:
                        continue
                    S, T = VarSeq.make("s", m), VarSeq.make("t", n)
                    r = identities.verify_labeled_walk_schur(lam, S, T)
                    assert r.passed, (lam, m, n, r.witness)

    def test_reference_fiber_term_appears(self):
        # the labeled-walk sum for the 6x3 example contains the worked pair
        lam = Partition((7, 4, 3, 3, 3, 1))
        pairs = [
            (mu.parts, nu.parts, s) for mu, nu, s in enumerate_overlap_pairs(lam, 3, 6)
        ]
        assert ((9, 8, 2), (10, 4, 4, 2), 1) in pairs


class TestSubpartitionIdentities:
    def test_schur_route_sweep(self):
        for m in range(0, 3):
            for n in range(0, 3):
                S, T = VarSeq.make("s", m), VarSeq.make("t", n)
                for l in range(0, 3):
                    for kappa in partitions_in_box(m + n, l):
                        r = identities.verify_subpartition_schur(kappa, m, n, l, S, T)
                        assert r.passed, (kappa, m, n, l, r.witness)

    def test_empty_kappa(self):
        S, T = VarSeq.make("s", 2), VarSeq.make("t", 1)
        r = identities.verify_subpartition_schur(Partition(()), 2, 1, 2, S, T)
        assert r.passed

    def test_reference_pair_appears_as_summand(self):
        from overlapls.overlap import enumerate_subpartition_pairs

        kappa = Partition((7, 3, 2, 1))
        pairs = enumerate_subpartition_pairs(kappa, 4, 3, 4)
        assert (Partition((4, 4, 2, 2, 1, 1, 1)), (1, 4, 5, 7)) in pairs

    def test_ls_route_reduces_to_schur_when_y_empty(self):
        kappa = Partition((2, 1))
        S, T = VarSeq.make("s", 2), VarSeq.make("t", 1)
        r = identities.verify_subpartition_ls(kappa, 2, 1, 0, 2, 0, S, T, VarSeq.of())
        assert r.passed

    def test_ls_route_small(self):
        kappa = Partition((2,))
        S, T, Y = VarSeq.make("s", 1), VarSeq.make("t", 2), VarSeq.make("y", 1)
        r = identities.verify_subpartition_ls(kappa, 1, 1, 1, 1, 1, S, T, Y)
        assert r.passed

    def test_corner_cell_required(self):
        kappa = Partition((1,))
        S, T, Y = VarSeq.make("s", 1), VarSeq.make("t", 1), VarSeq.make("y", 1)
        r = identities.verify_subpartition_ls(kappa, 1, 0, 0, 1, 1, S, T, Y)
        assert r.inapplicable


class TestDualCauchy:
    def test_empty(self):
        r = identities.verify_dual_cauchy(VarSeq.of(), VarSeq.make("y", 2))
        assert r.passed

    def test_one_by_one(self):
        r = identities.verify_dual_cauchy(VarSeq.of("x1"), VarSeq.of("y1"))
        assert r.passed

    def test_2x2_and_grid(self):
        X, Y = VarSeq.make("x", 2), VarSeq.make("y", 2)
        assert identities.verify_dual_cauchy(X, Y).passed
        assert identities.verify_dual_cauchy(X, Y, mode="grid").passed


class TestCatalog:
    def test_run_named(self):
        reports = identities.run_catalog(["counterexample"])
        assert len(reports) == 1 and reports[0].passed

    def test_unknown_name(self):
        try:
            identities.run_catalog(["no-such-check"])
        except KeyError:
            pass
        else:
            raise AssertionError("unknown names must be rejected")

    def test_laplace_entry_uses_seed(self):
        a = identities.run_catalog(["laplace"], seed=1)
        b = identities.run_catalog(["laplace"], seed=1)
        assert [r.to_json() for r in a] == [r.to_json() for r in b]
        assert all(r.passed for r in a)
