"""Tests for the GT(n,k) closed forms, pinned to known reference values."""

import pytest

from gtsg import thabit
from gtsg.thabit import (
    Case,
    apery_coeffs,
    apery_set_closed,
    case_of,
    coeff_solve,
    coeff_value,
    delta,
    embedding_dimension,
    frobenius_closed,
    frobenius_k2_closed,
    generator_at,
    genus_closed,
    max_apery,
    max_apery_fast_kltn,
    minimal_generating_set,
)


class TestGenerators:
    def test_values(self):
        assert generator_at(0, 3, 0) == 2
        assert generator_at(3, 2, 5) == 1277
        assert generator_at(5, 3, 0) == 281

    def test_minimal_sets(self):
        assert minimal_generating_set(1, 3).gens == (11, 29, 65, 137)
        assert minimal_generating_set(2, 3).gens == (29, 65, 137, 281, 569)
        assert minimal_generating_set(0, 1).gens == (2, 5)
        assert minimal_generating_set(0, 3).gens == (2, 11)
        assert minimal_generating_set(3, 2).gens == (37, 77, 157, 317, 637, 1277)
        assert minimal_generating_set(7, 3).gens == (
            1145, 2297, 4601, 9209, 18425, 36857, 73721, 147449, 294905,
            589817, 1179641)

    def test_bad_params(self):
        with pytest.raises(ValueError):
            generator_at(1, 0, 0)
        with pytest.raises(ValueError):
            generator_at(-1, 2, 0)


class TestDeltaAndDimension:
    @pytest.mark.parametrize("n,k,expected", [(0, 3, 1), (3, 2, 2), (1, 3, 2)])
    def test_delta(self, n, k, expected):
        assert delta(n, k) == expected

    @pytest.mark.parametrize("n,k,expected", [(0, 3, 2), (3, 2, 6), (7, 3, 11)])
    def test_embedding_dimension(self, n, k, expected):
        assert embedding_dimension(n, k) == expected


class TestCases:
    @pytest.mark.parametrize("n,k,expected", [
        ((1), 2, Case.EXCEPTION_1_2),
        (0, 7, Case.N0),
        (4, 4, Case.KEQ_N),
        (0, 1, Case.N0),
        (1, 1, Case.K1),
        (5, 1, Case.K1),
        (5, 3, Case.KLT_N),
        (2, 3, Case.KGT_N),
    ])
    def test_tag(self, n, k, expected):
        assert case_of(n, k) is expected

    def test_every_point_has_exactly_one_case(self):
        for n in range(0, 9):
            for k in range(1, 9):
                case_of(n, k)  # must not raise


class TestCoeffValue:
    def test_reference_values(self):
        assert coeff_value(5, 3, (0, 1, 1, 1, 0, 0, 0, 1)) == 81764
        assert coeff_value(2, 3, (0, 2, 1, 1)) == 1124

    def test_zeros(self):
        assert coeff_value(4, 2, (0,) * 6) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            coeff_value(5, 3, (0, 1))


class TestCoeffSolve:
    def test_reference_solutions(self):
        assert coeff_solve(10, 4) == (0, 1, 1, 0)
        assert coeff_solve(0, 5) == (0, 0, 0, 0, 0)
        # weights (1, 3, 7): only 2*3 reaches 6
        assert coeff_solve(6, 3) == (0, 2, 0)

    def test_out_of_range(self):
        assert coeff_solve(-1, 3) is None
        assert coeff_solve(2 * (2**3 - 1) + 1, 3) is None

    def test_range_limits(self):
        assert coeff_solve(2 * (2**4 - 1), 4) == (0, 0, 0, 2)


class TestMaxApery:
    def test_reference_values(self):
        assert max_apery(5, 3) == 81764
        assert max_apery(2, 2) == 354  # s_1 + s_4 = 37 + 317
        assert max_apery(2, 3) == 1124
        assert max_apery(1, 2) == 74
        assert max_apery(3, 2) == 1588  # 2s_1 + s_2 + s_5

    def test_fast_path(self):
        assert max_apery_fast_kltn(5, 3) == 81764
        assert max_apery_fast_kltn(7, 3) == 1327048
        assert max_apery_fast_kltn(3, 2) == max_apery(3, 2)

    def test_fast_path_domain(self):
        with pytest.raises(ValueError):
            max_apery_fast_kltn(2, 2)  # not k < n
        with pytest.raises(ValueError):
            max_apery_fast_kltn(9, 2)  # n > 2^k + k - 3

    def test_fast_path_agrees_where_defined(self):
        for k in range(2, 6):
            for n in range(k + 1, min(2**k + k - 3, 14) + 1):
                assert max_apery_fast_kltn(n, k) == max_apery(n, k), (n, k)


class TestFrobeniusClosed:
    def test_reference_values(self):
        assert frobenius_closed(5, 3) == 81483
        assert frobenius_closed(7, 3) == 1325903
        assert frobenius_closed(2, 3) == 1095
        assert frobenius_closed(1, 2) == 67

    def test_k1_identity(self):
        for n in range(1, 13):
            assert frobenius_closed(n, 1) == 9 * 4**n - 3 * 2**n - 1

    def test_keqn_identity(self):
        for n in range(1, 11):
            expected = (2**n + 1) * 2**n * (2 ** (2 * n) + 1) - (2**n - 1)
            assert frobenius_closed(n, n) == expected

    def test_k1_and_keqn_overlap_at_1_1(self):
        s1, s2 = generator_at(1, 1, 1), generator_at(1, 1, 2)
        assert max_apery(1, 1) == s1 + s2  # both case formulas coincide here

    def test_k2_shortcut(self):
        # F(GT(n,2)) = 25*2^(2n) - 5*2^n - 9 for n >= 3; GT(2,2) is the
        # k = n case instead (F = s_1 + s_4 - s_0 = 337)
        for n in range(3, 13):
            assert frobenius_k2_closed(n) == frobenius_closed(n, 2)
        assert frobenius_closed(2, 2) == 337

    def test_k2_shortcut_domain(self):
        with pytest.raises(ValueError):
            frobenius_k2_closed(2)


class TestAperyCoeffs:
    @pytest.mark.parametrize("n,k,count", [(3, 2, 37), (2, 2, 17), (2, 3, 29)])
    def test_counts(self, n, k, count):
        assert len(apery_coeffs(n, k)) == count

    def test_gt_3_2_values_match_listing(self):
        # the 37 sums published for this instance, in coefficient form
        s = [generator_at(3, 2, i) for i in range(6)]
        listing = {
            0, s[1], 2 * s[1], s[2], s[1] + s[2], 2 * s[1] + s[2], 2 * s[2],
            s[3], s[1] + s[3], 2 * s[1] + s[3], s[2] + s[3],
            s[1] + s[2] + s[3], 2 * s[1] + s[2] + s[3], 2 * s[2] + s[3],
            2 * s[3], s[4], s[1] + s[4], 2 * s[1] + s[4], s[2] + s[4],
            s[1] + s[2] + s[4], 2 * s[1] + s[2] + s[4], 2 * s[2] + s[4],
            s[3] + s[4], s[1] + s[3] + s[4], 2 * s[1] + s[3] + s[4],
            s[2] + s[3] + s[4], s[1] + s[2] + s[3] + s[4],
            2 * s[1] + s[2] + s[3] + s[4], 2 * s[2] + s[3] + s[4],
            2 * s[3] + s[4], 2 * s[4], s[5], s[1] + s[5], 2 * s[1] + s[5],
            s[2] + s[5], s[1] + s[2] + s[5], 2 * s[1] + s[2] + s[5],
        }
        assert set(apery_set_closed(3, 2)) == listing

    def test_gt_2_3_values_match_listing(self):
        s = [generator_at(2, 3, i) for i in range(5)]
        listing = {
            0, s[1], 2 * s[1], s[2], s[1] + s[2], 2 * s[1] + s[2], 2 * s[2],
            s[3], s[1] + s[3], 2 * s[1] + s[3], s[2] + s[3],
            s[1] + s[2] + s[3], 2 * s[1] + s[2] + s[3], 2 * s[2] + s[3],
            2 * s[3], s[4], s[1] + s[4], 2 * s[1] + s[4], s[2] + s[4],
            s[1] + s[2] + s[4], 2 * s[1] + s[2] + s[4], 2 * s[2] + s[4],
            s[3] + s[4], s[1] + s[3] + s[4], 2 * s[1] + s[3] + s[4],
            s[2] + s[3] + s[4], s[1] + s[2] + s[3] + s[4],
            2 * s[1] + s[2] + s[3] + s[4], 2 * s[2] + s[3] + s[4],
        }
        assert set(apery_set_closed(2, 3)) == listing

    def test_gt_2_2_values_match_listing(self):
        s = [generator_at(2, 2, i) for i in range(5)]
        listing = {
            0, s[1], 2 * s[1], s[2], s[1] + s[2], 2 * s[1] + s[2], 2 * s[2],
            s[3], s[1] + s[3], 2 * s[1] + s[3], s[2] + s[3],
            s[1] + s[2] + s[3], 2 * s[1] + s[2] + s[3], 2 * s[2] + s[3],
            2 * s[3], s[4], s[1] + s[4],
        }
        assert set(apery_set_closed(2, 2)) == listing


class TestAperySetClosed:
    def test_exception_pair(self):
        assert apery_set_closed(1, 2) == [0, 17, 34, 37, 54, 71, 74]

    def test_n0(self):
        assert apery_set_closed(0, 3) == [0, 11]
        assert apery_set_closed(0, 5) == [0, generator_at(0, 5, 1)]

    def test_cardinality_is_s0(self):
        for n, k in [(1, 1), (3, 1), (2, 2), (3, 2), (4, 3), (2, 5), (1, 4)]:
            assert len(apery_set_closed(n, k)) == generator_at(n, k, 0)

    def test_mask_enumeration_matches_tuple_enumeration(self):
        for n, k in [(0, 4), (1, 1), (1, 2), (4, 1), (3, 2), (5, 3), (2, 2),
                     (3, 3), (1, 5), (2, 7), (6, 2), (2, 3), (4, 4), (5, 2)]:
            fast = sorted(thabit._apery_values(n, k))
            slow = sorted(coeff_value(n, k, t)
                          for t in thabit.iter_apery_coeffs(n, k))
            assert fast == slow, (n, k)


class TestGenusClosed:
    def test_n0(self):
        assert genus_closed(0, 3) == 5

    def test_exception_pair(self):
        assert genus_closed(1, 2) == 38  # (0+17+34+37+54+71+74)/7 - 3

    def test_k1_small(self):
        # T(1) = <5, 11, 23>
        S = minimal_generating_set(1, 1)
        assert S.gens == (5, 11, 23)
        assert genus_closed(1, 1) == S.genus()
