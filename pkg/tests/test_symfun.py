import pytest

from hookcomb.partitions import (
    Partition,
    SkewShape,
    enumerate_partitions,
    hook_count_series,
)
from hookcomb.symfun import (
    MultiPoly,
    hook_schur,
    is_symmetric_in_block,
    schur_poly,
    skew_schur_poly,
)


def mp(num_x, num_y, terms):
    return MultiPoly(num_x, num_y, terms)


class TestMultiPoly:
    def test_zero_coefficients_dropped(self):
        assert mp(1, 0, {(1,): 0}).is_zero()

    def test_wrong_exponent_length_rejected(self):
        with pytest.raises(ValueError):
            mp(1, 1, {(1,): 1})

    def test_add_and_sub(self):
        a = mp(1, 1, {(1, 0): 1})
        b = mp(1, 1, {(0, 1): 1})
        assert a + b == mp(1, 1, {(1, 0): 1, (0, 1): 1})
        assert (a + b) - b == a

    def test_add_alphabet_mismatch_rejected(self):
        with pytest.raises(ValueError):
            mp(1, 0, {(1,): 1}) + mp(0, 1, {(1,): 1})

    def test_mul(self):
        a = mp(1, 1, {(1, 0): 1, (0, 1): 1})
        assert a * a == mp(1, 1, {(2, 0): 1, (1, 1): 2, (0, 2): 1})

    def test_swap_alphabets(self):
        a = mp(2, 1, {(1, 0, 2): 3})
        assert a.swap_alphabets() == mp(1, 2, {(2, 1, 0): 3})

    def test_str_ordering_and_coefficients(self):
        a = mp(1, 1, {(1, 0): 1, (0, 1): 1})
        assert str(a) == "x1 + y1"
        b = mp(2, 1, {(2, 0, 1): 3})
        assert str(b) == "3*x1^2*y1"
        assert str(mp(1, 1, None)) == "0"

    def test_str_mixed_degrees_ascending(self):
        a = mp(1, 0, {(0,): 1, (2,): -1})
        assert str(a) == "1 - x1^2"

    def test_json_form(self):
        a = mp(1, 1, {(2, 0): 1, (1, 1): 1})
        assert a.to_json() == [
            {"coeff": "1", "x": [2], "y": [0]},
            {"coeff": "1", "x": [1], "y": [1]},
        ]

    def test_constant(self):
        assert mp(1, 1, {(0, 0): 5}) == MultiPoly.constant(1, 1, 5)
        assert str(MultiPoly.constant(0, 0, 1)) == "1"


class TestSchurPoly:
    def test_single_cell(self):
        assert schur_poly(Partition((1,)), 2) == mp(2, 0, {(1, 0): 1, (0, 1): 1})

    def test_single_row_one_var(self):
        assert schur_poly(Partition((2,)), 1) == mp(1, 0, {(2,): 1})

    def test_column_too_tall(self):
        assert schur_poly(Partition((1, 1)), 1).is_zero()

    def test_two_one_shape(self):
        expected = mp(2, 0, {(2, 1): 1, (1, 2): 1})
        assert schur_poly(Partition((2, 1)), 2) == expected

    def test_empty_partition_is_one(self):
        assert schur_poly(Partition(), 0) == MultiPoly.constant(0, 0, 1)
        assert schur_poly(Partition(), 3) == MultiPoly.constant(3, 0, 1)

    def test_symmetric(self):
        for parts in [(2,), (1, 1), (2, 1), (3, 1), (2, 2)]:
            assert is_symmetric_in_block(schur_poly(Partition(parts), 3), "x")


class TestSkewSchurPoly:
    def test_trivial_inner(self):
        shape = SkewShape(Partition((1,)))
        assert skew_schur_poly(shape, 1) == mp(0, 1, {(1,): 1})

    def test_disconnected_column_vanishes_with_one_var(self):
        shape = SkewShape(Partition((2, 2)), Partition((1, 1)))
        assert skew_schur_poly(shape, 1).is_zero()

    def test_single_skew_cell(self):
        shape = SkewShape(Partition((2,)), Partition((1,)))
        assert skew_schur_poly(shape, 2) == mp(0, 2, {(1, 0): 1, (0, 1): 1})

    def test_reduces_to_schur_when_inner_empty(self):
        for parts in [(1,), (2,), (2, 1), (3, 2)]:
            lam = Partition(parts)
            skew = skew_schur_poly(SkewShape(lam), 2)
            assert skew.swap_alphabets() == schur_poly(lam, 2)

    def test_symmetric_in_y(self):
        shape = SkewShape(Partition((3, 2)), Partition((1,)))
        assert is_symmetric_in_block(skew_schur_poly(shape, 3), "y")


class TestHookSchur:
    def test_single_cell(self):
        assert hook_schur(Partition((1,)), 1, 1) == mp(1, 1, {(1, 0): 1, (0, 1): 1})

    def test_row_two(self):
        expected = mp(1, 1, {(2, 0): 1, (1, 1): 1})
        assert hook_schur(Partition((2,)), 1, 1) == expected

    def test_column_two(self):
        expected = mp(1, 1, {(0, 2): 1, (1, 1): 1})
        assert hook_schur(Partition((1, 1)), 1, 1) == expected

    def test_square_vanishes_outside_hook(self):
        assert hook_schur(Partition((2, 2)), 1, 1).is_zero()

    def test_symmetric_in_both_blocks(self):
        for n in range(7):
            for lam in enumerate_partitions(n):
                for k in range(3):
                    for l in range(3):
                        hs = hook_schur(lam, k, l)
                        assert is_symmetric_in_block(hs, "x"), (lam, k, l)
                        assert is_symmetric_in_block(hs, "y"), (lam, k, l)

    def test_y_empty_specializes_to_schur(self):
        for n in range(7):
            for lam in enumerate_partitions(n):
                for k in range(4):
                    assert hook_schur(lam, k, 0) == schur_poly(lam, k), (lam, k)

    def test_x_empty_specializes_to_conjugate_schur(self):
        for n in range(7):
            for lam in enumerate_partitions(n):
                for l in range(4):
                    expected = schur_poly(lam.conjugate(), l).swap_alphabets()
                    assert hook_schur(lam, 0, l) == expected, (lam, l)

    def test_support_equals_hook_membership(self):
        for n in range(9):
            for lam in enumerate_partitions(n):
                for k in range(3):
                    for l in range(3):
                        assert bool(hook_schur(lam, k, l)) == lam.in_hook(k, l), (lam, k, l)

    def test_duality_under_conjugation(self):
        for n in range(7):
            for lam in enumerate_partitions(n):
                for k in range(3):
                    for l in range(3):
                        direct = hook_schur(lam, k, l)
                        dual = hook_schur(lam.conjugate(), l, k).swap_alphabets()
                        assert direct == dual, (lam, k, l)

    def test_homogeneous_of_degree_size(self):
        for parts in [(3,), (2, 1), (3, 2, 1), (4, 2)]:
            lam = Partition(parts)
            degrees = hook_schur(lam, 2, 2).degrees()
            assert degrees == {lam.size}

    def test_nonvanishing_count_matches_hook_counting_series(self):
        for k in range(3):
            for l in range(3):
                counts = hook_count_series(k, l, 8)
                for n in range(9):
                    alive = sum(
                        1 for lam in enumerate_partitions(n) if hook_schur(lam, k, l)
                    )
                    assert alive == counts.coefficient(n), (k, l, n)


class TestIsSymmetricInBlock:
    def test_symmetric_pair(self):
        assert is_symmetric_in_block(mp(2, 0, {(1, 0): 1, (0, 1): 1}), "x")

    def test_asymmetric_single_variable(self):
        assert not is_symmetric_in_block(mp(2, 0, {(1, 0): 1}), "x")

    def test_symmetric_across_terms(self):
        p = mp(2, 1, {(1, 0, 1): 1, (0, 1, 1): 1})
        assert is_symmetric_in_block(p, "x")

    def test_trivial_blocks(self):
        p = mp(1, 0, {(3,): 2})
        assert is_symmetric_in_block(p, "x")
        assert is_symmetric_in_block(p, "y")

    def test_unknown_block_rejected(self):
        with pytest.raises(ValueError):
            is_symmetric_in_block(mp(1, 1, None), "z")
