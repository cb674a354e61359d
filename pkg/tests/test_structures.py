import itertools

import pytest

from superbol.catalog import SPACE_1_2, example_5_1_beta
from superbol.core import EvenMap, parity_of
from superbol.structures import (
    BinaryStructure,
    Convention,
    HomSuperalgebra,
    bin_mul,
    grading_check,
    hom_associator,
    is_even_self_morphism,
    is_multiplicative,
    super_jordan,
    supercommutator,
    tern_mul,
)

UNIT, HALF = Convention.UNIT, Convention.HALF


def b(name):
    return SPACE_1_2.basis_vector(name)


def test_bin_mul_table_values(ex51):
    assert ex51.mul(b("j"), b("k")) == SPACE_1_2.element({"i": 2})
    assert ex51.mul(b("k"), b("j")) == SPACE_1_2.element({"i": 4})
    assert ex51.mul(b("i"), SPACE_1_2.zero()).is_zero()


def test_tern_mul_table_values(ex31):
    space = ex31.space
    i, j, k = (space.basis_vector(n) for n in ("i", "j", "k"))
    assert tern_mul(ex31.ternary, i, j, i) == space.element({"j": -1})
    assert tern_mul(ex31.ternary, k, i, i) == space.element({"k": 1})
    assert tern_mul(ex31.ternary, i, j, space.zero()).is_zero()


def test_space_mismatch_raises(ex51, ex31):
    with pytest.raises(ValueError):
        bin_mul(ex51.binary, ex31.space.basis_vector("i"), ex31.space.basis_vector("j"))


def test_hom_associator_values(ex51):
    assert hom_associator(ex51, b("j"), b("k"), b("j")) == SPACE_1_2.element({"k": -2})
    assert hom_associator(ex51, SPACE_1_2.zero(), b("j"), b("k")).is_zero()
    assert hom_associator(ex51, b("i"), b("i"), b("i")).is_zero()


def test_hom_associator_identity_twist_matches_three_products(ex51):
    for names in itertools.product(SPACE_1_2.names, repeat=3):
        x, y, z = (b(n) for n in names)
        direct = bin_mul(ex51.binary, bin_mul(ex51.binary, x, y), z) - bin_mul(
            ex51.binary, x, bin_mul(ex51.binary, y, z)
        )
        assert hom_associator(ex51, x, y, z) == direct


def test_super_jordan_values(ex51):
    assert super_jordan(ex51, UNIT, b("j"), b("k")) == SPACE_1_2.element({"i": -2})
    assert super_jordan(ex51, UNIT, b("j"), b("j")).is_zero()
    assert super_jordan(ex51, HALF, b("i"), b("j")) == SPACE_1_2.element({"k": 1})


def test_supercommutator_values(ex51):
    assert supercommutator(ex51, UNIT, b("j"), b("k")) == SPACE_1_2.element({"i": 6})
    assert supercommutator(ex51, UNIT, b("i"), b("i")).is_zero()
    assert supercommutator(ex51, HALF, b("j"), b("k")) == SPACE_1_2.element({"i": 3})


@pytest.mark.parametrize("conv", [UNIT, HALF])
def test_derived_products_symmetry_on_all_pairs(ex51, conv):
    for xn, yn in itertools.product(SPACE_1_2.names, repeat=2):
        x, y = b(xn), b(yn)
        sign = -1 if parity_of(x) == 1 and parity_of(y) == 1 else 1
        assert super_jordan(ex51, conv, x, y) == super_jordan(ex51, conv, y, x).scale(sign)
        assert supercommutator(ex51, conv, x, y) == supercommutator(ex51, conv, y, x).scale(-sign)


def test_half_convention_reconstructs_product(ex51):
    for xn, yn in itertools.product(SPACE_1_2.names, repeat=2):
        x, y = b(xn), b(yn)
        total = super_jordan(ex51, HALF, x, y) + supercommutator(ex51, HALF, x, y)
        assert total == ex51.mul(x, y)


def test_mixed_parity_inputs_extend_bilinearly(ex51):
    mixed = SPACE_1_2.element({"i": 1, "j": 1})
    expected = super_jordan(ex51, UNIT, b("i"), b("k")) + super_jordan(ex51, UNIT, b("j"), b("k"))
    assert super_jordan(ex51, UNIT, mixed, b("k")) == expected


def test_is_multiplicative_identity_twist(ex51, ex31):
    assert is_multiplicative(ex51).passed
    assert is_multiplicative(ex31).passed


def test_is_multiplicative_with_morphism_twist(ex51):
    good = HomSuperalgebra(ex51.binary, example_5_1_beta(2, 0))
    assert is_multiplicative(good).passed


def test_is_multiplicative_fails_at_jj_for_nonzero_b(ex51):
    bad = HomSuperalgebra(ex51.binary, example_5_1_beta(2, 3))
    report = is_multiplicative(bad)
    assert not report.passed
    assert report.counterexample == ("j", "j")
    assert report.residue == SPACE_1_2.element({"i": -18})


def test_even_self_morphism_pass_cases(ex51_bol, ex31):
    assert is_even_self_morphism(ex51_bol, example_5_1_beta(2, 0)).passed
    assert is_even_self_morphism(ex31, EvenMap.identity(ex31.space)).passed


def test_even_self_morphism_bol_fails_for_nonzero_b(ex51_bol):
    # The bracket is symmetric on the odd-odd pair, so the b-column of the
    # map feeds [j,k]+[k,j] into the (j,j) image and the morphism law breaks.
    report = is_even_self_morphism(ex51_bol, example_5_1_beta(2, 3))
    assert not report.passed
    assert report.counterexample == ("j", "j")
    assert report.residue == SPACE_1_2.element({"i": -36})


def test_even_self_morphism_parity_violation_reported_first(ex51_bol):
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]  # i <-> j crosses parity here
    report = is_even_self_morphism(ex51_bol, swap)
    assert not report.passed
    assert "cross-parity" in report.detail
    assert report.tuples_checked == 1


def test_even_self_morphism_swap_fails_as_morphism_when_parity_valid(ex31):
    # In this fixture i and j are both even, so the swap is an even map and
    # the failure surfaces at the first bracket pair instead.
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    report = is_even_self_morphism(ex31, swap)
    assert not report.passed
    assert report.counterexample == ("i", "j")
    assert "binary" in report.detail


def test_grading_check(ex51):
    assert grading_check(ex51.binary).passed
    bad = BinaryStructure(
        SPACE_1_2,
        {**ex51.binary.constants, (0, 1): SPACE_1_2.basis_vector("i")},
    )
    report = grading_check(bad)
    assert not report.passed
    assert report.counterexample == ("i", "j")
    assert grading_check(BinaryStructure.zero(SPACE_1_2)).passed


def test_convention_factors():
    from fractions import Fraction

    assert Convention.UNIT.factor == 1 and not Convention.UNIT.half
    assert Convention.HALF.factor == Fraction(1, 2) and Convention.HALF.half
