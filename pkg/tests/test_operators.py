import pytest

from superbol.catalog import SPACE_1_2, example_5_1_beta
from superbol.constructions import hom_jordan_triple, plus_algebra, yau_twist_algebra
from superbol.core import EvenMap
from superbol.operators import (
    L1,
    L2,
    Lxy,
    MatrixOperator,
    pair_swap_signs,
    super_bracket,
    supertriple_operator_check,
    verify_operator_lemmas,
)
from superbol.structures import BinaryStructure, Convention, HomSuperalgebra, tern_mul
from superbol.suites import run_suite


def b(name):
    return SPACE_1_2.basis_vector(name)


def test_left_multiplication_values(plus51):
    op_i = L1(plus51, b("i"))
    assert op_i.apply(b("j")) == SPACE_1_2.element({"k": 2})
    assert op_i.apply(b("k")).is_zero()
    assert op_i.apply(b("i")).is_zero()
    op_j = L1(plus51, b("j"))
    assert op_j.apply(b("i")) == SPACE_1_2.element({"k": 2})
    assert op_j.parity == 1
    assert L1(plus51, SPACE_1_2.zero()).is_zero()


def test_left_multiplication_rejects_mixed(plus51):
    with pytest.raises(ValueError):
        L1(plus51, SPACE_1_2.element({"i": 1, "j": 1}))


def test_pair_operator_vanishes_on_even_diagonal(plus51):
    assert L2(plus51, b("i"), b("i")).is_zero()


def test_pair_operator_swap_antisymmetric(plus51):
    assert pair_swap_signs(plus51) == (-1,)


def test_pair_swap_both_signs_on_zero_algebra():
    zero = HomSuperalgebra.untwisted(BinaryStructure.zero(SPACE_1_2))
    assert pair_swap_signs(zero) == (+1, -1)


def test_pair_action_matches_derived_triple(plus51):
    triple = hom_jordan_triple(plus51)
    assert Lxy(plus51, b("i"), b("j")).apply(b("j")) == SPACE_1_2.element({"i": 8})
    for xn in SPACE_1_2.names:
        for yn in SPACE_1_2.names:
            operator = Lxy(plus51, b(xn), b(yn))
            for zn in SPACE_1_2.names:
                assert operator.apply(b(zn)) == tern_mul(triple.ternary, b(xn), b(yn), b(zn))


def test_operator_parity_grading_enforced():
    with pytest.raises(ValueError, match="parity"):
        MatrixOperator(SPACE_1_2, ((0, 1, 0), (0, 0, 0), (0, 0, 0)), parity=0)
    odd = MatrixOperator(SPACE_1_2, ((0, 1, 0), (1, 0, 0), (0, 0, 0)), parity=1)
    even = MatrixOperator.wrap(EvenMap.identity(SPACE_1_2))
    with pytest.raises(ValueError, match="parity"):
        odd + even
    assert (odd @ even).parity == 1
    assert super_bracket(odd, odd).parity == 0


def test_all_operator_lemmas_pass_on_fixture(plus51):
    report = verify_operator_lemmas(plus51)
    assert report.passed
    assert len(report.reports) == 19
    assert "asserting -1" in report["pair_operator_swap"].detail
    assert "asserting +1" in report["difference_reduction_pairs"].detail


def test_operator_lemmas_pass_with_nontrivial_twist(ex51):
    twisted = yau_twist_algebra(ex51, example_5_1_beta(2, 0), 1)
    plus = plus_algebra(twisted, Convention.UNIT)
    report = verify_operator_lemmas(plus)
    assert report.passed
    # the double-bracket reduction only applies at the identity twist
    assert all(r.name != "double_bracket_reduction" for r in report.reports)


def test_operator_lemmas_trivial_on_zero_algebra():
    zero = HomSuperalgebra.untwisted(BinaryStructure.zero(SPACE_1_2))
    assert verify_operator_lemmas(zero).passed


def test_operator_lemmas_precondition(ex51):
    with pytest.raises(ValueError, match="Jordan"):
        verify_operator_lemmas(ex51)


def perturbed_jordan(plus51):
    constants = dict(plus51.binary.constants)
    constants[(0, 0)] = SPACE_1_2.basis_vector("i")  # i*i = i keeps symmetry, breaks the rest
    return HomSuperalgebra(BinaryStructure(SPACE_1_2, constants), plus51.twist)


def test_operator_identity_agrees_with_element_level_check(plus51):
    # pass direction
    operator_report = supertriple_operator_check(plus51)
    triple = hom_jordan_triple(plus51)
    element_report = run_suite(triple, "HOM_JORDAN_TRIPLE")["triple_identity_twisted"]
    assert operator_report.passed and element_report.passed

    # fail direction: same verdict and matching counterexample prefix
    broken = perturbed_jordan(plus51)
    assert run_suite(broken, "SUPERCOMMUTATIVE").passed
    operator_report = supertriple_operator_check(broken)
    triple = hom_jordan_triple(broken, checked=False)
    element_report = run_suite(triple, "HOM_JORDAN_TRIPLE")["triple_identity_twisted"]
    assert not operator_report.passed and not element_report.passed
    assert element_report.counterexample[:4] == operator_report.counterexample
