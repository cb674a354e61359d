"""Derived structures: minus/plus algebras, derived ternary brackets, twists.

Every builder verifies its preconditions by running the relevant identity
suites before constructing (pass ``checked=False`` to skip, mirroring the
CLI's ``--unchecked``).  A failed precondition raises
:class:`ConstructionError` carrying the stage name and the failing report.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import Element, EvenMap, Scalar, SuperSpace, apply_map, compose, parity_of, power, rational
from .reports import CheckReport
from .structures import (
    BinaryStructure,
    Convention,
    HomBinaryTernary,
    HomSuperalgebra,
    HomTripleSystem,
    TernaryStructure,
    hom_associator,
    is_even_self_morphism,
    is_multiplicative,
    super_jordan,
    supercommutator,
)
from .suites import run_suite


class ConstructionError(ValueError):
    """A construction's precondition failed; carries the offending report."""

    def __init__(self, stage: str, message: str, report=None):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.report = report


def _require_suite(structure, suite_name: str, stage: str) -> None:
    report = run_suite(structure, suite_name)
    if not report.passed:
        failure = report.first_failure()
        raise ConstructionError(
            stage,
            f"input fails suite {suite_name} at identity {failure.name!r}: {failure.describe()}",
            report,
        )


def _require_check(report: CheckReport, stage: str) -> None:
    if not report.passed:
        raise ConstructionError(stage, report.describe(), report)


def _require_identity_twist(algebra, stage: str) -> None:
    if not algebra.twist.is_identity():
        raise ConstructionError(stage, "construction requires the identity twist")


def _binary_from(space: SuperSpace, product) -> BinaryStructure:
    constants = {
        (i, j): product(space.basis_vector(i), space.basis_vector(j))
        for i, j in itertools.product(range(space.dim), repeat=2)
    }
    return BinaryStructure(space, constants)


def _ternary_from(space: SuperSpace, product) -> TernaryStructure:
    constants = {
        (i, j, k): product(*(space.basis_vector(n) for n in (i, j, k)))
        for i, j, k in itertools.product(range(space.dim), repeat=3)
    }
    return TernaryStructure(space, constants)


def minus_algebra(algebra: HomSuperalgebra, conv: Convention = Convention.UNIT) -> HomSuperalgebra:
    """Replace the product by its graded antisymmetrization; same twist."""
    binary = _binary_from(algebra.space, lambda x, y: supercommutator(algebra, conv, x, y))
    return HomSuperalgebra(binary, algebra.twist)


def plus_algebra(algebra: HomSuperalgebra, conv: Convention = Convention.UNIT) -> HomSuperalgebra:
    """Replace the product by its graded symmetrization; same twist."""
    binary = _binary_from(algebra.space, lambda x, y: super_jordan(algebra, conv, x, y))
    return HomSuperalgebra(binary, algebra.twist)


def jordan_lts_bracket(jordan: HomSuperalgebra, checked: bool = True) -> TernaryStructure:
    """Ternary bracket 2(x(yz) - (-1)^{|x||y|} y(xz)) of an untwisted Jordan product."""
    _require_identity_twist(jordan, "jordan_lts_bracket")
    if checked:
        _require_suite(jordan, "SUPERCOMMUTATIVE", "jordan_lts_bracket")

    def bracket(x: Element, y: Element, z: Element) -> Element:
        sign = -1 if parity_of(x) == 1 and parity_of(y) == 1 else 1
        return (jordan.mul(x, jordan.mul(y, z)) - jordan.mul(y, jordan.mul(x, z)).scale(sign)).scale(2)

    return _ternary_from(jordan.space, bracket)


def bol_from_right_alternative(
    algebra: HomSuperalgebra, conv: Convention = Convention.UNIT, checked: bool = True
) -> HomBinaryTernary:
    """Binary-ternary structure carried by an untwisted right alternative product.

    The binary part is the graded antisymmetrization; the ternary part is the
    signed symmetrized associator (-1)^{|x|(|y|+|z|)} as+(y,z,x).
    """
    _require_identity_twist(algebra, "bol_from_right_alternative")
    if checked:
        _require_suite(algebra, "RIGHT_ALT", "bol_from_right_alternative")
    plus = plus_algebra(algebra, conv)

    def ternary(x: Element, y: Element, z: Element) -> Element:
        exponent = (parity_of(x) * (parity_of(y) + parity_of(z))) % 2
        return hom_associator(plus, y, z, x).scale(-1 if exponent else 1)

    return HomBinaryTernary(
        binary=minus_algebra(algebra, conv).binary,
        ternary=_ternary_from(algebra.space, ternary),
        twist=EvenMap.identity(algebra.space),
    )


def triple_element(jordan: HomSuperalgebra, x: Element, y: Element, z: Element) -> Element:
    """(xy)a(z) + a(x)(yz) - (-1)^{|x||y|} a(y)(xz) in a twisted Jordan product."""
    a = jordan.twist
    sign = -1 if parity_of(x) == 1 and parity_of(y) == 1 else 1
    return (
        jordan.mul(jordan.mul(x, y), apply_map(a, z))
        + jordan.mul(apply_map(a, x), jordan.mul(y, z))
        - jordan.mul(apply_map(a, y), jordan.mul(x, z)).scale(sign)
    )


def hom_jordan_triple(
    jordan: HomSuperalgebra, conv: Convention = Convention.UNIT, checked: bool = True
) -> HomTripleSystem:
    """Ternary system of a twisted Jordan product; output twist is the square.

    ``conv`` records the convention of the pipeline that produced ``jordan``;
    the tensor itself depends only on the product of ``jordan``.
    """
    del conv
    if checked:
        _require_check(is_multiplicative(jordan), "hom_jordan_triple")
        _require_suite(jordan, "HOM_JORDAN", "hom_jordan_triple")
    ternary = _ternary_from(jordan.space, lambda x, y, z: triple_element(jordan, x, y, z))
    return HomTripleSystem(ternary, power(jordan.twist, 2))


def lie_triple_from_jordan_triple(triple: HomTripleSystem, checked: bool = True) -> HomTripleSystem:
    """Antisymmetrize the first pair: [x,y,z] = <x,y,z> - (-1)^{|x||y|}<y,x,z>."""
    if checked:
        _require_suite(triple, "HOM_JORDAN_TRIPLE", "lie_triple_from_jordan_triple")

    def bracket(x: Element, y: Element, z: Element) -> Element:
        sign = -1 if parity_of(x) == 1 and parity_of(y) == 1 else 1
        return triple.mul(x, y, z) - triple.mul(y, x, z).scale(sign)

    return HomTripleSystem(_ternary_from(triple.space, bracket), triple.twist)


def hom_bol_from_right_hom_alternative(
    algebra: HomSuperalgebra, conv: Convention = Convention.UNIT, checked: bool = True
) -> HomBinaryTernary:
    """Full pipeline from a multiplicative right twisted-alternative product.

    Stages: symmetrize, verify the Jordan axioms, build the ternary system,
    antisymmetrize it, and halve.  The binary part is the graded
    antisymmetrization and the output twist is the square of the input twist.
    The 1/2 on the ternary tensor is an absolute factor, independent of
    ``conv``.
    """
    if checked:
        _require_check(is_multiplicative(algebra), "input")
        _require_suite(algebra, "RIGHT_HOM_ALT", "input")
    plus = plus_algebra(algebra, conv)
    if checked:
        _require_suite(plus, "HOM_JORDAN", "plus_algebra")
    triple = hom_jordan_triple(plus, conv, checked=False)
    if checked:
        _require_suite(triple, "HOM_JORDAN_TRIPLE", "hom_jordan_triple")
    lie = lie_triple_from_jordan_triple(triple, checked=False)
    if checked:
        _require_suite(lie, "HOM_LIE_TRIPLE", "lie_triple_from_jordan_triple")
    halved = TernaryStructure(
        algebra.space, {key: value.scale(Fraction(1, 2)) for key, value in lie.ternary.constants.items()}
    )
    return HomBinaryTernary(
        binary=minus_algebra(algebra, conv).binary,
        ternary=halved,
        twist=power(algebra.twist, 2),
    )


def _twisted_binary(binary: BinaryStructure, outer: EvenMap) -> BinaryStructure:
    return BinaryStructure(
        binary.space, {key: apply_map(outer, value) for key, value in binary.constants.items()}
    )


def _twisted_ternary(ternary: TernaryStructure, outer: EvenMap) -> TernaryStructure:
    return TernaryStructure(
        ternary.space, {key: apply_map(outer, value) for key, value in ternary.constants.items()}
    )


def yau_twist_algebra(
    algebra: HomSuperalgebra, beta: EvenMap, n: int = 1, checked: bool = True
) -> HomSuperalgebra:
    """Compose the binary product with the n-th power of a self-morphism."""
    if n < 1:
        raise ValueError("twisting exponent must be positive")
    if checked:
        _require_check(is_even_self_morphism(algebra, beta), "yau_twist_algebra")
    bn = power(beta, n)
    return HomSuperalgebra(_twisted_binary(algebra.binary, bn), compose(bn, algebra.twist))


def yau_twist_bol(
    structure: HomBinaryTernary, beta: EvenMap, n: int = 1, checked: bool = True
) -> HomBinaryTernary:
    """Twist a binary-ternary structure: bracket by beta^n, ternary by beta^2n."""
    if n < 1:
        raise ValueError("twisting exponent must be positive")
    if checked:
        _require_check(is_even_self_morphism(structure, beta), "yau_twist_bol")
    bn = power(beta, n)
    return HomBinaryTernary(
        binary=_twisted_binary(structure.binary, bn),
        ternary=_twisted_ternary(structure.ternary, power(beta, 2 * n)),
        twist=compose(bn, structure.twist),
    )


def yau_twist_triple(
    triple: HomTripleSystem, beta: EvenMap, n: int = 1, checked: bool = True
) -> HomTripleSystem:
    """Twist a ternary system: product by beta^n, twist by beta^n compose."""
    if n < 1:
        raise ValueError("twisting exponent must be positive")
    if checked:
        _require_check(is_even_self_morphism(triple, beta), "yau_twist_triple")
    bn = power(beta, n)
    return HomTripleSystem(_twisted_ternary(triple.ternary, bn), compose(bn, triple.twist))


def nth_derived(structure: HomBinaryTernary, n: int) -> HomBinaryTernary:
    """Pre-compose products with twist powers 2^n - 1 (binary) and 2^(n+1) - 2 (ternary)."""
    if n < 0:
        raise ValueError("derivation index must be nonnegative")
    a = structure.twist
    return HomBinaryTernary(
        binary=_twisted_binary(structure.binary, power(a, 2**n - 1)),
        ternary=_twisted_ternary(structure.ternary, power(a, 2 ** (n + 1) - 2)),
        twist=power(a, 2**n),
    )


@dataclass(frozen=True)
class BilinearForm:
    """A supersymmetric even bilinear form given by its Gram matrix.

    Supersymmetry: <x|y> = (-1)^{|x||y|} <y|x> on basis pairs.  Evenness
    (pairings of mixed parity vanish) is required so the form is a degree-0
    map into the even scalar field; violating matrices are rejected.
    """

    space: SuperSpace
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(rational(v) for v in row) for row in self.gram)
        object.__setattr__(self, "gram", rows)
        dim = self.space.dim
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ValueError(f"expected a {dim}x{dim} Gram matrix")
        for i, j in itertools.product(range(dim), repeat=2):
            pi, pj = self.space.parity(i), self.space.parity(j)
            if pi != pj and rows[i][j] != 0:
                names = (self.space.names[i], self.space.names[j])
                raise ValueError(f"form must vanish on the mixed-parity pair {names}")
            sign = -1 if pi == 1 and pj == 1 else 1
            if rows[i][j] != sign * rows[j][i]:
                names = (self.space.names[i], self.space.names[j])
                raise ValueError(f"form is not supersymmetric at pair {names}")

    @staticmethod
    def from_table(space: SuperSpace, table: Mapping[tuple[str, str], Scalar]) -> "BilinearForm":
        """Build from the nonzero pairings; the supersymmetric partner may be omitted."""
        dim = space.dim
        rows = [[Fraction(0)] * dim for _ in range(dim)]
        for (a, b), value in table.items():
            i, j = space.index(a), space.index(b)
            rows[i][j] = rational(value)
        for i, j in itertools.product(range(dim), repeat=2):
            if rows[i][j] != 0 and rows[j][i] == 0 and i != j:
                sign = -1 if space.parity(i) == 1 and space.parity(j) == 1 else 1
                rows[j][i] = sign * rows[i][j]
        return BilinearForm(space, tuple(tuple(row) for row in rows))

    def pairing(self, x: Element, y: Element) -> Fraction:
        total = Fraction(0)
        for i, ci in x.coords.items():
            for j, cj in y.coords.items():
                total += ci * cj * self.gram[i][j]
        return total

    def is_preserved_by(self, beta: EvenMap) -> bool:
        """True iff pairing(beta x, beta y) = pairing(x, y) on all basis pairs."""
        for i, j in itertools.product(range(self.space.dim), repeat=2):
            x, y = self.space.basis_vector(i), self.space.basis_vector(j)
            if self.pairing(apply_map(beta, x), apply_map(beta, y)) != self.gram[i][j]:
                return False
        return True


def bilinear_form_triple(form: BilinearForm, lam: Scalar = 1) -> HomTripleSystem:
    """Untwisted ternary system lam(<x|y>z +-signed cyclic terms) of a form."""
    lam = rational(lam)
    space = form.space

    def product(x: Element, y: Element, z: Element) -> Element:
        px, py, pz = parity_of(x), parity_of(y), parity_of(z)
        sign_x = -1 if (px * (py + pz)) % 2 else 1
        sign_y = -1 if (pz * (px + py)) % 2 else 1
        value = (
            z.scale(form.pairing(x, y))
            + x.scale(form.pairing(y, z)).scale(sign_x)
            - y.scale(form.pairing(z, x)).scale(sign_y)
        )
        return value.scale(lam)

    ternary = _ternary_from(space, product)
    return HomTripleSystem(ternary, EvenMap.identity(space))
