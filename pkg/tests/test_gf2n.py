"""Binary field arithmetic and permutation-polynomial decisions."""

import itertools
import random

import pytest

from boolinv.algebra import Assignment, mask_of
from boolinv.gf2n import (
    FieldElem,
    FieldSpec,
    UniPoly,
    coordinate_functions,
    gf_add,
    gf_mul,
    gf_pow,
    is_permutation_polynomial,
)
from boolinv.oracle import TruthTable


def test_default_moduli_small_degrees():
    assert FieldSpec.default(1).modulus == 0b11
    assert FieldSpec.default(2).modulus == 0b111
    assert FieldSpec.default(3).modulus == 0b1011
    assert FieldSpec.default(4).modulus == 0b10011


def test_default_moduli_exist_up_to_cap():
    for n in range(1, 17):
        spec = FieldSpec.default(n)
        assert spec.modulus.bit_length() == n + 1


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FieldSpec(3, 0b1001)  # x^3 + 1 = (x + 1)(x^2 + x + 1)
    with pytest.raises(ValueError):
        FieldSpec(3, 0b1110)  # even constant term, divisible by x
    with pytest.raises(ValueError):
        FieldSpec(3, 0b111)  # degree mismatch


def test_cube_of_generator_in_f8():
    spec = FieldSpec(3, 0b1011)
    alpha = spec.element(0b010)
    assert (alpha * alpha * alpha).value == 0b011  # a^3 = a + 1
    assert (alpha**3).value == 0b011


def test_characteristic_two_and_identity():
    spec = FieldSpec.default(4)
    a = spec.element(0b1011)
    assert gf_add(a, a).is_zero
    assert gf_mul(a, spec.one()) == a
    assert gf_pow(a, 0) == spec.one()


def test_mixed_field_operands_rejected():
    a = FieldSpec.default(3).element(1)
    b = FieldSpec.default(4).element(1)
    with pytest.raises(ValueError):
        gf_add(a, b)
    with pytest.raises(ValueError):
        gf_mul(a, b)


def test_element_range_check():
    spec = FieldSpec.default(2)
    with pytest.raises(ValueError):
        spec.element(4)


def test_field_axioms_exhaustive_small():
    for n in (1, 2, 3):
        spec = FieldSpec.default(n)
        elems = [spec.element(v) for v in range(spec.order)]
        for a, b, c in itertools.product(elems, repeat=3):
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
        for a in elems:
            if not a.is_zero:
                # a^(2^n - 2) is the inverse in a group of order 2^n - 1
                assert a * a ** (spec.order - 2) == spec.one()


def test_field_axioms_randomized_larger():
    rng = random.Random(31)
    for n in (5, 8, 12):
        spec = FieldSpec.default(n)
        for _ in range(50):
            a, b, c = (spec.element(rng.randrange(spec.order)) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_unipoly_trims_and_evaluates():
    spec = FieldSpec.default(3)
    p = UniPoly.of(spec, [3, 0, 1, 0, 0])
    assert p.degree == 2
    x = spec.element(0b110)
    assert p.evaluate(x) == spec.element(3) + x * x
    assert UniPoly.of(spec, [0, 0]).degree == -1


def test_coordinate_functions_identity():
    spec = FieldSpec.default(3)
    F = coordinate_functions(UniPoly.monomial(spec, 1))
    for j, f in enumerate(F.coords):
        assert f.monomials == frozenset((1 << j,))


def test_coordinate_functions_constant():
    spec = FieldSpec.default(2)
    F = coordinate_functions(UniPoly.of(spec, [0b10]))
    assert F.coords[0].is_zero
    assert F.coords[1].is_one


def test_frobenius_coordinates_in_f4():
    spec = FieldSpec(2, 0b111)
    F = coordinate_functions(UniPoly.monomial(spec, 2))
    # (x1 + x2 a)^2 = x1 + x2 a^2 = (x1 + x2) + x2 a
    assert F.coords[0].monomials == frozenset((0b01, 0b10))
    assert F.coords[1].monomials == frozenset((0b10,))


def test_coordinate_round_trip_random_polys():
    rng = random.Random(37)
    for n in (3, 4):
        spec = FieldSpec.default(n)
        uni = mask_of(range(n))
        for _ in range(10):
            p = UniPoly.of(
                spec, [rng.randrange(spec.order) for _ in range(rng.randint(1, 6))]
            )
            F = coordinate_functions(p)
            for v in range(spec.order):
                a = Assignment(uni, v)
                assert F.evaluate(a) == p.evaluate(spec.element(v)).value


def test_truth_table_transform_is_involutive_on_coordinates():
    spec = FieldSpec.default(3)
    F = coordinate_functions(UniPoly.of(spec, [1, 3, 0, 5]))
    for f in F.coords:
        assert TruthTable.from_anf(f).to_anf() == f


def test_cube_map_permutes_f8_but_not_f16():
    assert is_permutation_polynomial(UniPoly.monomial(FieldSpec.default(3), 3))
    assert not is_permutation_polynomial(UniPoly.monomial(FieldSpec.default(4), 3))


def test_frobenius_permutes_every_field():
    for n in range(1, 9):
        spec = FieldSpec.default(n)
        assert is_permutation_polynomial(UniPoly.monomial(spec, 2))


def test_permutation_verdict_matches_image_counting():
    rng = random.Random(41)
    spec = FieldSpec.default(3)
    for _ in range(15):
        p = UniPoly.of(
            spec, [rng.randrange(spec.order) for _ in range(rng.randint(1, 5))]
        )
        image = {p.evaluate(spec.element(v)).value for v in range(spec.order)}
        assert is_permutation_polynomial(p) == (len(image) == spec.order)
