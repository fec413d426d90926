# This code is part of unipotent-lifts.
#
# (C) Copyright the unipotent-lifts developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at https://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

import numpy as np
import pytest
from unipotent_lifts.arith import Poly, TruncatedPoly, inverse_mod, matmul_mod
from unipotent_lifts.exceptions import (
    ConstantTermError,
    ContextError,
    HopfConditionError,
    NormalizationError,
)
from unipotent_lifts.morphisms import (
    GeneratorChange,
    InfinitesimalSubgroup,
    OneParamSubgroup,
    commute_morphisms,
    conjugate,
    lift,
    morphism_from_json,
    random_generator_change,
    restrict,
    translate,
    validate,
)
from unipotent_lifts.morphisms.library import commute
from unipotent_lifts.oracle import random_morphism
from unipotent_lifts.unipotent import Y, make_group, random_parabolic_element

HEISENBERG = make_group([1, 1, 1], 5)

DIAGONAL = {"Y_1_2": [0, 1], "Y_2_3": [0, 1], "Y_1_3": [0, 0, 3]}

ANTI_DIAGONAL = np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def _lift_example():
    grp = make_group([1, 1, 1], 3)
    images = {"Y_1_2": [0, 1, 0, 1], "Y_2_3": [0, 1, 0, 1], "Y_1_3": [0, 0, 2, 0, 1, 0, 2]}
    return validate(images, grp, 2)


def _elementary(label, r=1):
    images = {g.label: [] for g in HEISENBERG.generators}
    images[label] = [0, 1]
    return validate(images, HEISENBERG, r)


class TestInfinitesimalSubgroup:
    def test_images(self):
        phi = validate(DIAGONAL, HEISENBERG, 1)
        assert phi.height == 1
        assert phi.bound == 5
        assert phi.image(Y(1, 3)) == TruncatedPoly([0, 0, 3], 5, 1)
        assert phi.image("Y_1_2") == phi.image("Y_2_3")
        assert [g.label for g, _ in phi.items()] == ["Y_2_3", "Y_1_2", "Y_1_3"]
        assert not phi.is_trivial()
        assert phi.max_degree_ratio() == 1.0

    def test_matrix(self):
        phi = validate(DIAGONAL, HEISENBERG, 1)
        matrix = phi.to_matrix()
        assert str(matrix[0, 2]) == "3*t^2"
        assert matrix[1, 1] == TruncatedPoly.one(5, 1)
        assert matrix[2, 0].is_zero()
        assert InfinitesimalSubgroup.from_matrix(HEISENBERG, 1, matrix) == phi

    def test_trivial(self):
        phi = validate({g: [] for g in HEISENBERG.generators}, HEISENBERG, 3)
        assert phi.is_trivial()

    def test_invalid(self, subtests):
        with subtests.test("constant term"), pytest.raises(ConstantTermError) as info:
            validate({**DIAGONAL, "Y_1_2": [1, 1]}, HEISENBERG, 1)
        assert info.value.generator == "Y_1_2"

        with subtests.test("hopf"), pytest.raises(HopfConditionError) as info:
            validate({**DIAGONAL, "Y_1_3": []}, HEISENBERG, 1)
        assert info.value.generator == "Y_1_3"
        assert str(info.value.difference) == "4*t'*t''"

        with subtests.test("not additive"), pytest.raises(HopfConditionError):
            validate({"Y_1_2": [0, 0, 1], "Y_2_3": [], "Y_1_3": []}, HEISENBERG, 1)

        with subtests.test("missing"), pytest.raises(ValueError):
            validate({"Y_1_2": [0, 1]}, HEISENBERG, 1)

        with subtests.test("duplicate"), pytest.raises(ValueError):
            validate({**DIAGONAL, Y(1, 2): [0, 1]}, HEISENBERG, 1)

        with subtests.test("not a generator"), pytest.raises(ValueError):
            validate({**DIAGONAL, "Y_2_1": []}, HEISENBERG, 1)

        with subtests.test("degree"), pytest.raises(ValueError):
            validate({**DIAGONAL, "Y_1_2": [0, 0, 0, 0, 0, 1]}, HEISENBERG, 1)

        with subtests.test("height"), pytest.raises(ValueError):
            validate(DIAGONAL, HEISENBERG, 0)

        with subtests.test("untruncated image"), pytest.raises(ContextError):
            validate({**DIAGONAL, "Y_1_2": Poly([0, 1], 5)}, HEISENBERG, 1)

        with subtests.test("other height"), pytest.raises(ContextError):
            validate({**DIAGONAL, "Y_1_2": TruncatedPoly([0, 1], 5, 2)}, HEISENBERG, 1)

    def test_json(self):
        phi = validate(DIAGONAL, HEISENBERG, 1)
        data = phi.to_json()
        assert data == {
            "group": {"p": 5, "blocks": [1, 1, 1]},
            "r": 1,
            "images": {"Y_2_3": [0, 1], "Y_1_2": [0, 1], "Y_1_3": [0, 0, 3]},
        }
        assert morphism_from_json(data) == phi
        assert isinstance(morphism_from_json(data), InfinitesimalSubgroup)
        with pytest.raises(ValueError):
            InfinitesimalSubgroup.from_json({**data, "r": None})
        with pytest.raises(ValueError):
            InfinitesimalSubgroup.from_json({"group": data["group"], "r": 1})


class TestOneParamSubgroup:
    def test_images(self):
        images = {"Y_1_2": [], "Y_2_3": [0, 0, 0, 0, 0, 1], "Y_1_3": []}
        psi = OneParamSubgroup(HEISENBERG, images)
        assert psi.image("Y_2_3") == Poly.from_terms({5: 1}, 5)
        assert psi.max_degree_ratio() == 5.0
        assert OneParamSubgroup.from_matrix(HEISENBERG, psi.to_matrix()) == psi

    def test_invalid(self, subtests):
        with subtests.test("hopf"), pytest.raises(HopfConditionError):
            OneParamSubgroup(HEISENBERG, {"Y_1_2": [0, 1], "Y_2_3": [0, 1], "Y_1_3": []})

        with subtests.test("truncated image"), pytest.raises(ContextError):
            OneParamSubgroup(HEISENBERG, {**DIAGONAL, "Y_1_2": TruncatedPoly([0, 1], 5, 1)})

        with subtests.test("other field"), pytest.raises(ContextError):
            OneParamSubgroup(HEISENBERG, {**DIAGONAL, "Y_1_2": Poly([0, 1], 3)})

    def test_json(self):
        psi = lift(validate(DIAGONAL, HEISENBERG, 1))
        data = psi.to_json()
        assert data["r"] is None
        assert isinstance(morphism_from_json(data), OneParamSubgroup)
        assert morphism_from_json(data) == psi
        with pytest.raises(ValueError):
            OneParamSubgroup.from_json({**data, "r": 1})

    def test_kinds_differ(self):
        phi = validate(DIAGONAL, HEISENBERG, 1)
        assert phi != lift(phi)


def test_lift():
    phi = _lift_example()
    psi = lift(phi)
    assert psi.image("Y_1_3") == Poly([0, 0, 2, 0, 1, 0, 2], 3)
    assert psi.image("Y_1_2") == Poly([0, 1, 0, 1], 3)
    assert psi.max_degree_ratio() == 3.0
    assert restrict(psi, 2) == phi


def test_restrict(subtests):
    phi = _lift_example()

    with subtests.test("lower height"):
        lower = restrict(phi, 1)
        assert lower.image("Y_1_2") == TruncatedPoly([0, 1], 3, 1)
        assert lower.image("Y_1_3") == TruncatedPoly([0, 0, 2], 3, 1)
        assert restrict(lift(phi), 1) == lower

    with subtests.test("same height"):
        assert restrict(phi, 2) == phi

    with subtests.test("higher height"), pytest.raises(ValueError):
        restrict(phi, 3)

    with subtests.test("invalid height"), pytest.raises(ValueError):
        restrict(lift(phi), 0)


def test_lift_with_generator_change(subtests):
    phi = _lift_example()
    grp = phi.group
    ring = grp.coordinate_ring()
    quadratic = ring.gen("Y_2_3") * ring.gen("Y_1_2")

    with subtests.test("fixed"):
        change = GeneratorChange(grp, {Y(1, 3): 2}, {Y(1, 3): quadratic})
        assert change.new_generator(Y(1, 3)) == 2 * ring.gen("Y_1_3") + quadratic
        assert lift(phi, change) == lift(phi)

    with subtests.test("identity"):
        assert lift(phi, GeneratorChange(grp)) == lift(phi)

    with subtests.test("other group"), pytest.raises(ContextError):
        lift(phi, GeneratorChange(HEISENBERG))


def test_generator_change_validation(subtests):
    grp = make_group([1, 1, 1], 3)
    ring = grp.coordinate_ring()

    with subtests.test("zero scalar"), pytest.raises(ValueError):
        GeneratorChange(grp, {Y(1, 2): 3})

    with subtests.test("later generator"), pytest.raises(ValueError):
        GeneratorChange(grp, corrections={Y(1, 2): ring.gen("Y_1_3")})

    with subtests.test("itself"), pytest.raises(ValueError):
        GeneratorChange(grp, corrections={Y(2, 3): ring.gen("Y_2_3", 2)})

    with subtests.test("constant"), pytest.raises(ValueError):
        GeneratorChange(grp, corrections={Y(1, 3): ring.one()})

    with subtests.test("grade"), pytest.raises(ValueError):
        GeneratorChange(grp, corrections={Y(1, 3): ring.gen("Y_2_3", 2) * ring.gen("Y_1_2")})

    with subtests.test("other ring"), pytest.raises(ValueError):
        GeneratorChange(grp, corrections={Y(1, 3): HEISENBERG.coordinate_ring().gen("Y_2_3")})


def test_forward_inverse():
    rng = np.random.default_rng(3)
    grp = make_group([1, 2, 1], 5)
    change = random_generator_change(grp, rng)
    phi = random_morphism(grp, 1, rng)
    forward = change.forward(phi.images, phi._one)
    assert change.inverse(forward, phi._one) == phi.images


def test_random_lifts(subtests):
    rng = np.random.default_rng(1234)
    cases = [([1, 1, 1], 3, 2), ([1, 2, 1], 3, 1), ([2, 1, 1], 5, 1), ([1, 1, 1, 1], 5, 2)]
    for blocks, p, r in cases:
        grp = make_group(blocks, p)
        with subtests.test(blocks=blocks, p=p, r=r):
            for _ in range(4):
                phi = random_morphism(grp, r, rng)
                psi = lift(phi)
                assert restrict(psi, r) == phi
                assert psi.max_degree_ratio() <= p ** (r - 1)
                assert lift(phi, random_generator_change(grp, rng)) == psi


def test_commute(subtests):
    phi = validate(DIAGONAL, HEISENBERG, 1)
    phi_a = _elementary("Y_1_2")
    phi_b = _elementary("Y_2_3")
    phi_c = _elementary("Y_1_3")

    with subtests.test("self"):
        assert commute_morphisms(phi, phi)
        assert commute(lift(phi), lift(phi))

    with subtests.test("non-commuting"):
        assert not commute_morphisms(phi_a, phi_b)
        assert not commute_morphisms(phi_b, phi_a)

    with subtests.test("central"):
        assert commute(phi_a, phi_c)
        assert commute(phi, phi_c)

    with subtests.test("kinds"), pytest.raises(ContextError):
        commute_morphisms(phi, lift(phi))

    with subtests.test("heights"), pytest.raises(ContextError):
        commute_morphisms(phi_a, _elementary("Y_1_2", r=2))

    with subtests.test("groups"), pytest.raises(ContextError):
        commute_morphisms(phi, _lift_example())


def test_conjugate_and_translate(subtests):
    phi = validate(DIAGONAL, HEISENBERG, 1)
    torus = np.diag([1, 2, 3])

    with subtests.test("conjugate"):
        conjugated = conjugate(torus, phi)
        assert conjugated.image("Y_1_2") == TruncatedPoly([0, 2], 5, 1)
        assert conjugated.image("Y_2_3") == TruncatedPoly([0, 4], 5, 1)
        assert conjugated.image("Y_1_3") == TruncatedPoly([0, 0, 4], 5, 1)

    with subtests.test("translate"):
        translated = translate(torus, phi)
        assert translated.image("Y_1_2") == TruncatedPoly([0, 3], 5, 1)
        assert translated.image("Y_2_3") == TruncatedPoly([0, 4], 5, 1)
        assert translated.image("Y_1_3") == TruncatedPoly([0, 0, 1], 5, 1)
        assert translated == conjugate(inverse_mod(torus, 5), phi)

    with subtests.test("non-normalizing"):
        swap = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        translated = translate(swap, _elementary("Y_2_3"))
        assert translated == _elementary("Y_1_3")
        with pytest.raises(NormalizationError):
            conjugate(swap, phi)

    with subtests.test("leaves U"), pytest.raises(NormalizationError):
        translate(ANTI_DIAGONAL, phi)

    with subtests.test("singular"), pytest.raises(ValueError):
        translate(np.zeros((3, 3), dtype=int), phi)

    with subtests.test("global"):
        assert conjugate(torus, lift(phi)) == lift(conjugate(torus, phi))


def test_conjugation_is_an_action(subtests):
    rng = np.random.default_rng(42)
    for blocks, p, r in [([1, 1, 1], 5, 1), ([1, 2, 1], 5, 2), ([2, 2], 3, 2)]:
        grp = make_group(blocks, p)
        with subtests.test(blocks=blocks, p=p, r=r):
            for _ in range(3):
                phi = random_morphism(grp, r, rng)
                x = random_parabolic_element(grp, rng)
                y = random_parabolic_element(grp, rng)
                assert conjugate(matmul_mod(x, y, p), phi) == conjugate(y, conjugate(x, phi))
                assert translate(x, phi) == conjugate(inverse_mod(x, p), phi)
                assert lift(conjugate(x, phi)) == conjugate(x, lift(phi))
                assert commute(phi, phi)
