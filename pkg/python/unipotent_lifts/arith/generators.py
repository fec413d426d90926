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

"""MultiPoly generator mapper."""

from __future__ import annotations

from collections.abc import Callable
from operator import mul
from typing import TYPE_CHECKING, TypeVar

if TYPE_CHECKING:
    from .multipoly import MultiPoly, Variable

T = TypeVar("T")


def map_monomial_generators(
    poly: MultiPoly,
    map_variable: Callable[[Variable], T],
    one: Callable[[], T],
    compose: Callable[[T, T], T] | None = None,
) -> T:
    """Map a :class:`.MultiPoly` into another algebra.

    This is the generic evaluation underlying every algebra map in this package (comorphisms,
    conjugation actions, generator changes). It iterates over the terms of the polynomial, mapping
    each variable with the user-provided ``map_variable`` function and multiplying the images. In
    combination with the user-provided ``one`` generator, this allows mapping into arbitrary
    commutative algebras such as :class:`.Poly`, :class:`.TruncatedPoly` or another
    :class:`.MultiPoly`.

    .. note::
       The output type ``T`` must support addition and multiplication by an integer scalar. If
       ``compose=None`` it must also support multiplication of two instances via ``__mul__``.

    .. doctest::
        >>> from unipotent_lifts.arith import Poly, PolynomialRing, map_monomial_generators
        >>> ring = PolynomialRing(5, ("x", "y"))
        >>> f = ring.gen("x") * ring.gen("y") + 2 * ring.gen("y")
        >>> images = {"x": Poly([0, 1], 5), "y": Poly([1, 1], 5)}
        >>> print(map_monomial_generators(f, images.__getitem__, lambda: Poly.one(5)))
        2 + 3*t + t^2

    Args:
        poly: the polynomial to be mapped.
        map_variable: the function mapping a single variable to the desired output type. It is
            called at most once per variable.
        one: the function to generate the multiplicative identity of the output type.
        compose: an optional function implementing the product of two output type instances. If
            this is not provided, it will default to using :py:func:`operator.mul`.

    Returns:
        The image of ``poly``.
    """
    if compose is None:
        compose = mul

    variables = poly.ring.variables
    powers: dict[int, list[T]] = {}

    def power(position: int, exponent: int) -> T:
        cached = powers.get(position)
        if cached is None:
            cached = powers[position] = [one(), map_variable(variables[position])]
        while len(cached) <= exponent:
            cached.append(compose(cached[-1], cached[1]))
        return cached[exponent]

    mapped: T = 0 * one()  # type: ignore[assignment,operator]
    for exponents, coeff in poly.terms():
        mapped_term = one()

        for position, exponent in enumerate(exponents):
            if exponent:
                mapped_term = compose(power(position, exponent), mapped_term)

        mapped = mapped + coeff * mapped_term  # type: ignore[operator]

    return mapped
