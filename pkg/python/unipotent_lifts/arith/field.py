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

"""The prime field context and its elements."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from functools import cache
from math import comb
from typing import Union

from sympy import isprime

from ..exceptions import ContextError

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self


@dataclass(frozen=True)
class PrimeField:
    """The prime field :math:`\\mathbb{F}_p`.

    Instances are cheap and cached by :func:`prime_field`; the primality of ``p`` is checked once,
    when the context is built.

    Args:
        p: the characteristic.

    Raises:
        ValueError: if ``p`` is not prime.
    """

    p: int
    _factorial_inverses: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not isprime(self.p):
            raise ValueError(f"the modulus must be a prime, got {self.p!r}")
        inverses = [1]
        factorial = 1
        for n in range(1, self.p):
            factorial = factorial * n % self.p
            inverses.append(pow(factorial, -1, self.p))
        object.__setattr__(self, "_factorial_inverses", tuple(inverses))

    def __call__(self, value: int) -> Fp:
        """Returns the residue class of ``value``."""
        return Fp(value, self.p)

    def inverse(self, value: int) -> int:
        """Returns the multiplicative inverse of ``value`` as a canonical residue.

        Raises:
            ZeroDivisionError: if ``value`` is divisible by ``p``.
        """
        if value % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse modulo {self.p}")
        return pow(value, -1, self.p)

    def factorial_inverse(self, n: int) -> int:
        """Returns :math:`1/n!` modulo ``p`` for :math:`0 \\le n < p`."""
        if not 0 <= n < self.p:
            raise ValueError(f"n! is not invertible modulo {self.p} for n={n}")
        return self._factorial_inverses[n]

    def binomial(self, n: int, k: int) -> int:
        """Returns :math:`\\binom{n}{k}` modulo ``p``."""
        return _binomial(n, k, self.p)


@cache
def prime_field(p: int) -> PrimeField:
    """Returns the (cached) :class:`.PrimeField` of characteristic ``p``."""
    return PrimeField(p)


@cache
def _binomial(n: int, k: int, p: int) -> int:
    return comb(n, k) % p


def check_same_modulus(p: int, q: int) -> None:
    """Raises :class:`.ContextError` unless ``p == q``."""
    if p != q:
        raise ContextError(f"mixed moduli {p} and {q}")


FpLike = Union["Fp", int]


@dataclass(frozen=True)
class Fp:
    """An element of :math:`\\mathbb{F}_p`, stored as its canonical residue.

    Plain integers combine with an :class:`.Fp` by reduction into its modulus; two elements with
    different moduli never combine.

    .. doctest::
        >>> from unipotent_lifts.arith import Fp
        >>> Fp(3, 5) * 2
        Fp(value=1, modulus=5)
        >>> Fp(2, 5) / Fp(3, 5)
        Fp(value=4, modulus=5)
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        prime_field(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other: FpLike) -> int:
        if isinstance(other, Fp):
            check_same_modulus(self.modulus, other.modulus)
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented  # type: ignore[return-value]

    def _new(self, value: int) -> Self:
        return type(self)(value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Fp):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __add__(self, other: FpLike) -> Self:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._new(self.value + value)

    __radd__ = __add__

    def __sub__(self, other: FpLike) -> Self:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._new(self.value - value)

    def __rsub__(self, other: FpLike) -> Self:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._new(value - self.value)

    def __mul__(self, other: FpLike) -> Self:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._new(self.value * value)

    __rmul__ = __mul__

    def __neg__(self) -> Self:
        return self._new(-self.value)

    def inverse(self) -> Self:
        """Returns the multiplicative inverse.

        Raises:
            ZeroDivisionError: for the zero element.
        """
        return self._new(prime_field(self.modulus).inverse(self.value))

    def __truediv__(self, other: FpLike) -> Self:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self * self._new(value).inverse()

    def __rtruediv__(self, other: FpLike) -> Self:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self.inverse() * value

    def __pow__(self, exponent: int) -> Self:
        if exponent < 0:
            return self.inverse() ** -exponent
        return self._new(pow(self.value, exponent, self.modulus))
