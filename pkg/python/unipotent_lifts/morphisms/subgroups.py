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

"""One-parameter subgroups of :math:`U` and their infinitesimal counterparts."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Mapping, Sequence
from typing import Any, ClassVar, Generic, TypeVar, Union

import numpy as np

from ..arith import (
    MultiPoly,
    Poly,
    PolynomialRing,
    RingMatrix,
    TruncatedPoly,
    canonical_lift,
    inverse_mod,
    parameter_ring,
    truncate,
)
from ..exceptions import (
    ContextError,
    InternalInvariantError,
    InvalidMorphismError,
    NormalizationError,
)
from ..unipotent import (
    BlockUnipotentGroup,
    Coordinate,
    comultiplication,
    conjugation_coefficients,
    conjugation_forms,
)
from .hopf import check_hopf_morphism, hopf_defect

logger = logging.getLogger(__name__)

P = TypeVar("P", Poly, TruncatedPoly)

ImageLike = Union[Poly, TruncatedPoly, Sequence[int]]


def _coordinate(grp: BlockUnipotentGroup, key: Coordinate | str) -> Coordinate:
    if isinstance(key, str):
        key = Coordinate.from_label(key)
    return grp.check_generator(key)


class _Morphism(Generic[P]):
    """Shared behavior of the two kinds of comorphisms out of :math:`k[U]`."""

    __slots__ = ("_group", "_images")

    _group: BlockUnipotentGroup
    _images: tuple[P, ...]

    kind: ClassVar[str]

    def _init_images(self, group: BlockUnipotentGroup, images: Mapping[Any, ImageLike]) -> None:
        self._group = group
        converted: dict[Coordinate, P] = {}
        for key, value in images.items():
            g = _coordinate(group, key)
            if g in converted:
                raise ValueError(f"duplicate image for {g.label}")
            converted[g] = self._convert(value)
        missing = [g.label for g in group.generators if g not in converted]
        if missing:
            raise ValueError(f"missing images for {', '.join(missing)}")
        self._images = tuple(converted[g] for g in group.generators)

    def _convert(self, value: ImageLike) -> P:
        raise NotImplementedError

    def _one(self) -> P:
        raise NotImplementedError

    def _rebuild(self, images: Mapping[Coordinate, Any]) -> Any:
        raise NotImplementedError

    @property
    def group(self) -> BlockUnipotentGroup:
        """The group :math:`U`."""
        return self._group

    @property
    def p(self) -> int:
        """The characteristic."""
        return self._group.p

    @property
    def images(self) -> dict[Coordinate, P]:
        """The image of every generator, in the group's generator order."""
        return dict(zip(self._group.generators, self._images, strict=True))

    def image(self, g: Coordinate | str) -> P:
        """The image of one generator, given as a :class:`.Coordinate` or a label."""
        return self._images[self._group.generators.index(_coordinate(self._group, g))]

    def items(self) -> Iterator[tuple[Coordinate, P]]:
        """Iterates over ``(generator, image)`` pairs in the group's generator order."""
        return zip(self._group.generators, self._images, strict=True)

    def is_trivial(self) -> bool:
        """Whether every generator maps to zero."""
        return all(image.is_zero() for image in self._images)

    def as_multipolys(self) -> dict[Coordinate, MultiPoly]:
        """The images as polynomials in the variable ``t``."""
        ring = parameter_ring(self.p)
        return {g: ring.from_univariate(image, "t") for g, image in self.items()}

    def to_matrix(self) -> RingMatrix[P]:
        """The matrix :math:`\\varphi(t)`, the identity plus the images above the block diagonal."""
        one = self._one()
        zero = 0 * one
        n = self._group.n
        rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
        for g, image in self.items():
            rows[g.row][g.col] = image
        return RingMatrix(rows)

    def max_degree_ratio(self) -> float:
        """The largest ratio of image degree to generator grade."""
        return max(
            (image.degree / self._group.grade(g) for g, image in self.items()), default=-1.0
        )

    def _key(self) -> tuple[Any, ...]:
        return (type(self).__name__, self._group, self._height_or_none(), self._images)

    def _height_or_none(self) -> int | None:
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Morphism):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        images = ", ".join(f"{g.label}: {image}" for g, image in self.items())
        return f"{type(self).__name__}({self._group}, r={self._height_or_none()}, {{{images}}})"

    def to_json(self) -> dict[str, Any]:
        """Returns ``{"group": ..., "r": ..., "images": {"Y_i_j": [...]}}``."""
        return {
            "group": self._group.to_json(),
            "r": self._height_or_none(),
            "images": {g.label: list(image.coeffs) for g, image in self.items()},
        }

    @staticmethod
    def _commute_(a: Any, b: Any) -> bool:
        return commute_morphisms(a, b)


class InfinitesimalSubgroup(_Morphism[TruncatedPoly]):
    """A homomorphism :math:`\\mathbb{G}_{a(r)} \\to U`, given by its comorphism on generators.

    Construction validates eagerly: the images must have zero constant terms and preserve
    comultiplication, truncated at :math:`p^r` in each tensor leg.

    .. doctest::
        >>> from unipotent_lifts.morphisms import InfinitesimalSubgroup
        >>> from unipotent_lifts.unipotent import make_group
        >>> grp = make_group([1, 1, 1], 5)
        >>> images = {"Y_1_2": [0, 1], "Y_2_3": [0, 1], "Y_1_3": [0, 0, 3]}
        >>> phi = InfinitesimalSubgroup(grp, 1, images)
        >>> print(phi.image("Y_1_3"))
        3*t^2

    Args:
        group: the group :math:`U`.
        height: the height ``r``.
        images: the image of every generator, keyed by :class:`.Coordinate` or label, as
            :class:`.TruncatedPoly` or coefficient lists.

    Raises:
        ConstantTermError: if an image has a nonzero constant term.
        HopfConditionError: if comultiplication is not preserved.
        ContextError: if an image lives over another field or height.
        ValueError: if images are missing or keyed by non-generators.
    """

    __slots__ = ("_height",)

    kind = "infinitesimal"

    def __init__(
        self, group: BlockUnipotentGroup, height: int, images: Mapping[Any, ImageLike]
    ) -> None:
        if not isinstance(height, int) or height < 1:
            raise ValueError(f"the height must be a positive integer, got {height!r}")
        self._height = height
        self._init_images(group, images)
        check_hopf_morphism(group, self.as_multipolys(), self.bound)
        self._check_degree_bound()

    def _check_degree_bound(self) -> None:
        scale = self.p ** (self._height - 1)
        for g, image in self.items():
            if image.degree > self._group.grade(g) * scale:
                raise InternalInvariantError(
                    f"the image of {g.label} has degree {image.degree} above the bound "
                    f"{self._group.grade(g) * scale} of a valid morphism"
                )

    def _convert(self, value: ImageLike) -> TruncatedPoly:
        if isinstance(value, TruncatedPoly):
            if value.p != self.p or value.height != self._height:
                raise ContextError(
                    f"image over (p={value.p}, r={value.height}) for a morphism of height "
                    f"{self._height} over p={self.p}"
                )
            return value
        if isinstance(value, Poly):
            raise ContextError("an infinitesimal subgroup needs truncated images")
        coeffs = list(value)
        support = [i for i, c in enumerate(coeffs) if c % self.p]
        if support and support[-1] >= self.p**self._height:
            raise ValueError(f"image of degree at least p^r = {self.p**self._height}")
        return TruncatedPoly(coeffs, self.p, self._height)

    def _one(self) -> TruncatedPoly:
        return TruncatedPoly.one(self.p, self._height)

    def _rebuild(self, images: Mapping[Coordinate, Any]) -> InfinitesimalSubgroup:
        return InfinitesimalSubgroup(self._group, self._height, images)

    def _height_or_none(self) -> int | None:
        return self._height

    @property
    def height(self) -> int:
        """The height ``r``."""
        return self._height

    @property
    def bound(self) -> int:
        """The truncation bound :math:`p^r`."""
        return self.p**self._height

    @classmethod
    def from_matrix(
        cls, group: BlockUnipotentGroup, height: int, matrix: RingMatrix[TruncatedPoly]
    ) -> InfinitesimalSubgroup:
        """Reads the images off a matrix :math:`\\varphi(t)`, see :meth:`to_matrix`."""
        return cls(group, height, {g: matrix[g] for g in group.generators})

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> InfinitesimalSubgroup:
        """Parses the output of :meth:`to_json`.

        Raises:
            ValueError: on malformed input.
        """
        group, height, images = _parse_morphism(data)
        if height is None:
            raise ValueError("an infinitesimal subgroup needs an integer height 'r'")
        return cls(group, height, images)


class OneParamSubgroup(_Morphism[Poly]):
    """A homomorphism :math:`\\mathbb{G}_a \\to U`, given by its comorphism on generators.

    Construction validates the Hopf condition over :math:`k[t]`, untruncated.

    Args:
        group: the group :math:`U`.
        images: the image of every generator, as :class:`.Poly` or coefficient lists.

    Raises:
        ConstantTermError: if an image has a nonzero constant term.
        HopfConditionError: if comultiplication is not preserved.
        ContextError: if an image lives over another field.
        ValueError: if images are missing or keyed by non-generators.
    """

    __slots__ = ()

    kind = "global"

    def __init__(self, group: BlockUnipotentGroup, images: Mapping[Any, ImageLike]) -> None:
        self._init_images(group, images)
        check_hopf_morphism(group, self.as_multipolys(), None)

    def _convert(self, value: ImageLike) -> Poly:
        if isinstance(value, Poly):
            if value.p != self.p:
                raise ContextError(f"image over p={value.p} for a morphism over p={self.p}")
            return value
        if isinstance(value, TruncatedPoly):
            raise ContextError("a one-parameter subgroup needs untruncated images")
        return Poly(list(value), self.p)

    def _one(self) -> Poly:
        return Poly.one(self.p)

    def _rebuild(self, images: Mapping[Coordinate, Any]) -> OneParamSubgroup:
        return OneParamSubgroup(self._group, images)

    @classmethod
    def from_matrix(cls, group: BlockUnipotentGroup, matrix: RingMatrix[Poly]) -> OneParamSubgroup:
        """Reads the images off a matrix :math:`\\psi(t)`, see :meth:`to_matrix`."""
        return cls(group, {g: matrix[g] for g in group.generators})

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> OneParamSubgroup:
        """Parses the output of :meth:`to_json`.

        Raises:
            ValueError: on malformed input.
        """
        group, height, images = _parse_morphism(data)
        if height is not None:
            raise ValueError("a one-parameter subgroup must have 'r': null")
        return cls(group, images)


AnyMorphism = Union[InfinitesimalSubgroup, OneParamSubgroup]


def _parse_morphism(
    data: Mapping[str, Any],
) -> tuple[BlockUnipotentGroup, int | None, dict[str, list[int]]]:
    try:
        group = BlockUnipotentGroup.from_json(data["group"])
        height = data.get("r")
        height = None if height is None else int(height)
        images = {str(k): [int(c) for c in v] for k, v in dict(data["images"]).items()}
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed morphism: {exc}") from exc
    return group, height, images


def morphism_from_json(data: Mapping[str, Any]) -> AnyMorphism:
    """Parses either kind of morphism, dispatching on ``"r"`` (``null`` for global ones)."""
    if data.get("r") is None:
        return OneParamSubgroup.from_json(data)
    return InfinitesimalSubgroup.from_json(data)


def validate(
    images: Mapping[Any, ImageLike], grp: BlockUnipotentGroup, r: int
) -> InfinitesimalSubgroup:
    """Validates candidate images as a homomorphism :math:`\\mathbb{G}_{a(r)} \\to U`.

    .. doctest::
        >>> from unipotent_lifts.exceptions import HopfConditionError
        >>> from unipotent_lifts.morphisms import validate
        >>> from unipotent_lifts.unipotent import make_group
        >>> grp = make_group([1, 1, 1], 5)
        >>> try:
        ...     validate({"Y_1_2": [0, 1], "Y_2_3": [0, 1], "Y_1_3": []}, grp, 1)
        ... except HopfConditionError as exc:
        ...     print(exc.generator, exc.difference)
        Y_1_3 4*t'*t''

    Raises:
        ConstantTermError: if an image has a nonzero constant term.
        HopfConditionError: naming the first failing generator and the difference
            :math:`\\Delta(\\varphi(g)) - (\\varphi \\otimes \\varphi)(\\Delta(g))`.
    """
    return InfinitesimalSubgroup(grp, r, images)


def lift(phi: InfinitesimalSubgroup, change: GeneratorChange | None = None) -> OneParamSubgroup:
    """The canonical lift of an infinitesimal one-parameter subgroup.

    Every generator image is replaced by its representative of degree :math:`< p^r`. With a
    ``change`` of generators the lift is computed relative to the new generators and expressed
    back in the coordinates :math:`Y`; it agrees with the plain lift.

    .. doctest::
        >>> from unipotent_lifts.morphisms import lift, validate
        >>> from unipotent_lifts.unipotent import make_group
        >>> grp = make_group([1, 1, 1], 3)
        >>> images = {"Y_1_2": [0, 1, 0, 1], "Y_2_3": [0, 1, 0, 1], "Y_1_3": [0, 0, 2, 0, 1, 0, 2]}
        >>> print(lift(validate(images, grp, 2)).image("Y_1_3"))
        2*t^2 + t^4 + 2*t^6

    Raises:
        InternalInvariantError: if the lift fails to be a homomorphism or violates the degree
            bound, which would be a bug.
    """
    grp = phi.group
    if change is None:
        images: dict[Coordinate, Poly] = {g: canonical_lift(image) for g, image in phi.items()}
    else:
        if change.group != grp:
            raise ContextError(f"generator change of {change.group} applied to {grp}")
        x_images = change.forward(phi.images, phi._one)
        lifted = {g: canonical_lift(image) for g, image in x_images.items()}
        images = change.inverse(lifted, lambda: Poly.one(grp.p))
    try:
        psi = OneParamSubgroup(grp, images)
    except InvalidMorphismError as exc:
        raise InternalInvariantError(f"the canonical lift of {phi} is not a homomorphism") from exc
    scale = grp.p ** (phi.height - 1)
    for g, image in psi.items():
        if image.degree > grp.grade(g) * scale:
            raise InternalInvariantError(
                f"lift image of {g.label} has degree {image.degree} > {grp.grade(g) * scale}"
            )
    logger.debug("lifted height-%d morphism of %s", phi.height, grp)
    return psi


def restrict(psi: AnyMorphism, r: int) -> InfinitesimalSubgroup:
    """Restricts to the Frobenius kernel :math:`\\mathbb{G}_{a(r)}`, truncating at :math:`p^r`.

    Infinitesimal inputs of height at least ``r`` are restricted further.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"the height must be a positive integer, got {r!r}")
    if isinstance(psi, InfinitesimalSubgroup):
        if r > psi.height:
            raise ValueError(f"cannot restrict a height-{psi.height} morphism to height {r}")
        images = {g: truncate(canonical_lift(image), r) for g, image in psi.items()}
    else:
        images = {g: truncate(image, r) for g, image in psi.items()}
    return InfinitesimalSubgroup(psi.group, r, images)


def _check_compatible(phi: AnyMorphism, psi: AnyMorphism) -> None:
    if type(phi) is not type(psi):
        raise ContextError("cannot compare an infinitesimal and a global one-parameter subgroup")
    if phi.group != psi.group:
        raise ContextError(f"morphisms into {phi.group} and {psi.group}")
    if phi._height_or_none() != psi._height_or_none():
        raise ContextError(
            f"heights {phi._height_or_none()} and {psi._height_or_none()} differ"
        )


def commute_morphisms(phi: AnyMorphism, psi: AnyMorphism) -> bool:
    """Whether :math:`(t, s) \\mapsto \\varphi(t)\\psi(s)` is a homomorphism of group schemes.

    The comorphism :math:`(\\varphi^* \\otimes \\psi^*) \\circ \\Delta` into :math:`k[t, s]` is
    checked on generators, truncating each variable at :math:`p^r` for infinitesimal inputs.
    """
    _check_compatible(phi, psi)
    grp = phi.group
    p = grp.p
    ring = PolynomialRing(p, ("t", "s"))
    legs: dict[str, MultiPoly] = {}
    for g in grp.generators:
        legs[g.variable(1)] = ring.from_univariate(phi.image(g), "t")
        legs[g.variable(2)] = ring.from_univariate(psi.image(g), "s")
    combined = {g: comultiplication(g, grp).substitute(legs, ring.one) for g in grp.generators}
    bound = phi.bound if isinstance(phi, InfinitesimalSubgroup) else None
    if bound is not None:
        combined = {g: f.truncate(bound) for g, f in combined.items()}
    return hopf_defect(grp, combined, bound) is None


def conjugate(x: Any, phi: AnyMorphism) -> AnyMorphism:
    """Precomposes the comorphism with :math:`x^*`, i.e. :math:`t \\mapsto x^{-1} \\varphi(t) x`.

    .. doctest::
        >>> import numpy as np
        >>> from unipotent_lifts.morphisms import conjugate, validate
        >>> from unipotent_lifts.unipotent import make_group
        >>> grp = make_group([1, 1, 1], 5)
        >>> phi = validate({"Y_1_2": [0, 1], "Y_2_3": [0, 1], "Y_1_3": [0, 0, 3]}, grp, 1)
        >>> print(conjugate(np.diag([1, 2, 3]), phi).image("Y_1_3"))
        4*t^2

    Args:
        x: an invertible matrix normalizing :math:`U`.
        phi: an infinitesimal or global one-parameter subgroup.

    Raises:
        NormalizationError: if ``x`` does not normalize :math:`U`.
    """
    grp = phi.group
    forms = conjugation_forms(x, grp)
    images = {h.variable(): image for h, image in phi.items()}
    return phi._rebuild({g: forms[g].substitute(images, phi._one) for g in grp.generators})


def translate(g: Any, phi: AnyMorphism) -> AnyMorphism:
    """The orbit action :math:`t \\mapsto g \\varphi(t) g^{-1}` of an invertible matrix ``g``.

    For ``g`` normalizing :math:`U` this equals ``conjugate(g^{-1}, phi)``; in general the result
    must again factor through :math:`U`.

    Raises:
        NormalizationError: if :math:`g \\varphi g^{-1}` does not factor through :math:`U`.
        ValueError: if ``g`` is singular.
    """
    grp = phi.group
    g_inv = inverse_mod(np.asarray(g, dtype=np.int64), grp.p)
    coefficients = conjugation_coefficients(g_inv, grp)
    zero = 0 * phi._one()
    entries: dict[tuple[int, int], Any] = {}
    for k, (_, image) in enumerate(phi.items()):
        if image.is_zero():
            continue
        for a, b in zip(*np.nonzero(coefficients[k]), strict=True):
            key = (int(a), int(b))
            entries[key] = entries.get(key, zero) + int(coefficients[k, a, b]) * image
    for (a, b), value in entries.items():
        if not grp.is_generator(Coordinate(a, b)) and not value.is_zero():
            raise NormalizationError(
                f"the translate has entry ({a + 1}, {b + 1}) = {value} outside U"
            )
    return phi._rebuild({h: entries.get((h.row, h.col), zero) for h in grp.generators})


class GeneratorChange:
    """A triangular change of algebra generators of :math:`k[U]` inside :math:`k[U]_{<p}`.

    The new generators are :math:`X_g = c_g Y_g + h_g`, where :math:`c_g \\neq 0` and
    :math:`h_g` is a polynomial without constant term in the generators preceding :math:`g`, whose
    monomials all have total grade at most :math:`p - 1`.

    Args:
        group: the group :math:`U`.
        scalars: the nonzero :math:`c_g` (missing ones are 1).
        corrections: the :math:`h_g` in ``group.coordinate_ring()`` (missing ones are 0).

    Raises:
        ValueError: if the data does not define such a change of generators.
    """

    def __init__(
        self,
        group: BlockUnipotentGroup,
        scalars: Mapping[Coordinate, int] | None = None,
        corrections: Mapping[Coordinate, MultiPoly] | None = None,
    ) -> None:
        self.group = group
        ring = group.coordinate_ring()
        scalars = scalars or {}
        corrections = corrections or {}
        self.scalars = {g: scalars.get(g, 1) % group.p for g in group.generators}
        self.corrections = {g: corrections.get(g, ring.zero()) for g in group.generators}
        for position, g in enumerate(group.generators):
            if self.scalars[g] == 0:
                raise ValueError(f"the scalar of {g.label} must be nonzero")
            h = self.corrections[g]
            if h.ring != ring:
                raise ValueError(f"the correction of {g.label} is not in the coordinate ring")
            for exponents, _ in h.terms():
                if any(exponents[position:]):
                    raise ValueError(f"the correction of {g.label} uses a later generator")
                if not any(exponents):
                    raise ValueError(f"the correction of {g.label} has a constant term")
                if not group.in_k_u_below_p(exponents):
                    raise ValueError(f"the correction of {g.label} leaves k[U]_<p")

    def new_generator(self, g: Coordinate) -> MultiPoly:
        """Returns :math:`X_g` as a polynomial in the coordinates."""
        ring = self.group.coordinate_ring()
        return self.scalars[g] * ring.gen(g.variable()) + self.corrections[g]

    def forward(self, images: Mapping[Coordinate, P], one: Callable[[], P]) -> dict[Coordinate, P]:
        """Given the images of the :math:`Y_g`, returns the images of the :math:`X_g`."""
        by_variable = {g.variable(): image for g, image in images.items()}
        return {
            g: self.scalars[g] * images[g] + self.corrections[g].substitute(by_variable, one)
            for g in self.group.generators
        }

    def inverse(self, images: Mapping[Coordinate, P], one: Callable[[], P]) -> dict[Coordinate, P]:
        """Given the images of the :math:`X_g`, solves for the images of the :math:`Y_g`."""
        p = self.group.p
        solved: dict[Coordinate, P] = {}
        by_variable: dict[Any, P] = {g.variable(): 0 * one() for g in self.group.generators}
        for g in self.group.generators:
            correction = self.corrections[g].substitute(by_variable, one)
            solved[g] = pow(self.scalars[g], -1, p) * (images[g] - correction)
            by_variable[g.variable()] = solved[g]
        return solved


def random_generator_change(
    group: BlockUnipotentGroup, rng: np.random.Generator, max_terms: int = 3
) -> GeneratorChange:
    """Draws a random :class:`.GeneratorChange`."""
    ring = group.coordinate_ring()
    p = group.p
    scalars = {g: int(rng.integers(1, p)) for g in group.generators}
    corrections: dict[Coordinate, MultiPoly] = {}
    for position, g in enumerate(group.generators):
        earlier = group.generators[:position]
        h = ring.zero()
        if earlier:
            for _ in range(int(rng.integers(0, max_terms + 1))):
                exponents = [0] * group.num_generators
                budget = p - 1
                for _ in range(int(rng.integers(1, p))):
                    k = int(rng.integers(0, len(earlier)))
                    grade = group.grade(earlier[k])
                    if grade > budget:
                        continue
                    exponents[k] += 1
                    budget -= grade
                if any(exponents):
                    h = h + MultiPoly(ring, {tuple(exponents): int(rng.integers(1, p))})
        corrections[g] = h
    return GeneratorChange(group, scalars, corrections)
