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


"""Brute-force verification engines."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement, product
from typing import Any, TypeVar

import numpy as np

from ..arith import bracket_mod, matmul_mod
from ..exceptions import (
    InternalInvariantError,
    NormalizationError,
    NotInImageError,
    UnipotentLiftsError,
    UnsupportedRegimeError,
)
from ..exponential import (
    CommutingTuple,
    NilpotentMatrix,
    extract_tuple,
    one_param_from_tuple,
    random_commuting_tuple,
    tuple_to_infinitesimal,
)
from ..morphisms import (
    InfinitesimalSubgroup,
    commute_morphisms,
    conjugate,
    lift,
    random_generator_change,
    restrict,
    translate,
)
from ..unipotent import (
    NORMALIZING_KINDS,
    BlockUnipotentGroup,
    make_group,
    random_ordered_permutation,
    random_parabolic_element,
    random_unitriangular,
)
from .config import OracleConfig
from .report import EnumerationReport
from .search import enumerate_morphisms, enumerate_morphisms_abelian, random_morphism

logger = logging.getLogger(__name__)

C = TypeVar("C")


def _instance(grp: BlockUnipotentGroup, r: int | None = None) -> dict[str, Any]:
    instance: dict[str, Any] = {"blocks": list(grp.blocks), "p": grp.p}
    if r is not None:
        instance["r"] = r
    return instance


def _lie_algebra(grp: BlockUnipotentGroup) -> list[NilpotentMatrix]:
    """Every element of :math:`\\mathfrak{u}(\\mathbb{F}_p)`, lexicographic in the coordinates."""
    return [
        NilpotentMatrix.from_coordinates(grp, dict(zip(grp.generators, values, strict=False)))
        for values in product(range(grp.p), repeat=grp.num_generators)
    ]


def _run_chunks(
    func: Callable[..., EnumerationReport],
    chunks: Sequence[C],
    workers: int,
    *args: Any,
) -> list[EnumerationReport]:
    if workers <= 1 or len(chunks) <= 1:
        return [func(chunk, *args) for chunk in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, chunk, *args) for chunk in chunks]
        return [future.result() for future in futures]


def _split(items: Sequence[C], parts: int) -> list[Sequence[C]]:
    size = max(1, -(-len(items) // parts))
    return [items[i : i + size] for i in range(0, len(items), size)] or [items[:0]]


def enumerate_commuting_tuples(
    grp: BlockUnipotentGroup, r: int, config: OracleConfig | None = None
) -> list[CommutingTuple]:
    """Lists every commuting ``r``-tuple in :math:`\\mathfrak{u}(\\mathbb{F}_p)`.

    Tuples are produced in lexicographic order of their coordinate vectors.

    .. doctest::
        >>> from unipotent_lifts.oracle import enumerate_commuting_tuples
        >>> from unipotent_lifts.unipotent import make_group
        >>> len(enumerate_commuting_tuples(make_group([2, 1], 3), 2))
        81

    Raises:
        BudgetExceededError: if :math:`|\\mathfrak{u}|^r` exceeds the budget.
    """
    config = config or OracleConfig()
    config.check_budget(grp.p ** (grp.num_generators * r))
    start = time.perf_counter()
    elements = _lie_algebra(grp)
    arrays = [x.array for x in elements]
    p = grp.p
    found: list[CommutingTuple] = []

    def extend(prefix: list[int]) -> None:
        if len(prefix) == r:
            found.append(CommutingTuple._trusted(grp, [elements[k] for k in prefix]))
            return
        for k, a in enumerate(arrays):
            if all(not bracket_mod(arrays[j], a, p).any() for j in prefix):
                prefix.append(k)
                extend(prefix)
                prefix.pop()

    extend([])
    logger.info(
        "enumerated %d commuting %d-tuples for %s in %.2fs",
        len(found),
        r,
        grp,
        time.perf_counter() - start,
    )
    return found


def _bijection_chunk(tuples: Sequence[CommutingTuple], r: int) -> EnumerationReport:
    grp = tuples[0].group
    report = EnumerationReport("bijection", _instance(grp, r))
    for tup in tuples:
        report.count("tuples")
        payload = tup.to_json()["entries"]
        try:
            phi = tuple_to_infinitesimal(tup, r=r)
            psi = lift(phi)
        except UnipotentLiftsError as exc:
            report.fail(f"{type(exc).__name__}: {exc}", tuple=payload)
            continue
        if restrict(psi, r) != phi:
            report.fail("restricting the lift does not recover the morphism", tuple=payload)
            continue
        report.count("lifts_restrict")
        try:
            back = extract_tuple(psi, r)
        except NotInImageError as exc:
            report.fail(f"extract failed: {exc}", tuple=payload)
            continue
        if back != tup:
            report.fail("extract_tuple does not invert the exponential", tuple=payload)
            continue
        report.count("round_trips")
    return report


def verify_bijection(
    grp: BlockUnipotentGroup, r: int, config: OracleConfig | None = None
) -> EnumerationReport:
    """Checks the bijection between commuting ``r``-tuples and height-``r`` morphisms.

    Every tuple is mapped through :func:`.tuple_to_infinitesimal`; the morphism must validate, its
    lift must restrict back to it, :func:`.extract_tuple` must recover the tuple from the lift and
    all morphisms must be distinct. Commutation equivalence is spot-checked on
    ``config.pair_samples`` random pairs.
    """
    config = config or OracleConfig()
    start = time.perf_counter()
    tuples = enumerate_commuting_tuples(grp, r, config)
    chunks = _split(tuples, config.workers)
    reports = _run_chunks(_bijection_chunk, chunks, config.workers, r) if tuples else []
    report = EnumerationReport("bijection", _instance(grp, r), seed=config.seed)
    for chunk_report in reports:
        report = report.merge(chunk_report)

    images = {tuple_to_infinitesimal(tup, r=r) for tup in tuples}
    report.count("distinct_morphisms", len(images))
    if len(images) != len(tuples):
        report.fail("distinct tuples give equal morphisms", collisions=len(tuples) - len(images))

    rng = config.rng()
    if tuples:
        for _ in range(config.pair_samples):
            a, b = (tuples[int(k)] for k in rng.integers(len(tuples), size=2))
            _check_commutation_pair(report, a, b, r)
    report.wall_time = time.perf_counter() - start
    logger.info("bijection check on %s, r=%d: %s", grp, r, "ok" if report.ok else "FAILED")
    return report


def _brackets_vanish(a: CommutingTuple, b: CommutingTuple) -> bool:
    p = a.p
    return all(not bracket_mod(x.array, y.array, p).any() for x in a for y in b)


def _check_commutation_pair(
    report: EnumerationReport,
    a: CommutingTuple,
    b: CommutingTuple,
    r: int,
    cache: dict[CommutingTuple, tuple[Any, Any]] | None = None,
) -> None:
    def morphisms(tup: CommutingTuple) -> tuple[Any, Any]:
        if cache is not None and tup in cache:
            return cache[tup]
        phi = tuple_to_infinitesimal(tup, r=r)
        value = (phi, lift(phi))
        if cache is not None:
            cache[tup] = value
        return value

    (phi, phi_lift), (psi, psi_lift) = morphisms(a), morphisms(b)
    infinitesimal = commute_morphisms(phi, psi)
    lifted = commute_morphisms(phi_lift, psi_lift)
    matrices = _brackets_vanish(a, b)
    report.count("pairs")
    if infinitesimal:
        report.count("commuting_pairs")
    if not infinitesimal == lifted == matrices:
        report.fail(
            "commutation is not preserved",
            first=a.to_json()["entries"],
            second=b.to_json()["entries"],
            infinitesimal=infinitesimal,
            lifted=lifted,
            matrices=matrices,
        )


def verify_commutation_equivalence(
    grp: BlockUnipotentGroup,
    r: int,
    config: OracleConfig | None = None,
    exhaustive: bool = False,
) -> EnumerationReport:
    """Checks that two morphisms commute iff their lifts do iff the tuple brackets vanish.

    With ``exhaustive=True`` every unordered pair of commuting ``r``-tuples is checked. Otherwise
    ``config.pair_samples`` pairs are drawn: half as the two halves of a random commuting
    :math:`2r`-tuple (which always commute), half independently.
    """
    config = config or OracleConfig()
    start = time.perf_counter()
    report = EnumerationReport("commutation", _instance(grp, r), seed=config.seed)
    cache: dict[CommutingTuple, tuple[Any, Any]] = {}
    if exhaustive:
        tuples = enumerate_commuting_tuples(grp, r, config)
        config.check_budget(len(tuples) * (len(tuples) + 1) // 2)
        for a, b in combinations_with_replacement(tuples, 2):
            _check_commutation_pair(report, a, b, r, cache)
    else:
        rng = config.rng()
        for k in range(config.pair_samples):
            if k % 2 == 0:
                both = random_commuting_tuple(grp, 2 * r, rng)
                a = CommutingTuple._trusted(grp, both.entries[:r])
                b = CommutingTuple._trusted(grp, both.entries[r:])
            else:
                a = random_commuting_tuple(grp, r, rng)
                b = random_commuting_tuple(grp, r, rng)
            _check_commutation_pair(report, a, b, r, cache)
    report.wall_time = time.perf_counter() - start
    logger.info("commutation check on %s, r=%d: %s", grp, r, "ok" if report.ok else "FAILED")
    return report


def certify_surjectivity(
    grp: BlockUnipotentGroup, r: int, config: OracleConfig | None = None
) -> EnumerationReport:
    """Compares all height-``r`` morphisms with the exponentials of all commuting ``r``-tuples.

    Morphisms are enumerated in closed form for abelian groups and by the pruned search
    otherwise. The two sets must coincide, which certifies surjectivity on the instance.
    """
    config = config or OracleConfig()
    start = time.perf_counter()
    report = EnumerationReport("surjectivity", _instance(grp, r), seed=config.seed)
    tuples = enumerate_commuting_tuples(grp, r, config)
    if grp.is_abelian:
        morphisms = enumerate_morphisms_abelian(grp, r, config)
    else:
        morphisms = enumerate_morphisms(grp, r, config)
    images = {tuple_to_infinitesimal(tup, r=r) for tup in tuples}
    report.count("tuples", len(tuples))
    report.count("morphisms", len(morphisms))
    report.count("distinct_images", len(images))
    missing = [phi for phi in morphisms if phi not in images]
    if len(tuples) != len(morphisms):
        report.fail("counts differ", tuples=len(tuples), morphisms=len(morphisms))
    for phi in missing[:10]:
        report.fail("morphism outside the image", morphism=phi.to_json()["images"])
    report.wall_time = time.perf_counter() - start
    return report


def _lift_properties(report: EnumerationReport, phi: InfinitesimalSubgroup) -> None:
    grp = phi.group
    r = phi.height
    report.count("morphisms")
    try:
        psi = lift(phi)
    except InternalInvariantError as exc:
        report.fail(str(exc), morphism=phi.to_json()["images"])
        return
    if psi.max_degree_ratio() > grp.p ** (r - 1):
        report.fail("degree bound violated", morphism=phi.to_json()["images"])
        return
    report.count("degree_bound")
    if restrict(psi, r) != phi:
        report.fail("restriction of the lift differs", morphism=phi.to_json()["images"])
        return
    report.count("restrictions")


def verify_lift_properties(
    groups: Iterable[Sequence[int]],
    primes: Iterable[int],
    heights: Iterable[int],
    config: OracleConfig | None = None,
    samples: int | None = None,
) -> EnumerationReport:
    """Lifts random morphisms and checks validity, the degree bound and restriction.

    ``samples`` random morphisms (default ``config.pair_samples``) are drawn for every
    combination of blocks, prime and height; combinations outside the class below ``p`` regime
    are skipped and counted.
    """
    config = config or OracleConfig()
    samples = config.pair_samples if samples is None else samples
    groups, primes, heights = list(map(tuple, groups)), list(primes), list(heights)
    start = time.perf_counter()
    report = EnumerationReport(
        "lift",
        {"blocks": [list(b) for b in groups], "p": primes, "r": heights},
        seed=config.seed,
    )
    rng = config.rng()
    for blocks, p, r in product(groups, primes, heights):
        try:
            grp = make_group(blocks, p)
        except UnsupportedRegimeError:
            report.count("skipped_instances")
            continue
        for _ in range(samples):
            _lift_properties(report, random_morphism(grp, r, rng))
    report.wall_time = time.perf_counter() - start
    return report


def _permutation_sample(
    grp: BlockUnipotentGroup, r: int, rng: np.random.Generator, attempts: int
) -> tuple[np.ndarray, InfinitesimalSubgroup, InfinitesimalSubgroup] | None:
    # g = w u with u unitriangular and w a permutation ordering the support of u phi u^-1
    for _ in range(attempts):
        phi = random_morphism(grp, r, rng)
        u = random_unitriangular(grp.n, grp.p, rng)
        support = [(h.row, h.col) for h, image in translate(u, phi).items() if not image.is_zero()]
        g = matmul_mod(random_ordered_permutation(grp.n, support, rng), u, grp.p)
        try:
            return g, phi, translate(g, phi)
        except NormalizationError:
            continue
    return None


def verify_equivariance(
    grp: BlockUnipotentGroup, r: int, config: OracleConfig | None = None, attempts: int = 50
) -> EnumerationReport:
    """Checks that lifting commutes with conjugation and with the orbit action.

    Samples cycle through diagonal, unitriangular and block upper-triangular conjugating
    matrices, which normalize :math:`U`, and permutation-composed elements :math:`g = w u` of
    :math:`GL_n`. For the latter, :math:`w` is drawn so that :math:`g \\varphi g^{-1}` again
    factors through :math:`U`; a draw that still leaves :math:`U` is redrawn, and a sample that
    finds no such pair within ``attempts`` draws is a failure.
    """
    config = config or OracleConfig()
    start = time.perf_counter()
    report = EnumerationReport("equivariance", _instance(grp, r), seed=config.seed)
    rng = config.rng()
    kinds = [*NORMALIZING_KINDS, "permutation"]
    for k in range(config.pair_samples):
        kind = kinds[k % len(kinds)]
        if kind == "permutation":
            sample = _permutation_sample(grp, r, rng, attempts)
            if sample is None:
                report.fail("no permutation-composed element keeps a morphism in U")
                continue
            g, phi, moved = sample
            expected = translate(g, lift(phi))
        else:
            phi = random_morphism(grp, r, rng)
            x = random_parabolic_element(grp, rng, kind=kind)
            moved = conjugate(x, phi)
            expected = conjugate(x, lift(phi))
        report.count(kind)
        if lift(moved) != expected:
            report.fail(
                "lifting does not commute with the action",
                kind=kind,
                morphism=phi.to_json()["images"],
            )
    report.wall_time = time.perf_counter() - start
    return report


def verify_generator_independence(
    grp: BlockUnipotentGroup, r: int, config: OracleConfig | None = None
) -> EnumerationReport:
    """Checks that lifts computed relative to random changes of generators agree."""
    config = config or OracleConfig()
    start = time.perf_counter()
    report = EnumerationReport("generator_independence", _instance(grp, r), seed=config.seed)
    rng = config.rng()
    for _ in range(config.pair_samples):
        change = random_generator_change(grp, rng)
        phi = random_morphism(grp, r, rng)
        report.count("changes")
        try:
            agree = lift(phi, change=change) == lift(phi)
        except InternalInvariantError as exc:
            report.fail(str(exc), morphism=phi.to_json()["images"])
            continue
        if not agree:
            report.fail("lifts differ", morphism=phi.to_json()["images"])
    report.wall_time = time.perf_counter() - start
    return report


def _classical_chunk(
    elements: Sequence[NilpotentMatrix], grp: BlockUnipotentGroup
) -> EnumerationReport:
    report = EnumerationReport("classical", _instance(grp, 1))
    for x in elements:
        tup = CommutingTuple._trusted(grp, [x])
        report.count("elements")
        if lift(tuple_to_infinitesimal(tup, r=1)) != one_param_from_tuple(tup):
            report.fail("the lift differs from the exponential", element=x.to_json()["matrix"])
    return report


def verify_classical_agreement(
    grp: BlockUnipotentGroup, config: OracleConfig | None = None
) -> EnumerationReport:
    """Checks that the lift of the height-one morphism of every :math:`x` is :math:`\\exp(t x)`.

    All elements of :math:`\\mathfrak{u}(\\mathbb{F}_p)` are visited.
    """
    config = config or OracleConfig()
    config.check_budget(grp.p**grp.num_generators)
    start = time.perf_counter()
    elements = _lie_algebra(grp)
    report = EnumerationReport("classical", _instance(grp, 1), seed=config.seed)
    for chunk_report in _run_chunks(
        _classical_chunk, _split(elements, config.workers), config.workers, grp
    ):
        report = report.merge(chunk_report)
    report.wall_time = time.perf_counter() - start
    return report
