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


"""The ``unipotent-lifts`` command line."""

from __future__ import annotations

import argparse
import logging
from collections.abc import Callable, Sequence
from typing import Any, TextIO

import numpy as np

from ..arith import Poly, RingMatrix, inverse_mod, matmul_mod
from ..exceptions import ExitCode, HopfConditionError, InvalidMorphismError, UnipotentLiftsError
from ..exponential import (
    CommutingTuple,
    GeneralLinearSubgroup,
    NilpotentMatrix,
    engel_flag,
    exp_matrix,
    extract_matrices,
    extract_tuple,
    general_linear_subgroup,
    one_param_from_tuple,
    random_commuting_tuple,
    tuple_to_infinitesimal,
)
from ..morphisms import (
    InfinitesimalSubgroup,
    commute_morphisms,
    conjugate,
    lift,
    morphism_from_json,
    restrict,
    translate,
)
from ..oracle import (
    OracleConfig,
    certify_surjectivity,
    enumerate_commuting_tuples,
    enumerate_morphisms,
    enumerate_morphisms_abelian,
    random_morphism,
    verify_bijection,
    verify_classical_agreement,
    verify_commutation_equivalence,
    verify_equivariance,
    verify_generator_independence,
    verify_lift_properties,
)
from ..rootsys import (
    ParabolicDatum,
    build_root_system,
    coxeter_number,
    is_good_prime,
    is_torsion_prime,
    nilpotence_class,
    radical_roots,
)
from ..unipotent import make_group
from .io import block_lists, int_list, parse_matrix, read_json, write_json

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, TextIO | None], Any]


def _read(args: argparse.Namespace, stdin: TextIO | None) -> Any:
    return read_json(args.input, stdin)


def _root_info(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    rs = build_root_system(args.family, args.rank)
    return {
        **rs.to_json(),
        "num_positive_roots": rs.num_positive_roots,
        "positive_roots": [list(beta) for beta in rs.positive_roots],
        "highest_root": list(rs.highest_root),
        "coxeter_number": coxeter_number(rs),
    }


def _good_prime(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    rs = build_root_system(args.family, args.rank)
    return {"good": is_good_prime(rs, args.p), "torsion": is_torsion_prime(rs, args.p)}


def _class(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    datum = ParabolicDatum.from_labels(build_root_system(args.family, args.rank), args.J)
    return {
        **datum.to_json(),
        "class": nilpotence_class(datum),
        "radical_roots": [list(beta) for beta in radical_roots(datum)],
    }


def _make_group(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    grp = make_group(args.blocks, args.p)
    return {
        **grp.to_json(),
        "n": grp.n,
        "class": grp.nilpotence_class,
        "generators": [g.label for g in grp.generators],
        "grades": [grp.grade(g) for g in grp.generators],
    }


def _validate(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    phi = morphism_from_json(_read(args, stdin))
    return {"valid": True, "morphism": phi.to_json()}


def _lift(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    phi = InfinitesimalSubgroup.from_json(_read(args, stdin))
    return lift(phi).to_json()


def _restrict(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    return restrict(morphism_from_json(_read(args, stdin)), args.r).to_json()


def _commute(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    phi = morphism_from_json(_read(args, stdin))
    psi = morphism_from_json(read_json(args.other))
    return {"commute": commute_morphisms(phi, psi)}


def _conjugate(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    phi = morphism_from_json(_read(args, stdin))
    return conjugate(np.array(args.element, dtype=np.int64), phi).to_json()


def _translate(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    phi = morphism_from_json(_read(args, stdin))
    return translate(np.array(args.element, dtype=np.int64), phi).to_json()


def _exp(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    x = NilpotentMatrix.from_json(_read(args, stdin))
    matrix = exp_matrix(x, Poly.monomial(1, x.p))
    return {"p": x.p, "n": x.n, "matrix": [list(entry.coeffs) for _, _, entry in matrix.entries()]}


def _raw_matrices(data: Any) -> tuple[int, int, list[NilpotentMatrix]]:
    p, n = int(data["p"]), int(data["n"])
    matrices = [NilpotentMatrix.from_array(np.reshape(x, (n, n)), p) for x in data["entries"]]
    return p, n, matrices


def _matrices_json(p: int, n: int, matrices: Sequence[NilpotentMatrix]) -> dict[str, Any]:
    return {"p": p, "n": n, "entries": [x.to_json()["matrix"] for x in matrices]}


def _tuple_to_morphism(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    data = _read(args, stdin)
    if args.general_linear:
        p, n, matrices = _raw_matrices(data)
        r = None if args.global_ else (len(matrices) if args.r is None else args.r)
        return general_linear_subgroup(matrices, r=r, n=n, p=p).to_json()
    tup = CommutingTuple.from_json(data)
    if args.global_:
        return one_param_from_tuple(tup).to_json()
    return tuple_to_infinitesimal(tup, r=args.r).to_json()


def _extract_from_matrix(data: Any, r: int | None) -> dict[str, Any]:
    p, n = int(data["p"]), int(data["n"])
    polys = [Poly(coeffs, p) for coeffs in data["matrix"]]
    if len(polys) != n * n:
        raise ValueError(f"expected {n * n} row-major entries, got {len(polys)}")
    matrices = extract_matrices(RingMatrix([polys[i * n : (i + 1) * n] for i in range(n)]), p)
    if r is not None:
        if len(matrices) > r:
            raise ValueError(f"cannot shorten a tuple of length {len(matrices)} to {r}")
        matrices += [NilpotentMatrix.zero(n, p)] * (r - len(matrices))
    return _matrices_json(p, n, matrices)


def _extract(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    data = _read(args, stdin)
    if "flag" in data:
        gl = GeneralLinearSubgroup.from_json(data)
        return _matrices_json(gl.p, gl.n, gl.extract(args.r))
    if "group" not in data:
        return _extract_from_matrix(data, args.r)
    phi = morphism_from_json(data)
    if isinstance(phi, InfinitesimalSubgroup):
        psi = lift(phi)
        r = phi.height if args.r is None else args.r
    else:
        psi, r = phi, args.r
    return extract_tuple(psi, r).to_json()


def _engel(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    data = _read(args, stdin)
    p, n = int(data["p"]), int(data["n"])
    matrices = [np.array(x, dtype=np.int64).reshape(n, n) for x in data["entries"]]
    g = engel_flag(matrices, n=n, p=p)
    h = inverse_mod(g, p)
    conjugated = [matmul_mod(matmul_mod(g, x, p), h, p) for x in matrices]
    return {
        "p": p,
        "n": n,
        "g": g.reshape(-1).tolist(),
        "conjugated": [x.reshape(-1).tolist() for x in conjugated],
    }


def _random_tuple(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    grp = make_group(args.blocks, args.p)
    return random_commuting_tuple(grp, args.r, np.random.default_rng(args.seed)).to_json()


def _random_morphism(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    grp = make_group(args.blocks, args.p)
    return random_morphism(grp, args.r, np.random.default_rng(args.seed)).to_json()


def _config(args: argparse.Namespace) -> OracleConfig:
    return OracleConfig().with_overrides(
        budget=getattr(args, "budget", None),
        seed=getattr(args, "seed", None),
        pair_samples=getattr(args, "samples", None),
        workers=getattr(args, "workers", None),
    )


def _count_tuples(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    grp = make_group(args.blocks, args.p)
    tuples = enumerate_commuting_tuples(grp, args.r, _config(args))
    result: dict[str, Any] = {**grp.to_json(), "r": args.r, "count": len(tuples)}
    if args.list:
        result["tuples"] = [tup.to_json()["entries"] for tup in tuples]
    return result


def _count_morphisms(args: argparse.Namespace, stdin: TextIO | None) -> dict[str, Any]:
    grp = make_group(args.blocks, args.p)
    config = _config(args)
    if grp.is_abelian:
        morphisms = enumerate_morphisms_abelian(grp, args.r, config)
    else:
        morphisms = enumerate_morphisms(grp, args.r, config)
    return {**grp.to_json(), "r": args.r, "count": len(morphisms)}


def _report(
    engine: Callable[..., Any], with_r: bool = True
) -> Callable[[argparse.Namespace, TextIO | None], Any]:
    def handler(args: argparse.Namespace, stdin: TextIO | None) -> Any:
        grp = make_group(args.blocks, args.p)
        if with_r:
            return engine(grp, args.r, _config(args))
        return engine(grp, _config(args))

    return handler


def _commutation(args: argparse.Namespace, stdin: TextIO | None) -> Any:
    grp = make_group(args.blocks, args.p)
    return verify_commutation_equivalence(grp, args.r, _config(args), exhaustive=args.exhaustive)


def _lift_properties(args: argparse.Namespace, stdin: TextIO | None) -> Any:
    return verify_lift_properties(
        args.groups, args.primes, args.heights, _config(args), samples=args.samples
    )


def _add_group(parser: argparse.ArgumentParser, height: bool = True) -> None:
    parser.add_argument("--blocks", type=int_list, required=True, help="block sizes, e.g. 1,1,1")
    parser.add_argument("--p", type=int, required=True, help="the characteristic")
    if height:
        parser.add_argument("--r", type=int, required=True, help="the height")


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", default=None, help="JSON input file (default: stdin)")


def _add_oracle_knobs(parser: argparse.ArgumentParser, seeded: bool = False) -> None:
    parser.add_argument("--budget", type=int, default=None, help="candidate budget")
    parser.add_argument("--workers", type=int, default=None, help="worker processes")
    if seeded:
        parser.add_argument("--seed", type=int, required=True, help="random seed")
        parser.add_argument("--samples", type=int, default=None, help="number of samples")


def build_parser() -> argparse.ArgumentParser:
    """Builds the argument parser of the ``unipotent-lifts`` command."""
    parser = argparse.ArgumentParser(
        prog="unipotent-lifts",
        description=(
            "Canonical lifts of infinitesimal one-parameter subgroups of unipotent radicals and "
            "their correspondence with commuting tuples of nilpotent matrices. All input and "
            "output is JSON; see the formats reference of the documentation for the schemas."
        ),
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="logging level on stderr",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text, description=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = command("root-info", _root_info, "positive roots and Coxeter number of a root system")
    sub.add_argument("--family", required=True, help="one of A-G")
    sub.add_argument("--rank", type=int, required=True)

    sub = command("good-prime", _good_prime, "whether p is good (and torsion) for a root system")
    sub.add_argument("--family", required=True)
    sub.add_argument("--rank", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)

    sub = command("class", _class, "nilpotence class of the radical of a parabolic")
    sub.add_argument("--family", required=True)
    sub.add_argument("--rank", type=int, required=True)
    sub.add_argument("--J", type=int_list, default=[], help="1-based Levi simple roots, e.g. 2")

    sub = command("make-group", _make_group, "describe a block-unitriangular group")
    _add_group(sub, height=False)

    for name, handler, help_text in [
        ("validate", _validate, 'validate a morphism {"group", "r", "images"}'),
        ("lift", _lift, "canonical lift of an infinitesimal morphism"),
        ("exp", _exp, 'exp(t x) for a matrix {"p", "n", "matrix"}'),
        ("engel", _engel, 'Engel flag for {"p", "n", "entries"}'),
    ]:
        _add_input(command(name, handler, help_text))

    sub = command("restrict", _restrict, "restrict a morphism to a smaller height")
    _add_input(sub)
    sub.add_argument("--r", type=int, required=True)

    sub = command("commute", _commute, "whether two morphisms commute")
    _add_input(sub)
    sub.add_argument("--other", required=True, help="JSON file of the second morphism")

    for name, handler, help_text in [
        ("conjugate", _conjugate, "precompose with conjugation by a matrix normalizing U"),
        ("translate", _translate, "orbit action g phi g^-1 of an invertible matrix"),
    ]:
        sub = command(name, handler, help_text)
        _add_input(sub)
        sub.add_argument("--element", type=parse_matrix, required=True, help="JSON rows")

    sub = command("tuple-to-morphism", _tuple_to_morphism, "exponential of a commuting tuple")
    _add_input(sub)
    sub.add_argument("--r", type=int, default=None, help="height (default: tuple length)")
    sub.add_argument("--global", dest="global_", action="store_true", help="untruncated")
    sub.add_argument(
        "--general-linear",
        action="store_true",
        help="matrices in any position, triangularized by an Engel flag",
    )

    sub = command("extract", _extract, "recover the commuting tuple of a morphism")
    _add_input(sub)
    sub.add_argument("--r", type=int, default=None, help="pad the tuple to this length")

    for name, handler, help_text in [
        ("random-tuple", _random_tuple, "a random commuting tuple"),
        ("random-morphism", _random_morphism, "a random infinitesimal morphism"),
    ]:
        sub = command(name, handler, help_text)
        _add_group(sub)
        sub.add_argument("--seed", type=int, required=True)

    oracle = commands.add_parser("oracle", help="brute-force verification engines")
    engines = oracle.add_subparsers(dest="oracle_command", required=True, metavar="CHECK")

    def engine(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        sub = engines.add_parser(name, help=help_text, description=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = engine("count-tuples", _count_tuples, "count commuting tuples")
    _add_group(sub)
    _add_oracle_knobs(sub)
    sub.add_argument("--list", action="store_true", help="also list the tuples")

    sub = engine("count-morphisms", _count_morphisms, "count morphisms by exhaustive search")
    _add_group(sub)
    _add_oracle_knobs(sub)

    for name, handler, help_text, seeded in [
        ("verify-bijection", _report(verify_bijection), "tuples <-> morphisms", True),
        ("certify-surjectivity", _report(certify_surjectivity), "compare both counts", False),
        ("equivariance", _report(verify_equivariance), "lift vs conjugation", True),
        (
            "generator-independence",
            _report(verify_generator_independence),
            "lift vs generator changes",
            True,
        ),
    ]:
        sub = engine(name, handler, help_text)
        _add_group(sub)
        _add_oracle_knobs(sub, seeded=seeded)

    sub = engine("classical", _report(verify_classical_agreement, with_r=False), "r = 1 exp")
    _add_group(sub, height=False)
    _add_oracle_knobs(sub)

    sub = engine("commutation", _commutation, "commutation before and after lifting")
    _add_group(sub)
    _add_oracle_knobs(sub, seeded=True)
    sub.add_argument("--exhaustive", action="store_true", help="check all pairs")

    sub = engine("lift-properties", _lift_properties, "randomized lift checks")
    sub.add_argument("--groups", type=block_lists, required=True, help="e.g. '1,1,1;2,1'")
    sub.add_argument("--primes", type=int_list, required=True)
    sub.add_argument("--heights", type=int_list, required=True)
    _add_oracle_knobs(sub, seeded=True)
    return parser


def _error_payload(exc: Exception) -> dict[str, Any]:
    payload: dict[str, Any] = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, InvalidMorphismError) and exc.generator is not None:
        payload["generator"] = str(exc.generator)
    if isinstance(exc, HopfConditionError):
        payload["difference"] = str(exc.difference)
    return payload


def main(
    argv: Sequence[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
) -> int:
    """Runs the command line and returns the exit code.

    Results are written to ``stdout`` as one JSON document. Domain errors are reported as
    ``{"error": ..., "message": ...}`` with exit code 1; usage errors exit with code 2.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=args.log_level, format="%(levelname)s %(name)s: %(message)s")
    try:
        result = args.handler(args, stdin)
    except (UnipotentLiftsError, ValueError, KeyError, TypeError, OSError) as exc:
        logger.error("%s failed: %s", args.command, exc)
        write_json(_error_payload(exc), stdout)
        return int(ExitCode.DOMAIN_ERROR)
    if hasattr(result, "to_json"):
        write_json(result.to_json(), stdout)
        ok = getattr(result, "ok", True)
        return int(ExitCode.SUCCESS if ok else ExitCode.DOMAIN_ERROR)
    write_json(result, stdout)
    return int(ExitCode.SUCCESS)
