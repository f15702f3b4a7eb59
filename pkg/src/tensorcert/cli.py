"""Command line interface.

Subcommands: certify, identifiability, kruskal, compare, augment,
obstruct, pin, comon, span-check, survey.  Input is a JSON instance
file; rationals are strings "p" or "p/q" with the sign on the numerator.
Exit codes: 0 claim certified, 1 hypotheses not satisfied, 2 validation
or precondition failure, 3 parse error.  The default seed comes from the
TENSORCERT_SEED environment variable when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .certify import (
    ASSERTED,
    BoundReport,
    CLAIM_CACTUS_BOUND,
    CLAIM_EXACT_RANK,
    CLAIM_IDENTIFIABLE,
    CLAIM_MINIMAL_RANK,
    CLAIM_NON_REDUNDANT,
    CLAIM_OBSTRUCTION,
    CLAIM_PINNING,
    CLAIM_SPAN_IDENTITY,
    Certificate,
    Hypothesis,
    bound_cactus_rank,
    certify_exact_rank,
    certify_identifiability,
    check_non_redundant,
    check_span_intersection_identity,
    obstruct_alt_decompositions,
    pin_projections,
)
from .construct import (
    DEFAULT_BOX,
    AugmentationError,
    augment_decomposition,
    random_decomposition,
    survey,
)
from .geometry import (
    AmbientTensor,
    FactorPartition,
    MultiPoint,
    MultiShape,
    PointSet,
    assemble_tensor,
    decomposition_weights,
)
from .kruskal import ComparisonRecord, KruskalReport, compare_criteria, kruskal_certificate
from .linalg import format_rational, parse_rational
from .symmetric import SymPointSet, assemble_symmetric, comon_certify, symmetric_bounds

ENV_SEED = "TENSORCERT_SEED"

EXIT_CERTIFIED = 0
EXIT_NOT_CERTIFIED = 1
EXIT_INVALID = 2
EXIT_PARSE = 3


class InstanceParseError(Exception):
    """Structural problem with an instance file (exit code 3)."""


# ---------------------------------------------------------------------------
# instance files


@dataclass
class SymmetricInstance:
    n: int
    degree: int
    points: SymPointSet
    weights: tuple[Fraction, ...]
    coords: tuple[Fraction, ...]


@dataclass
class Instance:
    shape: MultiShape | None
    points: PointSet | None
    weights: tuple[Fraction, ...] | None
    tensor: AmbientTensor | None
    symmetric: SymmetricInstance | None


def _parse_rational_field(value, where: str) -> Fraction:
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise InstanceParseError(f"{where}: {exc}") from None


def _parse_vector(value, where: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise InstanceParseError(f"{where} must be an array of rational strings")
    return tuple(_parse_rational_field(x, where) for x in value)


def load_instance(path: str) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise InstanceParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InstanceParseError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InstanceParseError("instance file must be a JSON object")
    return instance_from_json(data)


def instance_from_json(data: dict) -> Instance:
    shape = None
    points = None
    weights = None
    tensor = None
    if "dims" in data:
        dims = data["dims"]
        if not isinstance(dims, list) or not dims or not all(isinstance(d, int) for d in dims):
            raise InstanceParseError("dims must be a nonempty array of integers")
        if any(d < 1 for d in dims):
            raise ValueError("every entry of dims must be at least 1")
        shape = MultiShape(tuple(d - 1 for d in dims))
    if "points" in data:
        if shape is None:
            raise InstanceParseError("points given without dims")
        raw = data["points"]
        if not isinstance(raw, list) or not raw:
            raise InstanceParseError("points must be a nonempty array")
        parsed_points = []
        for idx, entry in enumerate(raw):
            if not isinstance(entry, list):
                raise InstanceParseError(f"point {idx} must be an array of coordinate arrays")
            factors = tuple(_parse_vector(f, f"point {idx}") for f in entry)
            parsed_points.append(MultiPoint(factors))
        points = PointSet(shape, tuple(parsed_points))
        if "weights" in data:
            weights = _parse_vector(data["weights"], "weights")
            if len(weights) != len(points):
                raise ValueError(f"{len(weights)} weights for {len(points)} points")
        else:
            weights = tuple(Fraction(1) for _ in range(len(points)))
    if "tensor" in data:
        if shape is None:
            raise InstanceParseError("tensor given without dims")
        coords = _parse_vector(data["tensor"], "tensor")
        tensor = AmbientTensor(shape, coords)
    if points is not None:
        assembled = assemble_tensor(weights, points)
        if tensor is not None:
            if tensor != assembled:
                raise ValueError("tensor disagrees with the weighted sum of the points")
        else:
            tensor = assembled
    symmetric = None
    if "symmetric" in data:
        sym = data["symmetric"]
        if not isinstance(sym, dict):
            raise InstanceParseError("symmetric stanza must be an object")
        for key in ("n", "k", "points"):
            if key not in sym:
                raise InstanceParseError(f"symmetric stanza is missing {key!r}")
        n, degree = sym["n"], sym["k"]
        if not isinstance(n, int) or not isinstance(degree, int):
            raise InstanceParseError("symmetric n and k must be integers")
        raw_pts = sym["points"]
        if not isinstance(raw_pts, list) or not raw_pts:
            raise InstanceParseError("symmetric points must be a nonempty array")
        sym_points = SymPointSet(
            tuple(_parse_vector(p, f"symmetric point {i}") for i, p in enumerate(raw_pts))
        )
        if sym_points.n != n:
            raise ValueError(
                f"symmetric points have {sym_points.n + 1} coordinates, n={n} wants {n + 1}"
            )
        if "weights" in sym:
            sym_weights = _parse_vector(sym["weights"], "symmetric weights")
            if len(sym_weights) != len(sym_points):
                raise ValueError("symmetric weights and points disagree in length")
        else:
            sym_weights = tuple(Fraction(1) for _ in range(len(sym_points)))
        coords = assemble_symmetric(sym_weights, sym_points, degree)
        symmetric = SymmetricInstance(n, degree, sym_points, sym_weights, coords)
    return Instance(shape, points, weights, tensor, symmetric)


def _need_points(inst: Instance) -> tuple[AmbientTensor, PointSet]:
    if inst.points is None or inst.tensor is None:
        raise ValueError("this subcommand needs dims and points in the instance file")
    return inst.tensor, inst.points


def pointset_to_json(s: PointSet, weights: Sequence[Fraction] | None = None) -> dict:
    out: dict = {
        "dims": [n + 1 for n in s.shape.dims],
        "points": [
            [[format_rational(x) for x in f] for f in p.factors] for p in s.points
        ],
    }
    if weights is not None:
        out["weights"] = [format_rational(w) for w in weights]
    return out


# ---------------------------------------------------------------------------
# serialization


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "claim": cert.claim,
        "theorem_ref": cert.theorem_ref,
        "hypotheses": [
            {"name": h.name, "status": h.status, "witness": h.witness}
            for h in cert.hypotheses
        ],
        "conclusion": cert.conclusion,
    }


def certificate_from_json(data: dict) -> Certificate:
    try:
        hyps = tuple(
            Hypothesis(h["name"], h["status"], h["witness"]) for h in data["hypotheses"]
        )
        return Certificate(data["claim"], data["theorem_ref"], hyps, data["conclusion"])
    except (KeyError, TypeError) as exc:
        raise InstanceParseError(f"malformed certificate object: {exc}") from None


def _conclusion_line(cert: Certificate) -> str:
    if cert.conclusion is None:
        failed = ", ".join(cert.failed()) or "none listed"
        return f"conclusion: NOT CERTIFIED (unsatisfied hypotheses: {failed})"
    c = cert.conclusion
    tag = f" [{cert.theorem_ref}]"
    if cert.claim == CLAIM_EXACT_RANK:
        return f"conclusion: rank = cactus rank = {c['rank']}{tag}"
    if cert.claim == CLAIM_NON_REDUNDANT:
        return f"conclusion: non-redundant decomposition of cardinality {c['cardinality']}{tag}"
    if cert.claim == CLAIM_CACTUS_BOUND:
        b = c["cactus_rank_at_least"]
        return f"conclusion: cactus rank >= {b}, hence rank >= {b}{tag}"
    if cert.claim == CLAIM_IDENTIFIABLE:
        return (
            f"conclusion: rank = {c['rank']}, the decomposition is minimal and unique{tag}"
        )
    if cert.claim == CLAIM_MINIMAL_RANK:
        return f"conclusion: rank = {c['rank']}, the decomposition is minimal{tag}"
    if cert.claim == CLAIM_OBSTRUCTION:
        return (
            "conclusion: alternative decompositions with at most "
            f"{c['alternative_max_cardinality']} points cannot have injective projections{tag}"
        )
    if cert.claim == CLAIM_PINNING:
        return (
            f"conclusion: projections on factors {c['pinned_factors']} are pinned for "
            f"alternatives with at most {c['cardinality']} points{tag}"
        )
    if cert.claim == CLAIM_SPAN_IDENTITY:
        return (
            f"conclusion: span intersection dimension {c['intersection_dim']} matches the "
            f"cohomology side {c['rhs']}{tag}"
        )
    return f"conclusion: certified{tag}"


def format_certificate_text(cert: Certificate) -> str:
    lines = [f"claim: {cert.claim}"]
    for h in cert.hypotheses:
        suffix = " (not verified)" if h.status == ASSERTED else ""
        witness = f" {json.dumps(h.witness, sort_keys=True)}" if h.witness else ""
        lines.append(f"hypothesis: {h.name}: {h.status}{suffix}{witness}")
    lines.append(_conclusion_line(cert))
    return "\n".join(lines)


def emit_certificate(cert: Certificate, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(certificate_to_json(cert), indent=2)
    return format_certificate_text(cert)


def format_bound_report_text(report: BoundReport) -> str:
    lines = []
    for entry in report.per_partition:
        part = entry.partition
        label = "{" + ",".join(map(str, part.E)) + "}/{" + ",".join(map(str, part.F)) + "}"
        if entry.applicable:
            lines.append(f"partition {label}: applicable, bound {entry.bound}")
        else:
            extra = f", bound {entry.bound}" if entry.bound is not None else ""
            lines.append(f"partition {label}: not applicable ({entry.reason}{extra})")
    if report.best_partition is not None:
        best = report.best_partition
        label = "{" + ",".join(map(str, best.E)) + "}/{" + ",".join(map(str, best.F)) + "}"
        lines.append(f"best bound: {report.best_bound} via {label}")
    else:
        lines.append(f"best bound: {report.best_bound} (trivial, no applicable partition)")
    lines.append(format_certificate_text(report.certificate))
    return "\n".join(lines)


def format_kruskal_text(report: KruskalReport) -> str:
    ranks = ", ".join(map(str, report.per_factor))
    lines = [
        f"factor Kruskal ranks: {ranks}",
        f"condition: {report.condition_lhs} >= {report.condition_rhs} "
        f"({'holds' if report.applies else 'fails'})",
    ]
    if report.applies:
        lines.append(
            f"conclusion: the decomposition of {report.cardinality} points is unique "
            "(Kruskal baseline)"
        )
    else:
        lines.append("conclusion: Kruskal baseline not applicable")
    return "\n".join(lines)


def comparison_to_json(record: ComparisonRecord) -> dict:
    return {
        "non_redundant": certificate_to_json(record.non_redundant),
        "cactus_bound": record.bound.as_json(),
        "exact_rank": certificate_to_json(record.exact_rank),
        "identifiability": certificate_to_json(record.identifiability),
        "kruskal": record.kruskal.as_json(),
        "flattening_applies": record.flattening_applies,
        "kruskal_applies": record.kruskal_applies,
        "flattening_without_kruskal": record.flattening_without_kruskal,
    }


def format_comparison_text(record: ComparisonRecord) -> str:
    sections = [
        ("non-redundancy", format_certificate_text(record.non_redundant)),
        ("cactus rank lower bound", format_bound_report_text(record.bound)),
        ("exact rank", format_certificate_text(record.exact_rank)),
        ("identifiability", format_certificate_text(record.identifiability)),
        ("kruskal baseline", format_kruskal_text(record.kruskal)),
    ]
    lines = []
    for title, body in sections:
        lines.append(f"== {title} ==")
        lines.append(body)
    lines.append(
        "flattening criteria apply: %s; Kruskal applies: %s; flattening without Kruskal: %s"
        % (
            "yes" if record.flattening_applies else "no",
            "yes" if record.kruskal_applies else "no",
            "yes" if record.flattening_without_kruskal else "no",
        )
    )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# flag parsing helpers


def parse_partition_flag(text: str, k: int) -> FactorPartition:
    parts = text.split("/")
    if len(parts) != 2:
        raise ValueError(f"partition {text!r} must look like '1,2/3'")
    try:
        e = tuple(sorted(int(x) for x in parts[0].split(",") if x.strip()))
        f = tuple(sorted(int(x) for x in parts[1].split(",") if x.strip()))
    except ValueError:
        raise ValueError(f"partition {text!r} has non-integer entries") from None
    partition = FactorPartition(e, f)
    if partition.k != k:
        raise ValueError(f"partition {text!r} does not cover the {k} factors")
    return partition


def parse_families_flag(text: str, k: int) -> list[tuple[int, ...]]:
    groups = text.split(":")
    if len(groups) != k:
        raise ValueError(f"--families needs {k} colon-separated groups, got {len(groups)}")
    families = []
    for g in groups:
        try:
            families.append(tuple(sorted(int(x) for x in g.split(",") if x.strip())))
        except ValueError:
            raise ValueError(f"family {g!r} has non-integer entries") from None
    return families


def parse_index_list(text: str, size: int, what: str) -> list[int]:
    try:
        indices = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"{what} {text!r} has non-integer entries") from None
    if not indices:
        raise ValueError(f"{what} must select at least one point")
    for i in indices:
        if i < 0 or i >= size:
            raise ValueError(f"{what} index {i} out of range for {size} points")
    if len(set(indices)) != len(indices):
        raise ValueError(f"{what} has repeated indices")
    return indices


def parse_shapes_flag(text: str) -> list[MultiShape]:
    shapes = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            dims = [int(x) for x in chunk.split("x")]
        except ValueError:
            raise ValueError(f"shape {chunk!r} must look like '3x4x6'") from None
        if any(d < 1 for d in dims):
            raise ValueError(f"shape {chunk!r} has entries below 1")
        shapes.append(MultiShape(tuple(d - 1 for d in dims)))
    if not shapes:
        raise ValueError("--shapes selected nothing")
    return shapes


def parse_r_flag(text: str) -> list[int]:
    text = text.strip()
    if "-" in text[1:]:
        lo, hi = text.split("-", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(x) for x in text.split(",") if x.strip()]
    if not values or any(v < 1 for v in values):
        raise ValueError(f"--r {text!r} must select positive cardinalities")
    return values


def resolve_seed(args: argparse.Namespace) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get(ENV_SEED)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_SEED}={env!r} is not an integer") from None
    return 0


# ---------------------------------------------------------------------------
# subcommands


def _emit(args: argparse.Namespace, payload_json: dict, payload_text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload_json, indent=2))
    else:
        print(payload_text)


def cmd_certify(args: argparse.Namespace) -> int:
    tensor, points = _need_points(load_instance(args.input))
    partition = (
        parse_partition_flag(args.partition, points.shape.k) if args.partition else None
    )
    nr = check_non_redundant(tensor, points)
    report = bound_cactus_rank(points, partition)
    exact = certify_exact_rank(tensor, points, partition)
    _emit(
        args,
        {
            "non_redundant": certificate_to_json(nr),
            "cactus_bound": report.as_json(),
            "exact_rank": certificate_to_json(exact),
        },
        "\n".join(
            [
                "== non-redundancy ==",
                format_certificate_text(nr),
                "== cactus rank lower bound ==",
                format_bound_report_text(report),
                "== exact rank ==",
                format_certificate_text(exact),
            ]
        ),
    )
    return EXIT_CERTIFIED if exact.certified else EXIT_NOT_CERTIFIED


def cmd_identifiability(args: argparse.Namespace) -> int:
    tensor, points = _need_points(load_instance(args.input))
    cert = certify_identifiability(tensor, points)
    _emit(args, certificate_to_json(cert), format_certificate_text(cert))
    return EXIT_CERTIFIED if cert.certified else EXIT_NOT_CERTIFIED


def cmd_kruskal(args: argparse.Namespace) -> int:
    _, points = _need_points(load_instance(args.input))
    report = kruskal_certificate(points)
    _emit(args, report.as_json(), format_kruskal_text(report))
    return EXIT_CERTIFIED if report.applies else EXIT_NOT_CERTIFIED


def cmd_compare(args: argparse.Namespace) -> int:
    tensor, points = _need_points(load_instance(args.input))
    record = compare_criteria(tensor, points)
    _emit(args, comparison_to_json(record), format_comparison_text(record))
    applies = record.flattening_applies or record.kruskal_applies
    return EXIT_CERTIFIED if applies else EXIT_NOT_CERTIFIED


def cmd_augment(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    tensor, points = _need_points(inst)
    seed = resolve_seed(args)
    bigger, cert = augment_decomposition(
        tensor, points, inst.weights, seed=seed, box=args.box
    )
    new_weights = decomposition_weights(tensor, bigger)
    out = pointset_to_json(bigger, new_weights)
    out["tensor"] = [format_rational(x) for x in tensor.coords]
    _emit(
        args,
        {"decomposition": out, "certificate": certificate_to_json(cert)},
        "\n".join(
            [
                json.dumps(out, indent=2),
                format_certificate_text(cert),
            ]
        ),
    )
    return EXIT_CERTIFIED


def cmd_obstruct(args: argparse.Namespace) -> int:
    tensor, points = _need_points(load_instance(args.input))
    nr = check_non_redundant(tensor, points)
    cert = obstruct_alt_decompositions(points, args.x)
    _emit(
        args,
        {"non_redundant": certificate_to_json(nr), "obstruction": certificate_to_json(cert)},
        "\n".join(
            [
                "== non-redundancy ==",
                format_certificate_text(nr),
                "== obstruction ==",
                format_certificate_text(cert),
            ]
        ),
    )
    return EXIT_CERTIFIED if nr.certified and cert.certified else EXIT_NOT_CERTIFIED


def cmd_pin(args: argparse.Namespace) -> int:
    tensor, points = _need_points(load_instance(args.input))
    families = parse_families_flag(args.families, points.shape.k)
    cert = pin_projections(
        tensor, points, families, quasi_general_asserted=args.assert_quasi_general
    )
    _emit(args, certificate_to_json(cert), format_certificate_text(cert))
    return EXIT_CERTIFIED if cert.certified else EXIT_NOT_CERTIFIED


def cmd_comon(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    if inst.symmetric is None:
        raise ValueError("this subcommand needs a symmetric stanza in the instance file")
    sym = inst.symmetric
    cert = comon_certify(sym.coords, sym.points, sym.degree)
    bounds = symmetric_bounds(sym.n, sym.degree)
    payload = {
        "certificate": certificate_to_json(cert),
        "bounds": {"r0": bounds.r0, "rg": bounds.rg, "exceptional": bounds.exceptional},
    }
    text = "\n".join(
        [
            format_certificate_text(cert),
            f"bounds: r0={bounds.r0} rg={bounds.rg} exceptional={str(bounds.exceptional).lower()}",
        ]
    )
    _emit(args, payload, text)
    return EXIT_CERTIFIED if cert.certified else EXIT_NOT_CERTIFIED


def cmd_span_check(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    if inst.points is None:
        raise ValueError("this subcommand needs dims and points in the instance file")
    points = inst.points
    idx_a = parse_index_list(args.a, len(points), "--a")
    idx_b = parse_index_list(args.b, len(points), "--b")
    set_a = PointSet(points.shape, tuple(points.points[i] for i in idx_a))
    set_b = PointSet(points.shape, tuple(points.points[i] for i in idx_b))
    cert = check_span_intersection_identity(set_a, set_b)
    _emit(args, certificate_to_json(cert), format_certificate_text(cert))
    return EXIT_CERTIFIED if cert.certified else EXIT_NOT_CERTIFIED


def cmd_survey(args: argparse.Namespace) -> int:
    shapes = parse_shapes_flag(args.shapes)
    r_values = parse_r_flag(args.r)
    seed = resolve_seed(args)
    report = survey(shapes, r_values, args.trials, seed=seed, box=args.box)
    header = (
        f"{'shape':>12} {'r':>3} {'trials':>6} {'exact':>6} {'ident':>6} "
        f"{'kruskal':>7} {'advantage':>9}"
    )
    lines = [header]
    for row in report.rows:
        label = "x".join(str(n + 1) for n in row.dims)
        lines.append(
            f"{label:>12} {row.r:>3} {row.trials:>6} {row.exact_rank:>6} "
            f"{row.identifiable:>6} {row.kruskal:>7} {row.flattening_without_kruskal:>9}"
        )
    _emit(args, report.as_json(), "\n".join(lines))
    return EXIT_CERTIFIED


def cmd_random(args: argparse.Namespace) -> int:
    shapes = parse_shapes_flag(args.shape)
    if len(shapes) != 1:
        raise ValueError("--shape must name exactly one shape")
    seed = resolve_seed(args)
    s, weights = random_decomposition(shapes[0], args.r, box=args.box, seed=seed)
    out = pointset_to_json(s, weights)
    tensor = assemble_tensor(weights, s)
    out["tensor"] = [format_rational(x) for x in tensor.coords]
    print(json.dumps(out, indent=2))
    return EXIT_CERTIFIED


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep errors one-line and machine readable
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _add_common(sub: argparse.ArgumentParser, needs_input: bool = True) -> None:
    if needs_input:
        sub.add_argument("--input", required=True, help="instance JSON file")
    sub.add_argument("--format", choices=("json", "text"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tensorcert", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("certify", help="non-redundancy, cactus bound and exact rank")
    _add_common(p)
    p.add_argument("--partition", help="bipartition of the factors, e.g. 1,2/3")
    p.set_defaults(handler=cmd_certify)

    p = subs.add_parser("identifiability", help="minimality and uniqueness certificate")
    _add_common(p)
    p.set_defaults(handler=cmd_identifiability)

    p = subs.add_parser("kruskal", help="k-way Kruskal baseline")
    _add_common(p)
    p.set_defaults(handler=cmd_kruskal)

    p = subs.add_parser("compare", help="flattening criteria next to the Kruskal baseline")
    _add_common(p)
    p.set_defaults(handler=cmd_compare)

    p = subs.add_parser("augment", help="extend the decomposition by one point")
    _add_common(p)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--box", type=int, default=DEFAULT_BOX)
    p.set_defaults(handler=cmd_augment)

    p = subs.add_parser("obstruct", help="rule out small alternatives with injective projections")
    _add_common(p)
    p.add_argument("--x", type=int, required=True, help="cardinality budget for alternatives")
    p.set_defaults(handler=cmd_obstruct)

    p = subs.add_parser("pin", help="pin factor projections of small alternatives")
    _add_common(p)
    p.add_argument(
        "--families",
        required=True,
        help="one factor subset per factor, colon separated, e.g. 1,2:1,2:3",
    )
    p.add_argument(
        "--assert-quasi-general",
        action="store_true",
        help="assert quasi-generality of the family projections (never verified)",
    )
    p.set_defaults(handler=cmd_pin)

    p = subs.add_parser("comon", help="symmetric rank agreement certificate")
    _add_common(p)
    p.set_defaults(handler=cmd_comon)

    p = subs.add_parser("span-check", help="span intersection identity on two subsets")
    _add_common(p)
    p.add_argument("--a", required=True, help="comma separated 0-based point indices")
    p.add_argument("--b", required=True, help="comma separated 0-based point indices")
    p.set_defaults(handler=cmd_span_check)

    p = subs.add_parser("survey", help="criterion tallies over random decompositions")
    _add_common(p, needs_input=False)
    p.add_argument("--shapes", required=True, help="comma separated sizes, e.g. 3x4x6,2x2")
    p.add_argument("--r", required=True, help="cardinalities, e.g. 6 or 2-4 or 1,3")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--box", type=int, default=DEFAULT_BOX)
    p.set_defaults(handler=cmd_survey)

    p = subs.add_parser("random", help="sample a seeded random instance file")
    p.add_argument("--shape", required=True, help="sizes, e.g. 3x4x6")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--box", type=int, default=DEFAULT_BOX)
    p.set_defaults(handler=cmd_random)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0
    try:
        return args.handler(args)
    except InstanceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AugmentationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CERTIFIED
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
