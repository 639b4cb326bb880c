"""Command-line entry point.

Subcommands: indicators, mds, compare, synth, validate. Exit codes:
0 success, 1 data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as bundle_io
from .distance import DistanceWeights, distance_matrix
from .encoding import build_encoding
from .indicators import indicators_for, spread_correlation
from .model import ArchitectureSolution, SolutionSet, validate_solution_set
from .projection import Projection2D, mds_project


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (bundle_io.BundleError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="archspread",
        description="Spread indicators for sets of architecture design alternatives",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indicators", help="compute MS and MAS per set")
    _add_bundle_arg(p)
    _add_indicator_flags(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output", type=Path, help="output path (default: stdout)")
    p.set_defaults(func=_cmd_indicators)

    p = sub.add_parser("mds", help="project the architectural space to 2D")
    _add_bundle_arg(p)
    p.add_argument("--w-pred", type=float, default=0.5)
    p.add_argument("--svg", type=Path, help="write a scatter SVG to this path")
    p.add_argument("-o", "--output", type=Path, help="output path (default: stdout)")
    p.set_defaults(func=_cmd_mds)

    p = sub.add_parser("compare", help="indicators + correlation + projection in one report")
    _add_bundle_arg(p)
    _add_indicator_flags(p)
    p.add_argument("--svg", type=Path, help="write a scatter SVG to this path")
    p.add_argument("-o", "--output", type=Path, help="output path (default: stdout)")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("synth", help="generate a seeded synthetic bundle")
    p.add_argument("--sets", type=int, required=True, metavar="K")
    p.add_argument("--n", type=int, required=True, metavar="N", help="solutions per set")
    p.add_argument("--seed", type=int, required=True, metavar="S")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--branching", type=int, default=2)
    p.add_argument("--name-vocab", type=int, default=5)
    p.add_argument("--arg-vocab", type=int, default=8)
    p.add_argument("--dispersion", type=float, default=1.0)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("validate", help="check a bundle against the schema and invariants")
    _add_bundle_arg(p)
    p.set_defaults(func=_cmd_validate)
    return parser


def _add_bundle_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("bundle", type=Path, help="path to a bundle JSON file")


def _add_indicator_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--w-pred", type=float, default=0.5, help="name-channel weight (args get 1 - w)")
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--shared-maxd", dest="shared_maxd", action="store_true", default=True,
        help="normalize MAS by the max padded length over all sets (default)",
    )
    group.add_argument(
        "--per-set-maxd", dest="shared_maxd", action="store_false",
        help="normalize each set's MAS by its own longest sequence",
    )
    p.add_argument(
        "--mas-allpairs", action="store_true",
        help="use the global max pairwise distance for every summand (compatibility reading)",
    )


def _load(args) -> tuple[bundle_io.AnalysisBundle, DistanceWeights]:
    bundle = bundle_io.parse_bundle(args.bundle.read_text())
    for warning in bundle.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    violations = [v for s in bundle.sets for v in validate_solution_set(s)]
    if violations:
        raise bundle_io.BundleError("; ".join(violations))
    w_pred = getattr(args, "w_pred", 0.5)
    return bundle, DistanceWeights(w_pred=w_pred, w_args=1.0 - w_pred)


def _joint_projections(
    bundle: bundle_io.AnalysisBundle, w: DistanceWeights
) -> dict[str, Projection2D]:
    """Project all sets into one shared MDS space, then slice per set."""
    table = build_encoding(list(bundle.sets))
    merged = SolutionSet(
        label="__all__",
        objective_names=bundle.sets[0].objective_names,
        solutions=tuple(
            ArchitectureSolution(f"{s.label}/{sol.id}", sol.objectives, sol.sequence)
            for s in bundle.sets
            for sol in s.solutions
        ),
    )
    joint = mds_project(distance_matrix(merged, table, w))
    coords = dict(zip(joint.ids, joint.coords))
    out = {}
    for s in bundle.sets:
        ids = tuple(sol.id for sol in s.solutions)
        out[s.label] = Projection2D(
            ids=ids,
            coords=tuple(coords[f"{s.label}/{i}"] for i in ids),
            stress=joint.stress,
            eigenvalue_share=joint.eigenvalue_share,
            diagnostics=joint.diagnostics,
        )
    return out


def _emit(documents: dict[str, str], output: Path | None) -> None:
    if output is None:
        for text in documents.values():
            sys.stdout.write(text)
        return
    if len(documents) == 1:
        output.write_text(next(iter(documents.values())))
    else:
        for name, text in documents.items():
            output.with_name(f"{output.stem}_{name}{output.suffix or '.csv'}").write_text(text)


def _cmd_indicators(args) -> int:
    bundle, w = _load(args)
    table = build_encoding(list(bundle.sets))
    results = indicators_for(
        list(bundle.sets), table, w,
        shared_max_d=args.shared_maxd, all_pairs=args.mas_allpairs,
    )
    correlation = spread_correlation(results) if len(results) >= 3 else None
    _emit(bundle_io.write_report(results, correlation, format=args.format), args.output)
    return 0


def _cmd_mds(args) -> int:
    bundle, w = _load(args)
    projections = _joint_projections(bundle, w)
    table = build_encoding(list(bundle.sets))
    results = indicators_for(list(bundle.sets), table, w)
    _emit(bundle_io.write_report(results, None, projections=projections), args.output)
    if args.svg is not None:
        args.svg.write_text(bundle_io.emit_scatter_svg(projections, results))
    return 0


def _cmd_compare(args) -> int:
    bundle, w = _load(args)
    table = build_encoding(list(bundle.sets))
    results = indicators_for(
        list(bundle.sets), table, w,
        shared_max_d=args.shared_maxd, all_pairs=args.mas_allpairs,
    )
    correlation = spread_correlation(results) if len(results) >= 3 else None
    projections = _joint_projections(bundle, w)
    _emit(
        bundle_io.write_report(results, correlation, projections=projections),
        args.output,
    )
    if args.svg is not None:
        args.svg.write_text(bundle_io.emit_scatter_svg(projections, results))
    return 0


def _cmd_synth(args) -> int:
    from .synth import generate_sets, generate_tree

    tree = generate_tree(
        args.seed, args.depth, args.branching, args.name_vocab, args.arg_vocab
    )
    sets = generate_sets(tree, args.seed, args.sets, args.n, args.dispersion)
    bundle = bundle_io.AnalysisBundle(
        name=f"synthetic-seed{args.seed}",
        sets=tuple(sets),
        tree=tree,
        provenance=f"synth --sets {args.sets} --n {args.n} --seed {args.seed}",
    )
    args.output.write_text(bundle_io.write_bundle(bundle))
    return 0


def _cmd_validate(args) -> int:
    bundle = bundle_io.parse_bundle(args.bundle.read_text())
    for warning in bundle.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    violations = [v for s in bundle.sets for v in validate_solution_set(s)]
    for v in violations:
        print(f"violation: {v}", file=sys.stderr)
    if violations:
        return 1
    print(f"ok: {bundle.name}: {len(bundle.sets)} set(s)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
