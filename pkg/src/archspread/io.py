"""Bundle ingestion, report serialization, and SVG scatter emission."""

from __future__ import annotations

import csv
import io as _stdio
import json
import math
from dataclasses import dataclass, field

from .encoding import extract_sequence
from .model import (
    ArchitectureSolution,
    CorrelationStats,
    IndicatorResult,
    SearchTree,
    SolutionSet,
    TransformationStep,
)
from .projection import Projection2D


class BundleError(ValueError):
    """Schema or referential-integrity violation; message carries the JSON path."""


@dataclass(frozen=True)
class AnalysisBundle:
    """One analysis input: named solution sets, optionally backed by a search tree."""

    name: str
    sets: tuple[SolutionSet, ...]
    tree: SearchTree | None = None
    provenance: str = ""
    warnings: tuple[str, ...] = field(default=(), compare=False)


_BUNDLE_KEYS = {"name", "tree", "sets", "provenance"}
_TREE_KEYS = {"root", "nodes", "edges"}
_SET_KEYS = {"label", "objective_names", "solutions"}
_SOLUTION_KEYS = {"id", "objectives", "sequence", "node"}
_STEP_KEYS = {"name", "args"}


def parse_bundle(text: str | dict) -> AnalysisBundle:
    """Parse the JSON bundle format into an AnalysisBundle.

    Each solution either carries an explicit "sequence" or references a tree
    "node" (its sequence is then the shortest root path). Unknown fields are
    collected as warnings on the returned bundle, not errors.
    """
    doc = json.loads(text) if isinstance(text, str) else text
    if not isinstance(doc, dict):
        raise BundleError("$: bundle must be a JSON object")
    warnings = _unknown_keys(doc, _BUNDLE_KEYS, "$")

    name = _require(doc, "name", str, "$")
    provenance = doc.get("provenance", "")
    if not isinstance(provenance, str):
        raise BundleError("$.provenance: must be a string")

    tree = None
    if "tree" in doc:
        tree, tree_warnings = _parse_tree(doc["tree"])
        warnings += tree_warnings

    raw_sets = _require(doc, "sets", list, "$")
    sets = []
    labels: set[str] = set()
    for i, raw_set in enumerate(raw_sets):
        path = f"$.sets[{i}]"
        if not isinstance(raw_set, dict):
            raise BundleError(f"{path}: must be an object")
        warnings += _unknown_keys(raw_set, _SET_KEYS, path)
        label = _require(raw_set, "label", str, path)
        if label in labels:
            raise BundleError(f"{path}.label: duplicate set label {label!r}")
        labels.add(label)
        objective_names = _string_list(
            _require(raw_set, "objective_names", list, path), f"{path}.objective_names"
        )
        solutions = []
        for j, raw_sol in enumerate(_require(raw_set, "solutions", list, path)):
            sol, sol_warnings = _parse_solution(raw_sol, f"{path}.solutions[{j}]", tree)
            solutions.append(sol)
            warnings += sol_warnings
        sets.append(
            SolutionSet(
                label=label,
                objective_names=tuple(objective_names),
                solutions=tuple(solutions),
            )
        )
    return AnalysisBundle(
        name=name,
        sets=tuple(sets),
        tree=tree,
        provenance=provenance,
        warnings=tuple(warnings),
    )


def _parse_tree(raw: object) -> tuple[SearchTree, list[str]]:
    if not isinstance(raw, dict):
        raise BundleError("$.tree: must be an object")
    warnings = _unknown_keys(raw, _TREE_KEYS, "$.tree")
    root = _require(raw, "root", str, "$.tree")
    node_ids = _string_list(_require(raw, "nodes", list, "$.tree"), "$.tree.nodes")
    nodes = {n: n for n in node_ids}
    if root not in nodes:
        raise BundleError(f"$.tree.root: unknown node {root!r}")
    edges = []
    for i, raw_edge in enumerate(_require(raw, "edges", list, "$.tree")):
        path = f"$.tree.edges[{i}]"
        if not isinstance(raw_edge, dict):
            raise BundleError(f"{path}: must be an object")
        src = _require(raw_edge, "from", str, path)
        dst = _require(raw_edge, "to", str, path)
        for end, key in ((src, "from"), (dst, "to")):
            if end not in nodes:
                raise BundleError(f"{path}.{key}: unknown node {end!r}")
        step, step_warnings = _parse_step(_require(raw_edge, "step", dict, path), f"{path}.step")
        warnings += step_warnings
        edges.append((src, dst, step))
    return SearchTree(nodes=nodes, root_id=root, edges=tuple(edges)), warnings


def _parse_solution(
    raw: object, path: str, tree: SearchTree | None
) -> tuple[ArchitectureSolution, list[str]]:
    if not isinstance(raw, dict):
        raise BundleError(f"{path}: must be an object")
    warnings = _unknown_keys(raw, _SOLUTION_KEYS, path)
    sol_id = _require(raw, "id", str, path)
    objectives = _require(raw, "objectives", list, path)
    for k, v in enumerate(objectives):
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
            raise BundleError(f"{path}.objectives[{k}]: must be a finite number")

    has_sequence = "sequence" in raw
    has_node = "node" in raw
    if has_sequence and has_node:
        raise BundleError(f"{path}: solution {sol_id!r} has both 'sequence' and 'node'")
    if has_node:
        node = _require(raw, "node", str, path)
        if tree is None:
            raise BundleError(f"{path}.node: solution {sol_id!r} references a node but the bundle has no tree")
        if node not in tree.nodes:
            raise BundleError(f"{path}.node: unknown node {node!r}")
        sequence = extract_sequence(tree, node)
    elif has_sequence:
        sequence = []
        for k, raw_step in enumerate(_require(raw, "sequence", list, path)):
            if not isinstance(raw_step, dict):
                raise BundleError(f"{path}.sequence[{k}]: must be an object")
            step, step_warnings = _parse_step(raw_step, f"{path}.sequence[{k}]")
            warnings += step_warnings
            sequence.append(step)
    else:
        raise BundleError(f"{path}: solution {sol_id!r} needs either 'sequence' or 'node'")
    return (
        ArchitectureSolution(
            id=sol_id,
            objectives=tuple(float(v) for v in objectives),
            sequence=tuple(sequence),
        ),
        warnings,
    )


def _parse_step(raw: dict, path: str) -> tuple[TransformationStep, list[str]]:
    warnings = _unknown_keys(raw, _STEP_KEYS, path)
    name = _require(raw, "name", str, path)
    args = _string_list(raw.get("args", []), f"{path}.args")
    try:
        return TransformationStep(name, tuple(args)), warnings
    except ValueError as exc:
        raise BundleError(f"{path}: {exc}") from None


def _require(obj: dict, key: str, typ: type, path: str):
    if key not in obj:
        raise BundleError(f"{path}.{key}: missing required field")
    value = obj[key]
    if not isinstance(value, typ):
        raise BundleError(f"{path}.{key}: expected {typ.__name__}")
    return value


def _string_list(raw: object, path: str) -> list[str]:
    if not isinstance(raw, list) or any(not isinstance(x, str) for x in raw):
        raise BundleError(f"{path}: must be a list of strings")
    return list(raw)


def _unknown_keys(obj: dict, known: set[str], path: str) -> list[str]:
    return [f"ignored unknown field {path}.{k}" for k in obj if k not in known]


def write_bundle(bundle: AnalysisBundle) -> str:
    """Serialize a bundle back to the JSON input format (explicit sequences)."""
    doc: dict = {"name": bundle.name}
    if bundle.tree is not None:
        doc["tree"] = {
            "root": bundle.tree.root_id,
            "nodes": sorted(bundle.tree.nodes),
            "edges": [
                {"from": p, "to": c, "step": {"name": s.name, "args": list(s.args)}}
                for p, c, s in bundle.tree.edges
            ],
        }
    doc["sets"] = [
        {
            "label": s.label,
            "objective_names": list(s.objective_names),
            "solutions": [
                {
                    "id": sol.id,
                    "objectives": list(sol.objectives),
                    "sequence": [
                        {"name": st.name, "args": list(st.args)} for st in sol.sequence
                    ],
                }
                for sol in s.solutions
            ],
        }
        for s in bundle.sets
    ]
    if bundle.provenance:
        doc["provenance"] = bundle.provenance
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def write_report(
    results: list[IndicatorResult],
    correlation: CorrelationStats | None,
    projections: dict[str, Projection2D] | None = None,
    format: str = "json",
) -> dict[str, str]:
    """Serialize indicator results to named documents.

    Returns a mapping from logical document name to text: {"report": json}
    for JSON, or {"summary": csv, "points": csv} for CSV.
    """
    if not results:
        raise ValueError("results must be non-empty")
    projections = projections or {}
    if format == "json":
        return {"report": _json_report(results, correlation, projections)}
    if format == "csv":
        return _csv_report(results, projections)
    raise ValueError(f"unknown format {format!r}")


def _json_report(
    results: list[IndicatorResult],
    correlation: CorrelationStats | None,
    projections: dict[str, Projection2D],
) -> str:
    doc: dict = {
        "sets": [
            {
                "label": r.set_label,
                "n": r.n,
                "o": r.o,
                "ms": r.ms,
                "mas": r.mas,
                "max_d": r.max_d,
                "L_pad": r.l_pad,
                "diagnostics": list(r.diagnostics),
            }
            for r in results
        ]
    }
    if correlation is None:
        doc["correlation"] = {"computable": False}
    else:
        doc["correlation"] = {
            "computable": correlation.pearson_computable or correlation.spearman_computable,
            "n": correlation.n,
            "pearson": correlation.pearson,
            "spearman": correlation.spearman,
        }
    if projections:
        doc["projections"] = {
            label: {
                "stress": p.stress,
                "eigenvalue_share": p.eigenvalue_share,
                "points": [
                    {"id": i, "x": x, "y": y} for i, (x, y) in zip(p.ids, p.coords)
                ],
            }
            for label, p in projections.items()
        }
    return json.dumps(doc, indent=2) + "\n"


def _csv_report(
    results: list[IndicatorResult], projections: dict[str, Projection2D]
) -> dict[str, str]:
    summary = _stdio.StringIO()
    writer = csv.writer(summary, lineterminator="\n")
    writer.writerow(["label", "n", "o", "ms", "mas", "max_d", "L_pad"])
    for r in results:
        writer.writerow([r.set_label, r.n, r.o, repr(r.ms), repr(r.mas), repr(r.max_d), r.l_pad])

    points = _stdio.StringIO()
    writer = csv.writer(points, lineterminator="\n")
    writer.writerow(["id", "label", "x", "y"])
    for label, p in projections.items():
        for i, (x, y) in zip(p.ids, p.coords):
            writer.writerow([i, label, repr(x), repr(y)])
    return {"summary": summary.getvalue(), "points": points.getvalue()}


_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def emit_scatter_svg(
    projections: dict[str, Projection2D],
    results: list[IndicatorResult] | None = None,
    width: int = 640,
    height: int = 520,
) -> str:
    """Standalone SVG scatter: one marker per solution, colored by set label.

    Each set gets its minimum enclosing circle and a legend entry; the caption
    carries the set's MAS/MS when results are supplied. The MDS axes carry no
    semantic meaning and are left unlabeled.
    """
    points: list[tuple[float, float, str]] = []
    for label, proj in projections.items():
        for x, y in proj.coords:
            points.append((x, y, label))
    if not points:
        raise ValueError("at least one projection point is required")

    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    margin = 50.0
    plot = min(width, height) - 2 * margin
    scale = plot / span

    def to_px(x: float, y: float) -> tuple[float, float]:
        px = margin + (x - min(xs)) * scale
        py = margin + (max(ys) - y) * scale  # flip: SVG y grows downward
        return px, py

    by_label: dict[str, str] = {}
    for label in projections:
        by_label[label] = _PALETTE[len(by_label) % len(_PALETTE)]
    indicator_by_label = {r.set_label: r for r in (results or [])}

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for label, proj in projections.items():
        color = by_label[label]
        px_points = [to_px(x, y) for x, y in proj.coords]
        cx, cy, r = _min_enclosing_circle(px_points)
        parts.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r + 6:.2f}" fill="none" '
            f'stroke="{color}" stroke-width="1.5" stroke-dasharray="6 3" opacity="0.8"/>'
        )
        for px, py in px_points:
            parts.append(
                f'<circle cx="{px:.2f}" cy="{py:.2f}" r="3.2" fill="{color}" opacity="0.75"/>'
            )

    legend_y = 22.0
    for label, color in by_label.items():
        ind = indicator_by_label.get(label)
        caption = label
        if ind is not None:
            caption += f"  MAS={ind.mas:.3f}  MS={ind.ms:.3f}"
        parts.append(f'<circle cx="{width - 230}" cy="{legend_y - 4:.1f}" r="5" fill="{color}"/>')
        parts.append(
            f'<text x="{width - 218}" y="{legend_y:.1f}" font-family="sans-serif" '
            f'font-size="12">{_xml_escape(caption)}</text>'
        )
        legend_y += 18.0
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _xml_escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _min_enclosing_circle(points: list[tuple[float, float]]) -> tuple[float, float, float]:
    """Welzl's algorithm (deterministic order; fine at plot scale)."""
    pts = list(dict.fromkeys(points))
    if not pts:
        return 0.0, 0.0, 0.0
    circle: tuple[float, float, float] | None = None
    for i, p in enumerate(pts):
        if circle is None or not _in_circle(circle, p):
            circle = (p[0], p[1], 0.0)
            for j, q in enumerate(pts[: i + 1]):
                if not _in_circle(circle, q):
                    circle = _circle_two(p, q)
                    for r in pts[: j + 1]:
                        if not _in_circle(circle, r):
                            circle = _circumcircle(p, q, r)
    assert circle is not None
    return circle


def _in_circle(circle: tuple[float, float, float], p: tuple[float, float]) -> bool:
    cx, cy, r = circle
    return math.hypot(p[0] - cx, p[1] - cy) <= r + 1e-9


def _circle_two(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float, float]:
    cx = (a[0] + b[0]) / 2
    cy = (a[1] + b[1]) / 2
    return cx, cy, math.hypot(a[0] - b[0], a[1] - b[1]) / 2


def _circumcircle(a, b, c) -> tuple[float, float, float]:
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-12:
        # Collinear: fall back to the widest two-point circle.
        circles = [_circle_two(a, b), _circle_two(a, c), _circle_two(b, c)]
        return max(circles, key=lambda t: t[2])
    ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay) + (cx**2 + cy**2) * (ay - by)) / d
    uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx) + (cx**2 + cy**2) * (bx - ax)) / d
    return ux, uy, math.hypot(ax - ux, ay - uy)
