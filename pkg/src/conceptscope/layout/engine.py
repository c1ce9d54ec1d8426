"""Bubble treemap assembly: circles, nested contours, colors, bounds.

Leaf circles get area proportional to concept frequency; the scale is
chosen so all leaves together cover a fixed fraction of the configured
canvas. Siblings are packed tangentially, every interior node is drawn
as the outline of its children's disks grown by a margin, and contour
fills step down in luminance with depth. All arithmetic is pure float
computation over deterministically ordered children, so a given tree
always serializes to identical bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from ..config import PipelineConfig
from ..hierarchy import ConceptNode, ConceptTree
from .clouds import WordCloudItem
from .contours import disk_union_outline
from .packing import pack_siblings

UNLABELED = "UNLABELED"
LABELED = "LABELED"
LABELED_WITH_CLOUD = "LABELED_WITH_CLOUD"


@dataclass(frozen=True)
class LayoutCircle:
    concept_id: str
    x: float
    y: float
    r: float
    color: str
    label_level: str


@dataclass(frozen=True)
class ContourPath:
    concept_id: str
    depth: int
    luminance: float
    path: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class BubbleLayout:
    document_id: str
    circles: tuple[LayoutCircle, ...]
    contours: tuple[ContourPath, ...]
    clouds: Mapping[str, Sequence[WordCloudItem]]
    bounds: tuple[float, float, float, float]  # x, y, width, height


class _Placed:
    __slots__ = ("node", "children", "rel", "rep_radius", "abs_x", "abs_y")

    def __init__(self, node: ConceptNode):
        self.node = node
        self.children: list[_Placed] = []
        self.rel = (0.0, 0.0)
        self.rep_radius = 0.0
        self.abs_x = 0.0
        self.abs_y = 0.0


def _radius_scale(tree: ConceptTree, config: PipelineConfig) -> float:
    total = 0
    stack = [tree.root]
    while stack:
        node = stack.pop()
        if node.children:
            stack.extend(node.children)
        else:
            total += node.frequency
    if total == 0:
        return 0.0
    return math.sqrt(config.area_fraction * config.canvas_size**2 / (math.pi * total))


def _build_placed(node: ConceptNode, k: float, margin: float) -> _Placed:
    placed = _Placed(node)
    if not node.children:
        placed.rep_radius = k * math.sqrt(node.frequency)
        return placed
    placed.children = [_build_placed(child, k, margin) for child in node.children]
    positions, enclosing_r = pack_siblings([c.rep_radius for c in placed.children])
    for child, position in zip(placed.children, positions):
        child.rel = position
    placed.rep_radius = enclosing_r + margin
    return placed


def _resolve_absolute(placed: _Placed, x: float, y: float) -> None:
    placed.abs_x = x
    placed.abs_y = y
    for child in placed.children:
        _resolve_absolute(child, x + child.rel[0], y + child.rel[1])


def _label_level(radius: float, config: PipelineConfig) -> str:
    if radius < config.label_min_radius:
        return UNLABELED
    if radius < config.cloud_min_radius:
        return LABELED
    return LABELED_WITH_CLOUD


def compute_layout(
    tree: ConceptTree, colors: Mapping[str, str], config: PipelineConfig
) -> BubbleLayout:
    """Geometry for one document's concept tree.

    A tree that is only the undetected root produces the empty layout:
    no circles, no contours, zero bounds. Word clouds are attached by
    the caller (they also need the document and the dictionary).
    """
    k = _radius_scale(tree, config)
    if k == 0.0 or not tree.root.children:
        return BubbleLayout(
            document_id=tree.document_id,
            circles=(),
            contours=(),
            clouds={},
            bounds=(0.0, 0.0, 0.0, 0.0),
        )
    margin = config.contour_margin
    root_placed = _build_placed(tree.root, k, margin)
    _resolve_absolute(root_placed, 0.0, 0.0)

    max_interior_depth = 0
    stack = [root_placed]
    interior: list[_Placed] = []
    while stack:
        current = stack.pop()
        if current.children:
            interior.append(current)
            max_interior_depth = max(max_interior_depth, current.node.depth)
            stack.extend(current.children)
    if max_interior_depth > 0:
        lum_step = min(config.lum_step, (config.lum_start - config.lum_floor) / max_interior_depth)
    else:
        lum_step = config.lum_step

    circles: list[LayoutCircle] = []
    contours: list[ContourPath] = []

    def walk(placed: _Placed, top_id: str) -> None:
        node = placed.node
        if node.depth == 1 and not node.is_self:
            top_id = node.concept_id
        if not placed.children:
            radius = k * math.sqrt(node.frequency)
            circles.append(
                LayoutCircle(
                    concept_id=node.concept_id,
                    x=placed.abs_x,
                    y=placed.abs_y,
                    r=radius,
                    color=colors[top_id],
                    label_level=_label_level(radius, config),
                )
            )
            return
        disks = [(c.abs_x, c.abs_y, c.rep_radius + margin) for c in placed.children]
        outline = disk_union_outline(disks)
        contours.append(
            ContourPath(
                concept_id=node.concept_id,
                depth=node.depth,
                luminance=config.lum_start - lum_step * node.depth,
                path=tuple(outline),
            )
        )
        for child in placed.children:
            walk(child, top_id)

    walk(root_placed, tree.root.concept_id)

    root_path = contours[0].path
    xs = [p[0] for p in root_path]
    ys = [p[1] for p in root_path]
    bounds = (min(xs), min(ys), max(xs) - min(xs), max(ys) - min(ys))
    return BubbleLayout(
        document_id=tree.document_id,
        circles=tuple(circles),
        contours=tuple(contours),
        clouds={},
        bounds=bounds,
    )


def attach_clouds(
    layout: BubbleLayout, clouds: Mapping[str, Sequence[WordCloudItem]]
) -> BubbleLayout:
    return replace(layout, clouds={cid: list(clouds[cid]) for cid in sorted(clouds)})


def layout_to_dict(layout: BubbleLayout) -> dict:
    """JSON-ready form. Floats are embedded at full precision: rounding
    would break both determinism checks and the geometric tolerances."""
    x, y, width, height = layout.bounds
    return {
        "document_id": layout.document_id,
        "bounds": {"x": x, "y": y, "width": width, "height": height},
        "circles": [
            {
                "id": c.concept_id,
                "x": c.x,
                "y": c.y,
                "r": c.r,
                "color": c.color,
                "label_level": c.label_level,
            }
            for c in layout.circles
        ],
        "contours": [
            {
                "id": contour.concept_id,
                "depth": contour.depth,
                "luminance": contour.luminance,
                "path": [[px, py] for px, py in contour.path],
            }
            for contour in layout.contours
        ],
        "clouds": {
            cid: [
                {"word": item.word, "weight": item.weight, "x": item.x, "y": item.y, "size": item.size}
                for item in items
            ]
            for cid, items in layout.clouds.items()
        },
    }


def serialize_layout(layout: BubbleLayout) -> str:
    return json.dumps(layout_to_dict(layout), ensure_ascii=False, separators=(",", ":"))
