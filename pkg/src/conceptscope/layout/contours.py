"""Contour outlines: the boundary of a union of margin-grown disks.

A parent's contour is the outline of its children's representation
disks, each enlarged by the contour margin. Packing keeps siblings
tangent, so the grown disks always overlap into a single connected
region; the exterior ring of that union is the contour polygon.
"""

from __future__ import annotations

from typing import Sequence

from shapely.geometry import Point
from shapely.ops import unary_union

QUAD_SEGS = 24  # 96 vertices per full circle keeps chord error far below the margin


def _signed_area(coords: list[tuple[float, float]]) -> float:
    area = 0.0
    for i, (x1, y1) in enumerate(coords):
        x2, y2 = coords[(i + 1) % len(coords)]
        area += x1 * y2 - x2 * y1
    return area / 2.0


def disk_union_outline(
    disks: Sequence[tuple[float, float, float]], quad_segs: int = QUAD_SEGS
) -> list[tuple[float, float]]:
    """Exterior ring of the union of disks (x, y, r) as a vertex list.

    The ring is normalized for byte-stable serialization: counter-
    clockwise orientation, starting at the lexicographically smallest
    vertex, closing vertex omitted.
    """
    geoms = [Point(x, y).buffer(r, quad_segs=quad_segs) for x, y, r in disks]
    merged = unary_union(geoms)
    if merged.geom_type != "Polygon":
        # tangency plus the margin should always fuse the disks; fall
        # back to the hull so containment of children still holds
        merged = merged.convex_hull
    coords = [(float(x), float(y)) for x, y in merged.exterior.coords[:-1]]
    if _signed_area(coords) < 0:
        coords.reverse()
    start = min(range(len(coords)), key=lambda i: coords[i])
    return coords[start:] + coords[:start]
