"""Isoluminant palette generation in CIELAB.

Colors for top-level branches are picked on a constant-lightness circle
in LCh (the cylindrical form of CIELAB), evenly spaced in hue, then
converted to sRGB. When a requested chroma falls outside the sRGB gamut
the chroma alone is bisected down until the color fits, so the assigned
lightness survives conversion for every hue.
"""

from __future__ import annotations

import math

from ..config import PipelineConfig

# D65 reference white
_XN, _YN, _ZN = 0.95047, 1.0, 1.08883

_XYZ_TO_RGB = (
    (3.2404542, -1.5371385, -0.4985314),
    (-0.9692660, 1.8760108, 0.0415560),
    (0.0556434, -0.2040259, 1.0572252),
)


def _f_inv(t: float) -> float:
    delta = 6.0 / 29.0
    if t > delta:
        return t * t * t
    return 3.0 * delta * delta * (t - 4.0 / 29.0)


def lab_to_linear_rgb(lightness: float, a: float, b: float) -> tuple[float, float, float]:
    fy = (lightness + 16.0) / 116.0
    fx = fy + a / 500.0
    fz = fy - b / 200.0
    x = _XN * _f_inv(fx)
    y = _YN * _f_inv(fy)
    z = _ZN * _f_inv(fz)
    return tuple(row[0] * x + row[1] * y + row[2] * z for row in _XYZ_TO_RGB)


def _gamma(c: float) -> float:
    if c <= 0.0031308:
        return 12.92 * c
    return 1.055 * c ** (1.0 / 2.4) - 0.055


def _in_gamut(linear: tuple[float, float, float]) -> bool:
    eps = 1e-9
    return all(-eps <= c <= 1.0 + eps for c in linear)


def lch_to_hex(lightness: float, chroma: float, hue_deg: float) -> str:
    """sRGB hex for an LCh color; chroma is reduced (never lightness or
    hue) when the color falls outside the gamut."""
    hue = math.radians(hue_deg)
    cos_h, sin_h = math.cos(hue), math.sin(hue)

    def linear(c: float) -> tuple[float, float, float]:
        return lab_to_linear_rgb(lightness, c * cos_h, c * sin_h)

    rgb = linear(chroma)
    if not _in_gamut(rgb):
        lo, hi = 0.0, chroma
        for _ in range(48):
            mid = (lo + hi) / 2.0
            if _in_gamut(linear(mid)):
                lo = mid
            else:
                hi = mid
        rgb = linear(lo)
    channels = [min(1.0, max(0.0, _gamma(min(1.0, max(0.0, c))))) for c in rgb]
    return "#{:02x}{:02x}{:02x}".format(*(round(c * 255.0) for c in channels))


def _collect_top_level_ids(trees) -> list[str]:
    """Distinct top-level ancestors of detected concepts, across trees.

    The depth-1 node on a detected node's path is its branch; detected
    nodes at depth <= 1 (a detected root, or a self-leaf directly under
    the root) belong to the root itself.
    """
    ids: set[str] = set()

    def walk(node, top_id: str, root_id: str) -> None:
        current_top = node.concept_id if node.depth == 1 and not node.is_self else top_id
        if node.detected:
            ids.add(current_top)
        for child in node.children:
            walk(child, current_top, root_id)

    for tree in trees:
        walk(tree.root, tree.root.concept_id, tree.root.concept_id)
    return sorted(ids)


def assign_colors(trees, config: PipelineConfig) -> dict[str, str]:
    """One stable hex color per top-level branch across all trees.

    Keyed by concept id, so a branch shared by several documents gets
    the same color in every layout.
    """
    top_ids = _collect_top_level_ids(trees)
    if not top_ids:
        return {}
    step = 360.0 / len(top_ids)
    assignment: dict[str, str] = {}
    seen: set[str] = set()
    for i, concept_id in enumerate(top_ids):
        hue = (config.hue_offset_deg + i * step) % 360.0
        hex_color = lch_to_hex(config.color_lightness, config.color_chroma, hue)
        bumps = 0
        while hex_color in seen:  # 8-bit rounding can collide at tight spacing
            bumps += 1
            hex_color = lch_to_hex(
                config.color_lightness, config.color_chroma, (hue + bumps * 0.37) % 360.0
            )
        seen.add(hex_color)
        assignment[concept_id] = hex_color
    return assignment
