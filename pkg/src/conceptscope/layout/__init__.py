"""Bubble treemap layout: packing, contours, colors, and word clouds."""

from .clouds import WordCloudItem, build_word_clouds
from .colors import assign_colors, lch_to_hex
from .contours import disk_union_outline
from .engine import (
    LABELED,
    LABELED_WITH_CLOUD,
    UNLABELED,
    BubbleLayout,
    ContourPath,
    LayoutCircle,
    attach_clouds,
    compute_layout,
    layout_to_dict,
    serialize_layout,
)
from .packing import Circle, enclose, pack_siblings

__all__ = [
    "BubbleLayout",
    "Circle",
    "ContourPath",
    "LayoutCircle",
    "LABELED",
    "LABELED_WITH_CLOUD",
    "UNLABELED",
    "WordCloudItem",
    "assign_colors",
    "attach_clouds",
    "build_word_clouds",
    "compute_layout",
    "disk_union_outline",
    "enclose",
    "layout_to_dict",
    "lch_to_hex",
    "pack_siblings",
    "serialize_layout",
]
