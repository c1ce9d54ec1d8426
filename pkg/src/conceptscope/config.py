"""Pipeline configuration and the key=value config file loader.

Every knob the pipeline exposes lives on one frozen dataclass so that a
single object can be threaded through matching, layout, and serving.
File keys use dotted names (e.g. ``ngram.min_count``); the full list is
documented in ``conceptscope.conf`` at the repository root.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import ConfigError


@dataclass(frozen=True)
class PipelineConfig:
    # collocation model
    ngram_min_count: int = 2
    ngram_pmi_threshold: float = 3.0

    # concept matching
    matcher_threshold: float = 0.7
    fuzzy_enabled: bool = True

    # external lookup service
    service_endpoint: str = "https://lookup.dbpedia.org/api/search"
    service_max_results: int = 5
    service_rate_limit_per_sec: float = 1.0
    service_live: bool = False

    # layout geometry
    canvas_size: float = 1000.0
    area_fraction: float = 0.3
    contour_margin: float = 6.0
    lum_start: float = 92.0
    lum_step: float = 8.0
    lum_floor: float = 52.0
    color_lightness: float = 70.0
    color_chroma: float = 40.0
    hue_offset_deg: float = 30.0

    # labeling thresholds (layout units)
    label_min_radius: float = 14.0
    cloud_min_radius: float = 40.0
    cloud_top_k: int = 10
    cloud_min_count: int = 1

    def __post_init__(self) -> None:
        if not 0.0 <= self.matcher_threshold <= 1.0:
            raise ConfigError(
                f"matcher.threshold must be in [0, 1], got {self.matcher_threshold}"
            )
        if self.ngram_min_count < 1:
            raise ConfigError("ngram.min_count must be >= 1")
        if self.canvas_size <= 0 or not 0.0 < self.area_fraction <= 1.0:
            raise ConfigError("layout.canvas_size and layout.area_fraction must be positive")


# dotted file key -> dataclass field
CONFIG_KEYS = {
    "ngram.min_count": "ngram_min_count",
    "ngram.pmi_threshold": "ngram_pmi_threshold",
    "matcher.threshold": "matcher_threshold",
    "matcher.fuzzy_enabled": "fuzzy_enabled",
    "service.endpoint": "service_endpoint",
    "service.max_results": "service_max_results",
    "service.rate_limit_per_sec": "service_rate_limit_per_sec",
    "service.live": "service_live",
    "layout.canvas_size": "canvas_size",
    "layout.area_fraction": "area_fraction",
    "layout.contour_margin": "contour_margin",
    "layout.lum_start": "lum_start",
    "layout.lum_step": "lum_step",
    "layout.lum_floor": "lum_floor",
    "layout.color_lightness": "color_lightness",
    "layout.color_chroma": "color_chroma",
    "layout.hue_offset_deg": "hue_offset_deg",
    "layout.label_min_radius": "label_min_radius",
    "layout.cloud_min_radius": "cloud_min_radius",
    "cloud.top_k": "cloud_top_k",
    "cloud.min_count": "cloud_min_count",
}

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


def _coerce(key: str, raw: str, target_type: type):
    raw = raw.strip()
    if target_type is bool:
        low = raw.casefold()
        if low in _TRUE:
            return True
        if low in _FALSE:
            return False
        raise ConfigError(f"{key}: expected a boolean, got {raw!r}")
    try:
        return target_type(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: expected {target_type.__name__}, got {raw!r}") from exc


def parse_config_text(text: str, base: PipelineConfig | None = None) -> PipelineConfig:
    """Parse ``key = value`` lines; blank lines and # comments ignored."""
    base = base if base is not None else PipelineConfig()
    types = {f.name: f.type for f in fields(PipelineConfig)}
    updates = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected key=value, got {stripped!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        field_name = CONFIG_KEYS.get(key)
        if field_name is None:
            raise ConfigError(f"line {lineno}: unknown configuration key {key!r}")
        field_type = {"int": int, "float": float, "bool": bool, "str": str}[
            types[field_name] if isinstance(types[field_name], str) else types[field_name].__name__
        ]
        updates[field_name] = _coerce(key, value, field_type)
    return replace(base, **updates)


def load_config(path: str | Path | None = None, base: PipelineConfig | None = None) -> PipelineConfig:
    """Load configuration from a file, or return defaults when path is None."""
    if path is None:
        return base if base is not None else PipelineConfig()
    return parse_config_text(Path(path).read_text("utf-8"), base=base)
