from __future__ import annotations

import pytest

from conceptscope import ConfigError, PipelineConfig, load_config, parse_config_text
from conceptscope.config import CONFIG_KEYS


class TestDefaults:
    def test_defaults_are_sane(self):
        config = PipelineConfig()
        assert config.matcher_threshold == 0.7
        assert config.fuzzy_enabled is True
        assert config.service_live is False
        assert config.canvas_size == 1000.0
        assert config.area_fraction == 0.3

    def test_every_dotted_key_maps_to_a_real_field(self):
        config = PipelineConfig()
        for field_name in CONFIG_KEYS.values():
            getattr(config, field_name)

    def test_validation(self):
        with pytest.raises(ConfigError):
            PipelineConfig(matcher_threshold=1.5)
        with pytest.raises(ConfigError):
            PipelineConfig(ngram_min_count=0)
        with pytest.raises(ConfigError):
            PipelineConfig(area_fraction=0.0)
        with pytest.raises(ConfigError):
            PipelineConfig(canvas_size=-1.0)


class TestParseText:
    def test_values_and_comments(self):
        config = parse_config_text(
            "# tuning\n"
            "matcher.threshold = 0.85\n"
            "\n"
            "ngram.min_count=3\n"
            "matcher.fuzzy_enabled = off\n"
            "service.endpoint = http://localhost:9999/lookup\n"
        )
        assert config.matcher_threshold == 0.85
        assert config.ngram_min_count == 3
        assert config.fuzzy_enabled is False
        assert config.service_endpoint == "http://localhost:9999/lookup"
        # untouched knobs keep their defaults
        assert config.canvas_size == 1000.0

    def test_boolean_spellings(self):
        for raw, expected in [("true", True), ("YES", True), ("1", True),
                              ("false", False), ("Off", False), ("0", False)]:
            config = parse_config_text(f"service.live = {raw}")
            assert config.service_live is expected

    def test_base_config_is_overlaid_not_reset(self):
        base = parse_config_text("matcher.threshold = 0.9")
        layered = parse_config_text("ngram.min_count = 5", base=base)
        assert layered.matcher_threshold == 0.9
        assert layered.ngram_min_count == 5

    def test_unknown_key_reports_line(self):
        with pytest.raises(ConfigError, match="line 2.*mystery"):
            parse_config_text("matcher.threshold = 0.7\nmystery.knob = 1\n")

    def test_missing_equals_sign(self):
        with pytest.raises(ConfigError, match="key=value"):
            parse_config_text("matcher.threshold 0.7\n")

    def test_bad_number(self):
        with pytest.raises(ConfigError, match="ngram.min_count"):
            parse_config_text("ngram.min_count = many\n")

    def test_bad_boolean(self):
        with pytest.raises(ConfigError, match="boolean"):
            parse_config_text("matcher.fuzzy_enabled = maybe\n")

    def test_out_of_range_value_rejected_at_parse(self):
        with pytest.raises(ConfigError):
            parse_config_text("matcher.threshold = 2.0\n")


class TestLoadConfig:
    def test_none_returns_defaults(self):
        assert load_config(None) == PipelineConfig()

    def test_reads_file(self, tmp_path):
        path = tmp_path / "pipeline.conf"
        path.write_text("layout.canvas_size = 640\nlayout.area_fraction = 0.25\n", "utf-8")
        config = load_config(path)
        assert config.canvas_size == 640.0
        assert config.area_fraction == 0.25

    def test_missing_file_raises(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "absent.conf")
