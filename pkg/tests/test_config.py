"""
Tests for length parsing and the YAML configuration loader.
"""

import os
import shutil
import tempfile
from pathlib import Path

import pytest

# Add parent directory to path for imports
import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

from models.config import DEFAULT_SEED, EXHAUSTIVE_CAP, Config, load_config_file, parse_lengths


EXAMPLE_CONFIG = str(Path(__file__).parent.parent / "config" / "example_config.yaml")


class TestParseLengths:
    """Length specifications."""

    @pytest.mark.parametrize("spec, expected", [
        ("2..5", [2, 3, 4, 5]),
        ("10,20,30", [10, 20, 30]),
        ("2..4,8", [2, 3, 4, 8]),
        ("5, 3, 5", [3, 5]),
        (7, [7]),
        (["1..3", 6], [1, 2, 3, 6]),
    ])
    def test_valid(self, spec, expected):
        assert parse_lengths(spec) == expected

    @pytest.mark.parametrize("spec", ["", "0..3", "5..2", "a", "1..b", "-1", True, 3.5, [0]])
    def test_invalid(self, spec):
        with pytest.raises(ValueError):
            parse_lengths(spec)


class TestLoadConfigFile:
    """YAML configuration loading."""

    def setup_method(self):
        """Set up test environment."""
        self.temp_dir = tempfile.mkdtemp()

    def teardown_method(self):
        """Clean up test environment."""
        if os.path.exists(self.temp_dir):
            shutil.rmtree(self.temp_dir)

    def write(self, content: str) -> str:
        path = os.path.join(self.temp_dir, "config.yaml")
        with open(path, 'w') as f:
            f.write(content)
        return path

    def test_no_file_gives_defaults(self):
        config = load_config_file(None)
        assert config == Config()
        assert config.experiment.seed == DEFAULT_SEED
        assert config.experiment.exhaustive_cap == EXHAUSTIVE_CAP
        assert config.oracle.alphabet == '01'

    def test_example_config(self):
        config = load_config_file(EXAMPLE_CONFIG)
        assert config.experiment.lengths == list(range(2, 9))
        assert config.experiment.algorithms == ['skip', 'first-vector']
        assert config.oracle.lengths == list(range(1, 13))

    def test_partial_sections(self):
        config = load_config_file(self.write("experiment:\n  seed: 42\n  lengths: 10,20\n"))
        assert config.experiment.seed == 42
        assert config.experiment.lengths == [10, 20]
        assert config.experiment.trials == Config().experiment.trials
        assert config.oracle == Config().oracle

    def test_oracle_section(self):
        config = load_config_file(self.write("oracle:\n  alphabet: acgt\n  trials: 7\n"))
        assert config.oracle.alphabet == 'acgt'
        assert config.oracle.trials == 7

    def test_empty_file(self):
        assert load_config_file(self.write("")) == Config()

    def test_missing_file(self):
        with pytest.raises(ValueError, match="not found"):
            load_config_file(os.path.join(self.temp_dir, "missing.yaml"))

    def test_invalid_yaml(self):
        with pytest.raises(ValueError, match="invalid YAML"):
            load_config_file(self.write("experiment: [unclosed\n"))

    def test_not_a_mapping(self):
        with pytest.raises(ValueError, match="dictionary"):
            load_config_file(self.write("- 1\n- 2\n"))

    @pytest.mark.parametrize("content", [
        "experiment: 3\n",
        "experiment:\n  seed: many\n",
        "experiment:\n  lengths: 0..4\n",
        "experiment:\n  workers: 0\n",
        "experiment:\n  exhaustive_cap: 20\n",
    ])
    def test_invalid_values(self, content):
        with pytest.raises(ValueError, match="Invalid configuration"):
            load_config_file(self.write(content))
