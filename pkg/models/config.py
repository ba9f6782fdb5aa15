"""
Configuration data models for the LCAF toolkit.

This module defines the data structures for the optional YAML configuration
file holding experiment and oracle defaults, and the loader for it.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union
import yaml


DEFAULT_SEED = 2014
DEFAULT_TRIALS = 1000
EXHAUSTIVE_CAP = 10
SAMPLED_BINARY_CAP = 16
SEED_ENV_VAR = 'LCAF_SEED'


def parse_lengths(spec: Union[str, int, List[Any]]) -> List[int]:
    """
    Parse a lengths specification into a sorted list without repeats.

    Accepts "2..10", "10,20,30", mixes such as "2..5,8", a single integer
    or a list of any of these.

    Raises:
        ValueError: On malformed items or non-positive lengths
    """
    if isinstance(spec, bool):
        raise ValueError(f"Invalid lengths specification: {spec!r}")
    if isinstance(spec, int):
        items: List[Any] = [spec]
    elif isinstance(spec, str):
        items = [item for item in spec.replace(' ', '').split(',') if item]
    elif isinstance(spec, list):
        items = spec
    else:
        raise ValueError(f"Invalid lengths specification: {spec!r}")

    lengths = set()
    for item in items:
        if isinstance(item, int) and not isinstance(item, bool):
            lengths.add(item)
            continue
        text = str(item)
        try:
            if '..' in text:
                low_text, high_text = text.split('..')
                low, high = int(low_text), int(high_text)
                if low > high:
                    raise ValueError(f"Empty length range: {text}")
                lengths.update(range(low, high + 1))
            else:
                lengths.add(int(text))
        except ValueError as e:
            raise ValueError(f"Invalid lengths item '{text}': {e}")

    if not lengths:
        raise ValueError("At least one length is required")
    if min(lengths) < 1:
        raise ValueError(f"Lengths must be positive, got {min(lengths)}")
    return sorted(lengths)


@dataclass
class ExperimentConfig:
    """Defaults for the experiment subcommand."""
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    lengths: List[int] = field(default_factory=lambda: list(range(2, 9)))
    algorithms: List[str] = field(default_factory=lambda: ['skip', 'first-vector'])
    exhaustive_cap: int = EXHAUSTIVE_CAP
    sampled_binary_cap: int = SAMPLED_BINARY_CAP
    workers: int = 1


@dataclass
class OracleConfig:
    """Defaults for the oracle-diff subcommand."""
    seed: int = DEFAULT_SEED
    trials: int = 500
    lengths: List[int] = field(default_factory=lambda: list(range(1, 13)))
    alphabet: str = '01'


@dataclass
class Config:
    """Main configuration data structure."""
    experiment: ExperimentConfig = field(default_factory=ExperimentConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Config':
        """Create Config from dictionary data."""
        experiment = ExperimentConfig()
        if 'experiment' in data:
            section = data['experiment'] or {}
            if not isinstance(section, dict):
                raise ValueError("'experiment' section must be a mapping")
            experiment = ExperimentConfig(
                seed=int(section.get('seed', DEFAULT_SEED)),
                trials=int(section.get('trials', DEFAULT_TRIALS)),
                lengths=parse_lengths(section['lengths']) if 'lengths' in section else experiment.lengths,
                algorithms=list(section.get('algorithms', experiment.algorithms)),
                exhaustive_cap=int(section.get('exhaustive_cap', EXHAUSTIVE_CAP)),
                sampled_binary_cap=int(section.get('sampled_binary_cap', SAMPLED_BINARY_CAP)),
                workers=int(section.get('workers', 1))
            )

        oracle = OracleConfig()
        if 'oracle' in data:
            section = data['oracle'] or {}
            if not isinstance(section, dict):
                raise ValueError("'oracle' section must be a mapping")
            oracle = OracleConfig(
                seed=int(section.get('seed', DEFAULT_SEED)),
                trials=int(section.get('trials', oracle.trials)),
                lengths=parse_lengths(section['lengths']) if 'lengths' in section else oracle.lengths,
                alphabet=str(section.get('alphabet', oracle.alphabet))
            )

        if experiment.workers < 1:
            raise ValueError(f"experiment.workers must be at least 1, got {experiment.workers}")
        if experiment.exhaustive_cap > experiment.sampled_binary_cap:
            raise ValueError("experiment.exhaustive_cap cannot exceed experiment.sampled_binary_cap")

        return cls(experiment=experiment, oracle=oracle)


def load_config_file(file_path: Optional[str]) -> Config:
    """
    Load the YAML configuration file, or built-in defaults when no path is given.

    Raises:
        ValueError: If the file is missing, unreadable or malformed
    """
    from core.file_validator import FileValidator, FileErrorType

    if not file_path:
        return Config()

    content, errors = FileValidator.safe_file_read(file_path, purpose="Configuration")
    if errors:
        error = errors[0]
        if error.error_type == FileErrorType.FILE_NOT_FOUND:
            raise ValueError(f"Configuration file not found: {file_path}")
        raise ValueError(f"Configuration file error: {error.message}")

    try:
        data = yaml.safe_load(content)
    except yaml.YAMLError as e:
        raise ValueError(f"Configuration file contains invalid YAML: {str(e)}")

    if data is None:
        return Config()
    if not isinstance(data, dict):
        raise ValueError("Configuration file must contain a YAML dictionary")

    try:
        return Config.from_dict(data)
    except (TypeError, ValueError) as e:
        raise ValueError(f"Invalid configuration: {e}")
