"""
GenOsc Configuration System
"""
import logging
import os
import yaml
from pathlib import Path
from typing import Dict, Any, Optional

logger = logging.getLogger(__name__)

# Optional config file, looked up in the working directory
DEFAULT_CONFIG_FILE = "genosc.yaml"


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={value!r}")
        return default


def _env_flag(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Configuration management for GenOsc"""

    # Truncation Settings
    MAX_DIM: int = 512  # hard cap on Fock-space truncations (env OSC_MAX_DIM)
    TAIL_TOL: float = 1e-12  # coherent-state tail bound used to pick dim
    WAVEFUNCTION_TAIL_TOL: float = 1e-30  # squared tail for pointwise sums sum c_n Psi_n(x)

    # Series Settings
    SERIES_REL_TOL: float = 1e-16
    SERIES_MAX_TERMS: int = 400000

    # Quadrature Settings
    QUADRATURE_NODES: int = 200  # Gauss nodes for orthonormality and moments
    UNITY_PANEL_NODES: int = 32  # Gauss-Legendre nodes per radial panel
    UNITY_R_MIN: float = 2.0 ** -24  # innermost radial panel edge
    UNITY_EDGE_FRACTION: float = 0.99  # finite disks are cut where 2|z|^2 reaches this
    UNITY_CONVERGENCE_TOL: float = 1e-8  # allowed change of D_n under node doubling

    # Verification Settings
    DEFAULT_TOL: float = 1e-8
    WORKERS: int = 4

    # Debug / UI Settings
    VERBOSE_LOGGING: bool = False
    USE_COLOR: bool = True

    @classmethod
    def load_from_file(cls, config_path: str = DEFAULT_CONFIG_FILE) -> bool:
        """
        Load configuration from YAML file

        Args:
            config_path: Path of the YAML file, relative to the working directory

        Returns:
            True if a file was found and applied
        """
        config_file = Path(config_path)
        if not config_file.exists():
            return False
        with open(config_file, 'r') as f:
            config_data = yaml.safe_load(f)
        if config_data:
            cls._update_from_dict(config_data)
        return True

    @classmethod
    def load_from_env(cls) -> None:
        """Apply environment overrides (they win over the YAML file)"""
        cls.MAX_DIM = _env_int("OSC_MAX_DIM", cls.MAX_DIM)
        cls.WORKERS = max(1, _env_int("OSC_WORKERS", cls.WORKERS))
        cls.VERBOSE_LOGGING = _env_flag("OSC_VERBOSE", cls.VERBOSE_LOGGING)
        if os.getenv("NO_COLOR") is not None:
            cls.USE_COLOR = False

    @classmethod
    def _update_from_dict(cls, config_dict: Dict[str, Any]) -> None:
        """Update config from dictionary"""
        for key, value in config_dict.items():
            attr_name = key.upper()
            if hasattr(cls, attr_name):
                setattr(cls, attr_name, value)
            else:
                logger.warning(f"Unknown config key ignored: {key}")

    @classmethod
    def to_dict(cls) -> Dict[str, Any]:
        """Export configuration as dictionary"""
        return {
            key.lower(): value
            for key, value in vars(cls).items()
            if not key.startswith('_') and key.isupper()
        }

    @classmethod
    def to_yaml(cls) -> str:
        """Render current configuration as YAML text"""
        return yaml.safe_dump(cls.to_dict(), default_flow_style=False, sort_keys=True)

    @classmethod
    def save_to_file(cls, config_path: Optional[str] = None) -> Path:
        """Save current configuration to YAML file"""
        config_file = Path(config_path or DEFAULT_CONFIG_FILE)
        with open(config_file, 'w') as f:
            f.write(cls.to_yaml())
        return config_file


# Try to load config from file if it exists
try:
    Config.load_from_file()
except Exception as e:
    logger.warning(f"Could not load config file: {e}; using default configuration")

Config.load_from_env()
