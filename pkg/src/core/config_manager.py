"""Configuration manager for the YAML config file and environment overrides."""

import os
import logging
from pathlib import Path
from typing import Dict, Optional

from dotenv import load_dotenv
from ruamel.yaml import YAML

from core.settings import EnumerationConfig, FmoConfig

logger = logging.getLogger(__name__)

# Load C1P_LAB_* variables from .env
load_dotenv()

CONFIG_DIR = Path(__file__).parent.parent.parent / "config"
CONFIG_FILE = CONFIG_DIR / "config.yaml"

LIMIT_ENV_VAR = "C1P_LAB_LIMIT"

yaml = YAML(typ="safe")


class ConfigManager:
    """Configuration manager for application settings."""

    CONFIG_FILE = str(CONFIG_FILE)
    _config_cache: Optional[Dict] = None

    @classmethod
    def _load_config(cls) -> Dict:
        """Load the unified configuration file."""
        if cls._config_cache is not None:
            return cls._config_cache

        try:
            if os.path.exists(cls.CONFIG_FILE):
                with open(cls.CONFIG_FILE, "r", encoding="utf-8") as f:
                    config = yaml.load(f) or {}
                if isinstance(config, dict):
                    cls._config_cache = config
                    return config
                logger.warning(f"Ignoring configuration file {cls.CONFIG_FILE}: top level is not a mapping")
            else:
                logger.debug(f"No configuration file at {cls.CONFIG_FILE}, using defaults")
        except Exception as e:
            logger.error(f"Error loading configuration: {e}")
        cls._config_cache = {}
        return cls._config_cache

    @classmethod
    def reset_cache(cls) -> None:
        """Forget the cached configuration so the next access rereads the file."""
        cls._config_cache = None

    @classmethod
    def get_app_config(cls) -> Dict:
        config = cls._load_config()
        return config.get("app", {"name": "c1p-lab", "version": "0.1.0"})

    @classmethod
    def get_logging_config(cls) -> Dict:
        """Get logging configuration."""
        config = cls._load_config()
        return config.get("logging", {
            "level": "WARNING"
        })

    @classmethod
    def get_enumeration_config(cls) -> EnumerationConfig:
        """Get enumeration budgets, falling back to defaults for bad values."""
        section = cls._load_config().get("enumeration") or {}
        enumeration = EnumerationConfig(
            default_limit=section.get("default_limit", EnumerationConfig.default_limit),
            front_max_edges=section.get("front_max_edges", EnumerationConfig.front_max_edges),
        )
        if not enumeration.is_valid:
            logger.warning(f"Invalid enumeration configuration {section}, using defaults")
            return EnumerationConfig()
        return enumeration

    @classmethod
    def get_fmo_config(cls) -> FmoConfig:
        """Get FMO solver defaults."""
        section = cls._load_config().get("fmo") or {}
        fmo = FmoConfig(
            default_engine=section.get("default_engine", FmoConfig.default_engine),
            max_universe=section.get("max_universe", FmoConfig.max_universe),
        )
        if not fmo.is_valid:
            logger.warning(f"Invalid fmo configuration {section}, using defaults")
            return FmoConfig()
        return fmo

    @classmethod
    def get_default_limit(cls) -> int:
        """Default enumeration limit; ``C1P_LAB_LIMIT`` overrides the config file."""
        configured = cls.get_enumeration_config().default_limit
        raw = os.getenv(LIMIT_ENV_VAR)
        if raw is None or not raw.strip():
            return configured
        try:
            limit = int(raw.strip().replace("_", ""))
        except ValueError:
            logger.warning(f"{LIMIT_ENV_VAR}={raw!r} is not an integer, using {configured:,}")
            return configured
        if limit <= 0:
            logger.warning(f"{LIMIT_ENV_VAR}={raw!r} is not positive, using {configured:,}")
            return configured
        logger.debug(f"Enumeration limit overridden by {LIMIT_ENV_VAR}: {limit:,}")
        return limit

