import os
import logging
from typing import Any, Dict, Optional

from dotenv import dotenv_values, load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


class Config:
    MAX_COSETS = int(os.getenv('SURGERY_MAX_COSETS', '100000'))
    HOM_BUDGET = int(os.getenv('SURGERY_HOM_BUDGET', '10000000'))
    HOM_WORKERS = int(os.getenv('SURGERY_HOM_WORKERS', '1'))

    LEVEL_TOL = float(os.getenv('SURGERY_LEVEL_TOL', '1e-9'))
    GRADIENT_TOL = float(os.getenv('SURGERY_GRADIENT_TOL', '1e-6'))
    SPHERE_TOL = float(os.getenv('SURGERY_SPHERE_TOL', '1e-9'))
    POLE_TOL = float(os.getenv('SURGERY_POLE_TOL', '1e-6'))
    NEWTON_MAX_ITER = int(os.getenv('SURGERY_NEWTON_MAX_ITER', '50'))
    MAX_POINTS = int(os.getenv('SURGERY_MAX_POINTS', '20000'))
    SAMPLE_WORKERS = int(os.getenv('SURGERY_SAMPLE_WORKERS', '1'))

    SEED = int(os.getenv('SURGERY_SEED', '0'))
    LOG_LEVEL = os.getenv('SURGERY_LOG_LEVEL', 'WARNING').upper()

    # key in a config file / environment -> (attribute, parser)
    KEYS = {
        'SURGERY_MAX_COSETS': ('MAX_COSETS', int),
        'SURGERY_HOM_BUDGET': ('HOM_BUDGET', int),
        'SURGERY_HOM_WORKERS': ('HOM_WORKERS', int),
        'SURGERY_LEVEL_TOL': ('LEVEL_TOL', float),
        'SURGERY_GRADIENT_TOL': ('GRADIENT_TOL', float),
        'SURGERY_SPHERE_TOL': ('SPHERE_TOL', float),
        'SURGERY_POLE_TOL': ('POLE_TOL', float),
        'SURGERY_NEWTON_MAX_ITER': ('NEWTON_MAX_ITER', int),
        'SURGERY_MAX_POINTS': ('MAX_POINTS', int),
        'SURGERY_SAMPLE_WORKERS': ('SAMPLE_WORKERS', int),
        'SURGERY_SEED': ('SEED', int),
        'SURGERY_LOG_LEVEL': ('LOG_LEVEL', str.upper),
    }

    @classmethod
    def load_file(cls, path: str) -> Dict[str, Any]:
        """
        Apply a key=value config file on top of the environment defaults.

        Args:
            path: Path to the config file (same syntax as a .env file)

        Returns:
            The attributes that were changed
        """
        if not os.path.exists(path):
            raise ValueError(f"Config file not found: '{path}'")

        values = dotenv_values(path)
        unknown = [key for key in values if key not in cls.KEYS]
        if unknown:
            raise ValueError(f"Unknown config keys in '{path}': {', '.join(sorted(unknown))}")

        changed = {}
        for key, raw in values.items():
            attribute, parse = cls.KEYS[key]
            try:
                changed[attribute] = parse(raw)
            except (TypeError, ValueError):
                raise ValueError(f"Invalid value for {key}: '{raw}'")

        cls.override(**changed)
        logger.debug(f"Loaded config file {path}: {changed}")
        return changed

    @classmethod
    def override(cls, **values: Optional[Any]) -> None:
        """Set attributes from command-line flags; None leaves the current value"""
        for attribute, value in values.items():
            if value is None:
                continue
            if not hasattr(cls, attribute):
                raise ValueError(f"Unknown config attribute: {attribute}")
            setattr(cls, attribute, value)
        cls.validate()

    @classmethod
    def snapshot(cls) -> Dict[str, Any]:
        return {attribute: getattr(cls, attribute) for attribute, _ in cls.KEYS.values()}

    @classmethod
    def validate(cls):
        problems = []

        for name in ('MAX_COSETS', 'HOM_BUDGET', 'HOM_WORKERS', 'NEWTON_MAX_ITER', 'MAX_POINTS', 'SAMPLE_WORKERS'):
            if getattr(cls, name) < 1:
                problems.append(f"{name} must be >= 1")

        for name in ('LEVEL_TOL', 'GRADIENT_TOL', 'SPHERE_TOL', 'POLE_TOL'):
            if not 0 < getattr(cls, name) < 1:
                problems.append(f"{name} must lie in (0, 1)")

        if cls.SEED < 0:
            problems.append("SEED must be >= 0")

        if cls.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            problems.append(f"LOG_LEVEL '{cls.LOG_LEVEL}' is not a logging level")

        if problems:
            raise ValueError(f"Invalid configuration: {'; '.join(problems)}")

        return True
