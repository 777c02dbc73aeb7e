"""
Configuration settings for the monomial_stci package.
"""

import os
from typing import Dict, Any, List

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    """Read an integer environment variable, falling back to the default."""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _env_primes(default: List[int]) -> List[int]:
    """Read STCI_PRIMES as a comma-separated list of integers."""
    raw = os.getenv("STCI_PRIMES")
    if not raw:
        return list(default)
    try:
        return [int(p) for p in raw.split(",") if p.strip()]
    except ValueError:
        return list(default)


# Finite-field oracle
ORACLE_CONFIG: Dict[str, Any] = {
    "primes": _env_primes([5, 7, 11]),
    "max_ext": _env_int("STCI_MAX_EXT", 6),  # K
    "ext_cap": _env_int("STCI_EXT_CAP", 12),  # hard cap for auto-escalation
    "auto_escalate": os.getenv("STCI_AUTO_ESCALATE", "true").lower() == "true",
    "brute_force_limit": _env_int("STCI_BRUTE_FORCE_LIMIT", 1024),  # largest q walked element by element
}

# Rendering
RENDER_CONFIG: Dict[str, Any] = {
    "curve_variables": ["x0", "x1", "x2", "x3"],
    "matrix_variables": ["a", "b", "c", "d"],
    "power_symbol": "^",
    "times_symbol": "*",
    "json_indent": 2,
}

# Cache Configuration
CACHE_CONFIG: Dict[str, Any] = {
    "field_cache_size": 64,
    "points_cache_size": 32,
}

# Process exit codes
EXIT_CODES: Dict[str, int] = {
    "pass": 0,
    "failure": 1,
    "input_error": 2,
    "inconclusive": 3,
}

# Application Configuration
APP_CONFIG: Dict[str, Any] = {
    "version": "1.0.0",
    "environment": os.getenv("STCI_ENV", "production"),
    "debug": os.getenv("DEBUG", "false").lower() == "true",
    "log_level": os.getenv("STCI_LOG_LEVEL", "WARNING").upper(),
}


def get_env_config() -> Dict[str, Any]:
    """Get environment-specific configuration."""
    env = os.getenv("STCI_ENV", "production")

    configs = {
        "development": {
            "debug": True,
            "log_level": "INFO",
        },
        "staging": {
            "debug": False,
            "log_level": "WARNING",
        },
        "production": {
            "debug": False,
            "log_level": "WARNING",
        },
    }

    return configs.get(env, configs["production"])
