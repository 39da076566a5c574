#!/usr/bin/env python3
"""
Configuration module for the Fueter-Funk-Hecke engine.
Reads environment variables and provides default values.
"""

import os
from pathlib import Path
from typing import Union


def get_bool_env(key: str, default: bool = False) -> bool:
    """Get boolean environment variable."""
    value = os.getenv(key, str(default)).lower()
    return value in ('true', '1', 'yes', 'on')


def get_int_env(key: str, default: int) -> int:
    """Get integer environment variable."""
    try:
        return int(os.getenv(key, str(default)))
    except ValueError:
        return default


def get_float_env(key: str, default: float) -> float:
    """Get float environment variable."""
    try:
        return float(os.getenv(key, str(default)))
    except ValueError:
        return default


def load_env_file(path: Union[str, Path, None] = None) -> bool:
    """Load a .env file into the process environment (server launcher only)."""
    try:
        from dotenv import load_dotenv
    except ImportError:
        print("⚠️  python-dotenv not installed. Using system environment variables only.")
        return False
    env_path = Path(path) if path else Path.cwd() / '.env'
    if env_path.exists():
        load_dotenv(env_path)
        print(f"📄 Loaded environment from {env_path}")
        return True
    return False


class Config:
    """Configuration for the engine, the CLI and the HTTP server.

    Values are read when the instance is created, so a fresh ``Config()``
    sees environment changes made after import.
    """

    def __init__(self):
        # === NUMERICS ===
        self.QUAD_ORDER = get_int_env('FFH_QUAD_ORDER', 64)
        # worked numeric example only
        self.EXAMPLE_QUAD_ORDER = get_int_env('FFH_QUAD_ORDER', 512)
        self.FD_STEP = get_float_env('FFH_FD_STEP', 1e-3)
        self.TOL = get_float_env('FFH_TOL', 1e-6)

        # === SPHERE ORACLE GRID ===
        self.ORACLE_POLAR = get_int_env('FFH_ORACLE_POLAR', 64)
        self.ORACLE_AZIMUTH = get_int_env('FFH_ORACLE_AZIMUTH', 128)

        # === LOGGING ===
        self.LOG_LEVEL = os.getenv('FFH_LOG_LEVEL', 'WARNING').upper()

        # === API CONFIGURATION ===
        self.API_HOST = os.getenv('API_HOST', '127.0.0.1')
        self.API_PORT = get_int_env('API_PORT', 8000)
        self.API_WORKERS = get_int_env('API_WORKERS', 1)
        self.API_RELOAD = get_bool_env('API_RELOAD', False)

    def print_config(self):
        """Print current configuration."""
        print("🔧 Fueter-Funk-Hecke Configuration:")
        print(f"   Quadrature Order: {self.QUAD_ORDER}")
        print(f"   FD Step: {self.FD_STEP}")
        print(f"   Tolerance: {self.TOL}")
        print(f"   Oracle Grid: {self.ORACLE_POLAR} x {self.ORACLE_AZIMUTH}")
        print(f"   Log Level: {self.LOG_LEVEL}")
        print(f"   API Host: {self.API_HOST}")
        print(f"   API Port: {self.API_PORT}")
        print(f"   API Workers: {self.API_WORKERS}")


# Global config instance
config = Config()

if __name__ == "__main__":
    config.print_config()
