import os
from dotenv import load_dotenv
from typing import Optional

VERSION = "1.0.0"


class ConfigManager:
    load_dotenv()

    @staticmethod
    def _get_int(name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"Invalid {name} format: {raw}")
        if value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value}")
        return value

    @staticmethod
    def get_version() -> str:
        return VERSION

    @staticmethod
    def get_max_exact() -> int:
        """Largest subset size accepted by the exact covering solvers."""
        return ConfigManager._get_int('CHAINSCOPE_MAX_EXACT', 20)

    @staticmethod
    def get_max_product_size() -> int:
        return ConfigManager._get_int('CHAINSCOPE_MAX_PRODUCT', 4096)

    @staticmethod
    def get_oracle_max_points() -> int:
        return ConfigManager._get_int('CHAINSCOPE_ORACLE_MAX_POINTS', 12)

    @staticmethod
    def get_max_model_points() -> int:
        """Bound on points listed by a model sample or by one period of interleaved lattices."""
        return ConfigManager._get_int('CHAINSCOPE_MAX_MODEL_POINTS', 200000)

    @staticmethod
    def get_triangle_rtol() -> float:
        raw = os.getenv('CHAINSCOPE_TRIANGLE_RTOL')
        if raw is None or raw.strip() == "":
            return 1e-9
        try:
            value = float(raw)
        except ValueError:
            raise ValueError(f"Invalid CHAINSCOPE_TRIANGLE_RTOL format: {raw}")
        if not value >= 0.0:
            raise ValueError(f"CHAINSCOPE_TRIANGLE_RTOL must be non-negative, got {raw}")
        return value

    @staticmethod
    def get_workers() -> int:
        """Default process count for the property suites."""
        return ConfigManager._get_int('CHAINSCOPE_WORKERS', 1)

    @staticmethod
    def get_log_level() -> str:
        level = os.getenv('CHAINSCOPE_LOG_LEVEL', 'WARNING').upper()
        if level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            raise ValueError(f"Invalid CHAINSCOPE_LOG_LEVEL: {level}")
        return level

    @staticmethod
    def get_log_file() -> Optional[str]:
        path = os.getenv('CHAINSCOPE_LOG_FILE')
        return path or None
