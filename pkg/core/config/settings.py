"""
Settings loader.
Reads config.yaml from the project root and applies .env / environment overrides.
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

load_dotenv()

ROOT_DIR = Path(__file__).resolve().parent.parent.parent


def _load_config(config_file: Optional[Path] = None) -> Dict[str, Any]:
    """Load config from config.yaml."""
    config_file = config_file or ROOT_DIR / "config.yaml"
    if config_file.exists():
        with open(config_file, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}
    return {}


@dataclass(frozen=True)
class Settings:
    """Resolved configuration values, YAML first and environment on top."""
    knot_samples: int = 1000
    knot_variant: str = "equation-locus"
    construction_tolerance: float = 1e-12
    residual_tolerance: float = 1e-9
    bisection_xtol: float = 1e-14
    max_search_nodes: int = 20000
    report_knot_samples: int = 1000
    log_level: str = "WARNING"
    log_format: str = "[%(tag)s] %(message)s"


def load_settings(config_file: Optional[Path] = None) -> Settings:
    """Build Settings from config.yaml, then apply SUBN_* environment overrides."""
    config = _load_config(config_file)
    knot = config.get("knot", {}) or {}
    simplify = config.get("simplify", {}) or {}
    report = config.get("report", {}) or {}
    logging_cfg = config.get("logging", {}) or {}

    return Settings(
        knot_samples=int(os.getenv("SUBN_KNOT_SAMPLES", knot.get("default_samples", 1000))),
        knot_variant=str(knot.get("default_variant", "equation-locus")),
        construction_tolerance=float(knot.get("construction_tolerance", 1e-12)),
        residual_tolerance=float(knot.get("residual_tolerance", 1e-9)),
        bisection_xtol=float(knot.get("bisection_xtol", 1e-14)),
        max_search_nodes=int(os.getenv("SUBN_SEARCH_BUDGET", simplify.get("max_search_nodes", 20000))),
        report_knot_samples=int(report.get("knot_samples", 1000)),
        log_level=str(os.getenv("SUBN_LOG_LEVEL", logging_cfg.get("level", "WARNING"))).upper(),
        log_format=str(logging_cfg.get("format", "[%(tag)s] %(message)s")),
    )


# Global instance
settings = load_settings()
