"""Project configuration constants.

This module centralises configuration values so they can be easily reused and overridden.
Values are read from environment variables (or a local ``.env`` file) with sensible
defaults for desk-scale computations.
"""

from __future__ import annotations

import os
from pathlib import Path

from dotenv import load_dotenv


load_dotenv()

# Base directory of the project (assumes this file lives in src/)
BASE_DIR = Path(__file__).resolve().parent.parent

DATA_DIR = BASE_DIR / "data"
CORPUS_DIR = Path(os.getenv("CURVE_H1_CORPUS_DIR", str(DATA_DIR / "corpus")))
LOG_DIR = Path(os.getenv("CURVE_H1_LOG_DIR", str(BASE_DIR / "logs")))
LOG_LEVEL: str = os.getenv("CURVE_H1_LOG_LEVEL", "INFO")

# Oracle (truncated-degree linear algebra)
DEFAULT_DEGREE_BOUND: int = int(os.getenv("CURVE_H1_DEGREE_BOUND", "24"))
ORACLE_WINDOW: int = int(os.getenv("CURVE_H1_ORACLE_WINDOW", "4"))
ORACLE_SLACK: int = int(os.getenv("CURVE_H1_ORACLE_SLACK", "4"))

# Algebra and Groebner engine safety limits
GROEBNER_PAIR_BUDGET: int = int(os.getenv("CURVE_H1_GROEBNER_PAIR_BUDGET", "20000"))
FACTOR_DEGREE_CAP: int = int(os.getenv("CURVE_H1_FACTOR_DEGREE_CAP", "32"))

# Singularity analysis
MILNOR_TRUNCATION_LIMIT: int = int(os.getenv("CURVE_H1_MILNOR_TRUNCATION_LIMIT", "40"))
PUISEUX_DEPTH_LIMIT: int = int(os.getenv("CURVE_H1_PUISEUX_DEPTH_LIMIT", "24"))

# Family sampling
FAMILY_PARAMS = {
    "generic_samples": int(os.getenv("CURVE_H1_GENERIC_SAMPLES", "3")),
    "sample_range": int(os.getenv("CURVE_H1_SAMPLE_RANGE", "40")),
    "seed": int(os.getenv("CURVE_H1_SEED", "0")),
}
