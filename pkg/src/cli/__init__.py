"""Command-line front end: spec-file parser, JSON documents and subcommands."""

from .main import build_parser
from .parser import load_spec, parse_curve_spec

__all__ = ["build_parser", "load_spec", "parse_curve_spec"]
