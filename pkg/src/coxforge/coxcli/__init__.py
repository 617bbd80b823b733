"""Command-line front end."""

from .main import EXIT_MISMATCH, EXIT_PASS, EXIT_USAGE, RunConfig, build_parser, main

__all__ = ["EXIT_MISMATCH", "EXIT_PASS", "EXIT_USAGE", "RunConfig", "build_parser", "main"]
