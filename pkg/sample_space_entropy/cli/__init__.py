"""
Command line interface.

Package structure:
- main.py: Argument parsing, logging setup and the entry point
- commands.py: One function per subcommand
- figures.py: Figure catalog, figure data and rendering
- grid.py: Evaluation grids
- tables.py: TSV tables and reports
- svg.py: SVG line charts
"""

from __future__ import annotations

from .main import build_parser, main

__all__ = ["build_parser", "main"]
