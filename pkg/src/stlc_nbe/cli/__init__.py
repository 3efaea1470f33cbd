"""Surface syntax and the ``stlc-nbe`` command."""

from .main import CliConfig, main
from .surface import parse_term, parse_type, print_term, print_type

__all__ = ["CliConfig", "main", "parse_term", "parse_type", "print_term", "print_type"]
