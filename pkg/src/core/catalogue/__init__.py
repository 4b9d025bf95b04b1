"""
Catalogue text I/O and the file-backed catalogue store.
"""

from src.core.catalogue.line_codec import emit_line, factor_token, parse_factor, parse_line, parse_token

__all__ = ["emit_line", "factor_token", "parse_factor", "parse_line", "parse_token"]
