"""
Developing base 1-factors under a vertex permutation.
"""

from src.core.develop.development import (
    DevelopmentSpec,
    develop,
    parse_permutation,
    parse_spec,
    parse_spec_file,
)

__all__ = ["DevelopmentSpec", "develop", "parse_permutation", "parse_spec", "parse_spec_file"]
