"""
Text and JSON exchange formats for monomial ideals.
"""

from .ideal_format import (
    format_ideal_text,
    format_monomial,
    ideal_from_json,
    ideal_to_json,
    load_ideal,
    parse_ideal,
    parse_ideal_text,
    parse_monomial,
)

__all__ = [
    "format_ideal_text",
    "format_monomial",
    "ideal_from_json",
    "ideal_to_json",
    "load_ideal",
    "parse_ideal",
    "parse_ideal_text",
    "parse_monomial",
]
