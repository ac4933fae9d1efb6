"""
Ideal exchange formats.

Text format, one statement per line, `#` starts a comment:

    vars x1 x2 x3 x4 x5
    gens x1*x2 x2*x3 x3^2*x4

Several `gens` lines accumulate; a file without generators is the zero ideal.

JSON format:

    {"vars": ["x1", "x2"], "gens": [[1, 1], ...]}

Both formats are written canonically, so parse-then-format is the identity.
"""

from __future__ import annotations

import json
import logging
import re
import sys
from pathlib import Path
from typing import Any

from ..errors import InputError, ParseError
from ..models import Monomial, MonomialIdeal, RingSpec, minimal_generators

logger = logging.getLogger(__name__)

FACTOR = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(\d+))?$")


def parse_monomial(ring: RingSpec, text: str) -> Monomial:
    """Parse `x1*x2^3` (or `1`) into an exponent vector over `ring`."""
    text = text.strip()
    if text == "1":
        return ring.one()
    exps = [0] * ring.n
    for factor in text.split("*"):
        match = FACTOR.match(factor.strip())
        if not match:
            raise ParseError(f"malformed monomial factor {factor!r} in {text!r}")
        name, power = match.group(1), match.group(2)
        exps[ring.index(name)] += int(power) if power is not None else 1
    return Monomial(tuple(exps))


def format_monomial(ring: RingSpec, m: Monomial) -> str:
    return m.format(ring)


def parse_ideal_text(text: str) -> MonomialIdeal:
    """Parse the line-based ideal format.

    Args:
        text: Whole file content

    Returns:
        Minimally generated MonomialIdeal

    Raises:
        ParseError: on unknown statements, missing `vars` or bad monomials
        UnitIdeal: when `1` is listed as a generator
    """
    ring: RingSpec | None = None
    raw_gens: list[tuple[str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        keyword, _, rest = content.partition(" ")
        tokens = rest.split()
        if keyword == "vars":
            if ring is not None:
                raise ParseError("duplicate vars statement", lineno)
            try:
                ring = RingSpec(tuple(tokens))
            except InputError as e:
                raise ParseError(str(e), lineno) from e
        elif keyword == "gens":
            if ring is None:
                raise ParseError("gens before vars", lineno)
            raw_gens.extend((token, lineno) for token in tokens)
        else:
            raise ParseError(f"unknown statement {keyword!r}", lineno)

    if ring is None:
        raise ParseError("missing vars statement")

    monomials = []
    for token, lineno in raw_gens:
        try:
            monomials.append(parse_monomial(ring, token))
        except ParseError:
            raise
        except InputError as e:
            raise ParseError(str(e), lineno) from e
    ideal = minimal_generators(ring, monomials)
    logger.debug("Parsed ideal with %d variables and %d generators", ring.n, len(ideal))
    return ideal


def format_ideal_text(ideal: MonomialIdeal) -> str:
    lines = [
        "vars " + " ".join(ideal.ring.variables),
        " ".join(["gens"] + ideal.format_gens()),
    ]
    return "\n".join(lines) + "\n"


def ideal_to_json(ideal: MonomialIdeal) -> dict[str, Any]:
    return {
        "vars": list(ideal.ring.variables),
        "gens": [list(m.exponents) for m in ideal.gens],
    }


def ideal_from_json(data: Any) -> MonomialIdeal:
    """Build an ideal from the JSON document form."""
    if not isinstance(data, dict) or "vars" not in data:
        raise ParseError("JSON ideal must be an object with 'vars' and 'gens'")
    try:
        ring = RingSpec(tuple(data["vars"]))
    except (InputError, TypeError) as e:
        raise ParseError(f"bad vars: {e}") from e
    gens = []
    for row in data.get("gens", []):
        if (
            not isinstance(row, list)
            or len(row) != ring.n
            or any(isinstance(e, bool) or not isinstance(e, int) for e in row)
        ):
            raise ParseError(f"generator {row!r} is not an exponent vector of length {ring.n}")
        try:
            gens.append(Monomial(tuple(row)))
        except InputError as e:
            raise ParseError(str(e)) from e
    return minimal_generators(ring, gens)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse either format, detected by a leading `{`."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from e
        return ideal_from_json(data)
    return parse_ideal_text(text)


def load_ideal(source: str | Path) -> MonomialIdeal:
    """Load an ideal from a file path, or from stdin when source is `-`."""
    if str(source) == "-":
        return parse_ideal(sys.stdin.read())
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError(f"cannot read ideal file {path}: {e}") from e
    logger.info("Loading ideal from %s", path)
    return parse_ideal(text)
