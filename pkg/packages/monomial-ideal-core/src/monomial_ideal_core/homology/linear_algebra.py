"""
Exact matrix rank for sparse boundary matrices.

Rows are given as {column: integer entry} dicts. Over QQ rows are eliminated
fraction-free (gcd-scaled integer combinations, content divided out after
every step); over GF(2) rows become int bitmasks combined by XOR.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

from ..settings import Field

SparseRow = Mapping[int, int]


def _content(row: dict[int, int]) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    return g


def rank_qq(rows: Iterable[SparseRow]) -> int:
    """Rank over the rationals by incremental fraction-free echelon reduction."""
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                g = _content(row)
                pivots[col] = {c: v // g for c, v in row.items()}
                break
            top, lead = pivot[col], row[col]
            g = gcd(top, lead)
            alpha, beta = lead // g, top // g
            merged = {c: v * beta for c, v in row.items()}
            for c, v in pivot.items():
                merged[c] = merged.get(c, 0) - v * alpha
            row = {c: v for c, v in merged.items() if v}
            if row:
                g = _content(row)
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
    return len(pivots)


def rank_gf2(rows: Iterable[SparseRow]) -> int:
    """Rank over GF(2): odd entries become set bits, elimination by XOR."""
    pivots: dict[int, int] = {}
    for raw in rows:
        bits = 0
        for c, v in raw.items():
            if v % 2:
                bits |= 1 << c
        while bits:
            top = bits.bit_length() - 1
            if top not in pivots:
                pivots[top] = bits
                break
            bits ^= pivots[top]
    return len(pivots)


def matrix_rank(rows: Iterable[SparseRow], field: Field = Field.QQ) -> int:
    if field is Field.GF2:
        return rank_gf2(rows)
    return rank_qq(rows)
