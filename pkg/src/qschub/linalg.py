"""
Exact sparse Gaussian elimination over the rationals.

Vectors are dicts ``{column: value}`` with arbitrary hashable, orderable
columns.  Values are ``int`` or ``Fraction``; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

__all__ = ["RowEchelon", "SpanSolver", "NotInSpan", "as_integer"]


class NotInSpan(ValueError):
    pass


def _axpy(target: dict, scale, source: Mapping) -> None:
    # target += scale * source, dropping zeros
    for col, v in source.items():
        nv = target.get(col, 0) + scale * v
        if nv:
            target[col] = nv
        else:
            target.pop(col, None)


def as_integer(value) -> int:
    """Convert an exact rational to ``int``, refusing anything non-integral."""
    if isinstance(value, int):
        return value
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral value {value}")
    return value.numerator


class RowEchelon:
    """
    Incrementally maintained fully reduced row echelon form.

    Each pivot row has pivot entry 1 and no other stored row has a nonzero
    entry in that pivot column.  ``column_order`` fixes which column of a new
    row becomes its pivot (the smallest in that order), which makes the
    complement basis of non-pivot columns deterministic.
    """

    def __init__(self, column_key=None):
        self.rows: dict[Hashable, dict] = {}
        self._key = column_key

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> set:
        return set(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        """Remainder of ``vec`` modulo the row space; supported on non-pivot columns."""
        out = dict(vec)
        for col in [c for c in out if c in self.rows]:
            v = out.get(col)
            if v:
                _axpy(out, -v, self.rows[col])
        return out

    def add(self, vec: Mapping) -> bool:
        """Add a row; return True when the rank grew."""
        r = self.reduce(vec)
        if not r:
            return False
        pivot = min(r, key=self._key) if self._key else min(r)
        inv = Fraction(1) / r[pivot]
        r = {c: _normalize(v * inv) for c, v in r.items()}
        for row in self.rows.values():
            v = row.get(pivot)
            if v:
                _axpy(row, -v, r)
        self.rows[pivot] = r
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def _normalize(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


class SpanSolver:
    """
    Coordinates of vectors in the span of a fixed family.

    ``coordinates(b)`` returns ``{label: coefficient}`` with
    ``b == sum(coefficient * vectors[label])``; raises ``NotInSpan`` when no
    such combination exists, and ``ValueError`` at construction when the
    family is linearly dependent.
    """

    def __init__(self, vectors: Mapping[Hashable, Mapping] | Sequence[tuple[Hashable, Mapping]]):
        items = list(vectors.items()) if isinstance(vectors, Mapping) else list(vectors)
        self.labels = [label for label, _ in items]
        # each echelon row carries the combination of inputs that produced it
        self._rows: dict[Hashable, tuple[dict, dict]] = {}
        for label, vec in items:
            row = dict(vec)
            combo = {label: 1}
            for col in [c for c in row if c in self._rows]:
                v = row.get(col)
                if v:
                    prow, pcombo = self._rows[col]
                    _axpy(row, -v, prow)
                    _axpy(combo, -v, pcombo)
            if not row:
                raise ValueError(f"vector {label!r} is linearly dependent on earlier ones")
            pivot = min(row, key=repr) if not _orderable(row) else min(row)
            inv = Fraction(1) / row[pivot]
            row = {c: _normalize(v * inv) for c, v in row.items()}
            combo = {c: _normalize(v * inv) for c, v in combo.items()}
            for prow, pcombo in self._rows.values():
                v = prow.get(pivot)
                if v:
                    _axpy(prow, -v, row)
                    _axpy(pcombo, -v, combo)
            self._rows[pivot] = (row, combo)

    def coordinates(self, vec: Mapping) -> dict:
        rest = dict(vec)
        result: dict = {}
        for col in [c for c in rest if c in self._rows]:
            v = rest.get(col)
            if v:
                prow, pcombo = self._rows[col]
                _axpy(rest, -v, prow)
                _axpy(result, v, pcombo)
        if rest:
            raise NotInSpan("vector is not in the span")
        return {k: _normalize(v) for k, v in result.items()}

    def integer_coordinates(self, vec: Mapping) -> dict:
        return {k: as_integer(v) for k, v in self.coordinates(vec).items()}


def _orderable(row: Iterable) -> bool:
    try:
        sorted(row)
    except TypeError:
        return False
    return True
