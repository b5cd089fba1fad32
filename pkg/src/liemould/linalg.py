"""Deterministic exact linear algebra over the rationals.

Vectors are sparse maps from basis labels to Fraction; a matrix fixes one
ordered label list shared by all rows.  Elimination is fraction-free on
integer rows (each row rescaled by the lcm of its denominators, stripped
to content 1 after every update) with a final normalization pass, and the
pivot rule is fixed globally: lowest column index first, then first row.
Identical inputs therefore produce bit-identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def _to_int_row(row: dict[int, Fraction]) -> dict[int, int]:
    if not row:
        return {}
    denom_lcm = 1
    for value in row.values():
        d = value.denominator
        denom_lcm = denom_lcm // gcd(denom_lcm, d) * d
    out = {col: int(value * denom_lcm) for col, value in row.items()}
    return _strip_content(out)


def _strip_content(row: dict[int, int]) -> dict[int, int]:
    if not row:
        return row
    content = 0
    for value in row.values():
        content = gcd(content, value)
    lead_col = min(row)
    if row[lead_col] < 0:
        content = -content
    if content not in (0, 1):
        return {col: value // content for col, value in row.items()}
    return row


def _combine(row: dict[int, int], factor_row: int, pivot_row: dict[int, int], factor_piv: int) -> dict[int, int]:
    """factor_row * row - factor_piv * pivot_row, content-stripped."""
    out = {col: factor_row * value for col, value in row.items()}
    for col, value in pivot_row.items():
        s = out.get(col, 0) - factor_piv * value
        if s:
            out[col] = s
        else:
            out.pop(col, None)
    return _strip_content(out)


def rref(rows: list[dict[int, Fraction]]) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices).

    Zero rows are dropped; pivot entries are normalized to 1.
    """
    work = [_to_int_row(row) for row in rows]
    work = [row for row in work if row]
    pivots: list[int] = []
    pivot_rows: list[dict[int, int]] = []
    while work:
        col = min(min(row) for row in work)
        idx = next(i for i, row in enumerate(work) if row.get(col))
        pivot = work.pop(idx)
        # eliminate col from every earlier pivot row and every waiting row
        for i, row in enumerate(pivot_rows):
            if col in row:
                pivot_rows[i] = _combine(row, pivot[col], pivot, row[col])
        work = [
            _combine(row, pivot[col], pivot, row[col]) if col in row else row
            for row in work
        ]
        work = [row for row in work if row]
        pivot_rows.append(pivot)
        pivots.append(col)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    normalized = []
    for i in order:
        row = pivot_rows[i]
        lead = Fraction(row[pivots[i]])
        normalized.append({col: Fraction(value) / lead for col, value in row.items()})
    return normalized, sorted(pivots)


@dataclass
class SolveResult:
    particular: dict[int, Fraction] | None
    nullspace: list[dict[int, Fraction]]
    infeasible_row: dict[int, Fraction] | None = None


def solve(rows: list[dict[int, Fraction]], rhs: dict[int, Fraction], n_cols: int) -> SolveResult:
    """Solve the system (one equation per row) A x = b for x in n_cols unknowns.

    Returns one exact solution plus a basis of the homogeneous solution
    space, or particular=None with the offending rref row 0 = 1.
    """
    augmented = []
    for i, row in enumerate(rows):
        eq = dict(row)
        b = rhs.get(i, Fraction(0))
        if b:
            eq[n_cols] = b
        augmented.append(eq)
    reduced, pivots = rref(augmented)
    if n_cols in pivots:
        bad = next(row for row in reduced if min(row) == n_cols)
        return SolveResult(None, [], infeasible_row=bad)
    particular: dict[int, Fraction] = {}
    for row in reduced:
        lead = min(row)
        value = row.get(n_cols, Fraction(0))
        if value:
            particular[lead] = value
    free_cols = [c for c in range(n_cols) if c not in pivots]
    nullspace = []
    for free in free_cols:
        vec = {free: Fraction(1)}
        for row in reduced:
            lead = min(row)
            coeff = row.get(free)
            if coeff:
                vec[lead] = -coeff
        nullspace.append(vec)
    return SolveResult(particular, nullspace)


class RowSpan:
    """Incremental echelon basis of a span of sparse vectors, tracking how
    every echelon row combines the original generators so that membership
    queries return coordinates over the input family."""

    def __init__(self, vectors: list[dict[int, Fraction]]):
        self.n_generators = len(vectors)
        # each entry: (pivot_col, int_row, tag_row) with tag over generators
        self.rows: list[tuple[int, dict[int, int], dict[int, Fraction]]] = []
        for index, vector in enumerate(vectors):
            clean = {col: Fraction(v) for col, v in vector.items() if v}
            self._insert(clean, {index: Fraction(1)})
        self.rows.sort(key=lambda entry: entry[0])

    def _insert(self, row_frac: dict[int, Fraction], tags: dict[int, Fraction]) -> None:
        residual, coeffs = self.express(row_frac)
        if residual:
            int_row = _to_int_row(residual)
            pivot_col = min(int_row)
            # residual = original - sum coeffs*generators, rescaled to the
            # content-stripped integer row
            new_tags = dict(tags)
            for index, coeff in coeffs.items():
                s = new_tags.get(index, Fraction(0)) - coeff
                if s:
                    new_tags[index] = s
                else:
                    new_tags.pop(index, None)
            sample = min(residual)
            ratio = residual[sample] / Fraction(int_row[sample])
            new_tags = {idx: value / ratio for idx, value in new_tags.items()}
            self.rows.append((pivot_col, int_row, new_tags))
            self.rows.sort(key=lambda entry: entry[0])

    def express(
        self, vector: dict[int, Fraction]
    ) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
        """Reduce vector against the echelon rows.

        Returns (residual, coefficients over the original generators so that
        vector = sum coeff * generator + residual).
        """
        residual = dict(vector)
        coeffs: dict[int, Fraction] = {}
        for pivot_col, pivot_row, pivot_tags in self.rows:
            value = residual.get(pivot_col)
            if not value:
                continue
            factor = value / Fraction(pivot_row[pivot_col])
            for col, piv_value in pivot_row.items():
                s = residual.get(col, Fraction(0)) - factor * piv_value
                if s:
                    residual[col] = s
                else:
                    residual.pop(col, None)
            for index, tag_value in pivot_tags.items():
                s = coeffs.get(index, Fraction(0)) + factor * tag_value
                if s:
                    coeffs[index] = s
                else:
                    coeffs.pop(index, None)
        return residual, coeffs

    def membership(self, vector: dict[int, Fraction]) -> dict[int, Fraction] | None:
        residual, coeffs = self.express(vector)
        return None if residual else coeffs

    @property
    def rank(self) -> int:
        return len(self.rows)


def membership(
    vector: dict[int, Fraction], spanning: list[dict[int, Fraction]]
) -> dict[int, Fraction] | None:
    """Exact coordinates of vector in span(spanning), or None."""
    return RowSpan(spanning).membership(vector)
