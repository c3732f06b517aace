"""Hesitant fuzzy linguistic preference relations (HFLPRs).

An HFLPR is an n x n reciprocal matrix of hesitant term sets over one
linguistic scale.  Reciprocity pairs the L-th smallest subscript of cell
(i,j) with the L-th largest of cell (j,i): their sum is always 2*tau, and
the diagonal is the single indifference term s_tau.
"""

import json
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import (
    DiagonalViolation,
    DimensionMismatch,
    IndexOutOfRange,
    LengthMismatch,
    OrderingViolation,
    ReciprocityViolation,
)
from .hflts import Hflts, hflts_distance
from .scale import LinguisticScale

# Loose enough to admit matrices round-tripped through 4-decimal JSON,
# tight enough to catch any real elicitation error (those are >= 1).
RECIPROCITY_TOL = 1e-3


@dataclass(frozen=True)
class Hflpr:
    """Validated preference matrix.  Construct via ``validate_hflpr``."""

    scale: LinguisticScale
    cells: Tuple[Tuple[Hflts, ...], ...]

    @property
    def n(self) -> int:
        return len(self.cells)

    def cell(self, i: int, j: int) -> Hflts:
        return self.cells[i][j]

    def max_cell_len(self) -> int:
        return max(len(c) for row in self.cells for c in row)

    def upper_cells(self):
        """Yield (i, j, cell) over the strict upper triangle."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j, self.cells[i][j]

    def to_index_lists(self) -> List[List[List[float]]]:
        return [[list(c.indices) for c in row] for row in self.cells]

    def slice_matrix(self, ell: int) -> np.ndarray:
        """The ell-th candidate LPR hidden in the hesitant matrix (0-based).

        Upper-triangle cells contribute their ell-th smallest subscript
        (clamped to the last element for shorter cells); the lower triangle
        is filled by reciprocity, which equals the ell-th largest subscript
        of the transposed cell.  Each slice is therefore itself a valid
        reciprocal LPR.
        """
        tau = self.scale.tau
        A = np.full((self.n, self.n), float(tau))
        for i, j, c in self.upper_cells():
            v = c[min(ell, len(c) - 1)]
            A[i, j] = v
            A[j, i] = 2.0 * tau - v
        return A

    def slice_matrices(self) -> List[np.ndarray]:
        return [self.slice_matrix(ell) for ell in range(self.max_cell_len())]


def hflpr_from_upper(
    scale: LinguisticScale, n: int, upper: Dict[Tuple[int, int], Sequence[float]]
) -> Hflpr:
    """Build a matrix from upper-triangle index lists; the rest is implied."""
    tau = scale.tau
    rows: List[List[Hflts]] = [[None] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Hflts((float(tau),))
    for (i, j), values in upper.items():
        if not i < j:
            raise ValueError("upper-triangle keys must have i < j")
        cell = Hflts(tuple(sorted(float(v) for v in values))).check_range(scale, i, j)
        rows[i][j] = cell
        rows[j][i] = Hflts(tuple(sorted(2.0 * tau - v for v in cell)))
    for i in range(n):
        for j in range(n):
            if rows[i][j] is None:
                raise ValueError(f"missing upper cell ({i}, {j})")
    return Hflpr(scale=scale, cells=tuple(tuple(r) for r in rows))


def validate_hflpr(candidate, scale: LinguisticScale) -> Hflpr:
    """Validate a raw n x n matrix of index lists and return an ``Hflpr``.

    Errors carry 1-based cell coordinates.  Checks, in order: shape, numeric
    range, per-cell ordering, diagonal, paired length symmetry, and the
    reciprocity rule I(b_ij, ell-th smallest) + I(b_ji, ell-th largest) = 2*tau.
    """
    if isinstance(candidate, Hflpr):
        candidate = candidate.to_index_lists()
    n = len(candidate)
    if n < 3:
        raise DimensionMismatch(f"an HFLPR needs at least 3 alternatives, got {n}")
    if any(len(row) != n for row in candidate):
        raise DimensionMismatch("matrix is not square")

    tau = scale.tau
    cells: List[List[Hflts]] = []
    for i, row in enumerate(candidate):
        out_row = []
        for j, raw in enumerate(row):
            values = [float(v) for v in raw]
            if not values:
                raise OrderingViolation(f"cell ({i+1},{j+1}) is empty", i=i + 1, j=j + 1)
            for v in values:
                if not (-1e-9 <= v <= scale.max_index + 1e-9):
                    raise IndexOutOfRange(
                        f"cell ({i+1},{j+1}): index {v} outside [0, {scale.max_index}]",
                        i=i + 1,
                        j=j + 1,
                    )
            ordered = sorted(values)
            if i < j and any(
                b < a - 1e-12 for a, b in zip(values, values[1:])
            ):
                raise OrderingViolation(
                    f"cell ({i+1},{j+1}) indices not ascending: {values}",
                    i=i + 1,
                    j=j + 1,
                )
            out_row.append(Hflts(tuple(ordered)))
        cells.append(out_row)

    for i in range(n):
        d = cells[i][i]
        if len(d) != 1 or abs(d[0] - tau) > RECIPROCITY_TOL:
            raise DiagonalViolation(
                f"diagonal cell ({i+1},{i+1}) must be the single term s_{tau}",
                i=i + 1,
                j=i + 1,
            )

    for i in range(n):
        for j in range(i + 1, n):
            a, b = cells[i][j], cells[j][i]
            if len(a) != len(b):
                raise LengthMismatch(
                    f"cells ({i+1},{j+1}) and ({j+1},{i+1}) have lengths "
                    f"{len(a)} != {len(b)}",
                    i=i + 1,
                    j=j + 1,
                )
            L = len(a)
            for ell in range(L):
                s = a[ell] + b[L - 1 - ell]
                if abs(s - 2.0 * tau) > RECIPROCITY_TOL:
                    raise ReciprocityViolation(
                        f"cells ({i+1},{j+1})/({j+1},{i+1}): paired indices sum "
                        f"to {s}, expected {2 * tau}",
                        i=i + 1,
                        j=j + 1,
                    )

    return Hflpr(scale=scale, cells=tuple(tuple(r) for r in cells))


def hflpr_similarity(a: Hflpr, b: Hflpr, zeta: float = 0.5) -> float:
    """Similarity in [0, 1]: one minus the mean upper-triangle cell distance."""
    if a.n != b.n or a.scale.tau != b.scale.tau:
        raise DimensionMismatch(
            f"matrices differ in shape or scale: n={a.n}/{b.n}, "
            f"tau={a.scale.tau}/{b.scale.tau}"
        )
    n = a.n
    total = sum(
        hflts_distance(c, b.cell(i, j), a.scale, zeta) for i, j, c in a.upper_cells()
    )
    return 1.0 - (2.0 / (n * (n - 1))) * total


def to_hfpr(matrix: Hflpr) -> List[List[List[float]]]:
    """Map term subscripts to [0, 1] preference values (divide by 2*tau)."""
    width = float(matrix.scale.max_index)
    return [[[v / width for v in c.indices] for c in row] for row in matrix.cells]


def random_hflpr(
    n: int, scale: LinguisticScale, rng: np.random.Generator
) -> Hflpr:
    """Random matrix whose upper cells are consecutive runs {s_lo, ..., s_hi}.

    (lo, hi) is drawn uniformly over all pairs with lo <= hi on [0, 2*tau];
    the diagonal is s_tau and the lower triangle follows by reciprocity.
    """
    if n < 3:
        raise DimensionMismatch(f"an HFLPR needs at least 3 alternatives, got {n}")
    g = scale.granularity
    upper = {}
    for i in range(n):
        for j in range(i + 1, n):
            # index into the triangular list of (lo, hi) pairs, lo <= hi
            k = int(rng.integers(0, g * (g + 1) // 2))
            lo = 0
            while k >= g - lo:
                k -= g - lo
                lo += 1
            hi = lo + k
            upper[(i, j)] = Hflts.from_run(lo, hi).indices
    return hflpr_from_upper(scale, n, upper)


# ---------------------------------------------------------------------------
# JSON wire format
#
#   { "tau": int, "n": int, "cells": [[ [lo, hi] | [idx, ...] ]] }
#
# A two-element integer pair [lo, hi] with lo < hi expands to the consecutive
# run {lo..hi} (the portal's Min/Max input rule); any other list is taken
# verbatim, which carries fractional repaired matrices losslessly.
# ---------------------------------------------------------------------------


def _expand_cell(raw) -> List[float]:
    values = [float(v) for v in raw]
    if (
        len(values) == 2
        and values[0] <= values[1]
        and all(v == int(v) for v in values)
    ):
        return [float(v) for v in range(int(values[0]), int(values[1]) + 1)]
    return values


def hflpr_from_json_dict(doc: dict) -> Hflpr:
    scale = LinguisticScale(tau=int(doc.get("tau", 4)))
    raw_cells = doc["cells"]
    n = int(doc.get("n", len(raw_cells)))
    if len(raw_cells) != n or any(len(r) != n for r in raw_cells):
        raise DimensionMismatch(f"cells do not form the declared {n} x {n} matrix")
    expanded = [[_expand_cell(c) for c in row] for row in raw_cells]
    return validate_hflpr(expanded, scale)


def hflpr_to_json_dict(matrix: Hflpr, decimals: int = 4) -> dict:
    """Serialize with explicit per-cell index lists (>= 4 decimal places)."""
    cells = [
        [[round(v, decimals) for v in c.indices] for c in row]
        for row in matrix.cells
    ]
    return {"tau": matrix.scale.tau, "n": matrix.n, "cells": cells}


def load_hflpr(path: str) -> Hflpr:
    with open(path, "r", encoding="utf-8") as fh:
        return hflpr_from_json_dict(json.load(fh))
