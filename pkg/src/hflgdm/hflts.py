"""Hesitant fuzzy linguistic term sets and their index arithmetic.

A term set is stored as the ordered list of numeric subscripts of its
linguistic terms.  Fractional subscripts are legal: the repair algorithm
produces virtual terms such as s_5.5408.  Duplicate entries may appear as
normalization artifacts; freshly elicited judgments are strictly increasing.
"""

from dataclasses import dataclass
from typing import Tuple

from .errors import IndexOutOfRange, LengthMismatch, OrderingViolation
from .scale import LinguisticScale


@dataclass(frozen=True)
class Hflts:
    """One cell of a preference matrix: an ordered run of term subscripts."""

    indices: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(float(x) for x in self.indices))
        if not self.indices:
            raise OrderingViolation("a hesitant term set cannot be empty")
        for a, b in zip(self.indices, self.indices[1:]):
            if b < a - 1e-12:
                raise OrderingViolation(
                    f"term indices must be non-decreasing, got {self.indices}"
                )

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __getitem__(self, k):
        return self.indices[k]

    @property
    def lower(self) -> float:
        """Smallest subscript (b-)."""
        return self.indices[0]

    @property
    def upper(self) -> float:
        """Largest subscript (b+)."""
        return self.indices[-1]

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    def check_range(self, scale: LinguisticScale, i=None, j=None) -> "Hflts":
        for x in self.indices:
            if not (-1e-9 <= x <= scale.max_index + 1e-9):
                raise IndexOutOfRange(
                    f"index {x} outside [0, {scale.max_index}]", i=i, j=j
                )
        return self

    @classmethod
    def from_run(cls, lo: int, hi: int) -> "Hflts":
        """Consecutive run {s_lo, ..., s_hi} of integer terms."""
        if lo > hi:
            raise OrderingViolation(f"run bounds out of order: [{lo}, {hi}]")
        return cls(tuple(float(v) for v in range(int(lo), int(hi) + 1)))

    def is_integer_valued(self, tol: float = 1e-9) -> bool:
        return all(abs(x - round(x)) <= tol for x in self.indices)


def index_add(a: Hflts, b: Hflts) -> Hflts:
    """Elementwise sum of two equal-length index sets (not range-clamped)."""
    if len(a) != len(b):
        raise LengthMismatch(
            f"cannot add term sets of lengths {len(a)} and {len(b)}; normalize first"
        )
    return Hflts(tuple(x + y for x, y in zip(a, b)))


def index_scale(a: Hflts, lam: float) -> Hflts:
    """Scalar multiple of an index set (lam >= 0, not range-clamped)."""
    if lam < 0:
        raise ValueError(f"scalar must be non-negative, got {lam}")
    return Hflts(tuple(lam * x for x in a))


def normalize_pair(a: Hflts, b: Hflts, zeta: float = 0.5) -> Tuple[Hflts, Hflts]:
    """Equalize the lengths of two term sets.

    The shorter set is padded by repeatedly inserting zeta*b+ + (1-zeta)*b-
    computed from its own extremes, keeping it sorted.  The original indices
    are never altered; equal-length inputs are returned unchanged.
    """
    if not 0.0 <= zeta <= 1.0:
        raise ValueError(f"zeta must lie in [0, 1], got {zeta}")
    target = max(len(a), len(b))
    return _pad(a, target, zeta), _pad(b, target, zeta)


def _pad(ts: Hflts, target: int, zeta: float) -> Hflts:
    if len(ts) >= target:
        return ts
    filler = zeta * ts.upper + (1.0 - zeta) * ts.lower
    values = sorted(list(ts.indices) + [filler] * (target - len(ts)))
    return Hflts(tuple(values))


def hflts_distance(
    a: Hflts, b: Hflts, scale: LinguisticScale, zeta: float = 0.5
) -> float:
    """Normalized Hamming distance between two term sets, in [0, 1].

    Lengths are equalized with ``normalize_pair`` first; the mean absolute
    subscript difference is divided by the scale width 2*tau.
    """
    aa, bb = normalize_pair(a, b, zeta)
    width = float(scale.max_index)
    total = sum(abs(x - y) for x, y in zip(aa, bb))
    return total / (len(aa) * width)
