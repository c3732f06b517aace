"""Linguistic scale: the ordered term set S = {s_0, ..., s_{2*tau}}."""

from dataclasses import dataclass, field
from typing import Optional, Sequence

DEFAULT_TAU = 4

# Display labels for the customary 9-grade scale (tau = 4).
DEFAULT_LABELS_TAU4 = (
    "extremely poor",
    "very poor",
    "poor",
    "slightly poor",
    "fair",
    "slightly good",
    "good",
    "very good",
    "extremely good",
)


@dataclass(frozen=True)
class LinguisticScale:
    """Uniformly spaced linguistic term set with granularity 2*tau + 1.

    Term s_tau is indifference; s_0 and s_{2*tau} are the extremes.
    All arithmetic in this package operates on the numeric subscripts.
    """

    tau: int = DEFAULT_TAU
    labels: Optional[Sequence[str]] = field(default=None)

    def __post_init__(self):
        if int(self.tau) != self.tau or self.tau < 1:
            raise ValueError(f"tau must be a positive integer, got {self.tau!r}")
        if self.labels is not None:
            if len(self.labels) != self.granularity:
                raise ValueError(
                    f"expected {self.granularity} labels for tau={self.tau}, "
                    f"got {len(self.labels)}"
                )
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def granularity(self) -> int:
        return 2 * self.tau + 1

    @property
    def max_index(self) -> int:
        return 2 * self.tau

    @property
    def neutral_index(self) -> int:
        """Subscript of the indifference term s_tau."""
        return self.tau

    def contains(self, index: float) -> bool:
        return 0.0 <= index <= self.max_index

    def label(self, index: int) -> str:
        """Display label for an integer subscript."""
        if self.labels is not None:
            return self.labels[index]
        if self.tau == DEFAULT_TAU:
            return DEFAULT_LABELS_TAU4[index]
        return f"s_{index}"
