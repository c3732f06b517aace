"""Geometric consistency index, priority extraction, and inconsistency repair.

The consistency index of a hesitant matrix is the minimum, over the candidate
LPR slices, of a squared-residual score comparing each slice to the additive
preference structure implied by its own row-geometric-mean priority vector.
Repair blends every cell toward the ratio-form perfectly consistent LPR of the
best slice until the index stops improving (or passes a critical value).
"""

import csv
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import IterationCapExceeded, OutOfTable, UndefinedForN
from .hflpr import Hflpr, hflpr_from_upper, random_hflpr
from .scale import LinguisticScale

SAATY_BASE = 9.0


@dataclass(frozen=True)
class PriorityVector:
    """Normalized positive weights over the alternatives."""

    weights: Tuple[float, ...]

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if any(x <= 0 for x in w):
            raise ValueError(f"priority weights must be positive, got {w}")
        if abs(sum(w) - 1.0) > 1e-9:
            raise ValueError(f"priority weights must sum to 1, got sum {sum(w)}")

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, k):
        return self.weights[k]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights)

    def ranking(self) -> List[int]:
        """Alternative indices sorted by descending weight, lower index first on ties."""
        return sorted(range(len(self.weights)), key=lambda i: (-self.weights[i], i))


class StopMode(Enum):
    THRESHOLD = "threshold"
    CONVERGENCE = "convergence"


@dataclass(frozen=True)
class ConsistencyParams:
    """Knobs of the repair loop.

    alpha scales how strongly priority differences translate into preference
    intensity and must be at least (n-1)/2; the recommended default is exactly
    (n-1)/2.  beta is the retention weight of the old matrix in each repair
    step.  In THRESHOLD mode the loop runs until the index drops to the
    critical value ``threshold``; in CONVERGENCE mode it runs until the index
    improves by at most ``epsilon`` and returns the previous (best) matrix.
    """

    alpha: float
    beta: float = 0.5
    threshold: float = 0.0
    epsilon: float = 1e-4
    max_iterations: int = 50
    stop_mode: StopMode = StopMode.CONVERGENCE
    zeta: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must lie in [0, 1], got {self.beta}")
        if self.threshold < 0:
            raise ValueError(f"threshold must be >= 0, got {self.threshold}")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")

    def check_alpha(self, n: int):
        if self.alpha < (n - 1) / 2 - 1e-12:
            raise ValueError(
                f"alpha={self.alpha} below the admissible minimum (n-1)/2={(n-1)/2}"
            )

    @staticmethod
    def default_alpha(n: int) -> float:
        return (n - 1) / 2


def default_params(n: int, **overrides) -> ConsistencyParams:
    params = ConsistencyParams(alpha=ConsistencyParams.default_alpha(n))
    return replace(params, **overrides) if overrides else params


@dataclass(frozen=True)
class ConsistencyReport:
    """Outcome of the repair loop."""

    final_matrix: Hflpr
    iterations: int
    hflgci_trace: Tuple[float, ...]
    optimal_slice: int
    priority: PriorityVector
    accepted: bool

    @property
    def hflgci(self) -> float:
        return self.hflgci_trace[-1]

    @property
    def adjustments(self) -> int:
        """Number of repair steps actually applied to the output matrix."""
        return self.iterations - 1


def priority_vectors(matrix: Hflpr) -> List[PriorityVector]:
    """One candidate priority vector per slice (row geometric mean, Saaty base).

    Each slice value I maps to the multiplicative judgement 9**(I/tau - 1);
    row geometric means of that matrix, normalized, give the weights.
    """
    tau = matrix.scale.tau
    out = []
    for A in matrix.slice_matrices():
        out.append(_slice_weights(A, tau, matrix.n))
    return out


def _slice_weights(A: np.ndarray, tau: float, n: int) -> PriorityVector:
    exponents = A / tau - 1.0
    g = SAATY_BASE ** exponents.mean(axis=1)
    w = g / g.sum()
    return PriorityVector(tuple(w))


def hflgci_for_slice(
    matrix: Hflpr, w: PriorityVector, alpha: float, slice_index: int
) -> float:
    """Squared-residual consistency score of one slice under weights ``w``."""
    n = matrix.n
    if n < 3:
        raise UndefinedForN(f"the consistency index is undefined for n={n}")
    A = matrix.slice_matrix(slice_index)
    return _hflgci(A, w.as_array(), alpha, matrix.scale.tau, n)


def _hflgci(A: np.ndarray, w: np.ndarray, alpha: float, tau: float, n: int) -> float:
    iu = np.triu_indices(n, 1)
    r = A[iu] / tau - 2.0 * alpha * (w[iu[0]] - w[iu[1]]) - 1.0
    return float(2.0 / ((n - 1) * (n - 2)) * np.sum(r * r))


def consistency_index(
    matrix: Hflpr, alpha: float
) -> Tuple[float, int, PriorityVector]:
    """Minimum slice score, the achieving slice (smallest on ties), its weights."""
    n = matrix.n
    if n < 3:
        raise UndefinedForN(f"the consistency index is undefined for n={n}")
    tau = matrix.scale.tau
    best: Optional[Tuple[float, int, PriorityVector]] = None
    for ell, A in enumerate(matrix.slice_matrices()):
        w = _slice_weights(A, tau, n)
        value = _hflgci(A, w.as_array(), alpha, tau, n)
        if best is None or value < best[0] - 1e-12:
            best = (value, ell, w)
    return best


def perfect_lpr(w: PriorityVector, scale: LinguisticScale) -> np.ndarray:
    """Perfectly consistent single-term LPR implied by a priority vector.

    Entry (i,j) is 2*tau * w_i / (w_i + w_j); reciprocity holds by
    construction and the diagonal is tau.
    """
    wa = w.as_array()
    return 2.0 * scale.tau * (wa[:, None] / (wa[:, None] + wa[None, :]))


def adjust(matrix: Hflpr, lbar: np.ndarray, beta: float) -> Hflpr:
    """Blend every cell element toward the target LPR entry.

    New indices are beta*old + (1-beta)*lbar[i,j]; cell lengths are preserved,
    the intra-cell spread shrinks by beta, and reciprocity survives because
    lbar is itself reciprocal.  Results are clamped to [0, 2*tau] to absorb
    float error.
    """
    tau = matrix.scale.tau
    hi = 2.0 * tau
    upper = {}
    for i, j, c in matrix.upper_cells():
        target = lbar[i, j]
        values = sorted(
            min(hi, max(0.0, beta * v + (1.0 - beta) * target)) for v in c
        )
        upper[(i, j)] = values
    return hflpr_from_upper(matrix.scale, matrix.n, upper)


def algorithm1(matrix: Hflpr, params: ConsistencyParams) -> ConsistencyReport:
    """Consistency checking and inconsistency repair.

    THRESHOLD mode (the published procedure): loop until the index is at most
    ``params.threshold``.  If the index stalls (improves by <= epsilon) while
    still above the threshold, the best matrix so far is returned with
    ``accepted=False`` rather than looping to the cap.

    CONVERGENCE mode (the calibration stop rule): loop until the improvement
    is at most ``params.epsilon`` and return the previous matrix, whose index
    is the last strictly improving value.  This mode needs no critical value
    and is what reproduces the published case-study repairs.

    The reported trace covers exactly the iterations whose matrix survived,
    so it is non-increasing in both modes.
    """
    params.check_alpha(matrix.n)
    trace: List[float] = []
    current = matrix
    prev: Optional[Tuple[Hflpr, float, int, PriorityVector]] = None
    t = 0
    while True:
        t += 1
        value, ell, w = consistency_index(current, params.alpha)

        if params.stop_mode is StopMode.THRESHOLD:
            trace.append(value)
            if value <= params.threshold:
                return ConsistencyReport(
                    final_matrix=current,
                    iterations=t,
                    hflgci_trace=tuple(trace),
                    optimal_slice=ell,
                    priority=w,
                    accepted=True,
                )
            if t > 1 and trace[-2] - value <= params.epsilon:
                # no further meaningful improvement is possible
                trace.pop()
                m, v, e, pw = prev
                return ConsistencyReport(
                    final_matrix=m,
                    iterations=t - 1,
                    hflgci_trace=tuple(trace),
                    optimal_slice=e,
                    priority=pw,
                    accepted=False,
                )
        else:
            if prev is not None and prev[1] - value <= params.epsilon:
                m, v, e, pw = prev
                return ConsistencyReport(
                    final_matrix=m,
                    iterations=t - 1,
                    hflgci_trace=tuple(trace),
                    optimal_slice=e,
                    priority=pw,
                    accepted=True,
                )
            trace.append(value)

        if t >= params.max_iterations:
            report = ConsistencyReport(
                final_matrix=current,
                iterations=t,
                hflgci_trace=tuple(trace),
                optimal_slice=ell,
                priority=w,
                accepted=False,
            )
            raise IterationCapExceeded(
                f"no acceptable matrix within {params.max_iterations} iterations "
                f"(hflgci={value:.6f}); check alpha/beta/threshold",
                partial=report,
            )

        prev = (current, value, ell, w)
        current = adjust(current, perfect_lpr(w, matrix.scale), params.beta)


# ---------------------------------------------------------------------------
# Critical values (suggested thresholds) for alpha = (n-1)/2 + offset.
# ---------------------------------------------------------------------------

CRITICAL_VALUES = {
    3: {0.0: 0.1816, 0.2: 0.3836, 0.4: 0.6704, 0.6: 1.1081},
    4: {0.0: 0.1559, 0.2: 0.2708, 0.4: 0.4248, 0.6: 0.6230},
    5: {0.0: 0.1738, 0.2: 0.2448, 0.4: 0.3477, 0.6: 0.4604},
    6: {0.0: 0.1606, 0.2: 0.2228, 0.4: 0.2908, 0.6: 0.3748},
    7: {0.0: 0.1625, 0.2: 0.2051, 0.4: 0.2586, 0.6: 0.3182},
    8: {0.0: 0.1537, 0.2: 0.1914, 0.4: 0.2360, 0.6: 0.2799},
}


def critical_value(n: int, alpha_offset: float) -> float:
    """Published threshold for matrix order n and alpha=(n-1)/2+offset."""
    try:
        row = CRITICAL_VALUES[int(n)]
    except (KeyError, ValueError):
        raise OutOfTable(f"no critical values for n={n}; calibrate explicitly")
    for key, value in row.items():
        if abs(key - alpha_offset) <= 1e-9:
            return value
    raise OutOfTable(
        f"no critical value for n={n}, alpha offset {alpha_offset}; "
        "supply a threshold or run calibrate()"
    )


# ---------------------------------------------------------------------------
# Monte-Carlo calibration of the critical value.
# ---------------------------------------------------------------------------

HISTOGRAM_BIN_WIDTH = 0.01


@dataclass(frozen=True)
class CalibrationResult:
    n: int
    alpha: float
    samples: Tuple[float, ...]
    histogram: Tuple[Tuple[float, float, int], ...]  # (bin_low, bin_high, count)

    @property
    def mean(self) -> float:
        return float(np.mean(self.samples))

    @property
    def variance(self) -> float:
        """Sample variance (ddof=1); 0 for a single sample."""
        if len(self.samples) < 2:
            return 0.0
        return float(np.var(self.samples, ddof=1))

    @property
    def suggested(self) -> float:
        """Suggested critical value: mean + 3*sqrt(variance)."""
        return self.mean + 3.0 * math.sqrt(self.variance)


def calibrate(
    n: int,
    alpha: float,
    samples: int,
    rng: np.random.Generator,
    params: Optional[ConsistencyParams] = None,
    scale: Optional[LinguisticScale] = None,
) -> CalibrationResult:
    """Estimate the critical value by repairing random matrices to convergence.

    Each sample draws a random HFLPR, runs the repair loop in CONVERGENCE
    mode, and records the converged (last improving) index.  The suggested
    threshold is mean + 3*sqrt(variance) of those values.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    scale = scale or LinguisticScale()
    if params is None:
        params = ConsistencyParams(alpha=alpha)
    # rare draws with extreme single-term cells converge very slowly; give
    # them room, and past the cap take the latest value as converged enough
    params = replace(
        params,
        alpha=alpha,
        stop_mode=StopMode.CONVERGENCE,
        max_iterations=max(params.max_iterations, 2000),
    )
    values = []
    for _ in range(samples):
        matrix = random_hflpr(n, scale, rng)
        try:
            report = algorithm1(matrix, params)
        except IterationCapExceeded as exc:
            report = exc.partial
        values.append(report.hflgci)
    return CalibrationResult(
        n=n,
        alpha=alpha,
        samples=tuple(values),
        histogram=_histogram(values),
    )


def _histogram(values: Sequence[float]):
    top = max(values) if values else 0.0
    nbins = max(1, int(math.floor(top / HISTOGRAM_BIN_WIDTH)) + 1)
    counts = [0] * nbins
    for v in values:
        counts[min(nbins - 1, int(v / HISTOGRAM_BIN_WIDTH))] += 1
    return tuple(
        (round(k * HISTOGRAM_BIN_WIDTH, 10), round((k + 1) * HISTOGRAM_BIN_WIDTH, 10), c)
        for k, c in enumerate(counts)
    )


def write_calibration_csvs(
    result: CalibrationResult, samples_path: str, summary_path: str, density_path: str
):
    """Emit the three calibration CSVs: raw samples, summary row, density bins."""
    with open(samples_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["scenario_n", "alpha", "sample_id", "hflgci"])
        for k, v in enumerate(result.samples):
            writer.writerow([result.n, result.alpha, k, f"{v:.6f}"])
    with open(summary_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "alpha", "mean", "variance", "suggested"])
        writer.writerow(
            [
                result.n,
                result.alpha,
                f"{result.mean:.6f}",
                f"{result.variance:.6f}",
                f"{result.suggested:.6f}",
            ]
        )
    with open(density_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["bin_low", "bin_high", "count"])
        for lo, hi, count in result.histogram:
            writer.writerow([lo, hi, count])
