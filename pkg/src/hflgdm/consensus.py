"""Group machinery: perfect matrices, decision-maker weights, aggregation,
worst consensus degree, feedback modification, and the full group procedure.

The group is "in consensus" when the least similar accepted matrix still has
similarity at least gamma with the collective matrix built from the members'
perfectly consistent counterparts.  While it is not, the least similar
member's most deviant row is pulled toward the collective.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .consistency import (
    ConsistencyParams,
    ConsistencyReport,
    PriorityVector,
    algorithm1,
    consistency_index,
)
from .errors import DimensionMismatch, IterationCapExceeded
from .hflpr import Hflpr, Hflts, hflpr_from_upper, hflpr_similarity
from .hflts import hflts_distance
from .scale import LinguisticScale

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupProblem:
    """One group decision instance: k matrices over the same alternatives."""

    matrices: Tuple[Hflpr, ...]
    gamma: float
    zeta_mod: float = 0.5
    consistency_params: Optional[ConsistencyParams] = None

    def __post_init__(self):
        if len(self.matrices) < 2:
            raise DimensionMismatch(
                f"a group needs at least 2 decision makers, got {len(self.matrices)}"
            )
        n0, tau0 = self.matrices[0].n, self.matrices[0].scale.tau
        for m in self.matrices[1:]:
            if m.n != n0 or m.scale.tau != tau0:
                raise DimensionMismatch("all matrices must share n and scale")
        if not 0.0 < self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in (0, 1], got {self.gamma}")
        if not 0.0 <= self.zeta_mod <= 1.0:
            raise ValueError(f"zeta must lie in [0, 1], got {self.zeta_mod}")

    @property
    def k(self) -> int:
        return len(self.matrices)

    @property
    def n(self) -> int:
        return self.matrices[0].n

    @property
    def scale(self) -> LinguisticScale:
        return self.matrices[0].scale

    def params(self) -> ConsistencyParams:
        if self.consistency_params is not None:
            return self.consistency_params
        return ConsistencyParams(alpha=ConsistencyParams.default_alpha(self.n))


@dataclass(frozen=True)
class ConsensusRound:
    wcd: float
    worst_dm: int
    worst_alternative: Optional[int]
    modified: bool


@dataclass(frozen=True)
class ConsensusTrace:
    """Full record of one group run."""

    rounds: Tuple[ConsensusRound, ...]
    dm_weights: PriorityVector
    collective: Hflpr
    final_priority: PriorityVector
    ranking: Tuple[int, ...]
    consistency_reports: Tuple[ConsistencyReport, ...]
    accepted_matrices: Tuple[Hflpr, ...]

    @property
    def modification_rounds(self) -> int:
        return sum(1 for r in self.rounds if r.modified)

    def ranking_string(self) -> str:
        return " > ".join(f"X{i + 1}" for i in self.ranking)


def perfect_hflpr(matrix: Hflpr, zeta: float = 0.5) -> Hflpr:
    """Perfectly consistent counterpart via per-slice additive completion.

    Slice by slice, entry (i,j) becomes the mean over k of
    I(b_ik) + I(b_kj) - tau, clamped to the scale; cells are re-sorted.  A
    matrix that already satisfies additive transitivity is a fixed point.
    """
    upper = {
        (i, j): sorted(values)
        for (i, j), values in _perfect_upper_sliced(matrix).items()
    }
    return hflpr_from_upper(matrix.scale, matrix.n, upper)


def _perfect_upper_sliced(
    matrix: Hflpr, length: Optional[int] = None
) -> Dict[Tuple[int, int], List[float]]:
    """Completion values per upper cell, kept in slice order (unsorted)."""
    tau = matrix.scale.tau
    hi = 2.0 * tau
    n = matrix.n
    length = matrix.max_cell_len() if length is None else length
    out: Dict[Tuple[int, int], List[float]] = {
        (i, j): [] for i in range(n) for j in range(i + 1, n)
    }
    for ell in range(length):
        A = matrix.slice_matrix(ell)
        # mean_k (A[i,k] + A[k,j]) - tau separates into row and column means
        P = A.mean(axis=1)[:, None] + A.mean(axis=0)[None, :] - tau
        for key in out:
            out[key].append(min(hi, max(0.0, float(P[key]))))
    return out


def dm_weights(matrices: Sequence[Hflpr], zeta: float = 0.5) -> PriorityVector:
    """Relative weights of the members: similarity to one's own perfect matrix.

    A member whose judgments are already nearly transitive gets more say.
    Degenerate all-zero similarities fall back to uniform weights.
    """
    if len(matrices) < 2:
        raise DimensionMismatch("need at least 2 decision makers")
    sims = [
        hflpr_similarity(m, perfect_hflpr(m, zeta), zeta) for m in matrices
    ]
    total = sum(sims)
    if total <= 0.0:
        logger.warning("all perfect-matrix similarities are 0; using uniform weights")
        k = len(matrices)
        return PriorityVector(tuple(1.0 / k for _ in range(k)))
    return PriorityVector(tuple(s / total for s in sims))


def _normalized_cell(cell: Hflts, length: int) -> List[float]:
    """Cell indices extended to ``length`` by repeating the top term."""
    values = list(cell.indices)
    return values + [values[-1]] * (length - len(values))


def hflwa_aggregate(matrices: Sequence[Hflpr], p: PriorityVector) -> Hflpr:
    """Weighted-average matrix: rank-matched per-slice mean of the cells.

    Lengths are aligned per cell position (the longest version of each cell
    across the members), so aggregating one matrix, or identical matrices,
    reproduces the input exactly.
    """
    if len(matrices) != len(p):
        raise DimensionMismatch(
            f"{len(matrices)} matrices but {len(p)} weights"
        )
    first = matrices[0]
    for m in matrices[1:]:
        if m.n != first.n or m.scale.tau != first.scale.tau:
            raise DimensionMismatch("all matrices must share n and scale")
    upper = {}
    for i in range(first.n):
        for j in range(i + 1, first.n):
            L = max(len(m.cell(i, j)) for m in matrices)
            acc = np.zeros(L)
            for w, m in zip(p, matrices):
                acc += w * np.asarray(_normalized_cell(m.cell(i, j), L))
            upper[(i, j)] = sorted(acc.tolist())
    return hflpr_from_upper(first.scale, first.n, upper)


def _collective_matrix(matrices: Sequence[Hflpr], p: PriorityVector) -> Hflpr:
    """Collective of the members' perfect matrices, slice-aligned.

    The per-slice completions are averaged in slice order before the final
    per-cell sort; because the completion is linear in the slice matrices,
    this equals the completion of the weighted-average matrix itself.
    """
    first = matrices[0]
    L = max(m.max_cell_len() for m in matrices)
    upper_acc: Dict[Tuple[int, int], np.ndarray] = {}
    for w, m in zip(p, matrices):
        sliced = _perfect_upper_sliced(m, L)
        for key, values in sliced.items():
            arr = w * np.asarray(values)
            if key in upper_acc:
                upper_acc[key] = upper_acc[key] + arr
            else:
                upper_acc[key] = arr
    upper = {key: sorted(arr.tolist()) for key, arr in upper_acc.items()}
    return hflpr_from_upper(first.scale, first.n, upper)


def wcd(matrices: Sequence[Hflpr], collective: Hflpr, zeta: float = 0.5) -> Tuple[float, int]:
    """Worst consensus degree and the least similar member (smallest on ties)."""
    best: Optional[Tuple[float, int]] = None
    for h, m in enumerate(matrices):
        s = hflpr_similarity(m, collective, zeta)
        if best is None or s < best[0] - 1e-12:
            best = (s, h)
    return best


def max_deviation_target(
    matrix: Hflpr, collective: Hflpr, zeta: float = 0.5
) -> int:
    """Alternative whose row deviates most from the collective (row sums)."""
    n = matrix.n
    scale = matrix.scale
    sums = []
    for i in range(n):
        s = sum(
            hflts_distance(matrix.cell(i, j), collective.cell(i, j), scale, zeta)
            for j in range(n)
            if j != i
        )
        sums.append(s)
    best = max(sums)
    for i, s in enumerate(sums):
        if s >= best - 1e-12:
            return i
    return 0


def modify_row(
    matrix: Hflpr, i_star: int, collective: Hflpr, zeta: float
) -> Hflpr:
    """Pull row i_star toward the collective: new = zeta*old + (1-zeta)*collective.

    The blend is per slice after length alignment; column i_star is rebuilt by
    reciprocity, the diagonal is untouched, and the result is a valid matrix.
    """
    if not 0.0 <= zeta <= 1.0:
        raise ValueError(f"zeta must lie in [0, 1], got {zeta}")
    n = matrix.n
    upper = {}
    for i, j, c in matrix.upper_cells():
        if i != i_star and j != i_star:
            upper[(i, j)] = list(c.indices)
            continue
        target = collective.cell(i, j)
        L = max(len(c), len(target))
        old = _normalized_cell(c, L)
        tgt = _normalized_cell(target, L)
        upper[(i, j)] = sorted(
            zeta * o + (1.0 - zeta) * t for o, t in zip(old, tgt)
        )
    return hflpr_from_upper(matrix.scale, n, upper)


def algorithm2(problem: GroupProblem) -> ConsensusTrace:
    """Full group procedure: repair, weigh, aggregate, reach consensus, rank.

    Steps: repair each member's matrix (algorithm1); weigh members by
    similarity to their perfect matrices; build the collective from those
    perfect matrices (fixed for the run); then, while the worst consensus
    degree is below gamma, pull the worst member's most deviant row toward
    the collective.  Finally aggregate the accepted matrices and extract the
    optimal priority vector.
    """
    params = problem.params()
    reports = []
    for h, m in enumerate(problem.matrices):
        try:
            reports.append(algorithm1(m, params))
        except IterationCapExceeded as exc:
            raise IterationCapExceeded(
                f"consistency repair failed for decision maker {h + 1}: {exc}",
                partial=exc.partial,
            ) from exc

    p = dm_weights(problem.matrices, problem.zeta_mod)
    collective = _collective_matrix(problem.matrices, p)

    accepted = [r.final_matrix for r in reports]
    rounds: List[ConsensusRound] = []
    cap = problem.n * problem.k * 10
    while True:
        value, h_star = wcd(accepted, collective, problem.zeta_mod)
        if value >= problem.gamma:
            rounds.append(
                ConsensusRound(
                    wcd=value, worst_dm=h_star, worst_alternative=None, modified=False
                )
            )
            break
        if len(rounds) >= cap:
            raise IterationCapExceeded(
                f"consensus not reached within {cap} modification rounds "
                f"(wcd={value:.4f} < gamma={problem.gamma})",
                partial=tuple(rounds),
            )
        i_star = max_deviation_target(
            accepted[h_star], collective, problem.zeta_mod
        )
        accepted[h_star] = modify_row(
            accepted[h_star], i_star, collective, problem.zeta_mod
        )
        rounds.append(
            ConsensusRound(
                wcd=value, worst_dm=h_star, worst_alternative=i_star, modified=True
            )
        )

    final = hflwa_aggregate(accepted, p)
    _, _, priority = consistency_index(final, params.alpha)
    ranking = tuple(priority.ranking())
    return ConsensusTrace(
        rounds=tuple(rounds),
        dm_weights=p,
        collective=collective,
        final_priority=priority,
        ranking=ranking,
        consistency_reports=tuple(reports),
        accepted_matrices=tuple(accepted),
    )


def fuse_indices(
    priorities: Sequence[PriorityVector], index_weights: PriorityVector
) -> Tuple[PriorityVector, Tuple[int, ...]]:
    """Weighted fusion of per-criterion priorities into one ranking."""
    if len(priorities) != len(index_weights):
        raise DimensionMismatch(
            f"{len(priorities)} priority vectors but {len(index_weights)} weights"
        )
    n = len(priorities[0])
    if any(len(w) != n for w in priorities):
        raise DimensionMismatch("priority vectors differ in length")
    fused = np.zeros(n)
    for weight, pv in zip(index_weights, priorities):
        fused += weight * pv.as_array()
    vector = PriorityVector(tuple(fused / fused.sum()))
    return vector, tuple(vector.ranking())
