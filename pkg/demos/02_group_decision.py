"""Full group decision: four experts, three criteria, one ranking.

Reproduces the bundled venture-capital fund evaluation: each expert's matrix
is repaired to acceptable consistency, experts are weighted by how logical
their original judgments were, a collective matrix is formed, dissenting
rows are pulled toward it until the group agrees, and the per-criterion
priorities are fused with the criterion weights.
"""

import numpy as np

from hflgdm import ConsistencyParams, GroupProblem, PriorityVector, algorithm2, fuse_indices
from hflgdm.case_study import case_matrices, format_ranking, load_case_data

data = load_case_data()
groups = case_matrices(data)
params = ConsistencyParams(alpha=1.2, beta=0.5)

priorities = []
for name, group in zip(data["index_names"], groups):
    problem = GroupProblem(
        matrices=tuple(group), gamma=0.9, consistency_params=params
    )
    trace = algorithm2(problem)
    priorities.append(trace.final_priority)
    print(f"{name}:")
    print(f"  expert weights: {np.round(list(trace.dm_weights), 4)}")
    print(f"  consensus rounds: {trace.modification_rounds}")
    print(f"  priorities: {np.round(list(trace.final_priority), 4)}")
    print(f"  ranking: {trace.ranking_string()}")

fused, ranking = fuse_indices(priorities, PriorityVector(tuple(data["index_weights"])))
print(f"\ncriterion weights: {data['index_weights']}")
print(f"fused priorities: {np.round(list(fused), 4)}")
print(f"overall ranking: {format_ranking(ranking)}")
