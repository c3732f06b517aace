"""Checking and repairing one decision maker's judgment matrix.

An expert compares three funds on a nine-grade linguistic scale, hesitating
between adjacent grades.  The repair loop measures how far the judgments are
from an internally consistent story and nudges them toward one.
"""

import numpy as np

from hflgdm import (
    ConsistencyParams,
    LinguisticScale,
    algorithm1,
    consistency_index,
    critical_value,
    validate_hflpr,
)

scale = LinguisticScale(tau=4)

# "Fund 1 is between fair and slightly good compared to fund 2", etc.
# Subscript 4 is indifference; the matrix is reciprocal around it.
judgments = [
    [[4], [5, 6], [4, 5, 6]],
    [[2, 3], [4], [2, 3, 4]],
    [[2, 3, 4], [4, 5, 6], [4]],
]

matrix = validate_hflpr(judgments, scale)
value, slice_idx, weights = consistency_index(matrix, alpha=1.2)
print(f"initial consistency index: {value:.4f}")
print(f"suggested acceptance threshold for n=3: {critical_value(3, 0.2):.4f}")

# Repair until the index stops improving (the calibration stop rule).
report = algorithm1(matrix, ConsistencyParams(alpha=1.2, beta=0.5))
print(f"\nrepaired after {report.adjustments} adjustments:")
for row in report.final_matrix.cells:
    print("  " + "  ".join("{" + ", ".join(f"s_{v:.4f}" for v in c) + "}" for c in row))
print(f"final consistency index: {report.hflgci:.4f}")
print(f"index trace: {np.round(report.hflgci_trace, 4)}")
print(f"implied priority of the funds: {np.round(list(report.priority), 4)}")
