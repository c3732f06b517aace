import numpy as np
import pytest

from hflgdm import LinguisticScale, hflpr_from_upper
from hflgdm.case_study import case_matrices


@pytest.fixture(scope="session")
def scale():
    return LinguisticScale(tau=4)


@pytest.fixture(scope="session")
def case_groups():
    """The bundled study matrices as [criterion][expert]."""
    return case_matrices()


@pytest.fixture(scope="session")
def b1_index2(case_groups):
    """Expert 1's economic-efficiency matrix, the repair example."""
    return case_groups[1][0]


def perfect_from_potentials(scale, e, d=None, slices=1):
    """Additively transitive matrix from potentials.

    Slice ell of cell (i,j) is (e_i - e_j) + ell*(d_i - d_j) + tau; with d
    non-increasing the upper cells come out sorted, every slice satisfies
    additive transitivity exactly, and reciprocity holds by construction.
    """
    e = np.asarray(e, dtype=float)
    n = len(e)
    if d is None:
        d = np.zeros(n)
    d = np.asarray(d, dtype=float)
    assert all(x >= y - 1e-12 for x, y in zip(d, d[1:])), "d must be non-increasing"
    tau = scale.tau
    upper = {}
    for i in range(n):
        for j in range(i + 1, n):
            values = [
                (e[i] - e[j]) + ell * (d[i] - d[j]) + tau for ell in range(slices)
            ]
            assert all(0.0 <= v <= 2 * tau for v in values), "potentials out of range"
            upper[(i, j)] = values
    return hflpr_from_upper(scale, n, upper)


@pytest.fixture(scope="session")
def perfect_builder(scale):
    def build(e, d=None, slices=1):
        return perfect_from_potentials(scale, e, d, slices)

    return build
