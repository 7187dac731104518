"""Bipartite and tripartite entanglement of a fermionic GHZ state under the Unruh effect."""

from .closed_form import (AnalyticOneTangles, analytic_pi, one_acc_one_tangles,
                          two_acc_one_tangles)
from .measures import (TangleReport, concurrence, negativity, one_tangle, pairwise_concurrence,
                       tangle_report, two_tangle)
from .rindler import Scenario, acceleration_to_r, ghz_state, physical_state, unruh_embed
from .tensor import (DensityOperator, PureState, SubsystemLayout, hermitian_eigenvalues,
                     hermitian_eigh, kron, partial_trace, partial_transpose, trace_norm)

__version__ = "0.1.0"
