"""
The :mod:`deformlib.experiments` module provides the Monte Carlo experiments:

deformlib.experiments.simulation - Rescaled outliers of deformed Wigner
matrices and the sweep of the extreme eigenvalue across the transition.

deformlib.experiments.reference - Eigenvalues of the reference matrices.

deformlib.experiments.comparison - Statistics comparing both samples.
"""

from .simulation import (SimulationExperiment, TrialResult,
                         run_simulation_trials, outlier_sweep)
from .reference import (ReferenceExperiment, ReferenceTrial,
                        run_reference_trials)
from .comparison import (ComparisonReport, compare, index_key,
                         block_min_gaps)
