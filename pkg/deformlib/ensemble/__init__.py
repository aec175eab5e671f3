"""
The :mod:`deformlib.ensemble` module contains the random matrix models:

deformlib.ensemble.entries - Catalog of standardized entry laws.

deformlib.ensemble.wigner - Wigner matrices, finite-rank deformations and the
entry cutoff of the deformation eigenvectors.

deformlib.ensemble.moments - Third and fourth moment matrices of a Wigner
matrix.
"""

from .entries import EntryDistribution, empirical_moments
from .wigner import (SymmetryClass, check_beta, sample_wigner, Deformation,
                     deform, default_delta, truncate_v,
                     projected_quadratic_form, coordinate_vectors,
                     delocalized_vectors, haar_vectors)
from .moments import MomentTensors, moment_tensors, entry_moments
