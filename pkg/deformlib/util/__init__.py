"""
The :mod:`deformlib.util` module includes the numerical utilities shared by the
rest of the library:

deformlib.util.semicircle - Closed-form quantities of the semicircle law, the
outlier location map and the control parameter.

deformlib.util.spectra - Sorted eigenvalues, extreme eigenvalues and two
classical perturbation results.

deformlib.util.rng - Counter-based random streams per trial.

deformlib.util.distances - Distances between empirical distributions.
"""

from .semicircle import *
from .spectra import *
from .rng import *
from .distances import *
