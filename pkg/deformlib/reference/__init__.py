"""
The :mod:`deformlib.reference` module builds the reference matrices whose
eigenvalues describe the limiting law of each block of outliers:

deformlib.reference.tensors - Covariance tensors Delta, P, Q, R, S, W, E and
the covariance of the Gaussian part Psi.

deformlib.reference.gaussian - Sampling of self-adjoint Gaussian matrices with
a prescribed entry covariance.

deformlib.reference.limit - The non-Gaussian part Upsilon, the deterministic
shift and the reference eigenvalues xi.
"""

from .tensors import (tensor_delta, tensor_p, tensor_e, tensor_s, tensor_w,
                      tensor_q, tensor_r, as_pair_matrix, check_nonnegative,
                      IndefiniteCovarianceError, psi_covariance_single,
                      psi_covariance_joint)
from .gaussian import (psd_factor,
                       min_eigenvalue_ratio, HermitianGaussian,
                       sample_hermitian_gaussian)
from .limit import (ReferenceSpec, ReferenceSample, build_upsilon,
                    psi_sampler, reference_eigenvalues)
