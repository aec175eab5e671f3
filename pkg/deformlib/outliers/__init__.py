"""
The :mod:`deformlib.outliers` module groups and rescales the outlier
eigenvalues of a deformed Wigner matrix:

deformlib.outliers.partition - Outlier threshold, overlap metric and the fine
and coarse partitions into blocks of overlapping outliers.

deformlib.outliers.rescale - Position of each outlier in the spectrum and the
rescaled outliers of every block.
"""

from .partition import (Partition, block_label, is_outlier, overlap_metric,
                        fluctuation_scale, critical_d, partition_fine,
                        partition_coarse, coarse_block_of, block_reference_d)
from .rescale import (alpha_index, RescaledOutliers, column_label,
                      extract_and_rescale, reconstruct_eigenvalues,
                      outlier_location_bound)
