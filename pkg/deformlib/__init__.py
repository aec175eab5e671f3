"""A Python library for finite-rank deformations of Wigner matrices.

``deformlib`` samples Wigner matrices deformed by a finite-rank perturbation,
extracts and groups their outlier eigenvalues, builds the small random
reference matrices that describe the joint law of each group of outliers and
compares both sides by Monte Carlo.

Subpackages
-----------
ensemble
    Entry laws, Wigner matrices, deformations and entry-moment matrices.

outliers
    Outlier indexing, overlap partitions and the rescaled outliers.

reference
    Covariance tensors, Gaussian sampling and the reference eigenvalues.

experiments
    Monte Carlo experiments on both sides and their comparison.

util
    Semicircle law, eigenvalue routines, random streams and distances.
"""

# list of all modules available in the library
__all__ = ['ensemble', 'outliers', 'reference', 'experiments', 'util',
           'tests']

__version__ = '0.1.dev'
