#!/usr/bin/env python

import codecs
import os

from setuptools import find_packages, setup

setup_path = os.path.abspath(os.path.dirname(__file__))
with codecs.open(os.path.join(setup_path, 'README.rst'),
                 encoding='utf-8-sig') as f:
    README = f.read()

setup(name='deformlib',
      version='0.1.dev',
      description='Outliers of deformed Wigner matrices: simulation, '
                  'reference laws and comparison',
      long_description=README,
      license='BSD 3-clause "New" or "Revised License"',

      classifiers=[
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: BSD License',
          'Programming Language :: Python :: 3',
          'Programming Language :: Python :: 3.8',
          'Programming Language :: Python :: 3.9',
          'Programming Language :: Python :: 3.10',
          'Topic :: Scientific/Engineering :: Mathematics',
      ],
      install_requires=[
          'numpy>=1.17.0',
          'scipy>=1.8.0',
          'scikit-learn>=0.21.0',
          'joblib>=0.14',
          'pandas>=1.0',
          'threadpoolctl>=2.0',
      ],
      python_requires='>=3.8',
      entry_points={
          'console_scripts': ['deformlib=deformlib.cli:main'],
      },

      packages=find_packages())
