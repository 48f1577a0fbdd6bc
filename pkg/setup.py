#!/usr/bin/env python
#-*- coding:utf-8 -*-
##
## setup.py
##
##  Created on: Oct 18, 2026
##      Author: pyhill contributors
##

#
#==============================================================================
try:
    from setuptools import setup
    HAVE_SETUPTOOLS = True
except ImportError:
    from distutils.core import setup
    HAVE_SETUPTOOLS = False

from pyhill import __version__


#
#==============================================================================
LONG_DESCRIPTION = """
A Python library and command-line tool for the high-frequency periodic
spectrum of Hill's equation with a sign-changing weight,
u'' + lambda^2 (g(x) - a) u = 0, where g is an even 2pi-periodic cosine
series with one minimum and one maximum per period.

pyhill evaluates uniform asymptotic formulas for the two eigenvalue
branches lambda_+(a, p) and lambda_-(a, p), valid across the transition
between the indefinite (a above the minimum of g) and the definite (a below
it) regimes, and validates them against an independent shooting and
monodromy oracle. Every table is written as CSV with full double precision.
"""


# command-line entry points
#==============================================================================
entry_points = {
    'console_scripts': ['pyhill = pyhill.harness:main']
}


# finally, calling standard setuptools.setup() (or distutils.core.setup())
#==============================================================================
setup(name='pyhill',
    packages=['pyhill'],
    version=__version__,
    description='Uniform eigenvalue asymptotics for Hill\'s equation with an indefinite weight',
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/x-rst; charset=UTF-8',
    license='MIT',
    author='pyhill contributors',
    python_requires='>=3.7',
    entry_points=entry_points,
    install_requires=['numpy>=1.17', 'scipy>=1.4'],
    extras_require = {
        'mpmath': ['mpmath>=1.1'],
        'test': ['pytest', 'mpmath>=1.1']
    }
)
