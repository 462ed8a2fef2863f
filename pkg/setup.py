#!/usr/bin/env python


import os
from setuptools import find_packages, setup

from degenerate_sums import __version__


def read_file(filename):
    """Returns content of the given file. Path must be relative to
    this file."""

    with open(os.path.join(os.path.dirname(__file__), filename)) as file:
        return file.read()


setup(
    name = "degenerate-sums",
    version = __version__,
    description = "Exact degenerate Stirling, Bernoulli, Frobenius-Euler "
                  "and Eulerian numbers with identity verification.",
    long_description = read_file("README.rst"),
    license = "Apache 2.0",
    packages = find_packages(".", exclude=["tests"]),
    install_requires = [
        "cached-property ~= 1.5",
        "observable ~= 1.0",
        "voluptuous ~= 0.11",
    ],
    extras_require = {
        "test": [
            "hypothesis",
            "pytest",
            "sympy",
        ],
    },
    entry_points = {
        "console_scripts": [
            "degenerate-sums = degenerate_sums.cli:main",
        ],
    },
    zip_safe = False,
)
