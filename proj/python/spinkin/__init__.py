"""Parity operators, Elko spinors and the K Xi decomposition on (j,0)+(0,j)."""

import json
from fractions import Fraction

from . import _spinkin
from ._spinkin import (
    DegenerateBasisError,
    DimensionError,
    DomainError,
    Error,
    NonHermitianBasisError,
    OffShellError,
    OverflowError,
    RankDeficientError,
    charge_conjugation,
    decompose,
    dirac_operator,
    elko_g,
    elko_spinor,
    gamma_matrices,
    nogo_sweep,
    rapidity,
    schur_conditions,
)

__all__ = [
    "DegenerateBasisError",
    "DimensionError",
    "DomainError",
    "Error",
    "NonHermitianBasisError",
    "OffShellError",
    "OverflowError",
    "RankDeficientError",
    "boost",
    "charge_conjugation",
    "check_all",
    "decompose",
    "dirac_operator",
    "elko_g",
    "elko_spinor",
    "gamma_matrices",
    "generators",
    "nogo_sweep",
    "parity",
    "parity_spectrum",
    "rapidity",
    "schur_conditions",
    "spinors",
    "tensor_swap",
]


def _j(j):
    # Accepts 0.5, "1/2", Fraction(3, 2).
    return float(Fraction(j))


def generators(j):
    return _spinkin.generators(_j(j))


def parity(j, mass, p):
    return _spinkin.parity(_j(j), mass, p)


def boost(j, phi):
    return _spinkin.boost(_j(j), phi)


def spinors(j, mass, p):
    return _spinkin.spinors(_j(j), mass, p)


def parity_spectrum(j, mass, p):
    return _spinkin.parity_spectrum(_j(j), mass, p)


def tensor_swap(j):
    return _spinkin.tensor_swap(_j(j))


def check_all(seed=42):
    """The `spinkin check all` report as a dict."""
    return json.loads(_spinkin.check_all_json(seed))
