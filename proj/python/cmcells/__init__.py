"""Calogero-Moser blocks of G(ell,1,n) and type-B domino r-cells.

Rationals are passed as strings "p" or "p/q"; floats are refused.
"""

import json

from . import _cmcells
from ._cmcells import (
    CmcellsError,
    EnumerationLimitError,
    InvalidParameterError,
    NoPathError,
    NotNormalizableError,
    WrongCoreError,
    P_r,
    core_of_charge,
    ell_core,
    j_heart,
    tau,
    tau_inverse,
)

__all__ = [
    "CmcellsError",
    "EnumerationLimitError",
    "InvalidParameterError",
    "NoPathError",
    "NotNormalizableError",
    "WrongCoreError",
    "P_r",
    "blocks",
    "cells",
    "core_of_charge",
    "ell_core",
    "j_heart",
    "reduce",
    "tau",
    "tau_inverse",
    "verify",
]


def _exact(value, what):
    if isinstance(value, float):
        raise InvalidParameterError(f"{what} must be exact (int or 'p/q' string), got float {value!r}")
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InvalidParameterError(f"{what} must be an int or a 'p/q' string")
    return str(value)


def _theta(theta):
    if isinstance(theta, str):
        return theta
    return ",".join(_exact(c, "theta coordinate") for c in theta)


def blocks(ell, n, theta=None, c_s=None, c_t=None, max_size=40, workers=1):
    """CM_c-partition of the ell-multipartitions of n, as a dict."""
    text = _cmcells.blocks_json(
        ell,
        n,
        None if theta is None else _theta(theta),
        None if c_s is None else _exact(c_s, "c_s"),
        None if c_t is None else _exact(c_t, "c_t"),
        max_size,
        workers,
    )
    return json.loads(text)


def cells(n, r, max_size=40, workers=1):
    return json.loads(_cmcells.cells_json(n, r, max_size, workers))


def verify(max_n=4, max_r=3, stretch=False, inject_fault=False, workers=1):
    return json.loads(_cmcells.verify_json(max_n, max_r, stretch, inject_fault, workers))


def reduce(theta, adjacent=False):
    return json.loads(_cmcells.reduce_json(_theta(theta), adjacent))
