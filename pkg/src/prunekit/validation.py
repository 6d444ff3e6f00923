"""Input validation helpers shared across the package."""

from __future__ import annotations

import numpy as np


def check_array(x, name, shape=None, ndim=None, finite=True, dtype=np.float64):
    """Coerce `x` to an ndarray and validate shape/finiteness.

    Returns the validated array (converted to `dtype` when given).
    """
    arr = np.asarray(x, dtype=dtype) if dtype is not None else np.asarray(x)
    if ndim is not None and arr.ndim != ndim:
        raise ValueError(f"{name}: expected {ndim} dimensions, got {arr.ndim}")
    if shape is not None and arr.shape != tuple(shape):
        raise ValueError(f"{name}: expected shape {tuple(shape)}, got {arr.shape}")
    if finite and not np.all(np.isfinite(arr)):
        raise ValueError(f"{name}: non-finite entries")
    return arr


def check_binary(arr, name):
    """Require every entry of `arr` to be exactly 0.0 or 1.0."""
    arr = np.asarray(arr)
    if not np.all((arr == 0.0) | (arr == 1.0)):
        raise ValueError(f"{name}: entries must be exactly 0 or 1")
    return arr


def check_positive(value, name):
    if not np.isfinite(value) or value <= 0:
        raise ValueError(f"{name} must be a positive finite real, got {value}")
    return float(value)


def check_nonnegative(value, name):
    if not np.isfinite(value) or value < 0:
        raise ValueError(f"{name} must be a nonnegative finite real, got {value}")
    return float(value)
