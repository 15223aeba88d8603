"""Input validation helpers used by the estimators and functions."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .exceptions import DataError


def check_column(column, name: str = "column") -> list[str]:
    """Coerce a 1-d collection of category labels to a list of strings."""
    if isinstance(column, str):
        raise DataError(f"{name} must be a sequence of labels, not a single string")
    if isinstance(column, np.ndarray):
        if column.ndim == 2 and column.shape[1] == 1:
            column = column[:, 0]
        elif column.ndim != 1:
            raise DataError(f"{name} must be 1-dimensional, got shape {column.shape}")
    values = [str(v) for v in column]
    if not values:
        raise DataError(f"empty input: {name} has no values")
    if any(v == "" for v in values):
        raise DataError(f"{name} contains empty category labels")
    return values


def check_records(records) -> list[tuple[str, str]]:
    """Coerce to a list of (category, category) pairs, validating shape."""
    pairs = []
    for i, row in enumerate(records):
        row = tuple(row)
        if len(row) != 2:
            raise DataError(f"record {i} has {len(row)} fields, expected 2")
        a, b = str(row[0]), str(row[1])
        if not a or not b:
            raise DataError(f"record {i} contains an empty category label")
        pairs.append((a, b))
    if not pairs:
        raise DataError("empty input: no records")
    return pairs


def as_complex_vector(x, name: str = "x") -> np.ndarray:
    """Coerce to a 1-d complex128 array."""
    arr = np.asarray(x)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise DataError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise DataError(f"empty input: {name} has no entries")
    try:
        return arr.astype(np.complex128)
    except (TypeError, ValueError) as exc:
        raise DataError(f"{name} is not numeric: {exc}") from None


def as_complex_matrix(a, name: str = "A") -> np.ndarray:
    """Coerce to a 2-d complex128 array."""
    arr = np.asarray(a)
    if arr.ndim != 2:
        raise DataError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise DataError(f"empty input: {name} has no entries")
    try:
        return arr.astype(np.complex128)
    except (TypeError, ValueError) as exc:
        raise DataError(f"{name} is not numeric: {exc}") from None


def check_equal_length(x: Sequence, y: Sequence, xname: str = "x", yname: str = "y") -> None:
    if len(x) != len(y):
        raise DataError(
            f"length mismatch: {xname} has {len(x)} entries, {yname} has {len(y)}"
        )


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DataError(f"alpha must lie strictly between 0 and 1, got {alpha}")
    return alpha
