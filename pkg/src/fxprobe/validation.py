"""Input validation helpers used by the estimator-style classes."""

from __future__ import annotations

import hashlib

import numpy as np

from .errors import InvalidData


def check_array(X, *, ndim: int = 2, dtype=np.float64, name: str = "X") -> np.ndarray:
    """Coerce to a finite ndarray of the requested dimensionality."""
    arr = np.asarray(X, dtype=dtype)
    if arr.ndim != ndim:
        raise InvalidData(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if arr.size and not np.all(np.isfinite(arr)):
        raise InvalidData(f"{name} contains NaN or Inf")
    return arr


def check_X_y(X, y, *, y_numeric: bool = False):
    X = check_array(X, name="X")
    y = np.asarray(y)
    if y_numeric:
        y = check_array(y, ndim=1, name="y")
    elif y.ndim != 1:
        raise InvalidData(f"y must be 1-dimensional, got shape {y.shape}")
    if X.shape[0] != y.shape[0]:
        raise InvalidData(f"X has {X.shape[0]} rows but y has {y.shape[0]}")
    return X, y


def check_is_fitted(estimator, attribute: str) -> None:
    if not hasattr(estimator, attribute):
        raise InvalidData(
            f"{type(estimator).__name__} is not fitted; call fit() before using it"
        )


def seeded_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def derive_seed(master_seed: int, *key_parts) -> int:
    """Stable per-task seed from a master seed and a string key.

    Keyed hashing keeps random streams independent of scheduling order, so a
    run is reproducible regardless of worker count.
    """
    key = ":".join(str(p) for p in key_parts)
    digest = hashlib.blake2b(
        key.encode("utf-8"), digest_size=8, key=str(master_seed).encode("utf-8")
    ).digest()
    return int.from_bytes(digest, "little")
