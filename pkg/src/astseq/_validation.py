"""Input validation helpers for the estimator API."""

from __future__ import annotations


def check_source_list(X) -> list[str]:
    """Validate an iterable of source strings (a single string is a mistake)."""
    if isinstance(X, (str, bytes)):
        raise TypeError("expected an iterable of source strings, got a single string")
    X = list(X)
    for i, item in enumerate(X):
        if not isinstance(item, str):
            raise TypeError(f"X[{i}] is {type(item).__name__}, expected str")
    return X


def check_probability(value, name) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {value}")
    return value
