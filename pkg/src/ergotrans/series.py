"""Core time-series container and elementary utilities.

Everything downstream (transforms, likelihoods, diagnostics) works on the
types defined here. All functions are pure and accept either a
:class:`TimeSeries` or any array-like of floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MIN_SERIES_LENGTH = 3


@dataclass(frozen=True)
class TimeSeries:
    """A univariate series of level observations.

    Parameters
    ----------
    values : array-like
        Ordered real-valued observations in level units.
    id : str, optional
        Series label (e.g. a FRED-QD mnemonic).
    group : int, optional
        Thematic group category (FRED-QD groups are 1-14).
    period : float, optional
        Sampling step, e.g. dt in years.
    """

    values: np.ndarray
    id: str | None = None
    group: int | None = None
    period: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class DifferencedSeries:
    """Result of applying n-fold first differences to a (transformed) series."""

    values: np.ndarray
    order: int
    source_len: int

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if len(self.values) != self.source_len - self.order:
            raise ValueError(
                f"length {len(self.values)} inconsistent with "
                f"source_len={self.source_len}, order={self.order}"
            )

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class ValidationOutcome:
    """Outcome of :func:`validate_series`; callers decide whether to raise."""

    ok: bool
    violations: list[tuple[str, int | None]] = field(default_factory=list)


def as_array(x) -> np.ndarray:
    """Coerce a TimeSeries or array-like to a 1-D float array."""
    if isinstance(x, TimeSeries):
        return x.values
    if isinstance(x, DifferencedSeries):
        return x.values
    return np.asarray(x, dtype=float).ravel()


def validate_series(x, require_positive: bool = False) -> ValidationOutcome:
    """Check a series for estimation use.

    Returns an outcome listing violations: ``too_short``, ``non_finite``
    (with offending index), ``non_positive`` (with offending index, only
    when ``require_positive``).
    """
    values = as_array(x)
    violations: list[tuple[str, int | None]] = []
    if len(values) < MIN_SERIES_LENGTH:
        violations.append(("too_short", None))
    finite = np.isfinite(values)
    if not finite.all():
        violations.append(("non_finite", int(np.argmin(finite))))
    if require_positive:
        nonpos = finite & (values <= 0)
        if nonpos.any():
            violations.append(("non_positive", int(np.argmax(nonpos))))
    return ValidationOutcome(ok=not violations, violations=violations)


def difference(x, n: int) -> DifferencedSeries:
    """n-fold first difference; n = 0 returns the input unchanged."""
    values = as_array(x)
    if n < 0:
        raise ValueError("differencing order must be non-negative")
    if n >= len(values):
        raise ValueError(
            f"differencing order {n} leaves no observations (length {len(values)})"
        )
    diffed = np.diff(values, n) if n > 0 else values.copy()
    return DifferencedSeries(values=diffed, order=n, source_len=len(values))


def geometric_mean(x) -> float:
    """Geometric mean computed in log space (overflow-safe)."""
    values = as_array(x)
    if len(values) == 0:
        raise ValueError("empty input")
    if np.any(values <= 0) or not np.all(np.isfinite(values)):
        raise ValueError("geometric mean requires strictly positive finite values")
    return float(np.exp(np.mean(np.log(values))))
