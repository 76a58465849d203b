"""Bivariate means: arithmetic, geometric, logarithmic, harmonic and power.

Arguments are put in canonical order (larger first) before any arithmetic,
so every mean is bit-exactly symmetric. Results are clamped to
``[min(x, y), max(x, y)]`` to keep rounding from leaking outside the range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import DomainError

__all__ = ["MeanKind", "Power", "Mean", "evaluate_mean", "A", "G", "L", "H", "power_mean"]

# Below this relative gap the logarithmic mean switches to its series.
_LOG_MEAN_SERIES_GAP = 1e-8
_POWER_ZERO = 1e-10


class MeanKind(Enum):
    ARITHMETIC = "A"
    GEOMETRIC = "G"
    LOGARITHMIC = "L"
    HARMONIC = "H"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Power:
    """Power mean of order ``t``; ``t = 0`` is the geometric mean."""

    t: float

    def __str__(self) -> str:
        return f"M_{self.t:g}"


Mean = Union[MeanKind, Power]


def _ordered(x: float, y: float) -> tuple[float, float]:
    if not (x > 0 and y > 0):
        raise DomainError(f"means need positive arguments, got ({x!r}, {y!r})")
    if math.isinf(x) or math.isinf(y):
        raise DomainError(f"means need finite arguments, got ({x!r}, {y!r})")
    return (x, y) if x >= y else (y, x)


def _clamp(v: float, hi: float, lo: float) -> float:
    return min(max(v, lo), hi)


def _arith(x: float, y: float) -> float:
    s = x + y
    if math.isinf(s):
        return 0.5 * x + 0.5 * y
    return 0.5 * s


def _logarithmic(x: float, y: float) -> float:
    d = x - y
    if d < _LOG_MEAN_SERIES_GAP * x:
        # x = A(1+e), y = A(1-e): L = A * e/atanh(e) = A(1 - e^2/3 - 4e^4/45 - ...)
        a = _arith(x, y)
        e2 = (d / (2.0 * a)) ** 2
        return a * (1.0 - e2 / 3.0 - 4.0 * e2 * e2 / 45.0)
    return d / math.log1p(d / y)


def _power(x: float, y: float, t: float) -> float:
    if abs(t) < _POWER_ZERO:
        return math.sqrt(x) * math.sqrt(y)
    # Factor out the argument that keeps the ratio power <= 1.
    if t > 0:
        r = (y / x) ** t
        return x * (0.5 * (1.0 + r)) ** (1.0 / t)
    r = (x / y) ** t
    return y * (0.5 * (1.0 + r)) ** (1.0 / t)


def evaluate_mean(kind: Mean, x: float, y: float) -> float:
    """Return the mean ``kind`` of two positive numbers.

    Equal arguments give that argument back for every kind, which extends
    the logarithmic mean (and ``M_0``) by continuity.
    """
    x, y = _ordered(x, y)
    if x == y:
        return x
    if kind is MeanKind.ARITHMETIC:
        v = _arith(x, y)
    elif kind is MeanKind.GEOMETRIC:
        v = math.sqrt(x) * math.sqrt(y)
    elif kind is MeanKind.LOGARITHMIC:
        v = _logarithmic(x, y)
    elif kind is MeanKind.HARMONIC:
        v = 2.0 * y * (x / (x + y)) if math.isfinite(x + y) else 2.0 * y * (1.0 / (1.0 + y / x))
    elif isinstance(kind, Power):
        v = _power(x, y, float(kind.t))
    else:
        raise TypeError(f"unknown mean kind {kind!r}")
    return _clamp(v, x, y)


def A(x: float, y: float) -> float:
    return evaluate_mean(MeanKind.ARITHMETIC, x, y)


def G(x: float, y: float) -> float:
    return evaluate_mean(MeanKind.GEOMETRIC, x, y)


def L(x: float, y: float) -> float:
    return evaluate_mean(MeanKind.LOGARITHMIC, x, y)


def H(x: float, y: float) -> float:
    return evaluate_mean(MeanKind.HARMONIC, x, y)


def power_mean(t: float, x: float, y: float) -> float:
    return evaluate_mean(Power(t), x, y)
